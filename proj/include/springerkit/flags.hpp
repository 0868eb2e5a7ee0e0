#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "springerkit/domino.hpp"
#include "springerkit/exact.hpp"
#include "springerkit/tableau.hpp"

namespace springerkit {

using FqSubspace = Subspace<PrimeField>;
using FqVector = std::vector<Residue>;

/// Complete flag V_0 < V_1 < ... < V_n of F_q^n.
class Flag {
 public:
  /// Validates dim V_i = i and V_i < V_{i+1}.
  explicit Flag(std::vector<FqSubspace> chain);
  /// Trusted constructor used by the enumerators: basis[i] spans V_{i+1} over V_i.
  Flag(std::vector<FqSubspace> chain, std::vector<FqVector> basis);

  int n() const { return static_cast<int>(chain_.size()) - 1; }
  const FqSubspace& operator[](int i) const { return chain_[static_cast<std::size_t>(i)]; }
  const std::vector<FqSubspace>& chain() const { return chain_; }
  const PrimeField& field() const { return chain_.front().field(); }

  /// Matrix whose first i columns span V_i.
  FqMatrix adapted_basis() const;
  /// Canonical string, equal for equal flags.
  std::string key() const;
  /// Image under an invertible matrix.
  Flag transformed(const FqMatrix& g) const;
  bool is_stable(const FqMatrix& x) const;

  friend bool operator==(const Flag& a, const Flag& b) { return a.chain_ == b.chain_; }

 private:
  std::vector<FqSubspace> chain_;
  std::vector<FqVector> basis_;
};

/// Largest n accepted by flag enumeration: 8, or SPRINGERKIT_MAX_N when set.
int max_flag_dimension();
/// Throws ScaleError for n above the guard or q outside {3, 5}.
void check_flag_guard(int n, std::uint32_t q);

/// Visit every x-stable complete flag once. With a Gram matrix only the
/// isotropic ones (V_{n-i} = V_i^perp) are visited. Order is deterministic.
void for_each_xstable_flag(const FqMatrix& x, const std::function<void(const Flag&)>& visit,
                           const std::optional<FqMatrix>& gram = std::nullopt);
std::vector<Flag> enumerate_xstable_flags(const FqMatrix& x,
                                          const std::optional<FqMatrix>& gram = std::nullopt);

/// (V_n^perp, ..., V_0^perp).
Flag sigma(const Flag& f, const FqMatrix& gram);
bool is_isotropic(const Flag& f, const FqMatrix& gram);

/// x written in the adapted basis of f; strictly upper triangular when f is
/// x-stable and x nilpotent.
FqMatrix flag_coordinates(const Flag& f, const FqMatrix& x);

/// Standard tableau tau with lambda^{n-i}(tau) the Jordan type of x on
/// V_{b_i}/V_{a_i}, (a_i, b_i) = (floor(i/2), n - ceil(i/2)).
StandardYoungTableau syt_label(const Flag& f, const FqMatrix& x);

/// Domino tableau d with lambda^{floor(n/2)-i}(d) the Jordan type of x on
/// V_{n-i}/V_i. Throws NotDominoError when two consecutive shapes do not
/// differ by a domino.
DominoTableau domino_label(const Flag& f, const FqMatrix& x);

/// Replace the Lagrangian V_{n/2} by the other Lagrangian containing
/// V_{n/2-1}. Needs n even, a symmetric Gram matrix and an isotropic flag.
Flag iota(const Flag& f, const FqMatrix& gram);

/// Flags with V_{dim ker x^j} = ker x^j for every j.
std::vector<Flag> kernel_flag_set(const FqMatrix& x);

}  // namespace springerkit
