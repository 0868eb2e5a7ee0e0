#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springerkit/exact.hpp"
#include "springerkit/partition.hpp"

namespace springerkit {

/// One Jordan block e_1..e_size of x (x e_i = e_{i-1}, x e_1 = 0), stored at
/// basis positions offset..offset+size-1. A block paired with a partner of
/// the same size pairs e_i against the partner's f_{size+1-i}; a single block
/// pairs with itself, scaled by `sign`.
struct ModelBlock {
  int size = 0;
  int offset = 0;
  int partner_offset = -1;  // -1 for a single block
  int sign = 1;
};

struct NilpotentModel {
  QMatrix x;
  Partition jordan;
  std::optional<QMatrix> gram;
  std::optional<FormKind> kind;
  std::vector<ModelBlock> blocks;

  int dim() const { return static_cast<int>(x.rows()); }
};

/// Block-diagonal Jordan matrix with block sizes p (ones on the superdiagonal).
NilpotentModel standard_nilpotent(const Partition& p);

/// Nilpotent x of type p, skew-adjoint for an explicit nondegenerate form of
/// the given kind. Blocks whose size has the wrong parity for the kind are
/// paired. Signs alternate so that the form is split over every F_q.
NilpotentModel skew_adjoint_model(const Partition& p, FormKind kind);

enum class Ambient { GeneralLinear, FormPreserving };

/// Rank of y -> [x, y] on gl_n, or on the Lie algebra of the model's form.
std::int64_t orbit_dim(const NilpotentModel& model, Ambient ambient);

/// Basis (as matrices) of {y : y^T G + G y = 0}.
std::vector<QMatrix> form_lie_algebra_basis(const QMatrix& gram);

/// Checks y^T G + G y = 0.
bool is_skew_adjoint(const QMatrix& y, const QMatrix& gram);

/// Type A Levi subalgebra: diagonal blocks of the given sizes, each carrying
/// a nilpotent orbit of its block size.
struct LeviData {
  std::vector<int> block_sizes;
  std::vector<Partition> orbits;

  LeviData(std::vector<int> sizes, std::vector<Partition> block_orbits);
  static LeviData trivial_orbits(std::vector<int> sizes);

  int n() const;
  std::int64_t levi_orbit_dim() const;   // sum of gl orbit dimensions per block
  std::int64_t nilradical_dim() const;   // sum over i < j of b_i b_j
};

struct InducedOrbitSample {
  Partition orbit;
  std::int64_t orbit_dim = 0;
  std::int64_t expected_dim = 0;  // dim O_L + 2 dim n_P
  int trials = 0;
  bool dimension_matches() const { return orbit_dim == expected_dim; }
};

/// Sample x = (Levi nilpotent) + (random block-upper entries) and keep the
/// largest Jordan type seen. Trial t draws integers from [-(t+1), t+1].
InducedOrbitSample induced_orbit_sample(const LeviData& levi, int trials, std::uint64_t seed);

/// For an x-stable M inside Im x^l1: the Jordan types of x on
/// (x^l1)^{-1}(M) / M and on Im x^l1.
std::pair<Partition, Partition> split_by_columns(const NilpotentModel& model, int l1,
                                                 const std::vector<std::vector<mpq_class>>& m_basis);

}  // namespace springerkit
