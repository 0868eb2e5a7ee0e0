#include "springerkit/flags.hpp"

#include <cstdlib>

#include "springerkit/errors.hpp"

namespace springerkit {

namespace {

FqVector combine(const PrimeField& field, const std::vector<FqVector>& vectors, const FqVector& coeffs) {
  FqVector v(vectors.front().size(), field.zero());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coeffs[k] * vectors[k][j];
  }
  return v;
}

Residue form_value(const FqMatrix& gram, const FqVector& u, const FqVector& v) {
  const FqVector gv = gram.apply(v);
  Residue total = gram.field().zero();
  for (std::size_t k = 0; k < u.size(); ++k) total += u[k] * gv[k];
  return total;
}

// Visit each subspace V_i + <v> with v running over the lines of U / V_i.
void for_each_extension(const FqSubspace& vi, const FqSubspace& u,
                        const std::function<void(const FqVector&)>& visit) {
  const auto comp = complement_basis(u, vi);
  if (comp.empty()) return;
  const PrimeField field = vi.field();
  for_each_projective_point(field, comp.size(),
                            [&](const FqVector& coeffs) { visit(combine(field, comp, coeffs)); });
}

Partition block_type(const FqMatrix& t, int a, int b) {
  const auto lo = static_cast<std::size_t>(a);
  const auto len = static_cast<std::size_t>(b - a);
  return jordan_type(t.block(lo, lo, len, len));
}

}  // namespace

Flag::Flag(std::vector<FqSubspace> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw InvalidArgument("a flag needs at least V_0");
  const std::size_t n = chain_.front().ambient_dim();
  if (chain_.size() != n + 1) throw InvalidArgument("a complete flag of F_q^n has n+1 members");
  for (std::size_t i = 0; i <= n; ++i) {
    if (chain_[i].dim() != i) throw InvalidArgument("V_" + std::to_string(i) + " has the wrong dimension");
    if (i > 0) {
      if (!chain_[i].contains(chain_[i - 1])) throw InvalidArgument("flag members are not nested");
      basis_.push_back(complement_basis(chain_[i], chain_[i - 1]).front());
    }
  }
}

Flag::Flag(std::vector<FqSubspace> chain, std::vector<FqVector> basis)
    : chain_(std::move(chain)), basis_(std::move(basis)) {}

FqMatrix Flag::adapted_basis() const {
  const auto n = static_cast<std::size_t>(this->n());
  FqMatrix b(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) b(i, j) = basis_[j][i];
  }
  return b;
}

std::string Flag::key() const {
  std::string out;
  for (std::size_t i = 1; i + 1 < chain_.size(); ++i) {
    const auto& m = chain_[i].basis();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out += std::to_string(m(r, c).value());
        out += ' ';
      }
    }
    out += '|';
  }
  return out;
}

Flag Flag::transformed(const FqMatrix& g) const {
  std::vector<FqSubspace> chain;
  for (const auto& v : chain_) chain.push_back(v.image(g));
  return Flag(std::move(chain));
}

bool Flag::is_stable(const FqMatrix& x) const {
  for (const auto& v : chain_) {
    if (!v.is_stable(x)) return false;
  }
  return true;
}

int max_flag_dimension() {
  if (const char* env = std::getenv("SPRINGERKIT_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

void check_flag_guard(int n, std::uint32_t q) {
  if (n > max_flag_dimension()) {
    throw ScaleError("flag enumeration limited to n <= " + std::to_string(max_flag_dimension()) +
                     " (set SPRINGERKIT_MAX_N to override), got n = " + std::to_string(n));
  }
  if (q != 3 && q != 5) throw ScaleError("flag enumeration supports q = 3 or q = 5, got " + std::to_string(q));
}

void for_each_xstable_flag(const FqMatrix& x, const std::function<void(const Flag&)>& visit,
                           const std::optional<FqMatrix>& gram) {
  if (!x.is_square()) throw InvalidArgument("x must be square");
  const PrimeField& field = x.field();
  const int n = static_cast<int>(x.rows());
  check_flag_guard(n, field.characteristic());
  if (gram && (gram->rows() != x.rows() || !gram->is_square())) throw InvalidArgument("Gram matrix has the wrong size");

  // Capacity is reserved so references to chain.back() survive push_back.
  std::vector<FqSubspace> chain{FqSubspace(field, x.rows())};
  chain.reserve(x.rows() + 1);
  std::vector<FqVector> basis;
  const int top = gram ? n / 2 : n;

  // Completes an isotropic chain V_0..V_top by the complements V_{n-i} = V_i^perp.
  auto finish = [&]() {
    if (!gram) {
      visit(Flag(chain, basis));
      return;
    }
    std::vector<FqSubspace> full = chain;
    std::vector<FqVector> full_basis = basis;
    for (int j = top + 1; j <= n; ++j) {
      FqSubspace vj = chain[static_cast<std::size_t>(n - j)].perp(*gram);
      if (!vj.is_stable(x)) return;
      full_basis.push_back(complement_basis(vj, full.back()).front());
      full.push_back(std::move(vj));
    }
    visit(Flag(std::move(full), std::move(full_basis)));
  };

  std::function<void()> grow = [&]() {
    const FqSubspace& vi = chain.back();
    if (static_cast<int>(vi.dim()) == top) {
      finish();
      return;
    }
    FqSubspace u = vi.preimage(x);
    if (gram) u = u.intersect(vi.perp(*gram));
    for_each_extension(vi, u, [&](const FqVector& v) {
      if (gram && !is_zero(form_value(*gram, v, v))) return;
      FqSubspace next = chain.back().with(v);
      chain.push_back(std::move(next));
      basis.push_back(v);
      grow();
      chain.pop_back();
      basis.pop_back();
    });
  };
  grow();
}

std::vector<Flag> enumerate_xstable_flags(const FqMatrix& x, const std::optional<FqMatrix>& gram) {
  std::vector<Flag> out;
  for_each_xstable_flag(x, [&](const Flag& f) { out.push_back(f); }, gram);
  return out;
}

Flag sigma(const Flag& f, const FqMatrix& gram) {
  std::vector<FqSubspace> chain;
  for (int i = f.n(); i >= 0; --i) chain.push_back(f[i].perp(gram));
  return Flag(std::move(chain));
}

bool is_isotropic(const Flag& f, const FqMatrix& gram) {
  for (int i = 0; i <= f.n(); ++i) {
    if (!(f[i].perp(gram) == f[f.n() - i])) return false;
  }
  return true;
}

FqMatrix flag_coordinates(const Flag& f, const FqMatrix& x) {
  const FqMatrix b = f.adapted_basis();
  return inverse(b) * x * b;
}

StandardYoungTableau syt_label(const Flag& f, const FqMatrix& x) {
  const int n = f.n();
  const FqMatrix t = flag_coordinates(f, x);
  std::vector<Partition> chain(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const int a = i / 2;
    const int b = n - (i + 1) / 2;
    chain[static_cast<std::size_t>(n - i)] = block_type(t, a, b);
  }
  return syt_from_chain(chain);
}

DominoTableau domino_label(const Flag& f, const FqMatrix& x) {
  const int n = f.n();
  const int m = n / 2;
  const FqMatrix t = flag_coordinates(f, x);
  std::vector<Partition> shapes(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) shapes[static_cast<std::size_t>(m - i)] = block_type(t, i, n - i);

  const Partition& full = shapes.back();
  TableauRows rows;
  for (int len : full.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  for (int j = 1; j <= m; ++j) {
    const Partition& prev = shapes[static_cast<std::size_t>(j - 1)];
    const Partition& cur = shapes[static_cast<std::size_t>(j)];
    std::vector<std::pair<int, int>> added;
    if (cur.contains(prev)) {
      for (int r = 0; r < cur.num_rows(); ++r) {
        const int from = r < prev.num_rows() ? prev.row(r) : 0;
        for (int c = from; c < cur.row(r); ++c) added.emplace_back(r, c);
      }
    }
    const bool adjacent = added.size() == 2 && std::abs(added[0].first - added[1].first) +
                                                       std::abs(added[0].second - added[1].second) == 1;
    if (!adjacent) {
      throw NotDominoError("subquotient shapes " + prev.to_string() + " and " + cur.to_string() +
                           " do not differ by a domino");
    }
    for (const auto& [r, c] : added) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = j;
  }
  return DominoTableau(std::move(rows));
}

Flag iota(const Flag& f, const FqMatrix& gram) {
  const int n = f.n();
  if (n % 2 != 0 || n == 0) throw InvalidArgument("iota needs a positive even dimension");
  if (!(gram.transpose() == gram)) throw InvalidArgument("iota needs a symmetric form");
  if (!is_isotropic(f, gram)) throw InvalidArgument("iota needs an isotropic flag");
  const int m = n / 2;
  const FqSubspace& w = f[m - 1];
  const FqSubspace wp = w.perp(gram);
  std::optional<FqSubspace> other;
  for_each_extension(w, wp, [&](const FqVector& v) {
    if (other || !is_zero(form_value(gram, v, v))) return;
    FqSubspace l = w.with(v);
    if (!(l == f[m])) other = std::move(l);
  });
  if (!other) throw InvariantViolation("no second Lagrangian subspace over V_" + std::to_string(m - 1));
  std::vector<FqSubspace> chain = f.chain();
  chain[static_cast<std::size_t>(m)] = *other;
  return Flag(std::move(chain));
}

std::vector<Flag> kernel_flag_set(const FqMatrix& x) {
  const PrimeField& field = x.field();
  const std::size_t n = x.rows();
  std::vector<FqSubspace> kernels{FqSubspace(field, n)};
  FqMatrix p = FqMatrix::identity(field, n);
  while (kernels.back().dim() < n) {
    p = p * x;
    FqSubspace k = FqSubspace::kernel_of(p);
    if (k.dim() == kernels.back().dim()) throw NilpotencyError("matrix is not nilpotent");
    kernels.push_back(std::move(k));
  }

  std::vector<Flag> out;
  std::vector<FqSubspace> chain{FqSubspace(field, n)};
  chain.reserve(n + 1);
  std::vector<FqVector> basis;
  std::function<void()> grow = [&]() {
    const FqSubspace& vi = chain.back();
    if (vi.dim() == n) {
      out.emplace_back(chain, basis);
      return;
    }
    std::size_t j = 0;
    while (kernels[j].dim() <= vi.dim()) ++j;
    for_each_extension(vi, kernels[j], [&](const FqVector& v) {
      FqSubspace next = chain.back().with(v);
      chain.push_back(std::move(next));
      basis.push_back(v);
      grow();
      chain.pop_back();
      basis.pop_back();
    });
  };
  grow();
  return out;
}

}  // namespace springerkit
