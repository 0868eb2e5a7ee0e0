#include "springerkit/nilpotent.hpp"

#include <map>
#include <random>

#include "springerkit/errors.hpp"

namespace springerkit {

namespace {

void place_jordan_block(QMatrix& x, int offset, int size) {
  for (int i = 1; i < size; ++i) {
    x(static_cast<std::size_t>(offset + i - 1), static_cast<std::size_t>(offset + i)) = 1;
  }
}

// Sign of (-1)^i for 1-based i.
int alt(int i) { return i % 2 == 0 ? 1 : -1; }

}  // namespace

NilpotentModel standard_nilpotent(const Partition& p) {
  const auto n = static_cast<std::size_t>(p.size());
  NilpotentModel model{QMatrix(Rationals{}, n, n), p, std::nullopt, std::nullopt, {}};
  int offset = 0;
  for (int size : p.parts()) {
    place_jordan_block(model.x, offset, size);
    model.blocks.push_back({size, offset, -1, 1});
    offset += size;
  }
  return model;
}

NilpotentModel skew_adjoint_model(const Partition& p, FormKind kind) {
  if (!is_admissible(p, kind)) {
    throw AdmissibilityError(p.to_string() + " is not " + to_string(kind) + "-admissible");
  }
  const auto n = static_cast<std::size_t>(p.size());
  NilpotentModel model{QMatrix(Rationals{}, n, n), p, QMatrix(Rationals{}, n, n), kind, {}};
  QMatrix& g = *model.gram;
  const int paired_parity = kind == FormKind::Orthogonal ? 0 : 1;
  const int eps = kind == FormKind::Orthogonal ? 1 : -1;

  int offset = 0;
  int odd_singles = 0;              // orthogonal: alternate the middle entry globally
  std::map<int, int> singles_of_size;  // symplectic: alternate within each size
  const auto& parts = p.parts();
  for (std::size_t b = 0; b < parts.size();) {
    const int k = parts[b];
    if (k % 2 == paired_parity) {
      // e at offset, f at offset + k.
      place_jordan_block(model.x, offset, k);
      place_jordan_block(model.x, offset + k, k);
      for (int i = 1; i <= k; ++i) {
        const int j = k + 1 - i;
        const auto ei = static_cast<std::size_t>(offset + i - 1);
        const auto fj = static_cast<std::size_t>(offset + k + j - 1);
        g(ei, fj) = alt(i);
        g(fj, ei) = eps * alt(i);
      }
      model.blocks.push_back({k, offset, offset + k, 1});
      model.blocks.push_back({k, offset + k, offset, 1});
      offset += 2 * k;
      b += 2;
      continue;
    }
    int s = 1;
    if (kind == FormKind::Orthogonal) {
      // Middle entry s * (-1)^((k+1)/2) alternates +1, -1, ... over odd blocks.
      const int middle = odd_singles % 2 == 0 ? 1 : -1;
      s = middle * alt((k + 1) / 2);
      ++odd_singles;
    } else {
      s = singles_of_size[k]++ % 2 == 0 ? 1 : -1;
    }
    place_jordan_block(model.x, offset, k);
    for (int i = 1; i <= k; ++i) {
      g(static_cast<std::size_t>(offset + i - 1), static_cast<std::size_t>(offset + k - i)) = s * alt(i);
    }
    model.blocks.push_back({k, offset, -1, s});
    offset += k;
    ++b;
  }
  return model;
}

bool is_skew_adjoint(const QMatrix& y, const QMatrix& gram) {
  return (y.transpose() * gram + gram * y).is_zero();
}

std::vector<QMatrix> form_lie_algebra_basis(const QMatrix& gram) {
  const std::size_t n = gram.rows();
  // Unknown y_{ab} at column a*n+b; equation (a, c) of y^T G + G y = 0 is
  //   sum_b y_{ba} G_{bc} + sum_b G_{ab} y_{bc} = 0.
  QMatrix system(Rationals{}, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t eq = a * n + c;
      for (std::size_t b = 0; b < n; ++b) {
        system(eq, b * n + a) += gram(b, c);
        system(eq, b * n + c) += gram(a, b);
      }
    }
  }
  const QMatrix kernel = kernel_basis(system);
  std::vector<QMatrix> basis;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    QMatrix y(Rationals{}, n, n);
    for (std::size_t k = 0; k < n * n; ++k) y(k / n, k % n) = kernel(r, k);
    basis.push_back(std::move(y));
  }
  return basis;
}

std::int64_t orbit_dim(const NilpotentModel& model, Ambient ambient) {
  const std::size_t n = model.x.rows();
  std::vector<QMatrix> domain;
  if (ambient == Ambient::FormPreserving) {
    if (!model.gram) throw ModelError("form-preserving orbit dimension needs a Gram matrix");
    domain = form_lie_algebra_basis(*model.gram);
  } else {
    for (std::size_t k = 0; k < n * n; ++k) {
      QMatrix e(Rationals{}, n, n);
      e(k / n, k % n) = 1;
      domain.push_back(std::move(e));
    }
  }
  // Rows: [x, y] flattened, one per basis element y.
  QMatrix images(Rationals{}, domain.size(), n * n);
  for (std::size_t r = 0; r < domain.size(); ++r) {
    const QMatrix bracket = model.x * domain[r] - domain[r] * model.x;
    for (std::size_t k = 0; k < n * n; ++k) images(r, k) = bracket(k / n, k % n);
  }
  return static_cast<std::int64_t>(rank(images));
}

LeviData::LeviData(std::vector<int> sizes, std::vector<Partition> block_orbits)
    : block_sizes(std::move(sizes)), orbits(std::move(block_orbits)) {
  if (block_sizes.size() != orbits.size()) throw InvalidArgument("one orbit per Levi block is required");
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    if (block_sizes[i] < 1) throw InvalidArgument("Levi block sizes must be positive");
    if (orbits[i].size() != block_sizes[i]) {
      throw InvalidArgument("orbit " + orbits[i].to_string() + " does not fit block of size " +
                            std::to_string(block_sizes[i]));
    }
  }
}

LeviData LeviData::trivial_orbits(std::vector<int> sizes) {
  std::vector<Partition> orbits;
  for (int s : sizes) orbits.emplace_back(std::vector<int>(static_cast<std::size_t>(std::max(s, 0)), 1));
  return LeviData(std::move(sizes), std::move(orbits));
}

int LeviData::n() const {
  int total = 0;
  for (int s : block_sizes) total += s;
  return total;
}

std::int64_t LeviData::levi_orbit_dim() const {
  std::int64_t total = 0;
  for (const auto& o : orbits) total += gl_orbit_dimension(o);
  return total;
}

std::int64_t LeviData::nilradical_dim() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < block_sizes.size(); ++j) total += std::int64_t{block_sizes[i]} * block_sizes[j];
  }
  return total;
}

InducedOrbitSample induced_orbit_sample(const LeviData& levi, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("at least one trial is required");
  const auto n = static_cast<std::size_t>(levi.n());
  QMatrix base(Rationals{}, n, n);
  std::vector<int> block_of(n, 0);
  int offset = 0;
  for (std::size_t b = 0; b < levi.block_sizes.size(); ++b) {
    const NilpotentModel block = standard_nilpotent(levi.orbits[b]);
    for (int i = 0; i < levi.block_sizes[b]; ++i) {
      block_of[static_cast<std::size_t>(offset + i)] = static_cast<int>(b);
      for (int j = 0; j < levi.block_sizes[b]; ++j) {
        base(static_cast<std::size_t>(offset + i), static_cast<std::size_t>(offset + j)) =
            block.x(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
    offset += levi.block_sizes[b];
  }

  std::mt19937_64 rng(seed);
  InducedOrbitSample result;
  result.expected_dim = levi.levi_orbit_dim() + 2 * levi.nilradical_dim();
  result.trials = trials;
  bool have = false;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<long> dist(-(t + 1), t + 1);
    QMatrix x = base;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (block_of[i] < block_of[j]) x(i, j) = dist(rng);
      }
    }
    const Partition type = jordan_type(x);
    const std::int64_t dim = gl_orbit_dimension(type);
    if (!have || (dominates(type, result.orbit) && type != result.orbit) ||
        (!dominates(result.orbit, type) && dim > result.orbit_dim)) {
      result.orbit = type;
      result.orbit_dim = dim;
      have = true;
    }
  }
  return result;
}

std::pair<Partition, Partition> split_by_columns(const NilpotentModel& model, int l1,
                                                 const std::vector<std::vector<mpq_class>>& m_basis) {
  if (l1 < 0) throw InvalidArgument("column count must be nonnegative");
  const std::size_t n = model.x.rows();
  for (const auto& v : m_basis) {
    if (v.size() != n) throw SubspaceError("subspace vector has the wrong length");
  }
  using QSubspace = Subspace<Rationals>;
  const QSubspace m = QSubspace::span(Rationals{}, n, m_basis);
  const QMatrix xl = power(model.x, static_cast<unsigned>(l1));
  const QSubspace image = QSubspace::image_of(xl);
  if (!m.is_stable(model.x)) throw SubspaceError("M is not x-stable");
  if (!image.contains(m)) throw SubspaceError("M is not contained in Im x^" + std::to_string(l1));
  const QSubspace upper = m.preimage(xl);
  return {induced_jordan_type(model.x, m, upper),
          induced_jordan_type(model.x, QSubspace(Rationals{}, n), image)};
}

}  // namespace springerkit
