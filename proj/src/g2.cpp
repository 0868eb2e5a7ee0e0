#include "springerkit/g2.hpp"

#include <set>

#include "springerkit/errors.hpp"

namespace springerkit::g2 {

namespace {

// Rows and columns indexed -6..-1, 1..6. The entries at j = -i are holes in
// the table and are stored as 0.
constexpr std::array<std::array<int, 12>, 12> kN{{
    {0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, 0},
    {0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0, -1},
    {0, 0, 0, 3, 0, 3, -2, 0, 2, 0, -1, -1},
    {0, 0, -3, 0, 0, -2, -3, 1, 0, 2, 0, 1},
    {0, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1},
    {0, 0, -3, 2, 1, 0, 0, 0, -3, -2, 1, 0},
    {0, -1, 2, 3, 0, 0, 0, -1, -2, 3, 0, 0},
    {-1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0},
    {-1, 0, -2, 0, -1, 3, 2, 0, 0, 3, 0, 0},
    {1, 1, 0, -2, 0, 2, -3, 0, -3, 0, 0, 0},
    {1, 0, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0},
    {0, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0},
}};

constexpr std::array<std::array<int, 2>, 6> kRoots{{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}};
constexpr std::array<std::array<int, 2>, 6> kPairing{{{2, -3}, {-1, 2}, {-1, 3}, {1, 0}, {1, -1}, {0, 1}}};

int n_index(int i) { return i < 0 ? i + 6 : i + 5; }

void check_root(int i) {
  if (i == 0 || i < -6 || i > 6) throw InvalidArgument("root index must be in -6..-1, 1..6");
}

// Root index of a basis position, 0 for the Cartan part.
int position_root(int p) {
  if (p < 6) return p - 6;
  if (p < 8) return 0;
  return p - 7;
}

// Bracket of basis elements p and q, accumulated with coefficient c into out.
void add_basis_bracket(int p, int q, const mpq_class& c, Vec14& out) {
  const int i = position_root(p);
  const int j = position_root(q);
  if (i == 0 && j == 0) return;
  if (i == 0 || j == 0) {
    // [lambda, e_gamma] = (coefficient of gamma) e_gamma.
    const int lam = i == 0 ? p : q;
    const int root = i == 0 ? j : i;
    const auto coords = root_coordinates(root);
    const int weight = lam == kLambdaAlpha ? coords[0] : coords[1];
    const int sign = i == 0 ? 1 : -1;
    out[static_cast<std::size_t>(basis_position(root))] += c * (sign * weight);
    return;
  }
  if (j == -i) {
    const int pos = i > 0 ? i : j;
    const int sign = i > 0 ? 1 : -1;
    const auto& pair = kPairing[static_cast<std::size_t>(pos - 1)];
    out[kLambdaAlpha] += c * (sign * pair[0]);
    out[kLambdaBeta] += c * (sign * pair[1]);
    return;
  }
  const auto a = root_coordinates(i);
  const auto b = root_coordinates(j);
  const int k = root_index(a[0] + b[0], a[1] + b[1]);
  if (k == 0) return;
  out[static_cast<std::size_t>(basis_position(k))] += c * structure_constant(i, j);
}

}  // namespace

const std::array<std::array<int, 2>, 6>& positive_roots() { return kRoots; }
const std::array<std::array<int, 2>, 6>& pairing_table() { return kPairing; }

bool structure_constant_defined(int i, int j) {
  check_root(i);
  check_root(j);
  return j != -i;
}

int structure_constant(int i, int j) {
  if (!structure_constant_defined(i, j)) throw InvalidArgument("N is undefined at j = -i");
  return kN[static_cast<std::size_t>(n_index(i))][static_cast<std::size_t>(n_index(j))];
}

int root_index(int a, int b) {
  for (int i = 0; i < 6; ++i) {
    if (kRoots[static_cast<std::size_t>(i)][0] == a && kRoots[static_cast<std::size_t>(i)][1] == b) return i + 1;
    if (kRoots[static_cast<std::size_t>(i)][0] == -a && kRoots[static_cast<std::size_t>(i)][1] == -b) return -(i + 1);
  }
  return 0;
}

std::array<int, 2> root_coordinates(int i) {
  check_root(i);
  const auto& r = kRoots[static_cast<std::size_t>(std::abs(i) - 1)];
  return i > 0 ? r : std::array<int, 2>{-r[0], -r[1]};
}

int basis_position(int i) {
  check_root(i);
  return i < 0 ? i + 6 : i + 7;
}

std::string basis_name(int position) {
  if (position == kLambdaAlpha) return "lambda_alpha";
  if (position == kLambdaBeta) return "lambda_beta";
  const int i = position_root(position);
  return i > 0 ? "e_alpha" + std::to_string(i) : "e_-alpha" + std::to_string(-i);
}

Vec14 bracket(const Vec14& u, const Vec14& v) {
  if (u.size() != kDim || v.size() != kDim) throw InvalidArgument("G2 vectors have 14 coordinates");
  Vec14 out(kDim, mpq_class(0));
  for (int p = 0; p < kDim; ++p) {
    if (is_zero(u[static_cast<std::size_t>(p)])) continue;
    for (int q = 0; q < kDim; ++q) {
      if (is_zero(v[static_cast<std::size_t>(q)])) continue;
      add_basis_bracket(p, q, u[static_cast<std::size_t>(p)] * v[static_cast<std::size_t>(q)], out);
    }
  }
  return out;
}

std::optional<std::array<int, 3>> jacobi_violation() {
  auto unit = [](int p) {
    Vec14 e(kDim, mpq_class(0));
    e[static_cast<std::size_t>(p)] = 1;
    return e;
  };
  for (int a = 0; a < kDim; ++a) {
    for (int b = 0; b < kDim; ++b) {
      for (int c = 0; c < kDim; ++c) {
        const Vec14 ea = unit(a), eb = unit(b), ec = unit(c);
        const Vec14 t1 = bracket(ea, bracket(eb, ec));
        const Vec14 t2 = bracket(eb, bracket(ec, ea));
        const Vec14 t3 = bracket(ec, bracket(ea, eb));
        for (int k = 0; k < kDim; ++k) {
          const auto s = static_cast<std::size_t>(k);
          if (!is_zero(t1[s] + t2[s] + t3[s])) return std::array<int, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

QMatrix build_cx(const Point& x) {
  Vec14 xv(kDim, mpq_class(0));
  for (int i = 1; i <= 6; ++i) xv[static_cast<std::size_t>(basis_position(i))] = x[static_cast<std::size_t>(i - 1)];
  QMatrix c(Rationals{}, kDim, kDim);
  for (int q = 0; q < kDim; ++q) {
    Vec14 col(kDim, mpq_class(0));
    for (int i = 1; i <= 6; ++i) {
      const auto& xi = x[static_cast<std::size_t>(i - 1)];
      if (!is_zero(xi)) add_basis_bracket(basis_position(i), q, xi, col);
    }
    for (int p = 0; p < kDim; ++p) c(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = col[static_cast<std::size_t>(p)];
  }
  return c;
}

int orbit_rank(const Point& x) {
  const int r = static_cast<int>(rank(build_cx(x)));
  if (r != 0 && r != 6 && r != 8 && r != 10 && r != 12) {
    throw InvariantViolation("rank of C_x is " + std::to_string(r) + ", not an orbit dimension");
  }
  return r;
}

std::string orbit_label(int rank) {
  switch (rank) {
    case 0: return "0";
    case 6: return "A1";
    case 8: return "~A1";
    case 10: return "G2(a1)";
    case 12: return "G2";
    default: throw InvalidArgument("no G2 orbit of dimension " + std::to_string(rank));
  }
}

Variety parse_variety(std::string_view text) {
  if (text == "min" || text == "minimal") return Variety::MinimalOrbit;
  if (text == "tilde" || text == "V") return Variety::TildeV;
  throw InvalidArgument("unknown variety '" + std::string(text) + "' (expected min or tilde)");
}

std::string to_string(Variety v) { return v == Variety::MinimalOrbit ? "min" : "tilde"; }

std::vector<mpq_class> equation_values(Variety v, const Point& x) {
  const auto& [x1, x2, x3, x4, x5, x6] = x;
  if (v == Variety::MinimalOrbit) {
    return {x1, x2 * x4 - x3 * x3, x3 * x5 + x4 * x4, x2 * x5 + x3 * x4};
  }
  return {x2, 3 * x4 * x4 + 4 * x3 * x5 - 4 * x1 * x6};
}

QMatrix jacobian(Variety v, const Point& x) {
  const auto& [x1, x2, x3, x4, x5, x6] = x;
  const mpq_class z(0);
  std::vector<std::vector<mpq_class>> rows;
  if (v == Variety::MinimalOrbit) {
    rows = {{1, z, z, z, z, z},
            {z, x4, -2 * x3, x2, z, z},
            {z, z, x5, 2 * x4, x3, z},
            {z, x5, x4, x3, x2, z}};
  } else {
    rows = {{z, 1, z, z, z, z}, {-4 * x6, z, 4 * x5, 6 * x4, 4 * x3, -4 * x1}};
  }
  return QMatrix::from_rows(Rationals{}, 6, rows);
}

int jacobian_rank(Variety v, const Point& x) {
  for (const auto& value : equation_values(v, x)) {
    if (!is_zero(value)) throw DomainError(format_point(x) + " is not on the " + to_string(v) + " variety");
  }
  return static_cast<int>(rank(jacobian(v, x)));
}

int expected_codimension(Variety v) { return v == Variety::MinimalOrbit ? 3 : 2; }

bool min_orbit_equations(const Point& x) {
  bool nonzero = false;
  for (const auto& xi : x) nonzero = nonzero || !is_zero(xi);
  if (!nonzero) return false;
  for (const auto& value : equation_values(Variety::MinimalOrbit, x)) {
    if (!is_zero(value)) return false;
  }
  return true;
}

bool tildeV_membership(const Point& x) {
  for (const auto& value : equation_values(Variety::TildeV, x)) {
    if (!is_zero(value)) return false;
  }
  return true;
}

Point parse_point(std::string_view text) {
  Point x;
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    if (count == 6) throw InvalidArgument("a G2 point has six coordinates");
    x[count++] = Rationals{}.parse(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (count != 6) throw InvalidArgument("a G2 point has six coordinates");
  return x;
}

std::string format_point(const Point& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += x[i].get_str();
  }
  return out + ")";
}

GridScan classify_grid(int radius, bool x1_zero_only) {
  if (radius < 0) throw InvalidArgument("grid radius must be nonnegative");
  GridScan scan;
  scan.radius = radius;
  scan.x1_zero_only = x1_zero_only;
  const int width = 2 * radius + 1;
  std::array<int, 6> digits{};
  while (true) {
    Point x;
    for (std::size_t k = 0; k < 6; ++k) x[k] = digits[k] - radius;
    if (!x1_zero_only || is_zero(x[0])) {
      ++scan.points;
      const int r = orbit_rank(x);
      ++scan.rank_histogram[r];
      bool mismatch = (r == 6) != min_orbit_equations(x);
      if (mismatch) ++scan.min_orbit_mismatches;
      if (tildeV_membership(x)) {
        ++scan.tilde_points;
        const bool generic = !is_zero(x[0]) || !is_zero(x[2]);
        if (r > 8 || (r == 8) != generic) {
          ++scan.tilde_mismatches;
          mismatch = true;
        }
      }
      if (mismatch && !scan.first_mismatch) scan.first_mismatch = x;
    }
    std::size_t k = 0;
    while (k < 6 && digits[k] == width - 1) digits[k++] = 0;
    if (k == 6) break;
    ++digits[k];
  }
  return scan;
}

}  // namespace springerkit::g2
