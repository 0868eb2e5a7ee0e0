#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "springerkit/exact.hpp"

namespace springerkit::g2 {

/// Coefficients (x_1..x_6) of x = sum x_i e_{alpha_i} in the nilradical.
using Point = std::array<mpq_class, 6>;
using Vec14 = std::vector<mpq_class>;

constexpr int kDim = 14;

/// Positive roots alpha_1..alpha_6 in coordinates over the simple roots
/// (alpha short, beta long).
const std::array<std::array<int, 2>, 6>& positive_roots();
/// (<alpha_i, alpha>, <alpha_i, beta>) for i = 1..6.
const std::array<std::array<int, 2>, 6>& pairing_table();

/// N_{alpha_i, alpha_j} for i, j in {-6..-1, 1..6}; undefined for j = -i.
bool structure_constant_defined(int i, int j);
int structure_constant(int i, int j);

/// Root index (+-1..6) with the given coordinates, or 0 when not a root.
int root_index(int a, int b);
std::array<int, 2> root_coordinates(int i);

/// Position of e_{alpha_i} in the basis
/// (e_{-alpha_6}, ..., e_{-alpha_1}, lambda_alpha, lambda_beta, e_{alpha_1}, ..., e_{alpha_6}).
int basis_position(int i);
constexpr int kLambdaAlpha = 6;
constexpr int kLambdaBeta = 7;
std::string basis_name(int position);

/// Bracket of two vectors in the 14-dimensional basis above.
Vec14 bracket(const Vec14& u, const Vec14& v);

/// First basis triple (a, b, c) violating the Jacobi identity, if any.
std::optional<std::array<int, 3>> jacobi_violation();

/// Matrix of [x, .] in the basis above (column j is [x, basis_j]).
QMatrix build_cx(const Point& x);

/// rank C_x, the dimension of the orbit of x. Throws InvariantViolation if
/// the rank is not one of 0, 6, 8, 10, 12.
int orbit_rank(const Point& x);
/// Bala-Carter label of the orbit of the given dimension.
std::string orbit_label(int rank);

enum class Variety { MinimalOrbit, TildeV };
Variety parse_variety(std::string_view text);
std::string to_string(Variety v);

/// Defining polynomials evaluated at x: x_1, x_2x_4 - x_3^2, x_3x_5 + x_4^2,
/// x_2x_5 + x_3x_4 for the minimal orbit; x_2, 3x_4^2 + 4x_3x_5 - 4x_1x_6
/// for the variety V.
std::vector<mpq_class> equation_values(Variety v, const Point& x);
QMatrix jacobian(Variety v, const Point& x);
/// Rank of the Jacobian at a point of the variety; DomainError otherwise.
int jacobian_rank(Variety v, const Point& x);
/// Codimension of the variety in the 6-dimensional nilradical.
int expected_codimension(Variety v);

/// x != 0 and the four minimal-orbit polynomials vanish.
bool min_orbit_equations(const Point& x);
/// Both polynomials of V vanish.
bool tildeV_membership(const Point& x);

Point parse_point(std::string_view text);
std::string format_point(const Point& x);

struct GridScan {
  int radius = 0;
  bool x1_zero_only = false;
  std::uint64_t points = 0;
  std::map<int, std::uint64_t> rank_histogram;
  std::uint64_t min_orbit_mismatches = 0;  // rank 6 differs from the equations
  std::uint64_t tilde_points = 0;
  std::uint64_t tilde_mismatches = 0;      // on V: rank > 8, or rank 8 differs from (x1,x3) != 0
  std::optional<Point> first_mismatch;
};

/// Scan x_i in {-radius..radius} (optionally only x_1 = 0).
GridScan classify_grid(int radius, bool x1_zero_only = false);

}  // namespace springerkit::g2
