#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <type_traits>
#include <vector>

#include "springerkit/errors.hpp"
#include "springerkit/partition.hpp"

namespace springerkit {

// ---------------------------------------------------------------------------
// Scalar fields
// ---------------------------------------------------------------------------

class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }
  std::string format(const value_type& v) const { return v.get_str(); }
  value_type parse(std::string_view text) const;
  std::string name() const { return "Q"; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Element of Z/qZ. Carries its modulus so values can be combined with the
/// ordinary arithmetic operators.
class Residue {
 public:
  Residue() = default;
  Residue(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  Residue inverse() const;

  friend Residue operator+(Residue a, Residue b) {
    std::uint32_t s = a.value_ + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }
  friend Residue operator-(Residue a, Residue b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_,
               a.modulus_);
  }
  friend Residue operator*(Residue a, Residue b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ %
                                          a.modulus_),
               a.modulus_);
  }
  friend Residue operator/(Residue a, Residue b) { return a * b.inverse(); }
  Residue operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Residue& operator+=(Residue b) { return *this = *this + b; }
  Residue& operator-=(Residue b) { return *this = *this - b; }
  Residue& operator*=(Residue b) { return *this = *this * b; }
  Residue& operator/=(Residue b) { return *this = *this / b; }
  friend bool operator==(Residue a, Residue b) { return a.value_ == b.value_; }

 private:
  static Residue raw(std::uint32_t v, std::uint32_t q) {
    Residue r;
    r.value_ = v;
    r.modulus_ = q;
    return r;
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

class PrimeField {
 public:
  using value_type = Residue;

  /// Throws InvalidArgument unless q is prime.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t characteristic() const { return q_; }
  value_type zero() const { return Residue(0, q_); }
  value_type one() const { return Residue(1, q_); }
  value_type from_int(long v) const { return Residue(v, q_); }
  std::string format(const value_type& v) const { return std::to_string(v.value()); }
  value_type parse(std::string_view text) const;
  std::string name() const { return "F_" + std::to_string(q_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t q);

inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
inline bool is_zero(const Residue& v) { return v.value() == 0; }

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

template <class Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;
  using Vector = std::vector<value_type>;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_integers(Field field, const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vector column(std::size_t j) const {
    Vector out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  /// Matrix-vector product M v.
  Vector apply(const Vector& v) const {
    Vector out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!springerkit::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!springerkit::is_zero(v)) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (springerkit::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const value_type& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InvalidArgument("matrix shape mismatch");
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

using QMatrix = Matrix<Rationals>;
using FqMatrix = Matrix<PrimeField>;

template <class Field>
struct RowEchelon {
  Matrix<Field> reduced;             // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss-Jordan elimination to the canonical reduced row echelon form.
template <class Field>
RowEchelon<Field> reduced_row_echelon(Matrix<Field> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const std::remove_cvref_t<decltype(m(r, c))> inv = m.field().one() / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.block(0, 0, r, cols), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return reduced_row_echelon(m).pivots.size();
}

/// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const QMatrix& m);

/// Basis of {v : m v = 0}, returned as the rows of a matrix in reduced row
/// echelon form. Its row count is cols(m) - rank(m).
template <class Field>
Matrix<Field> kernel_basis(const Matrix<Field>& m) {
  const auto echelon = reduced_row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  std::vector<typename Matrix<Field>::Vector> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    typename Matrix<Field>::Vector v(cols, m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < echelon.pivots.size(); ++i) v[echelon.pivots[i]] = -echelon.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return reduced_row_echelon(Matrix<Field>::from_rows(m.field(), cols, vectors)).reduced;
}

template <class Field>
Matrix<Field> inverse(const Matrix<Field>& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Field> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto echelon = reduced_row_echelon(std::move(aug));
  if (echelon.pivots.size() < n || echelon.pivots[n - 1] != n - 1) {
    throw InvalidArgument("matrix is singular");
  }
  return echelon.reduced.block(0, n, n, n);
}

template <class Field>
Matrix<Field> power(const Matrix<Field>& m, unsigned k) {
  Matrix<Field> out = Matrix<Field>::identity(m.field(), m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

/// Partition whose column lengths are the successive differences of
/// kernel_dims (kernel_dims[0] = 0, strictly increasing, last = n).
Partition partition_from_kernel_dims(const std::vector<std::size_t>& kernel_dims);

/// Jordan type of a nilpotent square matrix, read from dim ker x^j.
template <class Field>
Partition jordan_type(const Matrix<Field>& x) {
  if (!x.is_square()) throw NilpotencyError("Jordan type requested for a non-square matrix");
  const std::size_t n = x.rows();
  std::vector<std::size_t> dims{0};
  Matrix<Field> p = Matrix<Field>::identity(x.field(), n);
  for (std::size_t j = 1; j <= n; ++j) {
    p = p * x;
    const std::size_t k = n - rank(p);
    if (k == dims.back()) break;  // kernels stabilised below n
    dims.push_back(k);
    if (k == n) break;
  }
  if (dims.back() != n) throw NilpotencyError("matrix is not nilpotent");
  return partition_from_kernel_dims(dims);
}

/// Reduce an integer-valued (or q-integral) rational matrix modulo q.
FqMatrix reduce_mod(const QMatrix& m, const PrimeField& field);

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// Linear subspace of Field^n, stored by its canonical reduced-echelon basis
/// so that equal subspaces compare equal.
template <class Field>
class Subspace {
 public:
  using value_type = typename Field::value_type;
  using Vector = std::vector<value_type>;

  Subspace(Field field, std::size_t ambient)
      : basis_(field, 0, ambient) {}

  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
    return Subspace(reduced_row_echelon(Matrix<Field>::from_rows(field, ambient, vectors)));
  }
  /// Row space of m.
  static Subspace row_space(const Matrix<Field>& m) { return Subspace(reduced_row_echelon(m)); }
  /// Column space (image) of m.
  static Subspace image_of(const Matrix<Field>& m) { return row_space(m.transpose()); }
  static Subspace kernel_of(const Matrix<Field>& m) {
    Subspace s(m.field(), m.cols());
    s.basis_ = kernel_basis(m);
    s.recompute_pivots();
    return s;
  }
  static Subspace whole(Field field, std::size_t n) {
    return row_space(Matrix<Field>::identity(field, n));
  }

  const Field& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Matrix<Field>& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const Vector& v) const {
    Vector w = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto c = w[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * basis_(i, j);
    }
    for (const auto& e : w) {
      if (!is_zero(e)) return false;
    }
    return true;
  }
  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_.row(i))) return false;
    }
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    auto vectors = basis_vectors();
    auto more = other.basis_vectors();
    vectors.insert(vectors.end(), more.begin(), more.end());
    return span(field(), ambient_dim(), vectors);
  }
  Subspace with(const Vector& v) const {
    auto vectors = basis_vectors();
    vectors.push_back(v);
    return span(field(), ambient_dim(), vectors);
  }

  /// {c : c . u = 0 for every u in this subspace}.
  Subspace annihilator() const {
    if (dim() == 0) return whole(field(), ambient_dim());
    return kernel_of(basis_);
  }

  Subspace intersect(const Subspace& other) const {
    const Subspace a = annihilator() + other.annihilator();
    if (a.dim() == 0) return whole(field(), ambient_dim());
    return kernel_of(a.basis_);
  }

  /// a(U) for a square matrix a acting on column vectors.
  Subspace image(const Matrix<Field>& a) const {
    std::vector<Vector> vectors;
    for (std::size_t i = 0; i < dim(); ++i) vectors.push_back(a.apply(basis_.row(i)));
    return span(field(), a.rows(), vectors);
  }

  /// a^{-1}(U) = {v : a v in U}.
  Subspace preimage(const Matrix<Field>& a) const {
    if (dim() == ambient_dim()) return whole(field(), a.cols());
    return kernel_of(annihilator().basis_ * a);
  }

  /// {v : u^T gram v = 0 for every u in U}.
  Subspace perp(const Matrix<Field>& gram) const {
    if (dim() == 0) return whole(field(), ambient_dim());
    return kernel_of(basis_ * gram);
  }

  bool is_stable(const Matrix<Field>& a) const { return contains(image(a)); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(RowEchelon<Field> echelon)
      : basis_(std::move(echelon.reduced)), pivots_(std::move(echelon.pivots)) {}

  void recompute_pivots() {
    pivots_.clear();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t j = 0;
      while (is_zero(basis_(i, j))) ++j;
      pivots_.push_back(j);
    }
  }

  Matrix<Field> basis_;
  std::vector<std::size_t> pivots_;
};

/// Vectors of `larger` extending a basis of `smaller` (smaller must be a
/// subspace of larger). Chosen greedily from the echelon basis of `larger`.
template <class Field>
std::vector<typename Subspace<Field>::Vector> complement_basis(const Subspace<Field>& larger,
                                                               const Subspace<Field>& smaller) {
  std::vector<typename Subspace<Field>::Vector> out;
  Subspace<Field> acc = smaller;
  for (std::size_t i = 0; i < larger.dim() && acc.dim() < larger.dim(); ++i) {
    auto v = larger.basis_vector(i);
    if (acc.contains(v)) continue;
    acc = acc.with(v);
    out.push_back(std::move(v));
  }
  return out;
}

/// Jordan type of the map induced by x on the subquotient upper/lower. Both
/// subspaces must be x-stable and lower must lie in upper.
template <class Field>
Partition induced_jordan_type(const Matrix<Field>& x, const Subspace<Field>& lower,
                              const Subspace<Field>& upper) {
  if (!upper.contains(lower) || !lower.is_stable(x) || !upper.is_stable(x)) {
    throw SubspaceError("subquotient is not a quotient of x-stable subspaces");
  }
  std::vector<std::size_t> dims{0};
  Subspace<Field> level = lower;
  while (level.dim() < upper.dim()) {
    Subspace<Field> next = upper.intersect(level.preimage(x));
    if (next.dim() == level.dim()) throw NilpotencyError("induced map is not nilpotent");
    level = std::move(next);
    dims.push_back(level.dim() - lower.dim());
  }
  return partition_from_kernel_dims(dims);
}

/// Visit each line of Field^r (r >= 1) once, as the coefficient vector whose
/// first nonzero entry is 1. Lexicographic order on coefficient vectors.
void for_each_projective_point(const PrimeField& field, std::size_t r,
                               const std::function<void(const std::vector<Residue>&)>& visit);

/// Number of complete flags of F_q^n: product of [i]_q for i = 1..n.
std::uint64_t full_flag_count(std::uint32_t q, int n);

}  // namespace springerkit
