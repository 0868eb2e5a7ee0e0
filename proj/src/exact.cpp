#include "springerkit/exact.hpp"

#include <string>

namespace springerkit {

mpq_class Rationals::parse(std::string_view text) const {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return v;
}

Residue::Residue(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw InvalidArgument("residue modulus must be positive");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

Residue Residue::inverse() const {
  if (value_ == 0) throw InvalidArgument("division by zero in F_" + std::to_string(modulus_));
  // Extended Euclid on (value, modulus).
  std::int64_t a = value_;
  std::int64_t b = modulus_;
  std::int64_t x0 = 1;
  std::int64_t x1 = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    x0 -= t * x1;
    std::swap(x0, x1);
  }
  return Residue(x0, modulus_);
}

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw InvalidArgument(std::to_string(q) + " is not prime");
}

Residue PrimeField::parse(std::string_view text) const {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(std::string(text), &used);
    if (used != text.size()) throw InvalidArgument("");
    return Residue(v, q_);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse element of " + name() + " from '" + std::string(text) + "'");
  }
}

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Partition partition_from_kernel_dims(const std::vector<std::size_t>& kernel_dims) {
  std::vector<int> columns;
  for (std::size_t j = 1; j < kernel_dims.size(); ++j) {
    columns.push_back(static_cast<int>(kernel_dims[j] - kernel_dims[j - 1]));
  }
  return Partition::from_columns(std::move(columns));
}

FqMatrix reduce_mod(const QMatrix& m, const PrimeField& field) {
  FqMatrix out(field, m.rows(), m.cols());
  const mpz_class q = field.characteristic();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class num = m(i, j).get_num() % q;
      const mpz_class den = m(i, j).get_den() % q;
      if (den == 0) throw InvalidArgument("entry has denominator divisible by q");
      out(i, j) = field.from_int(num.get_si()) / field.from_int(den.get_si());
    }
  }
  return out;
}

void for_each_projective_point(const PrimeField& field, std::size_t r,
                               const std::function<void(const std::vector<Residue>&)>& visit) {
  const std::uint32_t q = field.characteristic();
  std::vector<Residue> v(r, field.zero());
  for (std::size_t lead = 0; lead < r; ++lead) {
    // Coordinates before `lead` are 0, coordinate `lead` is 1, the rest vary.
    std::fill(v.begin(), v.end(), field.zero());
    v[lead] = field.one();
    std::vector<std::uint32_t> digits(r - lead - 1, 0);
    while (true) {
      for (std::size_t k = 0; k < digits.size(); ++k) v[lead + 1 + k] = field.from_int(digits[k]);
      visit(v);
      std::size_t k = digits.size();
      while (k > 0 && digits[k - 1] == q - 1) digits[--k] = 0;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
}

std::uint64_t full_flag_count(std::uint32_t q, int n) {
  std::uint64_t total = 1;
  std::uint64_t qi = 1;
  std::uint64_t bracket = 0;
  for (int i = 1; i <= n; ++i) {
    bracket += qi;  // [i]_q = 1 + q + ... + q^{i-1}
    qi *= q;
    total *= bracket;
  }
  return total;
}

}  // namespace springerkit
