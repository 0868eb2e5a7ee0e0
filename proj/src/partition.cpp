#include "springerkit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "springerkit/errors.hpp"

namespace springerkit {

std::string to_string(FormKind kind) {
  return kind == FormKind::Orthogonal ? "orthogonal" : "symplectic";
}

FormKind parse_form_kind(std::string_view text) {
  if (text == "orthogonal" || text == "o" || text == "O") return FormKind::Orthogonal;
  if (text == "symplectic" || text == "s" || text == "S") return FormKind::Symplectic;
  throw InvalidArgument("unknown form kind '" + std::string(text) + "'");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (!parts_.empty()) {
    columns_.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
      for (int j = 0; j < part; ++j) ++columns_[static_cast<std::size_t>(j)];
    }
  }
}

Partition Partition::from_columns(std::vector<int> columns) {
  std::vector<int> rows;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] < 1 || (j > 0 && columns[j] > columns[j - 1])) {
      throw InvalidArgument("column lengths must be positive and weakly decreasing");
    }
  }
  if (!columns.empty()) {
    rows.assign(static_cast<std::size_t>(columns.front()), 0);
    for (int c : columns) {
      for (int i = 0; i < c; ++i) ++rows[static_cast<std::size_t>(i)];
    }
  }
  return Partition(std::move(rows));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find_first_of(",+ ", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    if (!token.empty()) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidArgument("cannot parse partition '" + std::string(text) + "'");
      }
      parts.push_back(value);
    }
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::padded_columns(FormKind kind) const {
  std::vector<int> cols = columns_;
  const bool want_odd = kind == FormKind::Orthogonal;
  const bool is_odd = cols.size() % 2 == 1;
  if (want_odd != is_odd) cols.push_back(0);
  return cols;
}

bool Partition::contains_box(int i, int j) const {
  return i >= 0 && j >= 0 && i < num_rows() && j < parts_[static_cast<std::size_t>(i)];
}

bool Partition::contains(const Partition& other) const {
  if (other.num_rows() > num_rows()) return false;
  for (int i = 0; i < other.num_rows(); ++i) {
    if (other.row(i) > row(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition dual(const Partition& p) { return Partition(p.columns()); }

bool is_admissible(const Partition& p, FormKind kind) {
  // Parts with the wrong parity for `kind` must come in pairs.
  const int bad_parity = kind == FormKind::Orthogonal ? 0 : 1;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == bad_parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

Partition juxtapose(const Partition& left, const Partition& right) {
  if (right.empty()) return left;
  if (left.empty()) return right;
  if (left.columns().back() < right.num_rows()) {
    throw ConcatenationOrderError("last column of " + left.to_string() + " (length " +
                                  std::to_string(left.columns().back()) +
                                  ") is shorter than first column of " + right.to_string());
  }
  std::vector<int> cols = left.columns();
  cols.insert(cols.end(), right.columns().begin(), right.columns().end());
  return Partition::from_columns(std::move(cols));
}

std::pair<Partition, Partition> split_columns(const Partition& p, int count) {
  const auto& cols = p.columns();
  const auto cut = static_cast<std::ptrdiff_t>(std::clamp(count, 0, p.num_columns()));
  return {Partition::from_columns({cols.begin(), cols.begin() + cut}),
          Partition::from_columns({cols.begin() + cut, cols.end()})};
}

std::int64_t flag_variety_dimension(const Partition& p) {
  std::int64_t total = 0;
  for (int c : p.columns()) total += static_cast<std::int64_t>(c) * (c - 1) / 2;
  return total;
}

std::int64_t gl_orbit_dimension(const Partition& p) {
  std::int64_t n = p.size();
  std::int64_t total = n * n;
  for (int c : p.columns()) total -= static_cast<std::int64_t>(c) * c;
  return total;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0;
  int sb = 0;
  const int rows = std::max(a.num_rows(), b.num_rows());
  for (int i = 0; i < rows; ++i) {
    sa += i < a.num_rows() ? a.row(i) : 0;
    sb += i < b.num_rows() ? b.row(i) : 0;
    if (sa < sb) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void compositions_rec(int remaining, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    current.push_back(part);
    compositions_rec(remaining - part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  compositions_rec(n, current, out);
  return out;
}

}  // namespace springerkit
