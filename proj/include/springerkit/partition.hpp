#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace springerkit {

enum class FormKind { Orthogonal, Symplectic };

std::string to_string(FormKind kind);
FormKind parse_form_kind(std::string_view text);

/// Weakly decreasing list of positive integers, read as a Young diagram with
/// left-justified rows. Column lengths are computed once at construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition from_columns(std::vector<int> columns);
  static Partition parse(std::string_view text);  // "2,2,1,1" or "" for empty

  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& columns() const { return columns_; }
  int size() const { return size_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  bool empty() const { return parts_.empty(); }

  int row(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  int column(int j) const { return columns_.at(static_cast<std::size_t>(j)); }
  int multiplicity(int part) const;

  /// Column lengths, with one trailing zero appended when the number of
  /// columns does not have the parity the construction for `kind` expects
  /// (odd for orthogonal, even for symplectic).
  std::vector<int> padded_columns(FormKind kind) const;

  /// True when (i, j) is a box of the diagram (0-based).
  bool contains_box(int i, int j) const;
  /// Diagram inclusion.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> columns_;
  int size_ = 0;
};

/// Conjugate partition: column lengths read as rows.
Partition dual(const Partition& p);

/// Parity condition on row multiplicities: for orthogonal forms every even
/// part occurs an even number of times, for symplectic forms every odd part.
bool is_admissible(const Partition& p, FormKind kind);

/// Diagram whose columns are the columns of `left` followed by those of
/// `right`. Requires the last column of `left` to be at least as long as the
/// first column of `right`; throws ConcatenationOrderError otherwise.
Partition juxtapose(const Partition& left, const Partition& right);

/// (first `count` columns, remaining columns).
std::pair<Partition, Partition> split_columns(const Partition& p, int count);

/// Sum over columns of binom(column length, 2): the dimension of the variety
/// of complete flags stable under a nilpotent of this Jordan type.
std::int64_t flag_variety_dimension(const Partition& p);

/// n^2 - sum of squared column lengths: dimension of the GL_n-orbit.
std::int64_t gl_orbit_dimension(const Partition& p);

/// Dominance order on partitions of the same size.
bool dominates(const Partition& a, const Partition& b);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// All compositions (ordered sequences of positive integers) of n.
std::vector<std::vector<int>> compositions_of(int n);

}  // namespace springerkit
