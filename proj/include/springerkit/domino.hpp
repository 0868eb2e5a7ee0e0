#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springerkit/partition.hpp"
#include "springerkit/tableau.hpp"

namespace springerkit {

/// Numbering of a diagram of size n by dominoes 1..floor(n/2), plus a single
/// box numbered 0 when n is odd. Entries weakly increase along rows and
/// columns, so every prefix lambda^i (boxes numbered <= i) is a diagram.
class DominoTableau {
 public:
  DominoTableau() : chain_{Partition()} {}
  explicit DominoTableau(TableauRows rows);
  static DominoTableau parse(std::string_view text) { return DominoTableau(parse_rows(text)); }

  const Partition& shape() const { return shape_; }
  const TableauRows& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int num_dominoes() const { return shape_.size() / 2; }
  bool empty() const { return rows_.empty(); }

  /// lambda^i(d) for i = 0..num_dominoes().
  const Partition& chain_shape(int i) const { return chain_.at(static_cast<std::size_t>(i)); }
  const std::vector<Partition>& shape_chain() const { return chain_; }

  int entry(int r, int c) const {
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  std::string to_string() const { return format_rows(rows_); }
  /// Box picture with the inner wall of each domino removed.
  std::string render() const;

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const DominoTableau& a, const DominoTableau& b) {
    return a.reading_word() <=> b.reading_word();
  }
  std::vector<int> reading_word() const;

 private:
  TableauRows rows_;
  Partition shape_;
  std::vector<Partition> chain_;
};

/// Every domino tableau of the shape (sorted by row-reading word), optionally
/// keeping only those admissible for `filter`.
std::vector<DominoTableau> enumerate_domino(const Partition& shape,
                                            std::optional<FormKind> filter = std::nullopt);

/// Every prefix shape lambda^i(d) is admissible for `kind`.
bool is_admissible_domino(const DominoTableau& d, FormKind kind);

/// Columns of d1 followed by the columns of d2, with d2's numbers shifted by
/// floor(n1/2). Throws ParityError if d2 has odd size and
/// ConcatenationOrderError if d2 has more rows than d1's last column.
DominoTableau concat(const DominoTableau& d1, const DominoTableau& d2);

/// Horizontal dominoes 1..k in the first k rows, then vertical dominoes
/// k+1..n/2 down the first column. For odd n only k = 0 is allowed, and the
/// column starts with the box numbered 0.
DominoTableau d_nk(int n, int k);

/// Concatenation of d_{n,k} blocks read off consecutive column pairs of the
/// shape (the first column alone for orthogonal forms).
DominoTableau construct_dxomega(const Partition& shape, FormKind kind);

/// Standard tableau splitting each domino i into 2i-1, 2i (even n) or
/// 2i, 2i+1 with the 0 box numbered 1 (odd n), the left or upper box first.
StandardYoungTableau refine_to_syt(const DominoTableau& d);

struct ComponentCountPrediction {
  int count = 1;
  std::string reason;  // "symplectic-or-odd" or "orthogonal-even"
};

ComponentCountPrediction predicted_component_count(const Partition& shape, FormKind kind, int n);

}  // namespace springerkit
