#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "springerkit/partition.hpp"

namespace springerkit {

using TableauRows = std::vector<std::vector<int>>;

/// Filling of a Young diagram by 1..n, strictly increasing along rows and
/// down columns.
class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  explicit StandardYoungTableau(TableauRows rows);

  const Partition& shape() const { return shape_; }
  const TableauRows& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  /// lambda^i: the diagram of boxes holding entries <= i.
  Partition chain_shape(int i) const;
  std::vector<int> reading_word() const;
  std::string to_string() const;

  friend bool operator==(const StandardYoungTableau& a, const StandardYoungTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend auto operator<=>(const StandardYoungTableau& a, const StandardYoungTableau& b) {
    return a.reading_word() <=> b.reading_word();
  }

 private:
  TableauRows rows_;
  Partition shape_;
};

/// Every standard tableau of the given shape, sorted by row-reading word.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape);

/// Number of standard tableaux by the hook-length formula (size <= 20).
std::uint64_t hook_length_count(const Partition& shape);

/// Tableau whose entry i sits in the box lambda^i / lambda^{i-1}. The chain
/// must start at the empty diagram and grow by one box per step.
StandardYoungTableau syt_from_chain(const std::vector<Partition>& chain);

/// Box picture of a filling. Adjacent boxes for which `joined` returns true
/// are drawn without the wall between them.
std::string render_boxes(const TableauRows& rows,
                         const std::function<bool(int, int, int, int)>& joined);

/// Compact form "011,235,4": rows separated by commas, one character per
/// entry when every entry is a single digit, otherwise entries joined by '.'.
std::string format_rows(const TableauRows& rows);
TableauRows parse_rows(std::string_view text);

}  // namespace springerkit
