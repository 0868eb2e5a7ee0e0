#include "springerkit/tableau.hpp"

#include <algorithm>
#include <charconv>

#include "springerkit/errors.hpp"

namespace springerkit {

namespace {

Partition shape_of_rows(const TableauRows& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) {
    if (row.empty()) throw InvalidArgument("tableau rows must be nonempty");
    parts.push_back(static_cast<int>(row.size()));
  }
  return Partition(std::move(parts));
}

}  // namespace

StandardYoungTableau::StandardYoungTableau(TableauRows rows) : rows_(std::move(rows)) {
  shape_ = shape_of_rows(rows_);
  const int n = shape_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("standard tableau entries must be 1..n, each once");
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && rows_[r][c - 1] >= v) throw InvalidArgument("rows must strictly increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw InvalidArgument("columns must strictly increase");
    }
  }
}

Partition StandardYoungTableau::chain_shape(int i) const {
  std::vector<int> parts;
  for (const auto& row : rows_) {
    const int len = static_cast<int>(std::count_if(row.begin(), row.end(), [i](int v) { return v <= i; }));
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::vector<int> StandardYoungTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string StandardYoungTableau::to_string() const { return format_rows(rows_); }

namespace {

void syt_rec(const Partition& shape, int next, TableauRows& rows, std::vector<StandardYoungTableau>& out) {
  if (next > shape.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int r = 0; r < shape.num_rows(); ++r) {
    const auto c = rows[static_cast<std::size_t>(r)].size();
    if (static_cast<int>(c) >= shape.row(r)) continue;
    // Box (r, c) is addable when the row above already reaches past column c.
    if (r > 0 && rows[static_cast<std::size_t>(r) - 1].size() <= c) continue;
    rows[static_cast<std::size_t>(r)].push_back(next);
    syt_rec(shape, next + 1, rows, out);
    rows[static_cast<std::size_t>(r)].pop_back();
  }
}

}  // namespace

std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardYoungTableau> out;
  if (shape.empty()) {
    out.emplace_back();
    return out;
  }
  TableauRows rows(static_cast<std::size_t>(shape.num_rows()));
  syt_rec(shape, 1, rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t hook_length_count(const Partition& shape) {
  if (shape.size() > 20) throw RangeError("hook-length count limited to size 20");
  std::uint64_t numerator = 1;
  for (int k = 2; k <= shape.size(); ++k) numerator *= static_cast<std::uint64_t>(k);
  std::uint64_t hooks = 1;
  for (int i = 0; i < shape.num_rows(); ++i) {
    for (int j = 0; j < shape.row(i); ++j) {
      hooks *= static_cast<std::uint64_t>(shape.row(i) - j + shape.column(j) - i - 1);
    }
  }
  return numerator / hooks;
}

StandardYoungTableau syt_from_chain(const std::vector<Partition>& chain) {
  if (chain.empty() || !chain.front().empty()) {
    throw InvariantViolation("tableau chain must start at the empty diagram");
  }
  TableauRows rows;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Partition& prev = chain[i - 1];
    const Partition& cur = chain[i];
    if (cur.size() != prev.size() + 1 || !cur.contains(prev)) {
      throw InvariantViolation("consecutive chain diagrams " + prev.to_string() + " and " +
                               cur.to_string() + " do not differ by one box");
    }
    int r = 0;
    while (r < prev.num_rows() && prev.row(r) == cur.row(r)) ++r;
    if (static_cast<std::size_t>(r) == rows.size()) rows.emplace_back();
    rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(i));
  }
  return StandardYoungTableau(std::move(rows));
}

std::string render_boxes(const TableauRows& rows,
                         const std::function<bool(int, int, int, int)>& joined) {
  if (rows.empty()) return "(empty)\n";
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.front().size());
  std::vector<std::string> canvas(static_cast<std::size_t>(2 * height + 1),
                                  std::string(static_cast<std::size_t>(4 * width + 1), ' '));
  auto put = [&](int line, int col, char ch) {
    canvas[static_cast<std::size_t>(line)][static_cast<std::size_t>(col)] = ch;
  };
  auto cell_exists = [&](int r, int c) {
    return r >= 0 && r < height && c >= 0 && c < static_cast<int>(rows[static_cast<std::size_t>(r)].size());
  };
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < static_cast<int>(rows[static_cast<std::size_t>(r)].size()); ++c) {
      const int top = 2 * r;
      const int left = 4 * c;
      for (int k = 0; k <= 4; ++k) {
        put(top, left + k, k % 4 == 0 ? '+' : '-');
        put(top + 2, left + k, k % 4 == 0 ? '+' : '-');
      }
      put(top + 1, left, '|');
      put(top + 1, left + 4, '|');
      const std::string label = std::to_string(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      const int start = left + 2 - static_cast<int>(label.size()) / 2;
      for (std::size_t k = 0; k < label.size(); ++k) put(top + 1, start + static_cast<int>(k), label[k]);
    }
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < static_cast<int>(rows[static_cast<std::size_t>(r)].size()); ++c) {
      if (cell_exists(r, c + 1) && joined(r, c, r, c + 1)) put(2 * r + 1, 4 * c + 4, ' ');
      if (cell_exists(r + 1, c) && joined(r, c, r + 1, c)) {
        for (int k = 1; k <= 3; ++k) put(2 * r + 2, 4 * c + k, ' ');
      }
    }
  }
  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

std::string format_rows(const TableauRows& rows) {
  bool single_digits = true;
  for (const auto& row : rows) {
    for (int v : row) single_digits = single_digits && v >= 0 && v <= 9;
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += ',';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!single_digits && c > 0) out += '.';
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

TableauRows parse_rows(std::string_view text) {
  TableauRows rows;
  // Once any row separates its entries, a row without separators is one entry.
  const bool any_separated = text.find('.') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find_first_of(",/", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      std::vector<int> row;
      const bool separated = any_separated || token.find_first_of(". ") != std::string_view::npos;
      if (separated) {
        std::size_t p = 0;
        while (p < token.size()) {
          std::size_t q = token.find_first_of(". ", p);
          if (q == std::string_view::npos) q = token.size();
          if (q > p) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(token.data() + p, token.data() + q, v);
            if (ec != std::errc() || ptr != token.data() + q) {
              throw InvalidArgument("cannot parse tableau row '" + std::string(token) + "'");
            }
            row.push_back(v);
          }
          p = q + 1;
        }
      } else {
        for (char ch : token) {
          if (ch < '0' || ch > '9') throw InvalidArgument("cannot parse tableau row '" + std::string(token) + "'");
          row.push_back(ch - '0');
        }
      }
      rows.push_back(std::move(row));
    }
    pos = next + 1;
  }
  return rows;
}

}  // namespace springerkit
