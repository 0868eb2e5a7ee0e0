#include "springerkit/domino.hpp"

#include <algorithm>
#include <cstdlib>

#include "springerkit/errors.hpp"

namespace springerkit {

DominoTableau::DominoTableau(TableauRows rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& row : rows_) {
    if (row.empty()) throw InvalidArgument("domino tableau rows must be nonempty");
    parts.push_back(static_cast<int>(row.size()));
  }
  shape_ = Partition(std::move(parts));
  const int n = shape_.size();
  const int m = n / 2;

  std::vector<std::vector<std::pair<int, int>>> cells(static_cast<std::size_t>(m) + 1);
  for (int r = 0; r < shape_.num_rows(); ++r) {
    for (int c = 0; c < shape_.row(r); ++c) {
      const int v = entry(r, c);
      if (v < 0 || v > m) {
        throw InvalidArgument("domino entry " + std::to_string(v) + " outside 0.." + std::to_string(m));
      }
      cells[static_cast<std::size_t>(v)].emplace_back(r, c);
      if (c > 0 && entry(r, c - 1) > v) throw InvalidArgument("domino entries must weakly increase along rows");
      if (r > 0 && entry(r - 1, c) > v) throw InvalidArgument("domino entries must weakly increase down columns");
    }
  }
  if (cells[0].size() != static_cast<std::size_t>(n % 2)) {
    throw InvalidArgument("entry 0 must occur exactly once for odd size and never for even size");
  }
  for (int i = 1; i <= m; ++i) {
    const auto& pair = cells[static_cast<std::size_t>(i)];
    if (pair.size() != 2) throw InvalidArgument("domino " + std::to_string(i) + " must cover exactly two boxes");
    const int dist = std::abs(pair[0].first - pair[1].first) + std::abs(pair[0].second - pair[1].second);
    if (dist != 1) throw InvalidArgument("the two boxes of domino " + std::to_string(i) + " are not adjacent");
  }

  for (int i = 0; i <= m; ++i) {
    std::vector<int> prefix;
    for (const auto& row : rows_) {
      const int len = static_cast<int>(std::count_if(row.begin(), row.end(), [i](int v) { return v <= i; }));
      if (len == 0) break;
      prefix.push_back(len);
    }
    chain_.emplace_back(std::move(prefix));
  }
}

std::vector<int> DominoTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string DominoTableau::render() const {
  return render_boxes(rows_, [this](int r1, int c1, int r2, int c2) {
    return entry(r1, c1) == entry(r2, c2) && entry(r1, c1) != 0;
  });
}

namespace {

void domino_rec(std::vector<int>& parts, int label, TableauRows& grid, std::vector<DominoTableau>& out) {
  if (label == 0) {
    if (!parts.empty() && parts[0] == 1) grid[0][0] = 0;
    out.emplace_back(grid);
    return;
  }
  const int rows = static_cast<int>(parts.size());
  auto part = [&](int r) { return r < rows ? parts[static_cast<std::size_t>(r)] : 0; };
  for (int r = 0; r < rows; ++r) {
    const int len = part(r);
    // Horizontal domino at the end of row r.
    if (len >= 2 && len - 2 >= part(r + 1)) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(len - 1)] = label;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(len - 2)] = label;
      parts[static_cast<std::size_t>(r)] -= 2;
      std::vector<int> next = parts;
      while (!next.empty() && next.back() == 0) next.pop_back();
      domino_rec(next, label - 1, grid, out);
      parts[static_cast<std::size_t>(r)] += 2;
    }
    // Vertical domino at the bottom of column len - 1, covering rows r, r+1.
    if (r + 1 < rows && part(r + 1) == len && len - 1 >= part(r + 2)) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(len - 1)] = label;
      grid[static_cast<std::size_t>(r) + 1][static_cast<std::size_t>(len - 1)] = label;
      parts[static_cast<std::size_t>(r)] -= 1;
      parts[static_cast<std::size_t>(r) + 1] -= 1;
      std::vector<int> next = parts;
      while (!next.empty() && next.back() == 0) next.pop_back();
      domino_rec(next, label - 1, grid, out);
      parts[static_cast<std::size_t>(r)] += 1;
      parts[static_cast<std::size_t>(r) + 1] += 1;
    }
  }
}

}  // namespace

std::vector<DominoTableau> enumerate_domino(const Partition& shape, std::optional<FormKind> filter) {
  std::vector<DominoTableau> out;
  TableauRows grid;
  for (int len : shape.parts()) grid.emplace_back(static_cast<std::size_t>(len), -1);
  std::vector<int> parts = shape.parts();
  domino_rec(parts, shape.size() / 2, grid, out);
  if (filter) {
    std::erase_if(out, [&](const DominoTableau& d) { return !is_admissible_domino(d, *filter); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible_domino(const DominoTableau& d, FormKind kind) {
  return std::all_of(d.shape_chain().begin(), d.shape_chain().end(),
                     [kind](const Partition& p) { return is_admissible(p, kind); });
}

DominoTableau concat(const DominoTableau& d1, const DominoTableau& d2) {
  if (d2.size() % 2 != 0) {
    throw ParityError("right-hand tableau has odd size " + std::to_string(d2.size()));
  }
  if (d2.empty()) return d1;
  if (!d1.empty() && d1.shape().columns().back() < d2.shape().num_rows()) {
    throw ConcatenationOrderError("last column of " + d1.to_string() + " is shorter than first column of " +
                                  d2.to_string());
  }
  const int shift = d1.size() / 2;
  TableauRows rows = d1.rows();
  if (rows.size() < d2.rows().size()) rows.resize(d2.rows().size());
  for (std::size_t r = 0; r < d2.rows().size(); ++r) {
    for (int v : d2.rows()[r]) rows[r].push_back(v + shift);
  }
  return DominoTableau(std::move(rows));
}

DominoTableau d_nk(int n, int k) {
  if (n < 0) throw RangeError("d_{n,k} needs n >= 0");
  if (n % 2 != 0 && k != 0) throw RangeError("d_{n,k} with odd n only exists for k = 0");
  const int m = n / 2;
  if (k < 0 || k > m) {
    throw RangeError("d_{n,k} needs 0 <= k <= n/2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  TableauRows rows;
  if (n % 2 != 0) rows.push_back({0});
  for (int i = 1; i <= k; ++i) rows.push_back({i, i});
  for (int i = k + 1; i <= m; ++i) {
    rows.push_back({i});
    rows.push_back({i});
  }
  return DominoTableau(std::move(rows));
}

DominoTableau construct_dxomega(const Partition& shape, FormKind kind) {
  if (shape.empty()) throw InvalidArgument("construction needs a nonempty shape");
  if (!is_admissible(shape, kind)) {
    throw AdmissibilityError(shape.to_string() + " is not " + to_string(kind) + "-admissible");
  }
  const std::vector<int> cols = shape.padded_columns(kind);
  DominoTableau d;
  std::size_t start = 0;
  if (kind == FormKind::Orthogonal) {
    d = d_nk(cols[0], 0);
    start = 1;
  }
  for (std::size_t i = start; i + 1 < cols.size(); i += 2) {
    d = concat(d, d_nk(cols[i] + cols[i + 1], cols[i + 1]));
  }
  return d;
}

StandardYoungTableau refine_to_syt(const DominoTableau& d) {
  const bool odd = d.size() % 2 != 0;
  TableauRows rows = d.rows();
  for (int r = 0; r < d.shape().num_rows(); ++r) {
    for (int c = 0; c < d.shape().row(r); ++c) {
      const int v = d.entry(r, c);
      int first = odd ? 2 * v : 2 * v - 1;
      if (v == 0) first = 1;
      // The second box of a domino lies right of or below the first one.
      const bool second = (c > 0 && d.entry(r, c - 1) == v) || (r > 0 && d.entry(r - 1, c) == v);
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = second && v != 0 ? first + 1 : first;
    }
  }
  return StandardYoungTableau(std::move(rows));
}

ComponentCountPrediction predicted_component_count(const Partition& shape, FormKind kind, int n) {
  if (n != shape.size()) throw InvalidArgument("n must equal the size of the shape");
  if (!is_admissible(shape, kind)) {
    throw AdmissibilityError(shape.to_string() + " is not " + to_string(kind) + "-admissible");
  }
  if (kind == FormKind::Orthogonal && n % 2 == 0) return {2, "orthogonal-even"};
  return {1, "symplectic-or-odd"};
}

}  // namespace springerkit
