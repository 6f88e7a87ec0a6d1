#include "domino/count2d.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "domino/errors.hpp"

namespace domino {

namespace {

// Row-major scan over a width-w frontier. Before visiting (r, c), bit j of
// the profile says whether (r, j) is already covered for j >= c, and whether
// (r+1, j) is already covered for j < c.
BigCount profile_dp(const Region2D& region) {
  const auto h = static_cast<std::size_t>(region.height());
  const auto w = static_cast<unsigned>(region.width());

  std::vector<std::uint64_t> rows(h, 0);
  for (const auto& cell : region.cells()) rows[cell.row] |= std::uint64_t{1} << cell.col;

  std::unordered_map<std::uint64_t, BigCount> current{{0, 1}};
  std::unordered_map<std::uint64_t, BigCount> next;
  for (std::size_t r = 0; r < h; ++r) {
    const std::uint64_t here_row = rows[r];
    const std::uint64_t below_row = r + 1 < h ? rows[r + 1] : 0;
    for (unsigned c = 0; c < w; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      const std::uint64_t right = bit << 1;
      const bool present = here_row & bit;
      const bool below = below_row & bit;
      const bool right_free = c + 1 < w && (here_row & right);

      next.clear();
      for (const auto& [mask, ways] : current) {
        if (!present || (mask & bit)) {
          next[mask & ~bit] += ways;
          continue;
        }
        if (below) next[mask | bit] += ways;
        if (right_free && !(mask & right)) next[mask | right] += ways;
      }
      current.swap(next);
    }
  }
  auto it = current.find(0);
  return it == current.end() ? BigCount(0) : it->second;
}

// Backtracking shared by the oracle and the enumerator.
class Backtracker {
 public:
  explicit Backtracker(const Region2D& region) : cells_(region.cells()), covered_(cells_.size(), false) {
    if (cells_.size() > kMaxBruteForceCells)
      throw LimitError("region has " + std::to_string(cells_.size()) + " cells; brute force is limited to " +
                       std::to_string(kMaxBruteForceCells));
  }

  std::uint64_t count() { return cells_.size() % 2 ? 0 : count_from(0); }

  std::vector<Tiling> enumerate(std::size_t limit) {
    limit_ = limit;
    if (cells_.size() % 2 == 0) enumerate_from(0);
    return std::move(found_);
  }

 private:
  std::ptrdiff_t index_of(Cell2 cell) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
    return (it != cells_.end() && *it == cell) ? it - cells_.begin() : -1;
  }

  std::size_t first_free(std::size_t from) const {
    while (from < cells_.size() && covered_[from]) ++from;
    return from;
  }

  // Partners of cells_[i] in placement order: right, then below.
  template <typename Fn>
  void for_each_partner(std::size_t i, Fn&& fn) {
    const Cell2 cell = cells_[i];
    for (const Cell2 next : {Cell2{cell.row, cell.col + 1}, Cell2{cell.row + 1, cell.col}}) {
      const auto j = index_of(next);
      if (j < 0 || covered_[j]) continue;
      covered_[i] = covered_[j] = true;
      fn(static_cast<std::size_t>(j));
      covered_[i] = covered_[j] = false;
    }
  }

  std::uint64_t count_from(std::size_t from) {
    const std::size_t i = first_free(from);
    if (i == cells_.size()) return 1;
    std::uint64_t total = 0;
    for_each_partner(i, [&](std::size_t) { total += count_from(i + 1); });
    return total;
  }

  void enumerate_from(std::size_t from) {
    if (found_.size() >= limit_) return;
    const std::size_t i = first_free(from);
    if (i == cells_.size()) {
      Tiling tiling{current_};
      std::sort(tiling.dominoes.begin(), tiling.dominoes.end());
      found_.push_back(std::move(tiling));
      return;
    }
    for_each_partner(i, [&](std::size_t j) {
      current_.push_back({cells_[i], cells_[j]});
      enumerate_from(i + 1);
      current_.pop_back();
    });
  }

  const std::vector<Cell2>& cells_;
  std::vector<bool> covered_;
  std::size_t limit_ = 0;
  std::vector<Domino> current_;
  std::vector<Tiling> found_;
};

bool adjacent(Cell2 a, Cell2 b) {
  return (a.row == b.row && (a.col - b.col == 1 || b.col - a.col == 1)) ||
         (a.col == b.col && (a.row - b.row == 1 || b.row - a.row == 1));
}

}  // namespace

BigCount count_tilings(const Region2D& region) {
  if (region.empty()) return 1;
  if (region.size() % 2) return 0;

  const Region2D& scan = region.width() > region.height() ? transform(region, Transform::Transpose) : region;
  if (scan.width() > kMaxProfileWidth)
    throw LimitError("region is " + std::to_string(region.height()) + "x" + std::to_string(region.width()) +
                     "; the profile DP needs min(height, width) <= " + std::to_string(kMaxProfileWidth));
  return profile_dp(scan);
}

BigCount count_tilings_bruteforce(const Region2D& region) {
  Backtracker search(region);
  const std::uint64_t n = search.count();
  return BigCount(static_cast<unsigned long>(n));
}

std::vector<Tiling> enumerate_tilings(const Region2D& region, std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("enumeration limit must be positive");
  Backtracker search(region);
  return search.enumerate(limit);
}

bool is_tiling_of(const Tiling& tiling, const Region2D& region) {
  std::set<Cell2> covered;
  for (const auto& [a, b] : tiling.dominoes) {
    if (!adjacent(a, b) || !region.contains(a) || !region.contains(b)) return false;
    if (!covered.insert(a).second || !covered.insert(b).second) return false;
  }
  return covered.size() == region.size();
}

std::string render_tiling_ascii(const Tiling& tiling) {
  std::int64_t h = 0;
  std::int64_t w = 0;
  for (const auto& [a, b] : tiling.dominoes) {
    h = std::max({h, a.row + 1, b.row + 1});
    w = std::max({w, a.col + 1, b.col + 1});
  }
  std::vector<std::string> grid(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), '.'));
  for (const auto& [a, b] : tiling.dominoes) {
    const Cell2 lo = std::min(a, b);
    const Cell2 hi = std::max(a, b);
    if (lo.row == hi.row) {
      grid[lo.row][lo.col] = '<';
      grid[hi.row][hi.col] = '>';
    } else {
      grid[lo.row][lo.col] = '^';
      grid[hi.row][hi.col] = 'v';
    }
  }
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r) out += '\n';
    out += grid[r];
  }
  return out;
}

Tiling parse_tiling_ascii(std::string_view text) {
  std::vector<std::string> grid{""};
  for (const char ch : text) {
    if (ch == '\n')
      grid.emplace_back();
    else if (ch != '\r')
      grid.back() += ch;
  }
  if (!grid.empty() && grid.back().empty()) grid.pop_back();

  auto at = [&](std::int64_t r, std::int64_t c) -> char {
    if (r < 0 || c < 0 || r >= static_cast<std::int64_t>(grid.size()) ||
        c >= static_cast<std::int64_t>(grid[r].size()))
      return '.';
    return grid[r][c];
  };
  auto fail = [](std::int64_t r, std::int64_t c, const std::string& why) {
    throw ParseError("tiling (" + std::to_string(r) + "," + std::to_string(c) + "): " + why);
  };

  Tiling tiling;
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(grid.size()); ++r) {
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(grid[r].size()); ++c) {
      switch (grid[r][c]) {
        case '.':
          break;
        case '<':
          if (at(r, c + 1) != '>') fail(r, c, "'<' without '>' to its right");
          tiling.dominoes.push_back({{r, c}, {r, c + 1}});
          break;
        case '^':
          if (at(r + 1, c) != 'v') fail(r, c, "'^' without 'v' below");
          tiling.dominoes.push_back({{r, c}, {r + 1, c}});
          break;
        case '>':
          if (at(r, c - 1) != '<') fail(r, c, "'>' without '<' to its left");
          break;
        case 'v':
          if (at(r - 1, c) != '^') fail(r, c, "'v' without '^' above");
          break;
        default:
          fail(r, c, std::string("unexpected character '") + grid[r][c] + "'");
      }
    }
  }
  std::sort(tiling.dominoes.begin(), tiling.dominoes.end());
  return tiling;
}

}  // namespace domino
