#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "domino/bigcount.hpp"
#include "domino/region2d.hpp"

namespace domino {

/// Largest frontier the profile DP accepts (after transposing so the shorter
/// side is scanned across).
inline constexpr std::int64_t kMaxProfileWidth = 32;

/// Cell budget for the backtracking oracle and the enumerator.
inline constexpr std::size_t kMaxBruteForceCells = 30;

/// Two edge-adjacent cells; `first < second` row-major.
struct Domino {
  Cell2 first;
  Cell2 second;

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

struct Tiling {
  std::vector<Domino> dominoes;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Broken-profile DP. Exact; 0 for odd regions, 1 for the empty region.
/// Throws LimitError when min(height, width) exceeds kMaxProfileWidth.
BigCount count_tilings(const Region2D& region);

/// Backtracking on the first uncovered cell (row-major), horizontal before
/// vertical. Throws LimitError above kMaxBruteForceCells.
BigCount count_tilings_bruteforce(const Region2D& region);

/// The first `limit` tilings in backtracking order.
std::vector<Tiling> enumerate_tilings(const Region2D& region, std::size_t limit);

/// True when the dominoes are disjoint, edge-adjacent and cover `region`.
bool is_tiling_of(const Tiling& tiling, const Region2D& region);

/// One character per square: '<' '>' for a horizontal domino, '^' 'v' for a
/// vertical one, '.' for an uncovered square. Rows joined by '\n'.
std::string render_tiling_ascii(const Tiling& tiling);

/// Inverse of render_tiling_ascii. Throws ParseError on unpaired marks.
Tiling parse_tiling_ascii(std::string_view text);

}  // namespace domino
