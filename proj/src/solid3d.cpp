#include "domino/solid3d.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "domino/count2d.hpp"
#include "domino/errors.hpp"

namespace domino {

Prism3D::Prism3D(Region2D cross_section, std::int64_t layers, std::vector<Cell3> deleted)
    : cross_section_(std::move(cross_section)), layers_(layers), deleted_(std::move(deleted)) {
  if (layers_ < 0) throw std::invalid_argument("prism layers must be >= 0");
  std::sort(deleted_.begin(), deleted_.end());
  if (std::adjacent_find(deleted_.begin(), deleted_.end()) != deleted_.end())
    throw std::invalid_argument("prism deletes a cell twice");
  for (const auto& cell : deleted_) {
    if (cell.layer < 0 || cell.layer >= layers_ || !cross_section_.contains(cell.row, cell.col))
      throw std::invalid_argument("deleted cell (" + std::to_string(cell.layer) + "," + std::to_string(cell.row) +
                                  "," + std::to_string(cell.col) + ") is outside the prism");
  }
}

std::size_t Prism3D::size() const {
  return cross_section_.size() * static_cast<std::size_t>(layers_) - deleted_.size();
}

bool Prism3D::contains(Cell3 cell) const {
  return cell.layer >= 0 && cell.layer < layers_ && cross_section_.contains(cell.row, cell.col) &&
         !std::binary_search(deleted_.begin(), deleted_.end(), cell);
}

std::vector<Cell3> Prism3D::cells() const {
  std::vector<Cell3> out;
  out.reserve(size());
  for (std::int64_t z = 0; z < layers_; ++z)
    for (const auto& [r, c] : cross_section_.cells())
      if (!std::binary_search(deleted_.begin(), deleted_.end(), Cell3{z, r, c})) out.push_back({z, r, c});
  return out;
}

Prism3D tower(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("tower height must be >= 1");
  return Prism3D(rect(2, 2), n);
}

Prism3D m_tower(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("m-tower height must be >= 1");
  return Prism3D(rect(2, 2), n, {{n - 1, 0, 0}, {n - 1, 0, 1}});
}

BigCount count_bricks(const Prism3D& prism) {
  const auto& section = prism.cross_section().cells();
  const std::size_t m = section.size();
  if (m > kMaxCrossSection)
    throw LimitError("cross-section has " + std::to_string(m) + " cells; the layer DP is limited to " +
                     std::to_string(kMaxCrossSection));
  if (prism.size() % 2) return 0;
  if (prism.size() == 0) return 1;

  const auto layers = static_cast<std::size_t>(prism.layers());
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> deleted(layers, 0);
  for (const auto& cell : prism.deleted()) {
    const auto idx = std::lower_bound(section.begin(), section.end(), Cell2{cell.row, cell.col}) - section.begin();
    deleted[cell.layer] |= std::uint32_t{1} << idx;
  }

  std::vector<std::optional<BigCount>> flat_cache(std::size_t{1} << m);
  auto flat = [&](std::uint32_t mask) -> const BigCount& {
    auto& slot = flat_cache[mask];
    if (!slot) {
      std::vector<Cell2> cells;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) cells.push_back(section[i]);
      slot = count_tilings(Region2D::from_cells(std::move(cells)));
    }
    return *slot;
  };

  // ways[s]: tilings of the layers below with exactly the cells in s of the
  // current layer already filled by vertical bricks from underneath.
  std::vector<BigCount> ways(std::size_t{1} << m, 0);
  std::vector<BigCount> next(ways.size(), 0);
  ways[0] = 1;
  for (std::size_t z = 0; z < layers; ++z) {
    std::fill(next.begin(), next.end(), 0);
    const std::uint32_t up_allowed_base = z + 1 < layers ? full & ~deleted[z + 1] : 0;
    for (std::uint32_t in = 0; in <= full; ++in) {
      if (sgn(ways[in]) == 0 || (in & deleted[z])) continue;
      const std::uint32_t free = full & ~in & ~deleted[z];
      const std::uint32_t up_allowed = free & up_allowed_base;
      // Every submask of up_allowed, including the empty one.
      for (std::uint32_t up = up_allowed;; up = (up - 1) & up_allowed) {
        const BigCount& layer_ways = flat(free & ~up);
        if (sgn(layer_ways) != 0) next[up] += ways[in] * layer_ways;
        if (up == 0) break;
      }
    }
    ways.swap(next);
  }
  return ways[0];
}

namespace {

class BrickBacktracker {
 public:
  explicit BrickBacktracker(const Prism3D& prism) : cells_(prism.cells()), covered_(cells_.size(), false) {}

  std::uint64_t count_from(std::size_t from) {
    while (from < cells_.size() && covered_[from]) ++from;
    if (from == cells_.size()) return 1;
    const Cell3 cell = cells_[from];
    std::uint64_t total = 0;
    for (const Cell3 next : {Cell3{cell.layer, cell.row, cell.col + 1}, Cell3{cell.layer, cell.row + 1, cell.col},
                             Cell3{cell.layer + 1, cell.row, cell.col}}) {
      auto it = std::lower_bound(cells_.begin(), cells_.end(), next);
      if (it == cells_.end() || *it != next) continue;
      const auto j = static_cast<std::size_t>(it - cells_.begin());
      if (covered_[j]) continue;
      covered_[from] = covered_[j] = true;
      total += count_from(from + 1);
      covered_[from] = covered_[j] = false;
    }
    return total;
  }

 private:
  std::vector<Cell3> cells_;
  std::vector<bool> covered_;
};

}  // namespace

BigCount count_bricks_bruteforce(const Prism3D& prism) {
  if (prism.size() > kMaxBruteForceCells3)
    throw LimitError("prism has " + std::to_string(prism.size()) + " cells; brute force is limited to " +
                     std::to_string(kMaxBruteForceCells3));
  if (prism.size() % 2) return 0;
  BrickBacktracker search(prism);
  return BigCount(static_cast<unsigned long>(search.count_from(0)));
}

}  // namespace domino
