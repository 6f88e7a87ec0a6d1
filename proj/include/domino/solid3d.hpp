#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "domino/bigcount.hpp"
#include "domino/region2d.hpp"

namespace domino {

inline constexpr std::size_t kMaxCrossSection = 8;
inline constexpr std::size_t kMaxBruteForceCells3 = 24;

struct Cell3 {
  std::int64_t layer = 0;
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend auto operator<=>(const Cell3&, const Cell3&) = default;
};

/// A right prism: `cross_section` extruded through `layers` unit layers,
/// minus the `deleted` cells.
class Prism3D {
 public:
  Prism3D() = default;

  /// Throws std::invalid_argument when a deleted cell lies outside the
  /// extruded cross-section or is listed twice.
  Prism3D(Region2D cross_section, std::int64_t layers, std::vector<Cell3> deleted = {});

  const Region2D& cross_section() const { return cross_section_; }
  std::int64_t layers() const { return layers_; }
  const std::vector<Cell3>& deleted() const { return deleted_; }

  std::size_t size() const;
  bool contains(Cell3 cell) const;
  std::vector<Cell3> cells() const;

  friend bool operator==(const Prism3D&, const Prism3D&) = default;

 private:
  Region2D cross_section_;
  std::int64_t layers_ = 0;
  std::vector<Cell3> deleted_;
};

/// 2 x 2 x n.
Prism3D tower(std::int64_t n);

/// 2 x 2 x n with the top-layer cells (0,0) and (0,1) removed.
Prism3D m_tower(std::int64_t n);

/// Layer DP over the set of cross-section cells a vertical brick pushes into
/// the next layer; each layer's flat bricks are counted with count_tilings.
/// Throws LimitError when the cross-section exceeds kMaxCrossSection cells.
BigCount count_bricks(const Prism3D& prism);

/// Backtracking on the first uncovered cell in (layer, row, col) order,
/// trying +col, +row, +layer. Throws LimitError above kMaxBruteForceCells3.
BigCount count_bricks_bruteforce(const Prism3D& prism);

}  // namespace domino
