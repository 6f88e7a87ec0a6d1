#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domino/region2d.hpp"
#include "domino/solid3d.hpp"

namespace domino::testing {

struct Named2D {
  std::string label;
  Region2D region;
};

struct Named3D {
  std::string label;
  Prism3D prism;
};

/// Random edge-connected region with `cells` cells inside a rows x cols box.
Region2D random_connected_region(std::uint32_t seed, std::size_t cells, std::int64_t rows, std::int64_t cols);

/// All rectangles up to 4x7, paper builders at small indices, and 200 random
/// connected regions; every entry has at most `max_cells` cells.
std::vector<Named2D> corpus_2d(std::size_t max_cells = 28);

/// Towers and m-towers up to 6 layers, other small cross-sections, and
/// random deletion patterns; every entry has at most `max_cells` cells.
std::vector<Named3D> corpus_3d(std::size_t max_cells = 24);

}  // namespace domino::testing
