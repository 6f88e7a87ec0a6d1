#include "domino/region2d.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

#include "domino/errors.hpp"

namespace domino {

namespace {

void require_positive(std::int64_t value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

void require_nonnegative(std::int64_t value, const char* what) {
  if (value < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

std::vector<Cell2> block(std::int64_t row0, std::int64_t col0, std::int64_t rows, std::int64_t cols) {
  std::vector<Cell2> out;
  out.reserve(static_cast<std::size_t>(rows * cols));
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) out.push_back({row0 + r, col0 + c});
  return out;
}

}  // namespace

Region2D Region2D::from_cells(std::vector<Cell2> cells) {
  Region2D region;
  if (cells.empty()) return region;

  std::int64_t min_row = std::numeric_limits<std::int64_t>::max();
  std::int64_t min_col = min_row;
  for (const auto& cell : cells) {
    min_row = std::min(min_row, cell.row);
    min_col = std::min(min_col, cell.col);
  }
  for (auto& cell : cells) {
    cell.row -= min_row;
    cell.col -= min_col;
    region.height_ = std::max(region.height_, cell.row + 1);
    region.width_ = std::max(region.width_, cell.col + 1);
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw std::invalid_argument("region has duplicate cells");
  region.cells_ = std::move(cells);
  return region;
}

bool Region2D::contains(Cell2 cell) const { return std::binary_search(cells_.begin(), cells_.end(), cell); }

Region2D rect(std::int64_t rows, std::int64_t cols) {
  require_positive(rows, "rows");
  require_positive(cols, "cols");
  return Region2D::from_cells(block(0, 0, rows, cols));
}

Region2D a_grid(std::int64_t n) {
  require_positive(n, "n");
  return rect(3, 2 * n);
}

Region2D b_grid(std::int64_t n) {
  require_nonnegative(n, "n");
  const Cell2 corner{0, 0};
  return remove_cells(rect(3, 2 * n + 1), std::span(&corner, 1));
}

Region2D c_grid(std::int64_t n) {
  require_nonnegative(n, "n");
  const Cell2 notch[] = {{0, 0}, {0, 1}};
  return remove_cells(rect(3, 2 * n + 2), notch);
}

Region2D l2_region(std::int64_t n, std::int64_t k) {
  require_positive(n, "n");
  require_positive(k, "k");
  auto cells = block(0, 0, 2, n + 1);
  auto leg = block(2, 0, k - 1, 2);
  cells.insert(cells.end(), leg.begin(), leg.end());
  return Region2D::from_cells(std::move(cells));
}

Region2D l3_region(std::int64_t n, std::int64_t k, Orientation orientation) {
  require_positive(n, "n");
  require_positive(k, "k");
  auto cells = block(0, 0, 2 * n, 3);

  const bool east = orientation == Orientation::NE || orientation == Orientation::SE;
  const bool north = orientation == Orientation::NE || orientation == Orientation::NW;
  const std::int64_t row0 = north ? 0 : 2 * n - 3;
  const std::int64_t col0 = east ? 3 : -2 * k;
  auto arm = block(row0, col0, 3, 2 * k);
  cells.insert(cells.end(), arm.begin(), arm.end());
  return Region2D::from_cells(std::move(cells));
}

Region2D from_ascii(std::string_view text) {
  std::vector<Cell2> cells;
  std::int64_t row = 0;
  std::int64_t col = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    switch (ch) {
      case '#':
        cells.push_back({row, col++});
        break;
      case '.':
        ++col;
        break;
      case '\r':
        break;
      case '\n':
        ++row;
        col = 0;
        break;
      default:
        throw ParseError("unexpected character '" + std::string(1, ch) + "' at offset " + std::to_string(i) +
                         " in ASCII region");
    }
  }
  return Region2D::from_cells(std::move(cells));
}

std::string to_ascii(const Region2D& region) {
  if (region.empty()) return {};
  std::vector<std::string> rows(static_cast<std::size_t>(region.height()),
                                std::string(static_cast<std::size_t>(region.width()), '.'));
  for (const auto& cell : region.cells()) rows[cell.row][cell.col] = '#';
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '\n';
    out += rows[r];
  }
  return out;
}

Region2D transform(const Region2D& region, Transform op) {
  const std::int64_t h = region.height();
  const std::int64_t w = region.width();
  std::vector<Cell2> out;
  out.reserve(region.size());
  for (const auto& [r, c] : region.cells()) {
    switch (op) {
      case Transform::ReflectH:
        out.push_back({r, w - 1 - c});
        break;
      case Transform::ReflectV:
        out.push_back({h - 1 - r, c});
        break;
      case Transform::Rotate90:  // clockwise
        out.push_back({c, h - 1 - r});
        break;
      case Transform::Transpose:
        out.push_back({c, r});
        break;
    }
  }
  return Region2D::from_cells(std::move(out));
}

Region2D remove_cells(const Region2D& region, std::span<const Cell2> cells) {
  std::vector<Cell2> doomed(cells.begin(), cells.end());
  std::sort(doomed.begin(), doomed.end());
  for (const auto& cell : doomed) {
    if (!region.contains(cell))
      throw std::invalid_argument("cannot remove absent cell (" + std::to_string(cell.row) + "," +
                                  std::to_string(cell.col) + ")");
  }
  std::vector<Cell2> kept;
  kept.reserve(region.size());
  std::set_difference(region.cells().begin(), region.cells().end(), doomed.begin(), doomed.end(),
                      std::back_inserter(kept));
  return Region2D::from_cells(std::move(kept));
}

std::vector<Region2D> connected_components(const Region2D& region) {
  const auto& cells = region.cells();
  std::vector<bool> seen(cells.size(), false);
  auto index_of = [&](Cell2 cell) -> std::ptrdiff_t {
    auto it = std::lower_bound(cells.begin(), cells.end(), cell);
    return (it != cells.end() && *it == cell) ? it - cells.begin() : -1;
  };

  std::vector<Region2D> out;
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Cell2> component;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const Cell2 cell = cells[stack.back()];
      stack.pop_back();
      component.push_back(cell);
      const Cell2 neighbours[] = {
          {cell.row - 1, cell.col}, {cell.row + 1, cell.col}, {cell.row, cell.col - 1}, {cell.row, cell.col + 1}};
      for (const auto& next : neighbours) {
        const auto idx = index_of(next);
        if (idx >= 0 && !seen[idx]) {
          seen[idx] = true;
          stack.push_back(static_cast<std::size_t>(idx));
        }
      }
    }
    out.push_back(Region2D::from_cells(std::move(component)));
  }
  return out;
}

std::string_view orientation_name(Orientation orientation) {
  switch (orientation) {
    case Orientation::NE: return "NE";
    case Orientation::NW: return "NW";
    case Orientation::SE: return "SE";
    case Orientation::SW: return "SW";
  }
  return "?";
}

Orientation parse_orientation(std::string_view token) {
  for (auto o : {Orientation::NE, Orientation::NW, Orientation::SE, Orientation::SW})
    if (orientation_name(o) == token) return o;
  throw ParseError("unknown orientation '" + std::string(token) + "' (expected NE, NW, SE or SW)");
}

}  // namespace domino
