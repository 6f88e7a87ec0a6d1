#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domino {

struct Cell2 {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend auto operator<=>(const Cell2&, const Cell2&) = default;
};

/// Finite set of unit squares. Always stored normalized (min row and min col
/// are 0) and sorted row-major, so equality is plain set equality.
class Region2D {
 public:
  Region2D() = default;

  /// Builds a region from arbitrary integer cells (negative coordinates are
  /// fine; the result is shifted to the origin). Throws std::invalid_argument
  /// on duplicates.
  static Region2D from_cells(std::vector<Cell2> cells);

  const std::vector<Cell2>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  std::int64_t height() const { return height_; }
  std::int64_t width() const { return width_; }
  bool contains(Cell2 cell) const;
  bool contains(std::int64_t row, std::int64_t col) const { return contains(Cell2{row, col}); }

  friend bool operator==(const Region2D&, const Region2D&) = default;

 private:
  std::vector<Cell2> cells_;
  std::int64_t height_ = 0;
  std::int64_t width_ = 0;
};

enum class Transform { ReflectH, ReflectV, Rotate90, Transpose };

/// Which side of the vertical arm the horizontal arm of an L3 region leaves
/// from, and which end of the vertical arm it is flush with.
enum class Orientation { NE, NW, SE, SW };

inline constexpr Orientation kDefaultL3Orientation = Orientation::NE;

Region2D rect(std::int64_t rows, std::int64_t cols);

/// 3 x 2n rectangle.
Region2D a_grid(std::int64_t n);

/// 3 x (2n+1) rectangle with the corner (0,0) removed.
Region2D b_grid(std::int64_t n);

/// 3 x (2n+2) rectangle with (0,0) and (0,1) removed.
Region2D c_grid(std::int64_t n);

/// Width-2 L with outer arm lengths n+1 (horizontal) and k+1 (vertical);
/// 2n + 2k cells. l2_region(n, 1) is the 2 x (n+1) rectangle.
Region2D l2_region(std::int64_t n, std::int64_t k);

/// Width-3 L: a vertical 3 x 2n arm and a horizontal 2k-wide, 3-tall arm
/// attached to the vertical arm's side, flush with one of its ends.
Region2D l3_region(std::int64_t n, std::int64_t k, Orientation orientation = kDefaultL3Orientation);

/// '#' marks a cell, '.' an empty square, rows separated by '\n'. A trailing
/// newline and '\r' are tolerated. Throws ParseError on any other character.
Region2D from_ascii(std::string_view text);

/// Rows joined by '\n', no trailing newline. Empty region gives "".
std::string to_ascii(const Region2D& region);

Region2D transform(const Region2D& region, Transform op);

/// Throws std::invalid_argument if any cell is absent.
Region2D remove_cells(const Region2D& region, std::span<const Cell2> cells);

/// Edge-connected components, each normalized, ordered by their first cell.
std::vector<Region2D> connected_components(const Region2D& region);

std::string_view orientation_name(Orientation orientation);
Orientation parse_orientation(std::string_view token);

}  // namespace domino
