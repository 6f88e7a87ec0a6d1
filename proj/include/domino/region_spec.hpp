#pragma once

#include <string_view>
#include <variant>

#include "domino/region2d.hpp"
#include "domino/solid3d.hpp"

namespace domino {

using Shape = std::variant<Region2D, Prism3D>;

/// Parses `rect:R,C`, `a:n`, `b:n`, `c:n`, `l2:n,k`, `l3:n,k[,NE|NW|SE|SW]`,
/// `tower:n`, `mtower:n`, or `@path` (ASCII region file). Throws ParseError.
Shape parse_shape(std::string_view spec);

}  // namespace domino
