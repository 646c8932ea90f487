#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sel {

// Induced-object families. Each object is spanned by an unordered pair of
// points of P.
enum class Family {
  Rectangle,
  Quadrant,
  VSlab,
  HSlab,
  SlabBoth,  // a pair induces a vertical and a horizontal slab
  Skyline,
  Box,
  Disk,
  Hypersphere,
  DownTriangle,
  Interval,
};

enum class Variant { Strong, Weak };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);
std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

bool family_applies(Family f, int dim);
// Throws DimensionMismatch when the family does not apply to dimension dim.
void require_family(Family f, int dim);

// Number of objects a pair contributes at most (2 for SlabBoth).
inline int objects_per_pair(Family f) { return f == Family::SlabBoth ? 2 : 1; }

// Families whose depth is a function of the four quadrant counts.
bool is_quadrant_family(Family f);

}  // namespace sel
