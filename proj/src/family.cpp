#include "selection/family.hpp"

#include <array>
#include <string>
#include <utility>

#include "selection/point.hpp"

namespace sel {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kNames{{
    {Family::Rectangle, "rect"},
    {Family::Quadrant, "quadrant"},
    {Family::VSlab, "vslab"},
    {Family::HSlab, "hslab"},
    {Family::SlabBoth, "slab"},
    {Family::Skyline, "skyline"},
    {Family::Box, "box"},
    {Family::Disk, "disk"},
    {Family::Hypersphere, "hypersphere"},
    {Family::DownTriangle, "downtri"},
    {Family::Interval, "interval"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view s) {
  for (const auto& [fam, name] : kNames)
    if (name == s) return fam;
  if (s == "rectangle") return Family::Rectangle;
  if (s == "slabboth") return Family::SlabBoth;
  return std::nullopt;
}

std::string_view variant_name(Variant v) { return v == Variant::Strong ? "strong" : "weak"; }

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "strong") return Variant::Strong;
  if (s == "weak") return Variant::Weak;
  return std::nullopt;
}

bool family_applies(Family f, int dim) {
  switch (f) {
    case Family::Rectangle:
    case Family::Quadrant:
    case Family::VSlab:
    case Family::HSlab:
    case Family::SlabBoth:
    case Family::Skyline:
    case Family::Disk:
    case Family::DownTriangle:
      return dim == 2;
    case Family::Interval:
      return dim == 1;
    case Family::Box:
    case Family::Hypersphere:
      return dim >= 2;
  }
  return false;
}

void require_family(Family f, int dim) {
  if (!family_applies(f, dim))
    throw DimensionMismatch(std::string(family_name(f)) + " does not apply to dimension " +
                            std::to_string(dim));
}

bool is_quadrant_family(Family f) {
  switch (f) {
    case Family::Rectangle:
    case Family::Quadrant:
    case Family::VSlab:
    case Family::HSlab:
    case Family::SlabBoth:
    case Family::Skyline:
      return true;
    default:
      return false;
  }
}

}  // namespace sel
