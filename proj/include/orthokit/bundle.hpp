#pragma once

// Space bundles: a geometry header plus the point permutations of a family.
//
// Layout (format_version 1):
//   {"format_version": 1,
//    "geometry": {"kind", "dim", "q", "field": F, "extension": F?, "basis"},
//    "property": {"name", "k"},
//    "spaces": [{"name", "permutation": [...]} or {"name", "cycles": [[...]]}],
//    "provenance": {"construction", "parameters": {...}}}
// where F = {"p", "n", "modulus": [c_0..c_n], "primitive": [c_0..c_(n-1)]}.
// The header is enough to rebuild the standard space and its point indexing.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "orthokit/check.hpp"

namespace orthokit {

struct SpaceBundle {
  GeometryPtr geometry;
  std::vector<Space> spaces;
  std::vector<bool> as_cycles;  ///< per space: serialize in cycle notation
  Property property = Property::KOrthogoval;
  int k = 2;
  std::string construction;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();

  Certificate certificate(std::string name = "bundle") const;
};

SpaceBundle make_bundle(std::vector<Space> spaces, Property property, int k, std::string construction,
                        nlohmann::ordered_json parameters = nlohmann::ordered_json::object());

/// Canonical text; parsing and re-writing it gives the same bytes.
std::string write_bundle(const SpaceBundle& bundle);
/// Throws MALFORMED_BUNDLE on any structural problem.
SpaceBundle read_bundle(std::string_view text);

nlohmann::ordered_json field_json(const FieldDescriptor& f);
nlohmann::ordered_json geometry_json(const Geometry& g);

/// Stable pretty printer: two-space indentation, arrays of scalars on one line.
std::string canonical_json(const nlohmann::ordered_json& j);

}  // namespace orthokit
