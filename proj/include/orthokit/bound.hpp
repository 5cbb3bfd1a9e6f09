#pragma once

// Upper bounds on the size of a family of mutually orthogoval spaces.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orthokit/check.hpp"

namespace orthokit {

/// Counting colinear triples: floor((q^d-2)/(q-2)) for AG(d,q),
/// floor((q^(d+1)-2q+1)/(q-1)^2) for PG(d,q). AFFINE_Q2_UNDEFINED for AG(d,2).
std::int64_t triple_bound(const Geometry& g);
std::int64_t triple_bound(GeometryKind kind, int dim, std::uint32_t q);

/// The Johnson packing bound with all lines of the family as blocks, divided
/// by the number of lines in one space.
std::int64_t johnson_bound(const Geometry& g);
/// These overloads never build the point set, so they also cover geometries
/// too large to enumerate.
std::int64_t johnson_bound(GeometryKind kind, int dim, std::uint32_t q);

struct BoundReport {
  std::string geometry;
  std::int64_t triple_bound = 0;
  std::int64_t johnson_bound = 0;
  std::int64_t achieved = 1;
  std::int64_t slack = 0;
};

/// Checks every certificate (k = 2 orthogovality on g) and compares the
/// largest family with both bounds. UNVERIFIED_CERTIFICATE if one fails.
BoundReport bound_report(const Geometry& g, std::span<const Certificate> certificates);

}  // namespace orthokit
