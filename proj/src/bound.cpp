#include "orthokit/bound.hpp"

#include <algorithm>
#include <cmath>

#include "orthokit/error.hpp"

namespace orthokit {

namespace {

using i128 = __int128;

i128 ipow(i128 b, int e) {
  i128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_defined(GeometryKind kind, std::uint32_t q) {
  if (kind == GeometryKind::Affine && q == 2)
    throw Error(ErrorCode::AffineQ2Undefined, "the bounds need q >= 3 for affine spaces");
}

void require_shape(int dim, std::uint32_t q) {
  if (dim < 1) throw Error(ErrorCode::BadDimension, "dimension must be at least 1");
  if (q < 2 || prime_factors(q).size() != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  if (static_cast<double>(dim + 1) * std::log2(static_cast<double>(q)) > 40)
    throw Error(ErrorCode::TooLarge, "geometry too large for exact bounds");
}

i128 points(GeometryKind kind, int dim, i128 q) {
  return kind == GeometryKind::Affine ? ipow(q, dim) : (ipow(q, dim + 1) - 1) / (q - 1);
}

// floor(x / y * inner) for nonnegative integers.
i128 scaled_floor(i128 x, i128 y, i128 inner) { return x * inner / y; }

}  // namespace

std::int64_t triple_bound(GeometryKind kind, int dim, std::uint32_t q_) {
  require_shape(dim, q_);
  require_defined(kind, q_);
  const i128 q = q_;
  if (kind == GeometryKind::Affine) return static_cast<std::int64_t>((ipow(q, dim) - 2) / (q - 2));
  return static_cast<std::int64_t>((ipow(q, dim + 1) - 2 * q + 1) / ((q - 1) * (q - 1)));
}

std::int64_t johnson_bound(GeometryKind kind, int dim, std::uint32_t q) {
  require_shape(dim, q);
  require_defined(kind, q);
  const i128 n = points(kind, dim, q);
  const i128 b = kind == GeometryKind::Affine ? q : q + 1;
  const i128 inner = (n - 2) / (b - 2);
  const i128 middle = scaled_floor(n - 1, b - 1, inner);
  const i128 outer = scaled_floor(n, b, middle);
  // Dividing by the line count n(n-1)/(b(b-1)) of a single space.
  return static_cast<std::int64_t>(outer * b * (b - 1) / (n * (n - 1)));
}

std::int64_t triple_bound(const Geometry& g) { return triple_bound(g.kind(), g.dim(), g.q()); }
std::int64_t johnson_bound(const Geometry& g) { return johnson_bound(g.kind(), g.dim(), g.q()); }

BoundReport bound_report(const Geometry& g, std::span<const Certificate> certificates) {
  BoundReport r;
  r.geometry = g.describe();
  r.triple_bound = triple_bound(g);
  r.johnson_bound = johnson_bound(g);
  for (const auto& c : certificates) {
    if (c.spaces.empty() || !c.spaces.front().geometry()->same_as(g))
      throw Error(ErrorCode::UnverifiedCertificate, "certificate '" + c.name + "' is not on " + r.geometry);
    if (c.property != Property::KOrthogoval || c.k != 2 || !verify(c).holds)
      throw Error(ErrorCode::UnverifiedCertificate, "certificate '" + c.name + "' does not verify");
    r.achieved = std::max<std::int64_t>(r.achieved, static_cast<std::int64_t>(c.spaces.size()));
  }
  r.slack = std::min(r.triple_bound, r.johnson_bound) - r.achieved;
  return r;
}

}  // namespace orthokit
