#pragma once

// Decision procedures for orthogovality and its relatives.
//
// A Space is the standard geometry pushed through a point bijection: its
// lines are {map(l) : l a standard line}. Every predicate returns a Verdict
// that carries a deterministic witness when the property fails.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthokit/geom.hpp"

namespace orthokit {

class PointBijection {
 public:
  PointBijection() = default;
  /// Throws NOT_PERMUTATION unless every index in [0, size) appears once.
  explicit PointBijection(std::vector<PointIndex> perm);

  static PointBijection identity(std::size_t n);
  /// Cycle notation; points not mentioned are fixed.
  static PointBijection from_cycles(std::size_t n, const std::vector<std::vector<PointIndex>>& cycles);

  std::size_t size() const noexcept { return perm_.size(); }
  PointIndex operator()(PointIndex p) const { return perm_[p]; }
  std::span<const PointIndex> values() const noexcept { return perm_; }

  PointBijection inverse() const;
  /// Any integer power, negative powers via the inverse.
  PointBijection pow(std::int64_t e) const;
  bool is_identity() const noexcept;
  /// Nontrivial cycles, each starting at its least element, sorted by that element.
  std::vector<std::vector<PointIndex>> cycles() const;

  friend bool operator==(const PointBijection&, const PointBijection&) = default;

 private:
  std::vector<PointIndex> perm_;
};

/// (f o g)(x) = f(g(x)).
PointBijection compose(const PointBijection& f, const PointBijection& g);

class Space {
 public:
  Space(GeometryPtr geometry, PointBijection map, std::string name = {}, bool linear = false);
  static Space standard(GeometryPtr geometry, std::string name = "standard");

  const GeometryPtr& geometry() const noexcept { return geometry_; }
  const PointBijection& map() const noexcept { return map_; }
  const PointBijection& inverse_map() const noexcept { return inverse_; }
  const std::string& name() const noexcept { return name_; }
  /// Set when the map is additive over the prime field (affine translations commute with it).
  bool linear() const noexcept { return linear_; }
  bool is_standard() const noexcept { return map_.is_identity(); }

  /// Image of standard line number `i`, sorted.
  std::vector<PointIndex> line(std::size_t i) const;
  /// All lines of the space, sorted canonically.
  LineSet lines() const;
  bool colinear(PointIndex a, PointIndex b, PointIndex c) const {
    return geometry_->colinear(inverse_(a), inverse_(b), inverse_(c));
  }
  /// Line of this space through two points, sorted.
  std::vector<PointIndex> line_through(PointIndex a, PointIndex b) const;

 private:
  GeometryPtr geometry_;
  PointBijection map_;
  PointBijection inverse_;
  std::string name_;
  bool linear_ = false;
};

/// Evidence that a property fails. For intersection properties block_a and
/// block_b are the meeting lines/flats of spaces space_a and space_b; for
/// general position block_a is the line of space_a and block_b the subset
/// that is dependent in space_b.
struct Witness {
  std::size_t space_a = 0;
  std::size_t space_b = 1;
  std::vector<PointIndex> block_a;
  std::vector<PointIndex> block_b;
  std::vector<PointIndex> common;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return holds; }
};

// --- colinear triple index -------------------------------------------------

/// Combinatorial rank of {a < b < c}: C(c,3) + C(b,2) + a.
std::uint64_t triple_rank(PointIndex a, PointIndex b, PointIndex c) noexcept;
std::uint64_t choose3(std::uint64_t n) noexcept;

/// Set of unordered point triples restricted to a window [lo, hi) of ranks.
class TripleIndex {
 public:
  TripleIndex(std::uint64_t lo, std::uint64_t hi);
  /// All colinear triples of one space (throws TOO_LARGE past the window budget).
  static TripleIndex of(const Space& space);

  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }
  bool in_window(std::uint64_t rank) const noexcept { return rank >= lo_ && rank < hi_; }
  bool contains(std::uint64_t rank) const noexcept;
  bool contains(PointIndex a, PointIndex b, PointIndex c) const noexcept;
  /// Returns false if the triple was already present.
  bool insert(std::uint64_t rank) noexcept;
  std::uint64_t size() const noexcept { return count_; }
  void clear() noexcept;

 private:
  std::uint64_t lo_;
  std::uint64_t hi_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Bits per triple-index window used by the k = 2 checks (default 2^32).
void set_triple_window_bits(std::uint64_t bits) noexcept;
std::uint64_t triple_window_bits() noexcept;

/// Threads used by the k = 2 checks. Verdicts and witnesses do not depend on it.
void set_check_workers(int workers) noexcept;
int check_workers() noexcept;

// --- predicates -------------------------------------------------------------

Verdict is_k_orthogoval_pair(const Space& s, const Space& t, int k);
Verdict are_mutually_orthogoval(std::span<const Space> spaces, int k = 2);
Verdict is_orthomorphism(const GeometryPtr& g, const PointBijection& f);
bool in_general_position(const Space& s, std::span<const PointIndex> points);
Verdict is_askew_pair(const Space& s, const Space& t);
Verdict is_half_dimension_orthogoval(const Space& s, const Space& t);

// --- certificates -------------------------------------------------------------

enum class Property { KOrthogoval, Askew, HalfDimension };

std::string_view to_string(Property p) noexcept;
Property property_from_string(std::string_view name);

/// A named family of spaces together with the property it claims.
struct Certificate {
  std::string name;
  std::vector<Space> spaces;
  Property property = Property::KOrthogoval;
  int k = 2;
};

/// Checks the claimed property for every pair in the family.
Verdict verify(const Certificate& cert);

/// Reference implementation: largest |line of s  n  line of t| over all pairs.
std::uint32_t naive_max_intersection(const Space& s, const Space& t);
/// Reference implementation of the k-orthogoval test by all line pairs.
bool is_k_orthogoval_pair_naive(const Space& s, const Space& t, int k);

}  // namespace orthokit
