#pragma once

// Canonical models of AG(d, q) and PG(d, q).
//
// Affine points are indexed positionally in base q: the point (x_1, ..., x_d)
// has index sum x_i q^(d-i), each coordinate being a GF(q) element code. So in
// AG(3, F_3) the point (a, b, c) is 9a + 3b + c.
//
// Projective points are indexed by Singer labels: PG(d, q) is identified with
// the nonzero elements of GF(q^(d+1)) modulo GF(q)^*, and the point labelled
// z^i gets index i mod (q^(d+1)-1)/(q-1). The coordinate basis (which power of
// z multiplies which coordinate) only affects the coordinate <-> index map.
//
// Both models carry a group of "translations" acting regularly on the points
// by collineations (vector addition, or the Singer cycle), which makes lines
// cheap: every line is a translate of a line through point 0.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "orthokit/gf.hpp"

namespace orthokit {

using PointIndex = std::uint32_t;

enum class GeometryKind { Affine, Projective };

/// Which powers of z multiply the projective coordinates (x_0 : ... : x_d).
enum class Basis {
  Standard,          ///< affine geometries
  SingerAscending,   ///< x_i multiplies z^(i+1), i.e. z^1 .. z^(d+1)
  SingerDescending,  ///< x_i multiplies z^(d-i), i.e. z^d .. z^0
};

std::string_view to_string(GeometryKind kind) noexcept;
std::string_view to_string(Basis basis) noexcept;
Basis basis_from_string(std::string_view name);

/// Equal-width sorted point tuples in one flat buffer.
class LineSet {
 public:
  LineSet() = default;
  explicit LineSet(std::size_t width) : width_(width) {}

  std::size_t size() const noexcept { return width_ == 0 ? 0 : data_.size() / width_; }
  std::size_t width() const noexcept { return width_; }
  std::span<const PointIndex> operator[](std::size_t i) const { return {data_.data() + i * width_, width_}; }
  void push_back(std::span<const PointIndex> line) { data_.insert(data_.end(), line.begin(), line.end()); }
  void reserve(std::size_t lines) { data_.reserve(lines * width_); }
  /// Sorts the tuples lexicographically and drops duplicates.
  void sort_unique();

 private:
  std::size_t width_ = 0;
  std::vector<PointIndex> data_;
};

class Geometry;
using GeometryPtr = std::shared_ptr<const Geometry>;

class Geometry {
 public:
  static constexpr std::uint32_t kMaxPoints = 20000;

  static GeometryPtr affine(int dim, FieldPtr field);
  /// `extension` must be GF(q^(dim+1)) over the same prime; nullptr selects
  /// the lexicographically least primitive polynomial of that degree.
  static GeometryPtr projective(int dim, FieldPtr field, FieldPtr extension = nullptr,
                                Basis basis = Basis::SingerAscending);
  /// Convenience: AUTO moduli throughout.
  static GeometryPtr affine(int dim, std::uint32_t q);
  static GeometryPtr projective(int dim, std::uint32_t q, Basis basis = Basis::SingerAscending);

  GeometryKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  const FieldPtr& field() const noexcept { return field_; }
  const FieldPtr& extension() const noexcept { return extension_; }
  Basis basis() const noexcept { return basis_; }
  std::uint32_t q() const noexcept { return field_->order(); }

  std::uint32_t point_count() const noexcept { return point_count_; }
  std::uint32_t points_per_line() const noexcept { return kind_ == GeometryKind::Affine ? q() : q() + 1; }
  std::uint64_t line_count() const noexcept;
  std::uint32_t lines_per_point() const noexcept { return (point_count_ - 1) / (points_per_line() - 1); }
  std::size_t coordinate_count() const noexcept { return kind_ == GeometryKind::Affine ? dim_ : dim_ + 1; }

  /// Coordinates of a point; projective representatives have first nonzero entry 1.
  std::span<const Code> coordinates(PointIndex p) const {
    return {coords_.data() + static_cast<std::size_t>(p) * coordinate_count(), coordinate_count()};
  }
  /// Index of a coordinate vector (projective vectors are normalized first).
  PointIndex index_of(std::span<const Code> coords) const;

  /// All lines, each sorted, in lexicographic order. Computed once.
  const LineSet& lines() const;
  std::vector<PointIndex> line_through(PointIndex p, PointIndex q) const;
  /// Position of line_through(p, q) in lines().
  std::uint32_t line_id(PointIndex p, PointIndex q) const;
  bool colinear(PointIndex a, PointIndex b, PointIndex c) const;

  /// 1 + dimension of the flat spanned by the points.
  int rank_of(std::span<const PointIndex> points) const;
  /// All j-flats as sorted point sets, lexicographically ordered.
  std::vector<std::vector<PointIndex>> flats(int j) const;
  /// Smallest flat containing `flat` and `p`.
  std::vector<PointIndex> join(std::span<const PointIndex> flat, PointIndex p) const;

  /// The translation taking point 0 to `t`, applied to `p`.
  PointIndex translate(PointIndex p, PointIndex t) const;
  /// The t with translate(a, t) == x.
  PointIndex difference(PointIndex x, PointIndex a) const;

  FieldElement singer_label(PointIndex p) const;
  PointIndex label_to_point(const FieldElement& label) const;

  bool same_as(const Geometry& other) const noexcept;
  /// e.g. "PG(4,F_2)".
  std::string describe() const;

  struct Token {};
  Geometry(Token, GeometryKind kind, int dim, FieldPtr field, FieldPtr extension, Basis basis);

 private:
  void build_affine();
  void build_projective();
  void build_lines() const;

  GeometryKind kind_;
  int dim_;
  FieldPtr field_;
  FieldPtr extension_;
  Basis basis_;
  std::uint32_t point_count_ = 0;

  std::vector<Code> coords_;
  std::vector<Code> embed_;          // GF(q) code -> extension code (projective)
  std::vector<Code> basis_labels_;   // extension codes multiplying each coordinate
  std::vector<std::uint32_t> base_line_of_;  // point u != 0 -> id of line through 0 and u
  LineSet base_lines_;                       // lines through point 0

  mutable std::once_flag lines_once_;
  mutable LineSet lines_;
  mutable std::vector<std::uint32_t> line_of_point_base_;  // [p * r + base id] -> line id
};

}  // namespace orthokit
