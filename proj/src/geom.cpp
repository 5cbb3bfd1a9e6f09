#include "orthokit/geom.hpp"

#include <algorithm>
#include <set>

#include "orthokit/error.hpp"

namespace orthokit {

std::string_view to_string(GeometryKind kind) noexcept {
  return kind == GeometryKind::Affine ? "affine" : "projective";
}

std::string_view to_string(Basis basis) noexcept {
  switch (basis) {
    case Basis::Standard: return "standard";
    case Basis::SingerAscending: return "singer-ascending";
    case Basis::SingerDescending: return "singer-descending";
  }
  return "standard";
}

Basis basis_from_string(std::string_view name) {
  if (name == "standard") return Basis::Standard;
  if (name == "singer-ascending") return Basis::SingerAscending;
  if (name == "singer-descending") return Basis::SingerDescending;
  throw Error(ErrorCode::InvalidArgument, "unknown basis '" + std::string(name) + "'");
}

void LineSet::sort_unique() {
  const std::size_t n = size();
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(data_.begin() + a * width_, data_.begin() + (a + 1) * width_,
                                        data_.begin() + b * width_, data_.begin() + (b + 1) * width_);
  };
  auto equal = [&](std::uint32_t a, std::uint32_t b) {
    return std::equal(data_.begin() + a * width_, data_.begin() + (a + 1) * width_, data_.begin() + b * width_);
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), equal), order.end());
  std::vector<PointIndex> out;
  out.reserve(order.size() * width_);
  for (auto i : order) out.insert(out.end(), data_.begin() + i * width_, data_.begin() + (i + 1) * width_);
  data_ = std::move(out);
}

// ---------------------------------------------------------------------------

Geometry::Geometry(Token, GeometryKind kind, int dim, FieldPtr field, FieldPtr extension, Basis basis)
    : kind_(kind), dim_(dim), field_(std::move(field)), extension_(std::move(extension)), basis_(basis) {}

GeometryPtr Geometry::affine(int dim, FieldPtr field) {
  if (dim < 1) throw Error(ErrorCode::BadDimension, "dimension must be at least 1");
  auto g = std::make_shared<Geometry>(Token{}, GeometryKind::Affine, dim, std::move(field), nullptr, Basis::Standard);
  g->build_affine();
  return g;
}

GeometryPtr Geometry::projective(int dim, FieldPtr field, FieldPtr extension, Basis basis) {
  if (dim < 1) throw Error(ErrorCode::BadDimension, "dimension must be at least 1");
  if (basis == Basis::Standard) basis = Basis::SingerAscending;
  const auto p = field->characteristic();
  const auto ext_degree = field->degree() * static_cast<std::uint32_t>(dim + 1);
  if (!extension) {
    extension = FieldDescriptor::create(p, ext_degree);
  } else if (extension->characteristic() != p || extension->degree() != ext_degree) {
    throw Error(ErrorCode::FieldMismatch, "extension field must be GF(q^(dim+1))");
  }
  auto g = std::make_shared<Geometry>(Token{}, GeometryKind::Projective, dim, std::move(field), std::move(extension),
                                      basis);
  g->build_projective();
  return g;
}

GeometryPtr Geometry::affine(int dim, std::uint32_t q) { return affine(dim, field_of_order(q)); }

GeometryPtr Geometry::projective(int dim, std::uint32_t q, Basis basis) {
  return projective(dim, field_of_order(q), nullptr, basis);
}

std::uint64_t Geometry::line_count() const noexcept {
  const std::uint64_t n = point_count_, b = points_per_line();
  return n * (n - 1) / (b * (b - 1));
}

void Geometry::build_affine() {
  const std::uint64_t q = field_->order();
  std::uint64_t n = 1;
  for (int i = 0; i < dim_; ++i) {
    n *= q;
    if (n > kMaxPoints) throw Error(ErrorCode::TooLarge, "geometry exceeds supported point count");
  }
  point_count_ = static_cast<std::uint32_t>(n);
  coords_.resize(n * dim_);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = i;
    for (int j = dim_ - 1; j >= 0; --j) {
      coords_[static_cast<std::size_t>(i) * dim_ + j] = r % q;
      r /= static_cast<std::uint32_t>(q);
    }
  }

  base_line_of_.assign(n, 0);
  base_lines_ = LineSet(q);
  std::vector<PointIndex> line;
  for (std::uint32_t u = 1; u < n; ++u) {
    const auto c = coordinates(u);
    const auto lead = std::find_if(c.begin(), c.end(), [](Code x) { return x != 0; });
    if (*lead != 1) continue;
    line.clear();
    std::vector<Code> v(dim_);
    for (Code t = 0; t < q; ++t) {
      for (int j = 0; j < dim_; ++j) v[j] = field_->mul(t, c[j]);
      line.push_back(index_of(v));
    }
    std::sort(line.begin(), line.end());
    const auto id = static_cast<std::uint32_t>(base_lines_.size());
    for (auto x : line)
      if (x != 0) base_line_of_[x] = id;
    base_lines_.push_back(line);
  }
}

void Geometry::build_projective() {
  const std::uint64_t q = field_->order();
  const std::uint64_t big = extension_->order();
  const std::uint64_t theta = (big - 1) / (q - 1);
  if (theta > kMaxPoints) throw Error(ErrorCode::TooLarge, "geometry exceeds supported point count");
  point_count_ = static_cast<std::uint32_t>(theta);

  // Embed GF(q) into the extension by sending its generator x to a root of
  // GF(q)'s modulus lying in the subfield {0} u {z^(j theta)}.
  const auto& m = field_->modulus();
  Code beta = 0;
  bool found = false;
  for (std::uint64_t j = 0; j + 1 < q && !found; ++j) {
    const Code cand = extension_->exp(static_cast<std::int64_t>(j * theta));
    Code acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = extension_->add(extension_->mul(acc, cand), m[i]);
    if (acc == 0) {
      beta = cand;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::FieldMismatch, "base field does not embed in the extension");
  embed_.assign(q, 0);
  for (Code c = 0; c < q; ++c) {
    const auto digits = field_->coeffs(c);
    Code acc = 0, power = 1;
    for (auto d : digits) {
      acc = extension_->add(acc, extension_->mul(d, power));
      power = extension_->mul(power, beta);
    }
    embed_[c] = acc;
  }

  const std::size_t k = coordinate_count();
  basis_labels_.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    basis_labels_[i] = extension_->exp(basis_ == Basis::SingerDescending ? static_cast<std::int64_t>(dim_ - i)
                                                                         : static_cast<std::int64_t>(i + 1));

  coords_.assign(theta * k, 0);
  std::vector<bool> seen(theta, false);
  std::vector<Code> v(k);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::uint64_t free_count = 1;
    for (std::size_t j = lead + 1; j < k; ++j) free_count *= q;
    for (std::uint64_t code = 0; code < free_count; ++code) {
      std::fill(v.begin(), v.end(), 0);
      v[lead] = 1;
      std::uint64_t r = code;
      for (std::size_t j = k; j-- > lead + 1;) {
        v[j] = static_cast<Code>(r % q);
        r /= q;
      }
      const PointIndex idx = index_of(v);
      if (seen[idx]) throw Error(ErrorCode::InvalidArgument, "projective labelling is not injective");
      seen[idx] = true;
      std::copy(v.begin(), v.end(), coords_.begin() + static_cast<std::ptrdiff_t>(idx * k));
    }
  }

  // Lines through point 0 (label 1): {0} u {log(z^u + c) : c in GF(q)}.
  base_line_of_.assign(theta, 0);
  base_lines_ = LineSet(q + 1);
  std::vector<bool> done(theta, false);
  std::vector<PointIndex> line;
  for (std::uint32_t u = 1; u < theta; ++u) {
    if (done[u]) continue;
    line.assign(1, 0);
    const Code zu = extension_->exp(u);
    for (Code c = 0; c < q; ++c)
      line.push_back(extension_->log(extension_->add(zu, embed_[c])) % static_cast<std::uint32_t>(theta));
    std::sort(line.begin(), line.end());
    const auto id = static_cast<std::uint32_t>(base_lines_.size());
    for (auto x : line)
      if (x != 0) {
        base_line_of_[x] = id;
        done[x] = true;
      }
    base_lines_.push_back(line);
  }
}

PointIndex Geometry::index_of(std::span<const Code> c) const {
  if (c.size() != coordinate_count()) throw Error(ErrorCode::InvalidArgument, "wrong coordinate count");
  const Code q = field_->order();
  if (kind_ == GeometryKind::Affine) {
    PointIndex idx = 0;
    for (auto x : c) {
      if (x >= q) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
      idx = idx * q + x;
    }
    return idx;
  }
  Code label = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= q) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
    label = extension_->add(label, extension_->mul(embed_[c[i]], basis_labels_[i]));
  }
  if (label == 0) throw Error(ErrorCode::InvalidArgument, "zero vector is not a projective point");
  return extension_->log(label) % point_count_;
}

PointIndex Geometry::translate(PointIndex p, PointIndex t) const {
  if (kind_ == GeometryKind::Projective) {
    const std::uint64_t s = static_cast<std::uint64_t>(p) + t;
    return static_cast<PointIndex>(s % point_count_);
  }
  if (field_->characteristic() == 2) return p ^ t;
  const Code q = field_->order();
  PointIndex r = 0, w = 1;
  for (int j = 0; j < dim_; ++j) {
    r += field_->add(p % q, t % q) * w;
    p /= q;
    t /= q;
    w *= q;
  }
  return r;
}

PointIndex Geometry::difference(PointIndex x, PointIndex a) const {
  if (kind_ == GeometryKind::Projective) return (x + point_count_ - a) % point_count_;
  if (field_->characteristic() == 2) return x ^ a;
  const Code q = field_->order();
  PointIndex r = 0, w = 1;
  for (int j = 0; j < dim_; ++j) {
    r += field_->sub(x % q, a % q) * w;
    x /= q;
    a /= q;
    w *= q;
  }
  return r;
}

std::vector<PointIndex> Geometry::line_through(PointIndex p, PointIndex q) const {
  if (p == q) throw Error(ErrorCode::EqualPoints, "a line needs two distinct points");
  if (p >= point_count_ || q >= point_count_) throw Error(ErrorCode::InvalidArgument, "point out of range");
  const auto base = base_lines_[base_line_of_[difference(q, p)]];
  std::vector<PointIndex> line;
  line.reserve(base.size());
  for (auto b : base) line.push_back(translate(p, b));
  std::sort(line.begin(), line.end());
  return line;
}

void Geometry::build_lines() const {
  std::call_once(lines_once_, [this] {
    const std::uint32_t n = point_count_;
    const std::size_t width = points_per_line();
    LineSet all(width);
    all.reserve(line_count());
    std::vector<PointIndex> line(width);
    for (PointIndex p = 0; p < n; ++p) {
      for (std::size_t b = 0; b < base_lines_.size(); ++b) {
        const auto base = base_lines_[b];
        bool minimal = true;
        for (std::size_t i = 0; i < width; ++i) {
          line[i] = translate(p, base[i]);
          if (line[i] < p) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;
        std::sort(line.begin(), line.end());
        all.push_back(line);
      }
    }
    all.sort_unique();
    lines_ = std::move(all);

    const std::uint64_t r = base_lines_.size();
    if (static_cast<std::uint64_t>(n) * r <= 64'000'000ull) {
      line_of_point_base_.assign(static_cast<std::size_t>(n) * r, 0);
      for (std::uint32_t id = 0; id < lines_.size(); ++id) {
        const auto l = lines_[id];
        for (auto p : l) {
          const PointIndex other = l[0] == p ? l[1] : l[0];
          line_of_point_base_[static_cast<std::size_t>(p) * r + base_line_of_[difference(other, p)]] = id;
        }
      }
    }
  });
}

const LineSet& Geometry::lines() const {
  build_lines();
  return lines_;
}

std::uint32_t Geometry::line_id(PointIndex p, PointIndex q) const {
  build_lines();
  if (p == q) throw Error(ErrorCode::EqualPoints, "a line needs two distinct points");
  if (!line_of_point_base_.empty())
    return line_of_point_base_[static_cast<std::size_t>(p) * base_lines_.size() + base_line_of_[difference(q, p)]];
  const auto line = line_through(p, q);
  std::size_t lo = 0, hi = lines_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto l = lines_[mid];
    if (std::lexicographical_compare(l.begin(), l.end(), line.begin(), line.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return static_cast<std::uint32_t>(lo);
}

bool Geometry::colinear(PointIndex a, PointIndex b, PointIndex c) const {
  if (a == b || a == c || b == c) return true;
  return base_line_of_[difference(b, a)] == base_line_of_[difference(c, a)];
}

int Geometry::rank_of(std::span<const PointIndex> points) const {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "rank of an empty set");
  const std::size_t k = coordinate_count();
  std::vector<std::vector<Code>> rows;
  if (kind_ == GeometryKind::Projective) {
    for (auto p : points) {
      const auto c = coordinates(p);
      rows.emplace_back(c.begin(), c.end());
    }
  } else {
    const auto base = coordinates(points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
      const auto c = coordinates(points[i]);
      std::vector<Code> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = field_->sub(c[j], base[j]);
      rows.push_back(std::move(row));
    }
  }
  int rank = 0;
  for (std::size_t col = 0; col < k && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Code inv = field_->inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = field_->mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      const Code f = rows[r][col];
      for (std::size_t j = 0; j < k; ++j) rows[r][j] = field_->sub(rows[r][j], field_->mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return kind_ == GeometryKind::Projective ? rank : rank + 1;
}

std::vector<PointIndex> Geometry::join(std::span<const PointIndex> flat, PointIndex p) const {
  std::vector<PointIndex> out(flat.begin(), flat.end());
  if (std::find(out.begin(), out.end(), p) != out.end()) {
    std::sort(out.begin(), out.end());
    return out;
  }
  if (flat.empty()) return {p};
  if (kind_ == GeometryKind::Projective) {
    out.push_back(p);
    for (auto f : flat) {
      for (auto x : line_through(p, f)) out.push_back(x);
    }
  } else {
    // flat + t (p - f0) for every scalar t.
    const auto v = coordinates(difference(p, flat[0]));
    std::vector<Code> tv(v.size());
    for (Code t = 1; t < field_->order(); ++t) {
      for (std::size_t j = 0; j < v.size(); ++j) tv[j] = field_->mul(t, v[j]);
      const PointIndex shift = index_of(tv);
      for (auto f : flat) out.push_back(translate(f, shift));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<PointIndex>> Geometry::flats(int j) const {
  if (j < 0 || j > dim_) throw Error(ErrorCode::BadDimension, "flat dimension out of range");
  std::vector<std::vector<PointIndex>> out;
  if (j == 0) {
    for (PointIndex p = 0; p < point_count_; ++p) out.push_back({p});
    return out;
  }
  if (j == dim_) {
    std::vector<PointIndex> all(point_count_);
    for (PointIndex p = 0; p < point_count_; ++p) all[p] = p;
    out.push_back(std::move(all));
    return out;
  }
  const auto& ls = lines();
  for (std::size_t i = 0; i < ls.size(); ++i) out.emplace_back(ls[i].begin(), ls[i].end());
  for (int level = 2; level <= j; ++level) {
    std::set<std::vector<PointIndex>> next;
    std::vector<bool> member(point_count_);
    for (const auto& f : out) {
      std::fill(member.begin(), member.end(), false);
      for (auto x : f) member[x] = true;
      for (PointIndex p = 0; p < point_count_; ++p) {
        if (member[p]) continue;
        auto flat = join(f, p);
        for (auto x : flat) member[x] = true;
        next.insert(std::move(flat));
      }
    }
    out.assign(next.begin(), next.end());
  }
  return out;
}

FieldElement Geometry::singer_label(PointIndex p) const {
  if (kind_ != GeometryKind::Projective) throw Error(ErrorCode::InvalidArgument, "Singer labels need PG");
  const auto c = coordinates(p);
  Code label = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    label = extension_->add(label, extension_->mul(embed_[c[i]], basis_labels_[i]));
  return extension_->element(label);
}

PointIndex Geometry::label_to_point(const FieldElement& label) const {
  if (kind_ != GeometryKind::Projective) throw Error(ErrorCode::InvalidArgument, "Singer labels need PG");
  if (!label.field() || !label.field()->same_as(*extension_))
    throw Error(ErrorCode::MixedFields, "label is not in the geometry's extension field");
  return extension_->log(label.code()) % point_count_;
}

bool Geometry::same_as(const Geometry& o) const noexcept {
  if (this == &o) return true;
  if (kind_ != o.kind_ || dim_ != o.dim_ || !field_->same_as(*o.field_)) return false;
  if (kind_ == GeometryKind::Affine) return true;
  return basis_ == o.basis_ && extension_->same_as(*o.extension_);
}

std::string Geometry::describe() const {
  return std::string(kind_ == GeometryKind::Affine ? "AG(" : "PG(") + std::to_string(dim_) + ",F_" +
         std::to_string(q()) + ")";
}

}  // namespace orthokit
