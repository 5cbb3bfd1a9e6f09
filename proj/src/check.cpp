#include "orthokit/check.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "orthokit/error.hpp"

namespace orthokit {

// --- PointBijection ----------------------------------------------------------

PointBijection::PointBijection(std::vector<PointIndex> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (auto v : perm_) {
    if (v >= perm_.size() || seen[v]) throw Error(ErrorCode::NotPermutation, "map is not a permutation");
    seen[v] = true;
  }
}

PointBijection PointBijection::identity(std::size_t n) {
  std::vector<PointIndex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<PointIndex>(i);
  PointBijection f;
  f.perm_ = std::move(v);
  return f;
}

PointBijection PointBijection::from_cycles(std::size_t n, const std::vector<std::vector<PointIndex>>& cycles) {
  std::vector<PointIndex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<PointIndex>(i);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) throw Error(ErrorCode::NotPermutation, "cycles overlap or leave the point set");
      used[c[i]] = true;
      v[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return PointBijection(std::move(v));
}

PointBijection PointBijection::inverse() const {
  std::vector<PointIndex> v(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) v[perm_[i]] = static_cast<PointIndex>(i);
  PointBijection f;
  f.perm_ = std::move(v);
  return f;
}

PointBijection PointBijection::pow(std::int64_t e) const {
  PointBijection base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  PointBijection r = identity(perm_.size());
  for (; n > 0; n >>= 1) {
    if (n & 1) r = compose(r, base);
    base = compose(base, base);
  }
  return r;
}

bool PointBijection::is_identity() const noexcept {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

std::vector<std::vector<PointIndex>> PointBijection::cycles() const {
  std::vector<std::vector<PointIndex>> out;
  std::vector<bool> seen(perm_.size(), false);
  for (PointIndex i = 0; i < perm_.size(); ++i) {
    if (seen[i] || perm_[i] == i) continue;
    std::vector<PointIndex> c;
    for (PointIndex x = i; !seen[x]; x = perm_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

PointBijection compose(const PointBijection& f, const PointBijection& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::SizeMismatch, "composing maps of different sizes");
  std::vector<PointIndex> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g(static_cast<PointIndex>(i)));
  return PointBijection(std::move(v));
}

// --- Space -------------------------------------------------------------------

Space::Space(GeometryPtr geometry, PointBijection map, std::string name, bool linear)
    : geometry_(std::move(geometry)), map_(std::move(map)), name_(std::move(name)), linear_(linear) {
  if (map_.size() != geometry_->point_count())
    throw Error(ErrorCode::SizeMismatch, "map size does not match the point count");
  inverse_ = map_.inverse();
}

Space Space::standard(GeometryPtr geometry, std::string name) {
  const auto n = geometry->point_count();
  return Space(std::move(geometry), PointBijection::identity(n), std::move(name), true);
}

std::vector<PointIndex> Space::line(std::size_t i) const {
  const auto l = geometry_->lines()[i];
  std::vector<PointIndex> out(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) out[j] = map_(l[j]);
  std::sort(out.begin(), out.end());
  return out;
}

LineSet Space::lines() const {
  const auto& std_lines = geometry_->lines();
  LineSet out(std_lines.width());
  out.reserve(std_lines.size());
  for (std::size_t i = 0; i < std_lines.size(); ++i) out.push_back(line(i));
  out.sort_unique();
  return out;
}

std::vector<PointIndex> Space::line_through(PointIndex a, PointIndex b) const {
  auto l = geometry_->line_through(inverse_(a), inverse_(b));
  for (auto& x : l) x = map_(x);
  std::sort(l.begin(), l.end());
  return l;
}

// --- TripleIndex -------------------------------------------------------------

std::uint64_t choose3(std::uint64_t n) noexcept { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::uint64_t triple_rank(PointIndex a, PointIndex b, PointIndex c) noexcept {
  const std::uint64_t bb = b;
  return choose3(c) + bb * (bb - 1) / 2 + a;
}

namespace {
std::atomic<std::uint64_t> g_window_bits{1ull << 32};
std::atomic<int> g_check_workers{1};
}  // namespace

void set_check_workers(int workers) noexcept { g_check_workers = std::max(1, workers); }
int check_workers() noexcept { return g_check_workers; }

void set_triple_window_bits(std::uint64_t bits) noexcept { g_window_bits = std::max<std::uint64_t>(bits, 64); }
std::uint64_t triple_window_bits() noexcept { return g_window_bits; }

TripleIndex::TripleIndex(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi), bits_((hi - lo + 63) / 64, 0) {}

TripleIndex TripleIndex::of(const Space& space) {
  const auto& g = *space.geometry();
  const std::uint64_t total = choose3(g.point_count());
  if (total > triple_window_bits()) throw Error(ErrorCode::TooLarge, "triple index exceeds window budget");
  TripleIndex idx(0, total);
  const auto& ls = g.lines();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto l = space.line(i);
    for (std::size_t z = 2; z < l.size(); ++z)
      for (std::size_t y = 1; y < z; ++y)
        for (std::size_t x = 0; x < y; ++x) idx.insert(triple_rank(l[x], l[y], l[z]));
  }
  return idx;
}

bool TripleIndex::contains(std::uint64_t rank) const noexcept {
  if (!in_window(rank)) return false;
  const std::uint64_t r = rank - lo_;
  return (bits_[r >> 6] >> (r & 63)) & 1u;
}

bool TripleIndex::contains(PointIndex a, PointIndex b, PointIndex c) const noexcept {
  PointIndex t[3] = {a, b, c};
  std::sort(t, t + 3);
  if (t[0] == t[1] || t[1] == t[2]) return false;
  return contains(triple_rank(t[0], t[1], t[2]));
}

bool TripleIndex::insert(std::uint64_t rank) noexcept {
  const std::uint64_t r = rank - lo_;
  auto& word = bits_[r >> 6];
  const std::uint64_t mask = 1ull << (r & 63);
  if (word & mask) return false;
  word |= mask;
  ++count_;
  return true;
}

void TripleIndex::clear() noexcept {
  std::fill(bits_.begin(), bits_.end(), 0);
  count_ = 0;
}

// --- predicates --------------------------------------------------------------

namespace {

void require_same_geometry(std::span<const Space> spaces) {
  for (const auto& s : spaces)
    if (!s.geometry()->same_as(*spaces.front().geometry()))
      throw Error(ErrorCode::GeometryMismatch, "spaces live on different geometries");
}

std::vector<PointIndex> intersect(const std::vector<PointIndex>& a, const std::vector<PointIndex>& b) {
  std::vector<PointIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Collision {
  std::size_t space;
  std::size_t line;
  std::uint64_t rank;
  PointIndex a, b, c;
  auto key() const { return std::tie(space, line, rank); }
};

// Window bounds [c0, c1) on the largest point of a triple.
std::vector<std::pair<std::uint32_t, std::uint32_t>> triple_windows(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint64_t budget = triple_window_bits();
  for (std::uint32_t c0 = 2; c0 < n;) {
    std::uint32_t c1 = c0 + 1;
    while (c1 < n && choose3(c1 + 1) - choose3(c0) <= budget) ++c1;
    out.emplace_back(c0, c1);
    c0 = c1;
  }
  return out;
}

// Multithreaded yes/no pass: lines are split between threads, which set bits
// atomically; a bit found already set is a triple colinear in two spaces.
bool any_shared_triple(std::span<const Space> spaces, int workers) {
  const auto& g = *spaces.front().geometry();
  const auto& std_lines = g.lines();
  const std::size_t width = std_lines.width();
  std::atomic<bool> found{false};
  for (auto [c0, c1] : triple_windows(g.point_count())) {
    const std::uint64_t lo = choose3(c0);
    std::vector<std::uint64_t> bits((choose3(c1) - lo + 63) / 64, 0);
    auto run = [&](std::size_t from, std::size_t to) {
      std::vector<PointIndex> l(width);
      for (const auto& s : spaces) {
        const auto& f = s.map();
        for (std::size_t li = from; li < to; ++li) {
          if (found.load(std::memory_order_relaxed)) return;
          const auto sl = std_lines[li];
          for (std::size_t j = 0; j < width; ++j) l[j] = f(sl[j]);
          std::sort(l.begin(), l.end());
          if (l[width - 1] < c0 || l[2] >= c1) continue;
          for (std::size_t z = 2; z < width; ++z) {
            if (l[z] < c0) continue;
            if (l[z] >= c1) break;
            for (std::size_t y = 1; y < z; ++y)
              for (std::size_t x = 0; x < y; ++x) {
                const auto r = triple_rank(l[x], l[y], l[z]) - lo;
                const std::uint64_t mask = 1ull << (r & 63);
                if (std::atomic_ref<std::uint64_t>(bits[r >> 6]).fetch_or(mask, std::memory_order_relaxed) & mask) {
                  found = true;
                  return;
                }
              }
          }
        }
      }
    };
    std::vector<std::thread> pool;
    const std::size_t total = std_lines.size();
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(run, total * t / workers, total * (t + 1) / workers);
    for (auto& th : pool) th.join();
    if (found) return true;
  }
  return false;
}

// k = 2: union of the spaces' colinear triples, window by window.
Verdict mutually_orthogoval_triples(std::span<const Space> spaces) {
  const auto& g = *spaces.front().geometry();
  const std::uint32_t n = g.point_count();
  const auto& std_lines = g.lines();
  const std::size_t width = std_lines.width();
  Verdict verdict;
  if (width < 3 || spaces.size() < 2) return verdict;

  // The witness always comes from the sequential scan, so it does not depend
  // on the thread count.
  if (check_workers() > 1 && !any_shared_triple(spaces, check_workers())) return verdict;

  std::optional<Collision> best;
  std::vector<PointIndex> l(width);
  for (auto [c0, c1] : triple_windows(n)) {
    TripleIndex window(choose3(c0), choose3(c1));
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      if (best && i > best->space) break;
      const auto& f = spaces[i].map();
      bool hit = false;
      for (std::size_t li = 0; li < std_lines.size() && !hit; ++li) {
        if (best && i == best->space && li >= best->line) break;
        const auto sl = std_lines[li];
        for (std::size_t j = 0; j < width; ++j) l[j] = f(sl[j]);
        std::sort(l.begin(), l.end());
        if (l[width - 1] < c0 || l[2] >= c1) continue;
        for (std::size_t z = 2; z < width && !hit; ++z) {
          if (l[z] < c0) continue;
          if (l[z] >= c1) break;
          for (std::size_t y = 1; y < z && !hit; ++y)
            for (std::size_t x = 0; x < y; ++x) {
              const auto r = triple_rank(l[x], l[y], l[z]);
              if (!window.insert(r)) {
                Collision col{i, li, r, l[x], l[y], l[z]};
                if (!best || col.key() < best->key()) best = col;
                hit = true;
                break;
              }
            }
        }
      }
      if (hit) break;
    }
  }
  if (!best) return verdict;

  std::size_t earlier = 0;
  while (earlier < best->space && !spaces[earlier].colinear(best->a, best->b, best->c)) ++earlier;
  Witness w;
  w.space_a = earlier;
  w.space_b = best->space;
  w.block_a = spaces[earlier].line_through(best->a, best->b);
  w.block_b = spaces[best->space].line(best->line);
  w.common = intersect(w.block_a, w.block_b);
  verdict.holds = false;
  verdict.witness = std::move(w);
  return verdict;
}

// Any k: per line of t, count point pairs falling on each line of s.
Verdict k_orthogoval_by_pairs(const Space& s, const Space& t, int k) {
  const auto& g = *s.geometry();
  const auto& std_lines = g.lines();
  const std::size_t width = std_lines.width();
  Verdict verdict;
  if (static_cast<std::size_t>(k) >= width) return verdict;

  // Translations commute with an additive map, so when s is the standard
  // affine space it suffices to test the images of lines through the origin.
  const bool shortcut = g.kind() == GeometryKind::Affine && s.is_standard() && t.linear();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;
  for (std::size_t li = 0; li < std_lines.size(); ++li) {
    const auto sl = std_lines[li];
    if (shortcut && sl[0] != 0) continue;
    const auto tl = t.line(li);
    counts.clear();
    for (std::size_t y = 1; y < width; ++y)
      for (std::size_t x = 0; x < y; ++x) {
        const auto id = g.line_id(s.inverse_map()(tl[x]), s.inverse_map()(tl[y]));
        auto it = std::find_if(counts.begin(), counts.end(), [&](auto& e) { return e.first == id; });
        if (it == counts.end())
          counts.emplace_back(id, 1);
        else
          ++it->second;
      }
    std::optional<std::uint32_t> bad;
    for (auto [id, pairs] : counts) {
      std::uint32_t m = 1;
      while (m * (m - 1) / 2 < pairs) ++m;
      if (m > static_cast<std::uint32_t>(k) && (!bad || id < *bad)) bad = id;
    }
    if (bad) {
      Witness w;
      w.space_a = 0;
      w.space_b = 1;
      const auto sl_pts = std_lines[*bad];
      for (auto x : sl_pts) w.block_a.push_back(s.map()(x));
      std::sort(w.block_a.begin(), w.block_a.end());
      w.block_b = tl;
      w.common = intersect(w.block_a, w.block_b);
      verdict.holds = false;
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

std::optional<std::vector<PointIndex>> dependent_subset(const Space& s, std::span<const PointIndex> pts) {
  const auto& g = *s.geometry();
  std::vector<PointIndex> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = std::min<std::size_t>(sorted.size(), g.dim() + 1);
  if (m == 0) return std::nullopt;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<PointIndex> pre(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) pre[i] = s.inverse_map()(sorted[idx[i]]);
    if (g.rank_of(pre) < static_cast<int>(m)) {
      std::vector<PointIndex> out(m);
      for (std::size_t i = 0; i < m; ++i) out[i] = sorted[idx[i]];
      return out;
    }
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == sorted.size() - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

template <typename Fn>
bool for_each_subset(std::span<const PointIndex> pts, std::size_t m, Fn&& fn) {
  if (m > pts.size()) return true;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<PointIndex> sub(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) sub[i] = pts[idx[i]];
    if (!fn(std::span<const PointIndex>(sub))) return false;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == pts.size() - m + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<PointIndex> mapped_sorted(const PointBijection& f, const std::vector<PointIndex>& pts) {
  std::vector<PointIndex> out;
  out.reserve(pts.size());
  for (auto p : pts) out.push_back(f(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Verdict is_k_orthogoval_pair(const Space& s, const Space& t, int k) {
  if (!s.geometry()->same_as(*t.geometry()))
    throw Error(ErrorCode::GeometryMismatch, "spaces live on different geometries");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k == 2) {
    const Space pair[2] = {s, t};
    return mutually_orthogoval_triples(pair);
  }
  return k_orthogoval_by_pairs(s, t, k);
}

Verdict are_mutually_orthogoval(std::span<const Space> spaces, int k) {
  if (spaces.empty()) return {};
  require_same_geometry(spaces);
  if (k == 2) return mutually_orthogoval_triples(spaces);
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i + 1; j < spaces.size(); ++j) {
      auto v = k_orthogoval_by_pairs(spaces[i], spaces[j], k);
      if (!v.holds) {
        v.witness->space_a = i;
        v.witness->space_b = j;
        return v;
      }
    }
  return {};
}

Verdict is_orthomorphism(const GeometryPtr& g, const PointBijection& f) {
  if (f.size() != g->point_count()) throw Error(ErrorCode::SizeMismatch, "map size does not match the point count");
  const auto& ls = g->lines();
  const std::size_t width = ls.width();
  std::vector<PointIndex> img(width);
  for (std::size_t li = 0; li < ls.size(); ++li) {
    const auto l = ls[li];
    for (std::size_t j = 0; j < width; ++j) img[j] = f(l[j]);
    std::sort(img.begin(), img.end());
    for (std::size_t z = 2; z < width; ++z)
      for (std::size_t y = 1; y < z; ++y)
        for (std::size_t x = 0; x < y; ++x) {
          if (!g->colinear(img[x], img[y], img[z])) continue;
          Witness w;
          w.space_a = 0;
          w.space_b = 1;
          w.block_a = g->line_through(img[x], img[y]);
          w.block_b = img;
          w.common = intersect(w.block_a, w.block_b);
          return {false, std::move(w)};
        }
  }
  return {};
}

bool in_general_position(const Space& s, std::span<const PointIndex> points) {
  return !dependent_subset(s, points).has_value();
}

Verdict is_askew_pair(const Space& s, const Space& t) {
  if (!s.geometry()->same_as(*t.geometry()))
    throw Error(ErrorCode::GeometryMismatch, "spaces live on different geometries");
  const auto n_lines = s.geometry()->lines().size();
  const Space* order[2] = {&s, &t};
  for (std::size_t side = 0; side < 2; ++side) {
    const Space& from = *order[side];
    const Space& in = *order[1 - side];
    for (std::size_t li = 0; li < n_lines; ++li) {
      const auto line = from.line(li);
      if (auto bad = dependent_subset(in, line)) {
        Witness w;
        w.space_a = side;
        w.space_b = 1 - side;
        w.block_a = line;
        w.block_b = *bad;
        w.common = *bad;
        return {false, std::move(w)};
      }
    }
  }
  return {};
}

Verdict is_half_dimension_orthogoval(const Space& s, const Space& t) {
  const auto& g = *s.geometry();
  if (!g.same_as(*t.geometry())) throw Error(ErrorCode::GeometryMismatch, "spaces live on different geometries");
  if (g.dim() % 2 != 0) throw Error(ErrorCode::OddDimension, "half-dimension orthogovality needs even dimension");
  const int k = g.dim() / 2;
  const auto flats = g.flats(k);
  const std::size_t m = static_cast<std::size_t>(k) + 2;

  auto witness_for = [&](std::size_t fs, std::size_t ft) {
    Witness w;
    w.block_a = mapped_sorted(s.map(), flats[fs]);
    w.block_b = mapped_sorted(t.map(), flats[ft]);
    w.common = intersect(w.block_a, w.block_b);
    return Verdict{false, std::move(w)};
  };

  if (m <= 4 && g.point_count() < 65536) {
    // Two flats meet in more than k+1 points iff they share a (k+2)-subset.
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    auto key = [](std::span<const PointIndex> sub) {
      std::uint64_t h = 0;
      for (auto x : sub) h = (h << 16) | x;
      return h;
    };
    for (std::uint32_t i = 0; i < flats.size(); ++i) {
      const auto img = mapped_sorted(s.map(), flats[i]);
      for_each_subset(img, m, [&](std::span<const PointIndex> sub) {
        seen.emplace(key(sub), i);
        return true;
      });
    }
    for (std::uint32_t j = 0; j < flats.size(); ++j) {
      const auto img = mapped_sorted(t.map(), flats[j]);
      std::optional<std::uint32_t> hit;
      for_each_subset(img, m, [&](std::span<const PointIndex> sub) {
        auto it = seen.find(key(sub));
        if (it == seen.end()) return true;
        hit = it->second;
        return false;
      });
      if (hit) return witness_for(*hit, j);
    }
    return {};
  }

  std::vector<std::vector<PointIndex>> simg, timg;
  for (const auto& f : flats) {
    simg.push_back(mapped_sorted(s.map(), f));
    timg.push_back(mapped_sorted(t.map(), f));
  }
  for (std::size_t j = 0; j < flats.size(); ++j)
    for (std::size_t i = 0; i < flats.size(); ++i)
      if (intersect(simg[i], timg[j]).size() > static_cast<std::size_t>(k) + 1) return witness_for(i, j);
  return {};
}

std::uint32_t naive_max_intersection(const Space& s, const Space& t) {
  if (!s.geometry()->same_as(*t.geometry()))
    throw Error(ErrorCode::GeometryMismatch, "spaces live on different geometries");
  const auto a = s.lines();
  const auto b = t.lines();
  const std::size_t words = (s.geometry()->point_count() + 63) / 64;
  auto to_bits = [&](const LineSet& ls) {
    std::vector<std::uint64_t> bits(ls.size() * words, 0);
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (auto p : ls[i]) bits[i * words + p / 64] |= 1ull << (p % 64);
    return bits;
  };
  const auto ba = to_bits(a), bb = to_bits(b);
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint32_t c = 0;
      for (std::size_t w = 0; w < words; ++w) c += std::popcount(ba[i * words + w] & bb[j * words + w]);
      best = std::max(best, c);
    }
  return best;
}

bool is_k_orthogoval_pair_naive(const Space& s, const Space& t, int k) {
  return naive_max_intersection(s, t) <= static_cast<std::uint32_t>(k);
}

std::string_view to_string(Property p) noexcept {
  switch (p) {
    case Property::KOrthogoval: return "k-orthogoval";
    case Property::Askew: return "askew";
    case Property::HalfDimension: return "half-dim";
  }
  return "?";
}

Property property_from_string(std::string_view name) {
  if (name == "k-orthogoval") return Property::KOrthogoval;
  if (name == "askew") return Property::Askew;
  if (name == "half-dim") return Property::HalfDimension;
  throw Error(ErrorCode::UnknownName, "unknown property '" + std::string(name) + "'");
}

Verdict verify(const Certificate& cert) {
  if (cert.spaces.empty()) throw Error(ErrorCode::EmptySet, "certificate has no spaces");
  require_same_geometry(cert.spaces);
  if (cert.property == Property::KOrthogoval) return are_mutually_orthogoval(cert.spaces, cert.k);
  for (std::size_t i = 0; i < cert.spaces.size(); ++i)
    for (std::size_t j = i + 1; j < cert.spaces.size(); ++j) {
      auto v = cert.property == Property::Askew ? is_askew_pair(cert.spaces[i], cert.spaces[j])
                                                : is_half_dimension_orthogoval(cert.spaces[i], cert.spaces[j]);
      if (!v.holds) {
        v.witness->space_a = v.witness->space_a == 0 ? i : j;
        v.witness->space_b = v.witness->space_b == 0 ? i : j;
        return v;
      }
    }
  return {};
}

}  // namespace orthokit
