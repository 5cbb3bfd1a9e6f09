#include "orthokit/explore.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "orthokit/build.hpp"
#include "orthokit/error.hpp"

namespace orthokit {

namespace {

std::int64_t label_group_order(std::uint32_t q, int r) {
  std::int64_t v = 1;
  for (int i = 0; i < r; ++i) v *= q;
  return v - 1;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

// --- Phi exponents ------------------------------------------------------------

bool meets_orthomorphism_conditions(std::uint32_t q, int r, std::int64_t w) {
  if (w < 2) return false;
  if (std::gcd(w, label_group_order(q, r)) != 1) return false;
  for (std::int64_t i = 2; i <= w; ++i)
    if (std::gcd<std::int64_t>(r, i) != 1) return false;
  const std::int64_t p = field_of_order(q)->characteristic();
  std::int64_t x = w;
  while (x % p == 0) x /= p;
  return x != 1;
}

ExponentScan exponent_scan(std::uint32_t q, int r, std::int64_t w_max) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "need r >= 2");
  ExponentScan out;
  out.q = q;
  out.r = r;
  const auto g = Geometry::projective(r - 1, q);
  const std::int64_t group = label_group_order(q, r);
  for (std::int64_t w = 2; w <= w_max; ++w) {
    if (std::gcd(w, group) != 1) continue;
    out.tested.push_back(w);
    if (is_orthomorphism(g, build_phi_map(g, w)).holds) out.orthomorphisms.push_back(w);
    if (meets_orthomorphism_conditions(q, r, w)) out.theorem_conditions.push_back(w);
  }
  return out;
}

int power_chain(std::uint32_t q, int r, std::int64_t w) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "need r >= 2");
  const std::int64_t group = label_group_order(q, r);
  const std::int64_t base = mod_pos(w, group);
  if (std::gcd(base, group) != 1)
    throw Error(ErrorCode::NotCoprime, "w is not coprime to " + std::to_string(group));
  const auto g = Geometry::projective(r - 1, q);
  int n = 0;
  std::int64_t e = 1;
  // w^order = 1 gives the identity, which is never an orthomorphism, so the
  // loop always terminates within the multiplicative order of w.
  while (true) {
    e = static_cast<std::int64_t>(static_cast<__int128>(e) * base % group);
    if (!is_orthomorphism(g, build_phi_map(g, e)).holds) return n;
    ++n;
  }
}

// --- cliques ------------------------------------------------------------------

namespace {

using Bits = std::vector<std::uint64_t>;

std::vector<std::uint64_t> colinear_triples(const Geometry& g, const PointBijection& f) {
  const auto& ls = g.lines();
  const std::size_t w = ls.width();
  std::vector<std::uint64_t> out;
  std::vector<PointIndex> l(w);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = 0; j < w; ++j) l[j] = f(ls[i][j]);
    std::sort(l.begin(), l.end());
    for (std::size_t z = 2; z < w; ++z)
      for (std::size_t y = 1; y < z; ++y)
        for (std::size_t x = 0; x < y; ++x) out.push_back(triple_rank(l[x], l[y], l[z]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

class MaxClique {
 public:
  MaxClique(std::vector<Bits> adj, std::size_t n, std::uint64_t limit)
      : adj_(std::move(adj)), n_(n), words_((n + 63) / 64), limit_(limit) {}

  void run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= 1ull << (v % 64);
    expand(all);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  void expand(Bits p) {
    if (aborted_) return;
    if (limit_ != 0 && nodes_ >= limit_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    // Greedy colouring in vertex order; colour classes give the bound.
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bits uncoloured = p;
    std::size_t c = 0;
    while (any(uncoloured)) {
      ++c;
      Bits avail = uncoloured;
      while (any(avail)) {
        const std::size_t v = first(avail);
        avail[v / 64] &= ~(1ull << (v % 64));
        uncoloured[v / 64] &= ~(1ull << (v % 64));
        for (std::size_t w = 0; w < words_; ++w) avail[w] &= ~adj_[v][w];
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (!any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
        if (aborted_) return;
      }
      current_.pop_back();
      p[v / 64] &= ~(1ull << (v % 64));
    }
  }

  bool any(const Bits& b) const {
    for (auto w : b)
      if (w) return true;
    return false;
  }
  std::size_t first(const Bits& b) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (b[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w]));
    return n_;
  }

  std::vector<Bits> adj_;
  std::size_t n_;
  std::size_t words_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

// Degeneracy order, densest core first; ties by candidate index.
std::vector<std::size_t> degeneracy_order(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) degree[i] += adj[i][j];
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> removal;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t v = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!removed[i] && (v == n || degree[i] < degree[v])) v = i;
    removed[v] = true;
    removal.push_back(v);
    for (std::size_t j = 0; j < n; ++j)
      if (!removed[j] && adj[v][j]) --degree[j];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

}  // namespace

CliqueResult clique_search(std::span<const PointBijection> candidates, const GeometryPtr& g, Budget budget) {
  CliqueResult out;
  const std::size_t n = candidates.size();
  if (n == 0) return out;
  std::vector<std::vector<std::uint64_t>> triples;
  triples.reserve(n);
  for (const auto& c : candidates) {
    if (c.size() != g->point_count()) throw Error(ErrorCode::SizeMismatch, "candidate size does not match geometry");
    triples.push_back(colinear_triples(*g, c));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = disjoint(triples[i], triples[j]);

  const auto order = degeneracy_order(adj);
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> bits(n, Bits(words, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (adj[order[a]][order[b]]) bits[a][b / 64] |= 1ull << (b % 64);

  MaxClique mc(std::move(bits), n, budget.max_nodes);
  mc.run();
  for (auto v : mc.best()) out.members.push_back(order[v]);
  std::sort(out.members.begin(), out.members.end());
  out.nodes = mc.nodes();
  out.exhaustive = !mc.aborted();
  return out;
}

std::vector<PointBijection> enumerate_structures(const GeometryPtr& g) {
  const std::uint32_t n = g->point_count();
  if (n > 9) throw Error(ErrorCode::TooLarge, "structure enumeration is limited to 9 points");
  const auto& ls = g->lines();
  const std::size_t w = ls.width();
  std::vector<PointIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<PointIndex>> seen;
  std::vector<PointBijection> out;
  std::vector<PointIndex> l(w);
  do {
    LineSet image(w);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = 0; j < w; ++j) l[j] = perm[ls[i][j]];
      std::sort(l.begin(), l.end());
      image.push_back(l);
    }
    image.sort_unique();
    std::vector<PointIndex> key;
    key.reserve(image.size() * w);
    for (std::size_t i = 0; i < image.size(); ++i) key.insert(key.end(), image[i].begin(), image[i].end());
    if (seen.insert(std::move(key)).second) out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Space> extend_standard_family(const GeometryPtr& g, std::span<const PointBijection> candidates,
                                          Budget budget) {
  const auto standard = Space::standard(g);
  std::vector<PointBijection> compatible;
  for (const auto& c : candidates)
    if (is_k_orthogoval_pair(standard, Space(g, c), 2).holds) compatible.push_back(c);
  const auto clique = clique_search(compatible, g, budget);
  std::vector<Space> out{standard};
  for (std::size_t i = 0; i < clique.members.size(); ++i)
    out.emplace_back(g, compatible[clique.members[i]], "structure" + std::to_string(i + 1));
  return out;
}

// --- half-dimension exhaustive search --------------------------------------------

std::uint64_t affine_group_order(int d, std::uint32_t q) {
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  std::uint64_t order = qd, qi = 1;
  for (int i = 0; i < d; ++i) {
    order *= qd - qi;
    qi *= q;
  }
  return order;
}

namespace {

// Assigns images to points 0, 1, 2, ... in turn. Composing the second space
// with an affine map of the standard one preserves the property, and the
// pointwise stabiliser of the images chosen so far fixes their span U and is
// transitive off U. So the next image is either an unused point of U or the
// least unused point outside U: exactly one bijection per orbit survives.
class HalfDimSearch {
 public:
  struct State {
    std::vector<PointIndex> image;  // images of points 0 .. depth-1
  };

  struct TaskResult {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool complete = false;
    // (node count when found, bijection)
    std::vector<std::pair<std::uint64_t, std::vector<PointIndex>>> solutions;
    std::uint64_t found = 0;
  };

  HalfDimSearch(GeometryPtr g, std::size_t keep) : g_(std::move(g)), keep_(keep) {
    n_ = g_->point_count();
    k_ = g_->dim() / 2;
    binary_ = g_->q() == 2;
    by_max_.resize(n_);
    std::set<std::vector<PointIndex>> tuples;
    const std::size_t m = static_cast<std::size_t>(k_) + 2;
    for (const auto& flat : g_->flats(k_)) {
      std::vector<std::size_t> idx(m);
      if (flat.size() < m) continue;
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<PointIndex> t(m);
        for (std::size_t i = 0; i < m; ++i) t[i] = flat[idx[i]];
        tuples.insert(std::move(t));
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == flat.size() - m + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    for (auto& t : tuples) by_max_[t.back()].push_back(t);
  }

  std::uint32_t point_count() const { return n_; }

  // Children of a state in canonical order, each already checked.
  template <typename Fn>
  void for_each_child(std::vector<PointIndex>& image, std::vector<char>& used, const std::vector<char>& in_span,
                      Fn&& fn) const {
    const PointIndex p = static_cast<PointIndex>(image.size());
    bool outside_taken = false;
    for (PointIndex x = 0; x < n_; ++x) {
      if (used[x]) continue;
      if (!in_span[x]) {
        if (outside_taken) continue;
        outside_taken = true;
      }
      image.push_back(x);
      const bool ok = consistent(image, p);
      image.pop_back();
      if (ok) {
        used[x] = 1;
        fn(x, !in_span[x]);
        used[x] = 0;
      }
    }
  }

  std::vector<char> extend_span(const std::vector<char>& in_span, const std::vector<PointIndex>& image,
                                PointIndex x) const {
    std::vector<char> out = in_span;
    if (image.size() == 1) {
      out.assign(n_, 0);
      out[x] = 1;
      return out;
    }
    if (binary_) {
      const PointIndex shift = x ^ image[0];
      for (PointIndex u = 0; u < n_; ++u)
        if (in_span[u]) out[u ^ shift] = 1;
      return out;
    }
    std::vector<PointIndex> flat;
    for (PointIndex u = 0; u < n_; ++u)
      if (in_span[u]) flat.push_back(u);
    for (auto v : g_->join(flat, x)) out[v] = 1;
    return out;
  }

  // Prefix states at the given depth, in canonical order; counts their nodes.
  std::vector<State> prefixes(std::size_t depth, std::uint64_t& nodes) const {
    std::vector<State> out;
    std::vector<PointIndex> image;
    std::vector<char> used(n_, 0);
    std::vector<char> span(n_, 0);
    prefix_dfs(image, used, span, depth, nodes, out);
    return out;
  }

  TaskResult run(const State& s, std::uint64_t limit, const std::atomic<bool>& stop) const {
    TaskResult r;
    std::vector<PointIndex> image;
    std::vector<char> used(n_, 0);
    std::vector<char> span(n_, 0);
    for (auto x : s.image) {
      image.push_back(x);
      span = image.size() == 1 || !span[x] ? extend_span(span, image, x) : span;
      used[x] = 1;
    }
    r.complete = dfs(image, used, span, limit, stop, r);
    return r;
  }

 private:
  bool consistent(const std::vector<PointIndex>& image, PointIndex p) const {
    for (const auto& t : by_max_[p]) {
      if (binary_) {
        if (binary_rank(image, t) < t.size()) return false;
      } else {
        std::vector<PointIndex> pts(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) pts[i] = image[t[i]];
        if (g_->rank_of(pts) < static_cast<int>(t.size())) return false;
      }
    }
    return true;
  }

  // Affine rank of the images of t, for q = 2 where indices are bit vectors.
  static std::size_t binary_rank(const std::vector<PointIndex>& image, const std::vector<PointIndex>& t) {
    PointIndex basis[32] = {};
    std::size_t rank = 1;
    const PointIndex base = image[t[0]];
    for (std::size_t i = 1; i < t.size(); ++i) {
      PointIndex v = image[t[i]] ^ base;
      for (int bit = 31; bit >= 0 && v; --bit) {
        if (!((v >> bit) & 1u)) continue;
        if (!basis[bit]) {
          basis[bit] = v;
          ++rank;
          v = 0;
        } else {
          v ^= basis[bit];
        }
      }
    }
    return rank;
  }

  void prefix_dfs(std::vector<PointIndex>& image, std::vector<char>& used, const std::vector<char>& span,
                  std::size_t depth, std::uint64_t& nodes, std::vector<State>& out) const {
    if (image.size() == depth || image.size() == n_) {
      out.push_back({image});
      return;
    }
    for_each_child(image, used, span, [&](PointIndex x, bool grows) {
      ++nodes;
      image.push_back(x);
      if (grows)
        prefix_dfs(image, used, extend_span(span, image, x), depth, nodes, out);
      else
        prefix_dfs(image, used, span, depth, nodes, out);
      image.pop_back();
    });
  }

  // Returns false if stopped early.
  bool dfs(std::vector<PointIndex>& image, std::vector<char>& used, const std::vector<char>& span,
           std::uint64_t limit, const std::atomic<bool>& stop, TaskResult& r) const {
    if (image.size() == n_) {
      ++r.leaves;
      ++r.found;
      if (r.solutions.size() < keep_) r.solutions.emplace_back(r.nodes, image);
      return true;
    }
    bool ok = true;
    for_each_child(image, used, span, [&](PointIndex x, bool grows) {
      if (!ok) return;
      if ((limit != 0 && r.nodes >= limit) || ((r.nodes & 0xfff) == 0 && stop.load(std::memory_order_relaxed))) {
        ok = false;
        return;
      }
      ++r.nodes;
      image.push_back(x);
      if (grows)
        ok = dfs(image, used, extend_span(span, image, x), limit, stop, r);
      else
        ok = dfs(image, used, span, limit, stop, r);
      image.pop_back();
    });
    return ok;
  }

  GeometryPtr g_;
  std::size_t keep_;
  std::uint32_t n_;
  int k_;
  bool binary_;
  std::vector<std::vector<std::vector<PointIndex>>> by_max_;
};

struct Checkpoint {
  std::string task;
  std::uint64_t tasks = 0;
  std::uint64_t frontier = 0;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t found = 0;
  std::vector<std::vector<PointIndex>> solutions;
};

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path, const std::string& task,
                                          std::uint64_t tasks) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::MalformedBundle, "unreadable checkpoint " + path.string());
  }
  Checkpoint c;
  c.task = j.value("task", "");
  c.tasks = j.value("tasks", std::uint64_t{0});
  if (c.task != task || c.tasks != tasks) return std::nullopt;
  c.frontier = j.at("frontier").get<std::uint64_t>();
  c.nodes = j.at("visited").get<std::uint64_t>();
  c.leaves = j.at("leaves").get<std::uint64_t>();
  c.found = j.at("found").get<std::uint64_t>();
  c.solutions = j.at("partial_results").get<std::vector<std::vector<PointIndex>>>();
  return c;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  if (path.empty()) return;
  nlohmann::ordered_json j;
  j["task"] = c.task;
  j["tasks"] = c.tasks;
  j["frontier"] = c.frontier;
  j["visited"] = c.nodes;
  j["leaves"] = c.leaves;
  j["found"] = c.found;
  j["partial_results"] = c.solutions;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

SearchResult half_dim_exhaustive(int d, std::uint32_t q, const HalfDimOptions& options) {
  if (d < 2 || d % 2 != 0) throw Error(ErrorCode::OddDimension, "half-dimension search needs even d >= 2");
  const auto g = Geometry::affine(d, q);
  HalfDimSearch search(g, options.max_certificates);

  SearchResult result;
  result.task = "half-dim AG(" + std::to_string(d) + "," + std::to_string(q) + ")";

  // The prefix depth depends only on the geometry, so node counts and budget
  // cut-offs do not depend on the number of workers.
  std::uint64_t prefix_nodes = 0;
  std::vector<HalfDimSearch::State> tasks;
  for (std::size_t depth = 1;; ++depth) {
    prefix_nodes = 0;
    tasks = search.prefixes(depth, prefix_nodes);
    if (tasks.size() >= 512 || depth >= search.point_count()) break;
  }
  result.tasks = tasks.size();

  const std::uint64_t budget = options.budget.max_nodes;
  Checkpoint cp{result.task, tasks.size(), 0, 0, 0, 0, {}};
  std::uint64_t spent = 0;  // nodes visited by this call
  if (auto prior = load_checkpoint(options.checkpoint, result.task, tasks.size())) {
    cp = *prior;
    result.resumed = true;
  } else if (budget != 0 && prefix_nodes > budget) {
    result.nodes = budget;
    result.budget_exceeded = true;
    return result;
  } else {
    cp.nodes = prefix_nodes;
    spent = prefix_nodes;
  }

  const std::uint64_t first = cp.frontier;
  const std::uint64_t limit = budget == 0 ? 0 : budget - spent;
  std::vector<std::optional<HalfDimSearch::TaskResult>> done(tasks.size());
  std::atomic<std::uint64_t> next{first};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    while (!stop.load()) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      auto r = search.run(tasks[i], limit, stop);
      std::lock_guard lock(mu);
      done[i] = std::move(r);
      cv.notify_all();
    }
  };

  const int workers = std::max(1, options.workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

  // Merge completed subtrees strictly in task order.
  auto last_save = std::chrono::steady_clock::now();
  bool exceeded = false;
  Checkpoint persist;  // state at the last completed subtree
  {
    std::unique_lock lock(mu);
    while (cp.frontier < tasks.size() && !exceeded) {
      cv.wait(lock, [&] { return done[cp.frontier].has_value(); });
      while (cp.frontier < tasks.size() && done[cp.frontier]) {
        auto& r = *done[cp.frontier];
        const std::uint64_t remaining = budget == 0 ? ~0ull : budget - spent;
        if (!r.complete || r.nodes > remaining) {
          // Count this subtree up to the budget and stop; a resumed run
          // starts this subtree again.
          persist = cp;
          const std::uint64_t used = std::min(r.nodes, remaining);
          cp.nodes += used;
          spent += used;
          for (auto& [at, sol] : r.solutions)
            if (at <= used && cp.solutions.size() < options.max_certificates) cp.solutions.push_back(sol);
          exceeded = true;
          stop = true;
          break;
        }
        cp.nodes += r.nodes;
        spent += r.nodes;
        cp.leaves += r.leaves;
        cp.found += r.found;
        for (auto& [at, sol] : r.solutions)
          if (cp.solutions.size() < options.max_certificates) cp.solutions.push_back(std::move(sol));
        done[cp.frontier].reset();
        ++cp.frontier;
      }
      const auto now = std::chrono::steady_clock::now();
      if (!options.checkpoint.empty() && now - last_save > std::chrono::seconds(10)) {
        save_checkpoint(options.checkpoint, cp);
        last_save = now;
      }
    }
  }
  stop = true;
  for (auto& t : pool) t.join();
  save_checkpoint(options.checkpoint, exceeded ? persist : cp);

  result.nodes = cp.nodes;
  result.leaves = cp.leaves;
  result.found = cp.found;
  result.tasks_done = cp.frontier;
  result.budget_exceeded = exceeded;
  result.exhaustive = !exceeded && cp.frontier == tasks.size();

  const auto standard = Space::standard(g);
  for (std::size_t i = 0; i < cp.solutions.size(); ++i) {
    Space second(g, PointBijection(cp.solutions[i]), "solution" + std::to_string(i + 1));
    if (!is_half_dimension_orthogoval(standard, second).holds)
      throw std::logic_error("search produced a pair that does not verify");
    result.certificates.push_back(Certificate{"half-dim-" + std::to_string(i + 1), {standard, second},
                                              Property::HalfDimension, g->dim() / 2});
  }
  return result;
}

// --- Phi_{-1} half-dimension probe ------------------------------------------------

std::vector<ProbeRow> phi_half_dim_probe(std::span<const std::pair<std::uint32_t, int>> grid) {
  std::vector<ProbeRow> out;
  for (auto [q, r] : grid) {
    const auto g = Geometry::projective(r - 1, q);
    const auto s = Space::standard(g);
    const Space t(g, build_phi_map(g, -1), "Phi_-1");
    out.push_back({q, r, is_half_dimension_orthogoval(s, t).holds});
  }
  return out;
}

}  // namespace orthokit
