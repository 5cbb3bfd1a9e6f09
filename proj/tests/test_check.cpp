#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orthokit/build.hpp"
#include "orthokit/check.hpp"
#include "orthokit/error.hpp"

using namespace orthokit;

namespace {

PointBijection random_bijection(std::size_t n, std::mt19937& rng) {
  std::vector<PointIndex> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return PointBijection(std::move(v));
}

struct WorkerGuard {
  int saved = check_workers();
  std::uint64_t bits = triple_window_bits();
  ~WorkerGuard() {
    set_check_workers(saved);
    set_triple_window_bits(bits);
  }
};

bool same_witness(const Verdict& a, const Verdict& b) {
  if (a.holds != b.holds || a.witness.has_value() != b.witness.has_value()) return false;
  if (!a.witness) return true;
  const auto &x = *a.witness, &y = *b.witness;
  return x.space_a == y.space_a && x.space_b == y.space_b && x.block_a == y.block_a && x.block_b == y.block_b &&
         x.common == y.common;
}

}  // namespace

TEST_SUITE("check") {
  TEST_CASE("bijection algebra") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
      const auto f = random_bijection(40, rng);
      const auto g = random_bijection(40, rng);
      CHECK(compose(f, f.inverse()).is_identity());
      CHECK(f.pow(3) == compose(f, compose(f, f)));
      CHECK(f.pow(-2) == f.inverse().pow(2));
      CHECK(PointBijection::from_cycles(40, f.cycles()) == f);
      CHECK(compose(f, g).inverse() == compose(g.inverse(), f.inverse()));
    }
    CHECK_THROWS_AS(PointBijection({0, 0, 1}), Error);
    CHECK_THROWS_AS(PointBijection::from_cycles(4, {{0, 4}}), Error);
  }

  TEST_CASE("triple index membership") {
    TripleIndex idx(choose3(5), choose3(9));
    CHECK(idx.insert(triple_rank(1, 2, 6)));
    CHECK_FALSE(idx.insert(triple_rank(1, 2, 6)));
    CHECK(idx.contains(6, 1, 2));
    CHECK_FALSE(idx.contains(1, 2, 7));
    CHECK(idx.size() == 1);
    CHECK(triple_rank(0, 1, 2) == 0);
    CHECK(triple_rank(0, 1, 3) == 1);
  }

  TEST_CASE("k = 2 checker agrees with the line-pair oracle") {
    std::mt19937 rng(2024);
    for (const auto& g : {Geometry::affine(2, 3), Geometry::affine(2, 4), Geometry::projective(2, 3),
                          Geometry::projective(3, 2), Geometry::affine(3, 3)}) {
      const auto ls = oracle::lines(*g);
      const auto n = g->point_count();
      for (int t = 0; t < 30; ++t) {
        std::vector<Space> spaces{Space::standard(g)};
        std::vector<PointBijection> maps{PointBijection::identity(n)};
        for (int s = 0; s < 1 + t % 3; ++s) {
          maps.push_back(random_bijection(n, rng));
          spaces.emplace_back(g, maps.back());
        }
        CHECK(are_mutually_orthogoval(spaces).holds == oracle::mutually_k_orthogoval(ls, maps, n));
      }
    }
  }

  TEST_CASE("witness lines really share the reported points") {
    std::mt19937 rng(5);
    const auto g = Geometry::projective(3, 3);
    for (int t = 0; t < 20; ++t) {
      std::vector<Space> fam{Space::standard(g), Space(g, random_bijection(g->point_count(), rng)),
                             Space(g, random_bijection(g->point_count(), rng))};
      const auto v = are_mutually_orthogoval(fam);
      REQUIRE_FALSE(v.holds);
      const auto& w = *v.witness;
      CHECK(w.space_a < w.space_b);
      CHECK(w.common.size() >= 3);
      const auto la = fam[w.space_a].lines(), lb = fam[w.space_b].lines();
      const auto has = [](const LineSet& ls, const std::vector<PointIndex>& l) {
        for (std::size_t i = 0; i < ls.size(); ++i)
          if (std::equal(ls[i].begin(), ls[i].end(), l.begin(), l.end())) return true;
        return false;
      };
      CHECK(has(la, w.block_a));
      CHECK(has(lb, w.block_b));
      for (auto x : w.common) {
        CHECK(std::binary_search(w.block_a.begin(), w.block_a.end(), x));
        CHECK(std::binary_search(w.block_b.begin(), w.block_b.end(), x));
      }
    }
  }

  TEST_CASE("duplicated space fails") {
    const auto g = Geometry::affine(2, 5);
    const auto s = Space::standard(g);
    const auto v = are_mutually_orthogoval(std::vector<Space>{s, s});
    CHECK_FALSE(v.holds);
    CHECK(v.witness->block_a == v.witness->block_b);
  }

  TEST_CASE("verdicts do not depend on workers or window size") {
    WorkerGuard guard;
    std::mt19937 rng(8);
    const auto g = Geometry::projective(4, 2);
    const auto fam = build_phi_family(2, 5, 3, 5);
    std::vector<std::vector<Space>> cases{fam};
    for (int t = 0; t < 6; ++t) {
      auto bad = fam;
      auto v = std::vector<PointIndex>(bad[t % 6].map().values().begin(), bad[t % 6].map().values().end());
      std::swap(v[rng() % v.size()], v[rng() % v.size()]);
      std::swap(v[rng() % v.size()], v[rng() % v.size()]);
      bad[t % 6] = Space(g, PointBijection(v));
      cases.push_back(bad);
    }
    for (const auto& c : cases) {
      set_check_workers(1);
      set_triple_window_bits(std::uint64_t{1} << 32);
      const auto ref = are_mutually_orthogoval(c);
      for (int w : {2, 4, 8})
        for (std::uint64_t bits : {std::uint64_t{64}, std::uint64_t{1000}, std::uint64_t{1} << 32}) {
          set_check_workers(w);
          set_triple_window_bits(bits);
          CHECK(same_witness(are_mutually_orthogoval(c), ref));
        }
    }
  }

  TEST_CASE("pair check is the orthomorphism test") {
    std::mt19937 rng(13);
    for (const auto& g : {Geometry::projective(2, 3), Geometry::projective(4, 2), Geometry::affine(2, 5)}) {
      std::vector<PointBijection> maps;
      for (int t = 0; t < 10; ++t) maps.push_back(random_bijection(g->point_count(), rng));
      if (g->kind() == GeometryKind::Projective) maps.push_back(build_phi_map(g, -1));
      for (const auto& f : maps)
        CHECK(is_orthomorphism(g, f).holds == is_k_orthogoval_pair(Space::standard(g), Space(g, f), 2).holds);
    }
  }

  TEST_CASE("general k matches the naive pair count") {
    std::mt19937 rng(17);
    const auto g = Geometry::affine(2, 5);
    for (int t = 0; t < 20; ++t) {
      const Space s = Space::standard(g), u(g, random_bijection(25, rng));
      const auto m = naive_max_intersection(s, u);
      const auto ls = oracle::lines(*g);
      CHECK(m == oracle::max_meet(ls, oracle::image(ls, u.map()), 25));
      for (int k = 1; k <= 5; ++k) CHECK(is_k_orthogoval_pair(s, u, k).holds == (static_cast<int>(m) <= k));
    }
  }

  TEST_CASE("askew and half-dimension") {
    const auto [s, t] = build_askew_pair(2, 3);
    CHECK(is_askew_pair(s, t).holds);
    CHECK_FALSE(is_askew_pair(s, s).holds);
    // In dimension 2 half-dimension orthogoval is plain orthogoval.
    std::mt19937 rng(19);
    const auto g = Geometry::affine(2, 3);
    for (int i = 0; i < 50; ++i) {
      const Space a = Space::standard(g), b(g, random_bijection(9, rng));
      CHECK(is_half_dimension_orthogoval(a, b).holds == is_k_orthogoval_pair(a, b, 2).holds);
    }
    CHECK_THROWS_AS(is_half_dimension_orthogoval(Space::standard(Geometry::affine(3, 2)),
                                                 Space::standard(Geometry::affine(3, 2))),
                    Error);
  }

  TEST_CASE("certificates") {
    const auto fam = build_phi_family(2, 5, 3, 5);
    Certificate c{"big", fam, Property::KOrthogoval, 2};
    CHECK(verify(c).holds);
    c.spaces.push_back(fam[2]);
    const auto v = verify(c);
    CHECK_FALSE(v.holds);
    CHECK(v.witness->space_a == 2);
    CHECK(v.witness->space_b == 6);
    CHECK(property_from_string("half-dim") == Property::HalfDimension);
    CHECK(to_string(Property::Askew) == "askew");
    CHECK_THROWS_AS(property_from_string("weird"), Error);
    CHECK_THROWS_AS(are_mutually_orthogoval(std::vector<Space>{Space::standard(Geometry::affine(2, 3)),
                                                               Space::standard(Geometry::affine(2, 5))}),
                    Error);
  }
}
