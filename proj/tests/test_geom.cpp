#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orthokit/error.hpp"
#include "orthokit/geom.hpp"

using namespace orthokit;

namespace {

std::vector<std::vector<PointIndex>> as_vectors(const LineSet& ls) {
  std::vector<std::vector<PointIndex>> out;
  for (std::size_t i = 0; i < ls.size(); ++i) out.emplace_back(ls[i].begin(), ls[i].end());
  return out;
}

std::vector<GeometryPtr> small_geometries() {
  return {Geometry::affine(2, 3),     Geometry::affine(3, 3),
          Geometry::affine(2, 4),     Geometry::affine(2, 5),
          Geometry::affine(3, 2),     Geometry::affine(2, 7),
          Geometry::projective(2, 2), Geometry::projective(2, 3),
          Geometry::projective(3, 2), Geometry::projective(2, 4),
          Geometry::projective(3, 3), Geometry::projective(4, 2),
          Geometry::projective(2, 3, Basis::SingerDescending),
          Geometry::projective(3, 2, Basis::SingerDescending)};
}

}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("point and line counts") {
    CHECK(Geometry::affine(3, 3)->point_count() == 27);
    CHECK(Geometry::affine(3, 3)->line_count() == 117);
    CHECK(Geometry::projective(2, 3)->point_count() == 13);
    CHECK(Geometry::projective(6, 4)->point_count() == 5461);
    CHECK(Geometry::projective(3, 2)->line_count() == 35);
    for (const auto& g : small_geometries()) CHECK(g->lines().size() == g->line_count());
  }

  TEST_CASE("lines agree with coordinate ranks") {
    for (const auto& g : small_geometries()) {
      CAPTURE(g->describe());
      CHECK(as_vectors(g->lines()) == oracle::lines(*g));
    }
  }

  TEST_CASE("affine positional indexing") {
    const auto g = Geometry::affine(3, 3);
    for (PointIndex p = 0; p < 27; ++p) {
      const auto c = g->coordinates(p);
      CHECK(p == 9 * c[0] + 3 * c[1] + c[2]);
      CHECK(g->index_of(c) == p);
    }
  }

  TEST_CASE("characteristic 2 translation is XOR") {
    const auto g = Geometry::affine(4, 2);
    for (PointIndex p = 0; p < 16; ++p)
      for (PointIndex t = 0; t < 16; ++t) {
        CHECK(g->translate(p, t) == (p ^ t));
        CHECK(g->difference(p ^ t, p) == t);
      }
  }

  TEST_CASE("translations are collineations acting regularly") {
    for (const auto& g : small_geometries()) {
      const auto& ls = g->lines();
      for (PointIndex t = 0; t < g->point_count(); t += 3) {
        CHECK(g->translate(0, t) == t);
        for (std::size_t i = 0; i < ls.size(); i += 5) {
          const auto l = ls[i];
          CHECK(g->colinear(g->translate(l[0], t), g->translate(l[1], t), g->translate(l[2], t)));
        }
      }
    }
  }

  TEST_CASE("singer labels match the coordinate basis") {
    for (std::uint32_t q : {2u, 3u, 5u})
      for (int d : {2, 3}) {
        if (q == 5 && d == 3) continue;
        for (auto basis : {Basis::SingerAscending, Basis::SingerDescending}) {
          const auto g = Geometry::projective(d, q, basis);
          const auto& ext = *g->extension();
          const auto o = oracle::Field::of(ext);
          const Code z = ext.primitive();
          const std::uint64_t theta = g->point_count();
          for (PointIndex i = 0; i < theta; ++i) {
            const auto c = g->coordinates(i);
            Code label = 0;
            for (int j = 0; j <= d; ++j) {
              const int power = basis == Basis::SingerAscending ? j + 1 : d - j;
              label = o.add(label, o.mul(c[static_cast<std::size_t>(j)], o.pow(z, static_cast<std::uint64_t>(power))));
            }
            // label / z^i must be a nonzero element of GF(q).
            const Code ratio = o.mul(label, o.inv(o.pow(z, i)));
            CHECK(ratio != 0);
            CHECK(ratio < q);
            CHECK(g->label_to_point(ext.element(ext.exp(i + theta))) == i);
          }
        }
      }
  }

  TEST_CASE("line_through, line_id and colinear") {
    for (const auto& g : small_geometries()) {
      const auto& ls = g->lines();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        const auto l = ls[i];
        const std::vector<PointIndex> v(l.begin(), l.end());
        CHECK(g->line_through(l[1], l[0]) == v);
        CHECK(g->line_id(l[0], l[l.size() - 1]) == i);
      }
      std::mt19937 rng(7);
      std::uniform_int_distribution<PointIndex> pick(0, g->point_count() - 1);
      for (int t = 0; t < 300; ++t) {
        const PointIndex a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == b || b == c || a == c) continue;
        const auto f = oracle::Field::of(*g->field());
        CHECK(g->colinear(a, b, c) == (oracle::flat_rank(*g, f, {a, b, c}) == 2));
      }
    }
  }

  TEST_CASE("rank_of agrees with the oracle") {
    std::mt19937 rng(11);
    for (const auto& g : small_geometries()) {
      const auto f = oracle::Field::of(*g->field());
      std::uniform_int_distribution<PointIndex> pick(0, g->point_count() - 1);
      for (int t = 0; t < 200; ++t) {
        std::vector<PointIndex> pts(1 + t % 5);
        for (auto& x : pts) x = pick(rng);
        CHECK(g->rank_of(pts) == oracle::flat_rank(*g, f, pts));
      }
    }
  }

  TEST_CASE("flats agree with the oracle") {
    struct Row {
      GeometryPtr g;
      int j;
      std::size_t count;
    };
    for (const auto& row : {Row{Geometry::affine(3, 2), 2, 14}, Row{Geometry::affine(4, 2), 2, 140},
                            Row{Geometry::affine(3, 3), 2, 39}, Row{Geometry::projective(3, 2), 2, 15},
                            Row{Geometry::projective(3, 3), 2, 40}, Row{Geometry::affine(4, 2), 3, 30}}) {
      CAPTURE(row.g->describe());
      const auto mine = row.g->flats(row.j);
      const auto theirs = oracle::flats(*row.g, row.j);
      CHECK(mine.size() == row.count);
      CHECK(std::set<std::vector<PointIndex>>(mine.begin(), mine.end()) == theirs);
    }
  }

  TEST_CASE("join of a line and a point is a plane") {
    const auto g = Geometry::affine(3, 3);
    const auto line = g->line_through(0, 1);
    const auto plane = g->join(line, 3);
    CHECK(plane.size() == 9);
    CHECK(g->rank_of(plane) == 3);
  }

  TEST_CASE("structural equality") {
    CHECK(Geometry::affine(2, 3)->same_as(*Geometry::affine(2, 3)));
    CHECK_FALSE(Geometry::projective(2, 3)->same_as(*Geometry::projective(2, 3, Basis::SingerDescending)));
    CHECK(Geometry::projective(4, 2)->describe() == "PG(4,F_2)");
  }

  TEST_CASE("errors") {
    const auto g = Geometry::affine(2, 3);
    CHECK_THROWS_AS(g->line_through(1, 1), Error);
    CHECK_THROWS_AS(g->flats(3), Error);
    CHECK_THROWS_AS(Geometry::affine(0, 3), Error);
    CHECK_THROWS_AS(basis_from_string("sideways"), Error);
  }
}
