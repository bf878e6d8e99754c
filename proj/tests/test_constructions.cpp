#include <doctest.h>

#include <set>
#include <string>

#include "bbd/conditions.hpp"
#include "bbd/connectivity.hpp"
#include "bbd/constructions.hpp"
#include "bbd/io.hpp"
#include "test_util.hpp"

using namespace bbd;
using bbd_test::random_graph;

namespace {

constexpr const char* kGoldenD8 =
    "a=4\n"
    "X0 -> Y0\n"
    "X1 -> Y1\n"
    "X2 -> Y0\n"
    "X2 -> Y1\n"
    "X2 -> Y2\n"
    "X2 -> Y3\n"
    "X3 -> Y0\n"
    "X3 -> Y1\n"
    "X3 -> Y2\n"
    "X3 -> Y3\n"
    "Y0 -> X0\n"
    "Y0 -> X1\n"
    "Y0 -> X2\n"
    "Y0 -> X3\n"
    "Y1 -> X0\n"
    "Y1 -> X1\n"
    "Y1 -> X2\n"
    "Y1 -> X3\n"
    "Y2 -> X2\n"
    "Y3 -> X3\n";

constexpr const char* kGoldenD10 =
    "a=5\n"
    "X0 -> Y0\n"
    "X1 -> Y0\n"
    "X1 -> Y1\n"
    "X1 -> Y2\n"
    "X1 -> Y3\n"
    "X1 -> Y4\n"
    "X2 -> Y0\n"
    "X2 -> Y1\n"
    "X2 -> Y2\n"
    "X2 -> Y3\n"
    "X2 -> Y4\n"
    "X3 -> Y0\n"
    "X3 -> Y1\n"
    "X3 -> Y2\n"
    "X3 -> Y3\n"
    "X3 -> Y4\n"
    "X4 -> Y4\n"
    "Y0 -> X0\n"
    "Y0 -> X1\n"
    "Y0 -> X2\n"
    "Y0 -> X3\n"
    "Y1 -> X3\n"
    "Y2 -> X1\n"
    "Y3 -> X2\n"
    "Y4 -> X1\n"
    "Y4 -> X2\n"
    "Y4 -> X3\n"
    "Y4 -> X4\n";

BipartiteDigraph relabel(const BipartiteDigraph& d, const std::vector<int>& px,
                         const std::vector<int>& py, bool swap_sides) {
  BipartiteDigraph out(d.half_order());
  for (const Arc& arc : d.arcs()) {
    auto map = [&](VertexId v) -> VertexId {
      const int idx = v.side == Side::X ? px[v.index] : py[v.index];
      const Side side = swap_sides ? opposite(v.side) : v.side;
      return {side, idx};
    };
    out.add_arc(map(arc.tail), map(arc.head));
  }
  return out;
}

}  // namespace

TEST_CASE("golden serializations of the reference digraphs") {
  CHECK(serialize(build_D8()) == kGoldenD8);
  CHECK(build_D8().arc_count() == 20);
  CHECK(serialize(build_D10()) == kGoldenD10);
  CHECK(build_D10().arc_count() == 28);
}

TEST_CASE("standard families") {
  const BipartiteDigraph cycle = directed_cycle(4);
  for (const VertexId v : cycle.vertices()) CHECK(cycle.degree(v) == 2);
  CHECK(is_strongly_connected(cycle));

  const BipartiteDigraph complete = complete_bipartite(4);
  for (const VertexId v : complete.vertices()) CHECK(complete.degree(v) == 8);
  CHECK(complete.arc_count() == 32);

  CHECK(complete_bipartite(1) == directed_cycle(1));  // both are x0 <-> y0
}

TEST_CASE("random digraph generator") {
  GeneratorConfig cfg;
  cfg.a = 4;
  cfg.seed = 99;

  SUBCASE("degenerate probabilities") {
    cfg.arc_probability = 1.0;
    CHECK(random_digraph(cfg) == complete_bipartite(4));
    cfg.arc_probability = 0.0;
    CHECK(random_digraph(cfg).arc_count() == 0);
  }

  SUBCASE("deterministic in the seed") {
    cfg.arc_probability = 0.5;
    CHECK(serialize(random_digraph(cfg)) == serialize(random_digraph(cfg)));
    GeneratorConfig other = cfg;
    other.seed = 100;
    CHECK(serialize(random_digraph(cfg)) != serialize(random_digraph(other)));
  }

  SUBCASE("probability validation") {
    cfg.arc_probability = 1.5;
    CHECK_THROWS_AS(random_digraph(cfg), std::invalid_argument);
    cfg.arc_probability = -0.1;
    CHECK_THROWS_AS(random_digraph(cfg), std::invalid_argument);
  }
}

TEST_CASE("random B_k generator") {
  SUBCASE("contract: strong and B_k on every success") {
    for (auto [a, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
      for (int i = 0; i < 15; ++i) {
        GeneratorConfig cfg;
        cfg.a = a;
        cfg.k = k;
        cfg.seed = 123 + i;
        const auto d = random_Bk_digraph(cfg);
        REQUIRE(d.has_value());
        CHECK(check_condition_Bk(*d, k).holds);
        CHECK(is_strongly_connected(*d));
      }
    }
  }

  SUBCASE("deterministic in the config") {
    GeneratorConfig cfg;
    cfg.a = 4;
    cfg.k = 2;
    cfg.seed = 5150;
    const auto d1 = random_Bk_digraph(cfg);
    const auto d2 = random_Bk_digraph(cfg);
    REQUIRE(d1.has_value());
    REQUIRE(d2.has_value());
    CHECK(serialize(*d1) == serialize(*d2));
  }

  SUBCASE("a complete sample is already B_k") {
    GeneratorConfig cfg;
    cfg.a = 4;
    cfg.k = 2;
    cfg.arc_probability = 1.0;
    const auto d = random_Bk_digraph(cfg);
    REQUIRE(d.has_value());
    CHECK(*d == complete_bipartite(4));
  }

  SUBCASE("range validation") {
    GeneratorConfig cfg;
    cfg.a = 3;
    cfg.k = 2;
    CHECK_THROWS_AS(random_Bk_digraph(cfg), std::invalid_argument);
    cfg.a = 4;
    cfg.k = 1;
    CHECK_THROWS_AS(random_Bk_digraph(cfg), std::invalid_argument);
    cfg.k = 3;  // floor(4/2) = 2
    CHECK_THROWS_AS(random_Bk_digraph(cfg), std::invalid_argument);
    cfg.a = 5;
    cfg.k = 3;  // floor(5/2) = 2
    CHECK_THROWS_AS(random_Bk_digraph(cfg), std::invalid_argument);
  }
}

TEST_CASE("isomorphism") {
  const BipartiteDigraph d8 = build_D8();

  SUBCASE("relabeling invariance") {
    CHECK(is_isomorphic(d8, relabel(d8, {1, 0, 2, 3}, {1, 0, 2, 3}, false)));
    CHECK(is_isomorphic(d8, relabel(d8, {3, 2, 1, 0}, {0, 2, 1, 3}, false)));
    CHECK(is_isomorphic(d8, relabel(d8, {1, 0, 3, 2}, {2, 3, 0, 1}, true)));
  }

  SUBCASE("reflexive and symmetric") {
    CHECK(is_isomorphic(d8, d8));
    CHECK(is_isomorphic(build_D10(), build_D10()));
    const BipartiteDigraph r = relabel(d8, {2, 0, 3, 1}, {1, 3, 0, 2}, false);
    CHECK(is_isomorphic(d8, r));
    CHECK(is_isomorphic(r, d8));
  }

  SUBCASE("negatives") {
    CHECK_FALSE(is_isomorphic(d8, complete_bipartite(4)));  // 20 vs 32 arcs
    CHECK_FALSE(is_isomorphic(directed_cycle(4), d8));
    BipartiteDigraph near = d8;
    near.remove_arc(vx(2), vy(3));
    near.add_arc(vy(3), vx(2));
    CHECK_FALSE(is_isomorphic(d8, near));
  }

  SUBCASE("side swap is required for some pairs") {
    BipartiteDigraph lhs(1), rhs(1);
    lhs.add_arc(vx(0), vy(0));
    rhs.add_arc(vy(0), vx(0));
    CHECK(is_isomorphic(lhs, rhs));
    BipartiteDigraph bigger(2), swapped(2);
    bigger.add_arc(vx(0), vy(0));
    bigger.add_arc(vx(0), vy(1));
    swapped.add_arc(vy(1), vx(0));
    swapped.add_arc(vy(1), vx(1));
    CHECK(is_isomorphic(bigger, swapped));
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(is_isomorphic(BipartiteDigraph(2), BipartiteDigraph(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_isomorphic(BipartiteDigraph(7), BipartiteDigraph(7)),
                    std::invalid_argument);
  }
}

TEST_CASE("enumerate_Bk") {
  SUBCASE("stream contract and determinism") {
    std::vector<std::string> first_run;
    const EnumerationStats stats =
        enumerate_Bk(4, 2, 30000, DedupMode::None, [&](const BipartiteDigraph& d) {
          CHECK(check_condition_Bk(d, 2).holds);
          CHECK(is_strongly_connected(d));
          first_run.push_back(serialize(d));
          return true;
        });
    CHECK(stats.nodes_explored == 30000 + 1);
    CHECK_FALSE(stats.complete);  // 2^32 raw space, tiny budget
    CHECK(stats.emitted == static_cast<long long>(first_run.size()));
    REQUIRE(!first_run.empty());
    // include-first order reaches the complete digraph at the first leaf
    CHECK(first_run.front() == serialize(complete_bipartite(4)));

    std::vector<std::string> second_run;
    enumerate_Bk(4, 2, 30000, DedupMode::None, [&](const BipartiteDigraph& d) {
      second_run.push_back(serialize(d));
      return true;
    });
    CHECK(first_run == second_run);
  }

  SUBCASE("dedup modes only remove digraphs") {
    long long none = 0, degree = 0, iso = 0;
    enumerate_Bk(4, 2, 20000, DedupMode::None, [&](const BipartiteDigraph&) {
      ++none;
      return true;
    });
    enumerate_Bk(4, 2, 20000, DedupMode::DegreeHash, [&](const BipartiteDigraph&) {
      ++degree;
      return true;
    });
    enumerate_Bk(4, 2, 20000, DedupMode::Isomorphism, [&](const BipartiteDigraph&) {
      ++iso;
      return true;
    });
    CHECK(none >= iso);
    CHECK(iso >= degree);  // degree hashing may merge non-isomorphic digraphs
    CHECK(degree >= 1);
  }

  SUBCASE("early stop reports an incomplete stream") {
    const EnumerationStats stats =
        enumerate_Bk(4, 2, 1000000, DedupMode::None,
                     [&](const BipartiteDigraph&) { return false; });
    CHECK(stats.emitted == 1);
    CHECK_FALSE(stats.complete);
  }

  SUBCASE("preconditions") {
    const auto sink = [](const BipartiteDigraph&) { return true; };
    CHECK_THROWS_AS(enumerate_Bk(3, 2, 100, DedupMode::None, sink),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_Bk(6, 2, 100, DedupMode::None, sink),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_Bk(4, 2, 0, DedupMode::None, sink),
                    std::invalid_argument);
  }
}
