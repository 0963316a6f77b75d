#include <catch_amalgamated.hpp>

#include "chiralmap/map_model.hpp"

using namespace chiralmap;

TEST_CASE("map record for the {4,5} gap row", "[map]") {
  GeneratorSet g = table1_lookup({4, 5});
  auto cls = classify(g.s, g.t);
  auto ch = decide_chirality(g, cls);
  MapRecord rec = build_record(g, cls, ch);
  CHECK(rec.group_order == 360);
  CHECK(rec.vertices == 72);
  CHECK(rec.edges == 180);
  CHECK(rec.faces == 90);
  CHECK(rec.euler_characteristic == -18);
  CHECK(rec.genus == 10);
}

TEST_CASE("map record for {4,9}", "[map]") {
  GeneratorSet g = build(dispatch({4, 9}));
  auto cls = classify(g.s, g.t);
  REQUIRE(cls.order == alternating_order(10));
  auto ch = decide_chirality(g, cls);
  MapRecord rec = build_record(g, cls, ch);
  CHECK(rec.vertices == cls.order / 9);
  CHECK(rec.edges == cls.order / 2);
  CHECK(rec.faces == cls.order / 4);
  CHECK(rec.vertices - rec.edges + rec.faces == 2 - 2 * rec.genus);
  CHECK(rec.genus >= 2);
  CHECK(rec.euler_characteristic < 0);
  // n*V = |G| = m*F exactly
  CHECK(rec.vertices * 9 == rec.group_order);
  CHECK(rec.faces * 4 == rec.group_order);
}

TEST_CASE("dual records swap vertex and face counts", "[map]") {
  GeneratorSet g = table1_lookup({4, 5});
  GeneratorSet d = dualize(g);
  auto cg = classify(g.s, g.t);
  auto cd = classify(d.s, d.t);
  MapRecord rg = build_record(g, cg, decide_chirality(g, cg));
  MapRecord rd = build_record(d, cd, decide_chirality(d, cd));
  CHECK(rg.vertices == rd.faces);
  CHECK(rg.faces == rd.vertices);
  CHECK(rg.edges == rd.edges);
  CHECK(rg.euler_characteristic == rd.euler_characteristic);
  CHECK(rg.genus == rd.genus);
}

TEST_CASE("divisibility violations are reported", "[map]") {
  GeneratorSet g = table1_lookup({4, 5});
  auto cls = classify(g.s, g.t);
  auto ch = decide_chirality(g, cls);
  GroupClassification broken = cls;
  broken.order = 7;  // no divisor structure at all
  CHECK_THROWS_AS(build_record(g, broken, ch), DivisibilityViolation);
  broken.order_known = false;
  CHECK_THROWS_AS(build_record(g, broken, ch), DivisibilityViolation);
}

TEST_CASE("dot export structure and determinism", "[map]") {
  GeneratorSet g = table1_lookup({4, 5});
  std::string dot = export_dot(g);
  CHECK(dot == export_dot(g));  // byte-identical across runs

  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = dot.find(needle); pos != std::string::npos;
         pos = dot.find(needle, pos + 1))
      ++n;
    return n;
  };
  CHECK(count("[color=red]") == 5);              // the 5-cycle's arcs
  CHECK(count("[color=blue, dir=none]") == 2);   // t's transpositions
  CHECK(count("  \"6\";") == 1);  // the s-fixed point is declared but has no red arc
  CHECK(count("\"6\" ->") == 0);

  GeneratorSet c31 = build_c3_1(1, -1);
  dot = export_dot(c31);
  CHECK(count("[color=red]") == 7);
  CHECK(count("[color=blue, dir=none]") == 4);
  CHECK(dot.find("\"alpha\"") != std::string::npos);
  CHECK(dot.find("\"2'\"") != std::string::npos);

  // r,t-based constructions draw r's cycles
  GeneratorSet c47 = build_c4_7(10, 10);
  std::string dot47 = export_dot(c47);
  std::size_t red = 0;
  for (std::size_t pos = dot47.find("[color=red]"); pos != std::string::npos;
       pos = dot47.find("[color=red]", pos + 1))
    ++red;
  std::size_t expected = 0;
  for (const auto& c : cycle_decomposition(c47.r).cycles) expected += c.size();
  CHECK(red == expected);

  // degenerate: trivial t leaves no blue edges
  GeneratorSet toy;
  toy.s = Perm::from_cycles(std::array{std::vector<Point>{0, 1, 2}}, 3);
  toy.t = Perm(3);
  toy.r = inverse(toy.s);
  toy.degree = 3;
  toy.labels = LabelMap({"1", "2", "3"});
  toy.type = {3, 3};
  std::string toydot = export_dot(toy);
  CHECK(toydot.find("blue") == std::string::npos);
  std::size_t arcs = 0;
  for (std::size_t pos = toydot.find("[color=red]"); pos != std::string::npos;
       pos = toydot.find("[color=red]", pos + 1))
    ++arcs;
  CHECK(arcs == 3);
}
