#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "chiralmap/constructions.hpp"
#include "chiralmap/group.hpp"

using namespace chiralmap;

namespace {

Perm cyc(std::initializer_list<std::initializer_list<Point>> cycles, Point degree) {
  std::vector<std::vector<Point>> cs;
  for (auto& c : cycles) cs.emplace_back(c);
  return Perm::from_cycles(cs, degree);
}

Perm random_perm(std::mt19937_64& rng, Point degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point i = degree; i > 1; --i) {
    std::uniform_int_distribution<Point> d(0, i - 1);
    std::swap(img[i - 1], img[d(rng)]);
  }
  return Perm::from_images(std::move(img));
}

// Test-only oracle: enumerate every partition of {0..k-1} into blocks of
// equal size d and check invariance directly.
bool brute_force_primitive(const std::vector<Perm>& gens, Point k) {
  for (Point d = 2; d < k; ++d) {
    if (k % d != 0) continue;
    std::vector<int> block(k, -1);
    // recursively assign points to blocks of size d
    auto invariant = [&]() {
      for (const Perm& g : gens) {
        std::vector<int> image(k / d, -1);
        for (Point x = 0; x < k; ++x) {
          int b = block[x], ib = block[g(x)];
          if (image[b] == -1) image[b] = ib;
          else if (image[b] != ib) return false;
        }
      }
      return true;
    };
    std::vector<std::vector<Point>> blocks;
    std::function<bool(Point)> rec = [&](Point next) -> bool {
      while (next < k && block[next] != -1) ++next;
      if (next == k) return invariant();
      // open a new block seeded with `next`, then choose its other members
      std::vector<Point> rest;
      for (Point x = next + 1; x < k; ++x)
        if (block[x] == -1) rest.push_back(x);
      std::vector<Point> chosen;
      std::function<bool(std::size_t)> pick = [&](std::size_t from) -> bool {
        if (chosen.size() == d - 1) {
          int id = static_cast<int>(blocks.size());
          block[next] = id;
          for (Point x : chosen) block[x] = id;
          blocks.push_back(chosen);
          if (rec(next + 1)) return true;
          blocks.pop_back();
          block[next] = -1;
          for (Point x : chosen) block[x] = -1;
          return false;
        }
        for (std::size_t j = from; j < rest.size(); ++j) {
          chosen.push_back(rest[j]);
          if (pick(j + 1)) return true;
          chosen.pop_back();
        }
        return false;
      };
      return pick(0);
    };
    if (rec(0)) return false;  // found a nontrivial invariant partition
  }
  return true;
}

}  // namespace

TEST_CASE("orbits", "[group]") {
  std::vector<Perm> id{Perm(3)};
  auto orbs = orbits(id);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<Point>{0});

  std::vector<Perm> swap01{cyc({{0, 1}}, 4)};
  orbs = orbits(swap01);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<Point>{0, 1});
  CHECK(orbs[1] == std::vector<Point>{2});

  for (int i : {-1, 1}) {
    GeneratorSet g = build_c3_5(1, i);
    std::vector<Perm> gens{g.s, g.t};
    CHECK(orbits(gens).size() == 1);
  }
}

TEST_CASE("primitivity", "[group]") {
  std::vector<Perm> c5{cyc({{0, 1, 2, 3, 4}}, 5)};
  CHECK(is_primitive(c5).primitive);

  std::vector<Perm> c4{cyc({{0, 1, 2, 3}}, 4)};
  auto res = is_primitive(c4);
  REQUIRE_FALSE(res.primitive);
  REQUIRE(res.witness);
  CHECK(res.witness->num_blocks == 2);
  CHECK(res.witness->block_of == std::vector<unsigned>{0, 1, 0, 1});  // {0,2},{1,3}
  CHECK(block_system_is_invariant(c4, *res.witness));

  GeneratorSet g = build_c4_5(1, -1);
  std::vector<Perm> gens{g.s, g.t};
  CHECK(is_primitive(gens).primitive);

  std::vector<Perm> split{cyc({{0, 1}}, 4)};
  CHECK_THROWS_AS(is_primitive(split), NotTransitive);

  std::vector<Perm> mixed{Perm(4), Perm(5)};
  CHECK_THROWS_AS(orbits(mixed), DegreeMismatch);
}

TEST_CASE("primitivity agrees with brute-force partition search", "[group][prop]") {
  std::mt19937_64 rng(97);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Point k = 4 + static_cast<Point>(rng() % 5);  // 4..8
    std::vector<Perm> gens{random_perm(rng, k), random_perm(rng, k)};
    if (!is_transitive(gens)) continue;
    ++checked;
    auto res = is_primitive(gens);
    CHECK(res.primitive == brute_force_primitive(gens, k));
    if (res.witness) CHECK(block_system_is_invariant(gens, *res.witness));
  }
  CHECK(checked > 100);
}

TEST_CASE("group order", "[group]") {
  std::vector<Perm> c5{cyc({{0, 1, 2, 3, 4}}, 5)};
  CHECK(group_order(c5) == 5);

  GeneratorSet t45 = table1_lookup({4, 5});
  std::vector<Perm> gens{t45.s, t45.t};
  CHECK(group_order(gens) == 360);

  GeneratorSet g49 = build_c3_1(1, 1);  // type {4,9}, degree 10
  std::vector<Perm> gens49{g49.s, g49.t};
  CHECK(group_order(gens49) == BigInt(1814400));
  CHECK(group_order(gens49) == alternating_order(10));

  std::vector<Perm> big{Perm(70)};
  CHECK_THROWS_AS(group_order(big, 64), DegreeTooLarge);
}

TEST_CASE("group order agrees with Cayley BFS enumeration", "[group][prop]") {
  std::mt19937_64 rng(1234);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    Point k = 3 + static_cast<Point>(rng() % 5);  // 3..7, so |G| <= 5040
    std::vector<Perm> gens{random_perm(rng, k), random_perm(rng, k)};
    auto elems = enumerate_elements(gens, 100000);
    REQUIRE(elems);
    CHECK(group_order(gens) == BigInt(elems->size()));
    ++checked;
  }
  CHECK(checked == 200);

  GeneratorSet t45 = table1_lookup({4, 5});
  std::vector<Perm> gens{t45.s, t45.t};
  auto elems = enumerate_elements(gens, 100000);
  REQUIRE(elems);
  CHECK(elems->size() == 360);
}

TEST_CASE("stabilizer chain membership", "[group]") {
  GeneratorSet g = table1_lookup({4, 5});
  std::vector<Perm> gens{g.s, g.t};
  StabilizerChain chain(gens, g.degree);
  CHECK(chain.contains(g.s));
  CHECK(chain.contains(compose(g.s, g.t)));
  CHECK(chain.contains(Perm(g.degree)));
  CHECK_FALSE(chain.contains(cyc({{0, 1}}, 6)));  // odd permutation
}

TEST_CASE("jordan witness search", "[group]") {
  GeneratorSet g = build_c3_1(2, -1);
  auto pool = default_word_pool(false);
  auto w = find_jordan_witness(g.s, g.t, std::nullopt, pool);
  REQUIRE(w);
  CHECK(w->word == "(s^3 t)^2");
  CHECK(w->cycle_length == 7);
  CHECK(w->fixed_count == 5);  // 4a-3
  CHECK(w->prime_length);

  GeneratorSet g35 = build_c3_5(2, 1);
  w = find_jordan_witness(g35.s, g35.t, std::nullopt, pool);
  REQUIRE(w);
  CHECK(w->word == "(s^3 t)^2");
  CHECK(w->cycle_length == 11);

  GeneratorSet g11 = build_c3_11(7, 1);
  w = find_jordan_witness(g11.s, g11.t, std::nullopt, pool);
  REQUIRE(w);
  CHECK(w->word == "s");
  CHECK(w->cycle_length == 7);
  CHECK(w->fixed_count == 3);

  // C5: every nontrivial element is a full-support cycle
  Perm c5 = cyc({{0, 1, 2, 3, 4}}, 5);
  CHECK_FALSE(find_jordan_witness(c5, Perm(5), std::nullopt, pool));
}

TEST_CASE("classification", "[group]") {
  GeneratorSet g = build_c3_3(1, 1);  // type {6,11}
  CHECK(g.type == HyperbolicType{6, 11});
  auto cls = classify(g.s, g.t);
  CHECK(cls.verdict == GroupClassification::Verdict::Alternating);
  CHECK(cls.degree == 12);
  CHECK(cls.order == alternating_order(12));

  // PSL(2,7) on 7 points: primitive but neither alternating nor symmetric
  Perm s = cyc({{0, 1, 2}, {3, 4, 5}}, 7);
  Perm t = cyc({{0, 3}, {5, 6}}, 7);
  cls = classify(s, t);
  CHECK(cls.verdict == GroupClassification::Verdict::Other);
  CHECK(cls.order == 168);
  CHECK(cls.transitive);
  CHECK(cls.primitive);
  CHECK_FALSE(cls.evidence);

  Perm swap2 = cyc({{0, 1}}, 2);
  cls = classify(swap2, swap2);
  CHECK(cls.verdict == GroupClassification::Verdict::Symmetric);
  CHECK(cls.order == 2);

  // {8,11}: the textbook word (s^3 t)^2 is an 11-cycle with a single fixed
  // point, so the wider pool or the order fallback must classify it
  GeneratorSet g811 = build_c3_5(1, 1);
  CHECK(g811.type == HyperbolicType{8, 11});
  cls = classify(g811.s, g811.t);
  CHECK(cls.verdict == GroupClassification::Verdict::Alternating);
  CHECK(cls.degree == 12);
  CHECK(cls.order == alternating_order(12));
}

TEST_CASE("classification order cross-check on small instances", "[group]") {
  // alternating verdicts agree with the exact chain order up to degree 12
  std::vector<GeneratorSet> sets;
  sets.push_back(build_c3_1(1, 1));
  sets.push_back(build_c4_1_a0(-1));
  sets.push_back(build_c4_1_a0(1));
  sets.push_back(build_c4_3_a0());
  sets.push_back(build_c3_11(7, 1));
  sets.push_back(build_c3_5(1, 1));
  sets.push_back(table1_lookup({4, 7}));
  sets.push_back(table1_lookup({10, 5}));
  for (const GeneratorSet& g : sets) {
    auto cls = classify(g.s, g.t);
    REQUIRE(cls.verdict == GroupClassification::Verdict::Alternating);
    std::vector<Perm> gens{g.s, g.t};
    CHECK(group_order(gens) == cls.order);
  }
}
