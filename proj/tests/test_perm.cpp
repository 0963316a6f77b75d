#include <catch_amalgamated.hpp>

#include <random>

#include "chiralmap/perm.hpp"

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

}  // namespace

TEST_CASE("from_cycles basics", "[perm]") {
  Perm p = cyc({{0, 1, 2, 3, 4}}, 6);
  CHECK(p(0) == 1);
  CHECK(p(4) == 0);
  CHECK(p(5) == 5);

  CHECK(Perm::from_cycles({}, 4) == Perm(4));

  Perm inv = cyc({{0, 2}, {3, 5}}, 6);
  CHECK(order(inv) == 2);
  CHECK(fixed_points(inv) == std::vector<Point>{1, 4});

  CHECK_THROWS_AS(cyc({{0, 7}}, 6), OutOfRange);
  CHECK_THROWS_AS(cyc({{0, 1}, {1, 2}}, 6), RepeatedPoint);
  CHECK_THROWS_AS(cyc({{0, 1, 0}}, 6), RepeatedPoint);
}

TEST_CASE("compose follows the right-action convention", "[perm]") {
  Perm q = cyc({{0, 1, 2}}, 4);
  CHECK(compose(Perm(4), q) == q);
  CHECK(compose(q, inverse(q)) == Perm(4));
  // apply p first, then q
  Perm p = cyc({{0, 1}}, 3);
  Perm r = cyc({{1, 2}}, 3);
  Perm pr = compose(p, r);
  CHECK(pr(0) == 2);  // 0 ->p 1 ->r 2
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), DegreeMismatch);
}

TEST_CASE("inverse and power", "[perm]") {
  CHECK(inverse(Perm(5)) == Perm(5));
  CHECK(inverse(cyc({{0, 1, 2}}, 3)) == cyc({{0, 2, 1}}, 3));
  Perm t = cyc({{0, 3}, {1, 2}}, 5);
  CHECK(inverse(t) == t);

  Perm five = cyc({{0, 1, 2, 3, 4}}, 5);
  CHECK(power(five, 0) == Perm(5));
  CHECK(power(five, 5) == Perm(5));
  CHECK(power(five, -1) == inverse(five));
  CHECK(power(five, 7) == compose(five, five));
}

TEST_CASE("cycle decomposition canonical form", "[perm]") {
  auto d = cycle_decomposition(Perm(5));
  CHECK(d.cycles.empty());
  CHECK(d.fixed_points == std::vector<Point>{0, 1, 2, 3, 4});

  Perm p = cyc({{4, 6}, {1, 3, 2}}, 7);
  d = cycle_decomposition(p);
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0] == std::vector<Point>{1, 3, 2});  // min-first, sorted by min
  CHECK(d.cycles[1] == std::vector<Point>{4, 6});
  CHECK(d.fixed_points == std::vector<Point>{0, 5});
}

TEST_CASE("parity and order", "[perm]") {
  CHECK(parity(cyc({{0, 1, 2, 3, 4}}, 5)) == Parity::Even);  // odd-length cycle
  CHECK(parity(cyc({{0, 1}}, 4)) == Parity::Odd);
  CHECK(parity(cyc({{0, 2}, {1, 3}, {4, 5}, {6, 7}}, 8)) == Parity::Even);

  CHECK(order(Perm(4)) == 1);
  CHECK(order(cyc({{0, 1, 2}, {3, 4}}, 5)) == 6);
  CHECK(order(cyc({{0, 1, 2, 3}, {4, 5}}, 6)) == 4);
}

TEST_CASE("cycle notation printing and parsing", "[perm]") {
  CHECK(to_cycle_string(Perm(4)) == "()");
  Perm p = cyc({{0, 1, 2}, {3, 4}}, 6);
  CHECK(to_cycle_string(p) == "(1,2,3)(4,5)");
  CHECK(parse_cycle_string("(1,2,3)(4,5)", 6) == p);
  CHECK(parse_cycle_string(" (1, 2 ,3) (4,5) ", 6) == p);
  CHECK(parse_cycle_string("()", 3) == Perm(3));

  CHECK_THROWS_AS(parse_cycle_string("(1,2", 4), ParseError);
  CHECK_THROWS_AS(parse_cycle_string("(0,1)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycle_string("1,2", 4), ParseError);
  CHECK_THROWS_AS(parse_cycle_string("(1,x)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycle_string("(1,9)", 4), OutOfRange);
}

TEST_CASE("randomized permutation properties", "[perm][prop]") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 1000; ++iter) {
    Point k = 2 + static_cast<Point>(rng() % 63);
    Perm p = random_perm(rng, k);
    Perm q = random_perm(rng, k);

    // decomposition round-trip
    auto d = cycle_decomposition(p);
    CHECK(Perm::from_cycles(d.cycles, k) == p);

    // parity is a homomorphism
    CHECK(parity(compose(p, q)) == (parity(p) ^ parity(q)));

    // order = lcm of cycle lengths; invariant under inverse and conjugation
    unsigned long long o = order(p);
    CHECK(power(p, static_cast<long long>(o)) == Perm(k));
    CHECK(order(inverse(p)) == o);
    CHECK(order(compose(compose(inverse(q), p), q)) == o);
  }
}
