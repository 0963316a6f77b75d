#pragma once

// The permutation constructions for hyperbolic types {m,n} with at least one
// even parameter, the gap-filling table, duality, and the type dispatcher.
//
// Labels follow the diagrams: numbered points first, then their primes, then
// Greek letters in order of first appearance, then Greek primes (subscripted
// families are laid out in diagram path order). A primed label x' is always
// the image of x under t.

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace chiralmap {

struct HyperbolicType {
  unsigned m = 0;  // face length
  unsigned n = 0;  // vertex valency

  // 1/m + 1/n < 1/2, integer-exact.
  bool is_hyperbolic() const {
    return m >= 3 && n >= 3 && (m - 2) * (n - 2) > 4;
  }
  HyperbolicType dual() const { return {n, m}; }

  bool operator==(const HyperbolicType&) const = default;
};

enum class ConstructionId {
  C3_1, C3_3, C3_5, C3_7, C3_9, C3_11, C3_13, C3_15,
  C4_1, C4_1_a0, C4_3, C4_3_a0, C4_5, C4_7,
  TABLE1,
};

inline const char* to_string(ConstructionId id) {
  switch (id) {
    case ConstructionId::C3_1: return "C3_1";
    case ConstructionId::C3_3: return "C3_3";
    case ConstructionId::C3_5: return "C3_5";
    case ConstructionId::C3_7: return "C3_7";
    case ConstructionId::C3_9: return "C3_9";
    case ConstructionId::C3_11: return "C3_11";
    case ConstructionId::C3_13: return "C3_13";
    case ConstructionId::C3_15: return "C3_15";
    case ConstructionId::C4_1: return "C4_1";
    case ConstructionId::C4_1_a0: return "C4_1_a0";
    case ConstructionId::C4_3: return "C4_3";
    case ConstructionId::C4_3_a0: return "C4_3_a0";
    case ConstructionId::C4_5: return "C4_5";
    case ConstructionId::C4_7: return "C4_7";
    case ConstructionId::TABLE1: return "TABLE1";
  }
  return "?";
}

inline std::optional<ConstructionId> construction_id_from_string(const std::string& s) {
  static const std::unordered_map<std::string, ConstructionId> map = {
      {"C3_1", ConstructionId::C3_1},   {"C3_3", ConstructionId::C3_3},
      {"C3_5", ConstructionId::C3_5},   {"C3_7", ConstructionId::C3_7},
      {"C3_9", ConstructionId::C3_9},   {"C3_11", ConstructionId::C3_11},
      {"C3_13", ConstructionId::C3_13}, {"C3_15", ConstructionId::C3_15},
      {"C4_1", ConstructionId::C4_1},   {"C4_1_a0", ConstructionId::C4_1_a0},
      {"C4_3", ConstructionId::C4_3},   {"C4_3_a0", ConstructionId::C4_3_a0},
      {"C4_5", ConstructionId::C4_5},   {"C4_7", ConstructionId::C4_7},
      {"TABLE1", ConstructionId::TABLE1},
  };
  auto it = map.find(s);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

class LabelMap {
public:
  LabelMap() = default;
  explicit LabelMap(std::vector<std::string> names) : names_(std::move(names)) {
    for (Point x = 0; x < names_.size(); ++x) {
      if (!index_.emplace(names_[x], x).second)
        throw BadParams("duplicate label '" + names_[x] + "'");
    }
  }

  Point point(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw OutOfRange("no point labelled '" + name + "'");
    return it->second;
  }
  const std::string& label(Point x) const { return names_.at(x); }
  bool has(const std::string& name) const { return index_.count(name) != 0; }
  Point degree() const { return static_cast<Point>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const LabelMap& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Point> index_;
};

struct ConstructionParams {
  ConstructionId id = ConstructionId::TABLE1;
  unsigned a = 0;
  int i = 0;
  unsigned nu = 0;
  bool dualized = false;

  bool operator==(const ConstructionParams&) const = default;
};

struct GeneratorSet {
  Perm s;  // vertex rotation, order n
  Perm t;  // involution
  Perm r;  // face rotation, r = (st)^-1
  Point degree = 0;
  LabelMap labels;
  HyperbolicType type;
  ConstructionParams params;
  bool diagram_uses_r = false;  // diagrams of r,t-based constructions draw r
};

namespace detail {

inline std::string num(unsigned j) { return std::to_string(j); }
inline std::string primed(const std::string& base) { return base + "'"; }
inline std::string primed(unsigned j) { return std::to_string(j) + "'"; }

class DiagramBuilder {
public:
  void add_label(const std::string& name) { names_.push_back(name); }
  void add_numbered(unsigned from, unsigned to, bool primes) {
    for (unsigned j = from; j <= to; ++j) names_.push_back(num(j));
    if (primes)
      for (unsigned j = from; j <= to; ++j) names_.push_back(primed(j));
  }

  std::vector<Point> cycle(const std::vector<std::string>& labels) const {
    std::vector<Point> c;
    c.reserve(labels.size());
    for (const auto& l : labels) c.push_back(point(l));
    return c;
  }

  Point point(const std::string& name) const {
    for (Point x = 0; x < names_.size(); ++x)
      if (names_[x] == name) return x;
    throw BadParams("construction references unknown label '" + name + "'");
  }

  LabelMap freeze() const { return LabelMap(names_); }
  Point degree() const { return static_cast<Point>(names_.size()); }

private:
  std::vector<std::string> names_;
};

// Descending primed run 2a', 2a-1', ..., 1'.
inline void append_primes_desc(std::vector<std::string>& cyc, unsigned top) {
  for (unsigned j = top; j >= 1; --j) cyc.push_back(primed(j));
}

inline GeneratorSet make_generator_set(Perm s, Perm t, HyperbolicType type, LabelMap labels,
                                       ConstructionParams params, bool diagram_uses_r) {
  GeneratorSet g;
  g.degree = s.degree();
  g.r = inverse(compose(s, t));
  g.s = std::move(s);
  g.t = std::move(t);
  g.labels = std::move(labels);
  g.type = type;
  g.params = params;
  g.diagram_uses_r = diagram_uses_r;
  if (order(g.s) != type.n)
    throw BadParams("construction broke order(s) = n for type {" + std::to_string(type.m) +
                    "," + std::to_string(type.n) + "}");
  if (order(g.t) != 2) throw BadParams("construction broke order(t) = 2");
  if (order(compose(g.s, g.t)) != type.m) throw BadParams("construction broke order(st) = m");
  if (parity(g.s) != Parity::Even || parity(g.t) != Parity::Even)
    throw BadParams("construction produced an odd generator");
  return g;
}

inline void require(bool cond, const char* what) {
  if (!cond) throw BadParams(what);
}

}  // namespace detail

// --- m = 4, odd n = 4a+4+i ---------------------------------------------------
inline GeneratorSet build_c3_1(unsigned a, int i) {
  detail::require(a >= 1 && (i == 1 || i == -1), "C3_1 needs a >= 1, i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(4 * a + 4) + i);
  detail::DiagramBuilder d;
  d.add_numbered(1, 2 * a, true);
  d.add_label("alpha");
  d.add_label("beta");
  if (i == 1) {
    d.add_label("gamma");
    d.add_label("delta");
  }
  d.add_label("alpha'");
  d.add_label("beta'");

  std::vector<std::vector<Point>> tc{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"})};
  for (unsigned j = 1; j <= 2 * a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  std::vector<std::string> sc;
  for (unsigned j = 1; j <= 2 * a; ++j) sc.push_back(detail::num(j));
  if (i == -1) {
    sc.insert(sc.end(), {"alpha", "alpha'", "beta"});
    detail::append_primes_desc(sc, 2 * a);
  } else {
    sc.insert(sc.end(), {"alpha", "beta", "gamma", "alpha'"});
    detail::append_primes_desc(sc, 2 * a);
    sc.push_back("delta");
  }
  Perm s = Perm::from_cycles(std::array{d.cycle(sc)}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {4, n}, d.freeze(),
                                    {ConstructionId::C3_1, a, i, 0, false}, false);
}

// --- m = 6, odd n = 4a+6+i ---------------------------------------------------
inline GeneratorSet build_c3_3(unsigned a, int i) {
  detail::require(a >= 1 && (i == 1 || i == -1), "C3_3 needs a >= 1, i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(4 * a + 6) + i);
  detail::DiagramBuilder d;
  d.add_numbered(1, 2 * a, true);
  if (i == -1)
    for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon", "alpha'", "beta'"})
      d.add_label(l);
  else
    for (const char* l :
         {"alpha", "beta", "gamma", "delta", "alpha'", "beta'", "gamma'", "delta'"})
      d.add_label(l);

  std::vector<std::vector<Point>> tc{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"})};
  if (i == 1) {
    tc.push_back(d.cycle({"gamma", "gamma'"}));
    tc.push_back(d.cycle({"delta", "delta'"}));
  }
  for (unsigned j = 1; j <= 2 * a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  std::vector<std::string> sc;
  for (unsigned j = 1; j <= 2 * a; ++j) sc.push_back(detail::num(j));
  if (i == -1) {
    sc.insert(sc.end(), {"alpha", "beta", "gamma"});
    detail::append_primes_desc(sc, 2 * a);
    sc.insert(sc.end(), {"delta", "epsilon"});
  } else {
    sc.insert(sc.end(), {"alpha", "beta", "beta'", "gamma", "delta", "gamma'", "alpha'"});
    detail::append_primes_desc(sc, 2 * a);
  }
  Perm s = Perm::from_cycles(std::array{d.cycle(sc)}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {6, n}, d.freeze(),
                                    {ConstructionId::C3_3, a, i, 0, false}, false);
}

// --- m = 8, odd n = 4a+6+i ---------------------------------------------------
inline GeneratorSet build_c3_5(unsigned a, int i) {
  detail::require(a >= 1 && (i == 1 || i == -1), "C3_5 needs a >= 1, i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(4 * a + 6) + i);
  detail::DiagramBuilder d;
  d.add_numbered(1, 2 * a, true);
  for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon"}) d.add_label(l);
  if (i == 1) d.add_label("zeta");
  d.add_label("alpha'");
  d.add_label("beta'");

  std::vector<std::vector<Point>> tc{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"})};
  for (unsigned j = 1; j <= 2 * a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  std::vector<std::string> sc;
  for (unsigned j = 1; j <= 2 * a; ++j) sc.push_back(detail::num(j));
  if (i == -1)
    sc.insert(sc.end(), {"alpha", "beta", "gamma", "delta", "epsilon"});
  else
    sc.insert(sc.end(), {"alpha", "alpha'", "beta", "gamma", "delta", "epsilon", "zeta"});
  detail::append_primes_desc(sc, 2 * a);
  Perm s = Perm::from_cycles(std::array{d.cycle(sc)}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {8, n}, d.freeze(),
                                    {ConstructionId::C3_5, a, i, 0, false}, false);
}

// --- even m >= 10, odd n = m+4a+i; defined through r and t -------------------
inline GeneratorSet build_c3_7(unsigned m, unsigned a, int i) {
  detail::require(m >= 10 && m % 2 == 0 && (i == 1 || i == -1),
                  "C3_7 needs even m >= 10, i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(m + 4 * a) + i);
  detail::DiagramBuilder d;
  d.add_numbered(1, m, false);
  d.add_label("1'");
  d.add_label(detail::primed(m));
  for (unsigned j = 1; j <= a; ++j) {
    d.add_label("alpha_" + detail::num(j));
    d.add_label("alpha_" + detail::num(j) + "'");
    d.add_label("beta_" + detail::num(j));
    d.add_label("beta_" + detail::num(j) + "'");
  }
  d.add_label("alpha_" + detail::num(a + 1));
  if (i == 1) d.add_label("alpha_" + detail::num(a + 1) + "'");

  std::vector<std::vector<Point>> rc;
  {
    std::vector<std::string> main;
    for (unsigned j = 1; j <= m; ++j) main.push_back(detail::num(j));
    rc.push_back(d.cycle(main));
    rc.push_back(d.cycle({"1'", "alpha_1"}));
    for (unsigned j = 1; j <= a; ++j) {
      rc.push_back(d.cycle({"alpha_" + detail::num(j) + "'", "beta_" + detail::num(j)}));
      rc.push_back(d.cycle({"beta_" + detail::num(j) + "'", "alpha_" + detail::num(j + 1)}));
    }
  }
  Perm r = Perm::from_cycles(rc, d.degree());

  std::vector<std::vector<Point>> tc{d.cycle({"1", "1'"}), d.cycle({"2", "3"}),
                                     d.cycle({"4", "5"}), d.cycle({"6", "7"}),
                                     d.cycle({detail::num(m), detail::primed(m)})};
  for (unsigned j = 1; j <= a; ++j) {
    tc.push_back(d.cycle({"alpha_" + detail::num(j), "alpha_" + detail::num(j) + "'"}));
    tc.push_back(d.cycle({"beta_" + detail::num(j), "beta_" + detail::num(j) + "'"}));
  }
  if (i == -1)
    tc.push_back(d.cycle({"8", "9"}));
  else
    tc.push_back(d.cycle({"alpha_" + detail::num(a + 1), "alpha_" + detail::num(a + 1) + "'"}));
  Perm t = Perm::from_cycles(tc, d.degree());

  Perm s = compose(inverse(r), t);  // t = rs
  return detail::make_generator_set(std::move(s), std::move(t), {m, n}, d.freeze(),
                                    {ConstructionId::C3_7, a, i, 0, false}, true);
}

// --- n = 5, even m with m+6 = 5*nu + a, nu >= 4 -------------------------------
inline GeneratorSet build_c3_9(unsigned m) {
  detail::require(m % 2 == 0 && m >= 14, "C3_9 needs even m >= 14");
  const unsigned nu = (m + 6) / 5;
  const unsigned a = (m + 6) % 5;
  detail::require(nu >= 4, "C3_9 needs nu >= 4");
  detail::DiagramBuilder d;
  d.add_numbered(1, 5 * nu, false);
  for (unsigned x = 5 * nu + 1 - a; x <= 5 * nu; ++x) d.add_label(detail::primed(x));

  std::vector<std::vector<Point>> sc;
  for (unsigned c = 0; c < nu; ++c) {
    std::vector<std::string> cyc;
    for (unsigned q = 1; q <= 5; ++q) cyc.push_back(detail::num(5 * c + q));
    sc.push_back(d.cycle(cyc));
  }
  Perm s = Perm::from_cycles(sc, d.degree());

  std::vector<std::vector<Point>> tc{d.cycle({"2", "4"}), d.cycle({"7", "9"}),
                                     d.cycle({"12", "14"})};
  for (unsigned j = 1; j <= a; ++j)
    tc.push_back(d.cycle({detail::num(5 * nu + 1 - j), detail::primed(5 * nu + 1 - j)}));
  for (unsigned c = 1; c < nu; ++c) tc.push_back(d.cycle({detail::num(5 * c), detail::num(5 * c + 1)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  return detail::make_generator_set(std::move(s), std::move(t), {m, 5}, d.freeze(),
                                    {ConstructionId::C3_9, a, 0, nu, false}, false);
}

// --- odd n >= 7, even m = n+a with 1 <= a <= n-6 ------------------------------
inline GeneratorSet build_c3_11(unsigned n, unsigned a) {
  detail::require(n % 2 == 1 && n >= 7 && a >= 1 && a <= n - 6 && (n + a) % 2 == 0,
                  "C3_11 needs odd n >= 7, 1 <= a <= n-6, n+a even");
  const unsigned m = n + a;
  detail::DiagramBuilder d;
  d.add_numbered(1, n, false);
  for (unsigned j = 4; j <= 5 + a; ++j) d.add_label(detail::primed(j));

  std::vector<std::string> main;
  for (unsigned j = 1; j <= n; ++j) main.push_back(detail::num(j));
  Perm s = Perm::from_cycles(std::array{d.cycle(main)}, d.degree());

  std::vector<std::vector<Point>> tc{d.cycle({"1", "3"})};
  for (unsigned j = 4; j <= 5 + a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  return detail::make_generator_set(std::move(s), std::move(t), {m, n}, d.freeze(),
                                    {ConstructionId::C3_11, a, 0, 0, false}, false);
}

// --- odd n >= 11, even m with m+6 = nu*n + a, nu >= 2 --------------------------
inline GeneratorSet build_c3_13(unsigned n, unsigned m) {
  detail::require(n % 2 == 1 && n >= 11 && m % 2 == 0, "C3_13 needs odd n >= 11, even m");
  const unsigned nu = (m + 6) / n;
  const unsigned a = (m + 6) % n;
  detail::require(nu >= 2, "C3_13 needs nu >= 2");
  detail::DiagramBuilder d;
  d.add_numbered(1, nu * n, false);
  for (unsigned j = 1; j <= a; ++j) d.add_label(detail::primed(j));

  std::vector<std::vector<Point>> sc;
  for (unsigned c = 0; c < nu; ++c) {
    std::vector<std::string> cyc;
    for (unsigned q = 1; q <= n; ++q) cyc.push_back(detail::num(c * n + q));
    sc.push_back(d.cycle(cyc));
  }
  Perm s = Perm::from_cycles(sc, d.degree());

  std::vector<std::vector<Point>> tc{d.cycle({detail::num(n + 2), detail::num(n + 4)}),
                                     d.cycle({detail::num(n + 5), detail::num(n + 7)}),
                                     d.cycle({detail::num(n + 8), detail::num(n + 10)})};
  for (unsigned j = 1; j <= a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  for (unsigned c = 1; c < nu; ++c) tc.push_back(d.cycle({detail::num(c * n), detail::num(c * n + 1)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  return detail::make_generator_set(std::move(s), std::move(t), {m, n}, d.freeze(),
                                    {ConstructionId::C3_13, a, 0, nu, false}, false);
}

// --- n in {7,9}, even m with m+6 = nu*n + a, nu >= 3 ---------------------------
inline GeneratorSet build_c3_15(unsigned n, unsigned m) {
  detail::require((n == 7 || n == 9) && m % 2 == 0, "C3_15 needs n in {7,9}, even m");
  const unsigned nu = (m + 6) / n;
  const unsigned a = (m + 6) % n;
  detail::require(nu >= 3, "C3_15 needs nu >= 3");
  detail::DiagramBuilder d;
  d.add_numbered(1, nu * n, false);
  for (unsigned x = nu * n + 1 - a; x <= nu * n; ++x) d.add_label(detail::primed(x));

  std::vector<std::vector<Point>> sc;
  for (unsigned c = 0; c < nu; ++c) {
    std::vector<std::string> cyc;
    for (unsigned q = 1; q <= n; ++q) cyc.push_back(detail::num(c * n + q));
    sc.push_back(d.cycle(cyc));
  }
  Perm s = Perm::from_cycles(sc, d.degree());

  std::vector<std::vector<Point>> tc{d.cycle({"1", "3"}), d.cycle({"4", "6"}),
                                     d.cycle({detail::num(n + 2), detail::num(n + 4)})};
  for (unsigned c = 1; c < nu; ++c) tc.push_back(d.cycle({detail::num(c * n), detail::num(c * n + 1)}));
  for (unsigned j = 1; j <= a; ++j)
    tc.push_back(d.cycle({detail::num(nu * n + 1 - j), detail::primed(nu * n + 1 - j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  return detail::make_generator_set(std::move(s), std::move(t), {m, n}, d.freeze(),
                                    {ConstructionId::C3_15, a, 0, nu, false}, false);
}

// --- m = 4, even n = 4a+7+i --------------------------------------------------
inline GeneratorSet build_c4_1(unsigned a, int i) {
  detail::require(a >= 1 && (i == 1 || i == -1), "C4_1 needs a >= 1, i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(4 * a + 7) + i);
  detail::DiagramBuilder d;
  d.add_numbered(1, 2 * a, true);
  for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon"}) d.add_label(l);
  if (i == 1) d.add_label("zeta");
  for (const char* l : {"alpha'", "beta'", "gamma'", "delta'"}) d.add_label(l);

  std::vector<std::vector<Point>> tc{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"}),
                                     d.cycle({"gamma", "gamma'"}), d.cycle({"delta", "delta'"})};
  for (unsigned j = 1; j <= 2 * a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  std::vector<std::string> sc;
  for (unsigned j = 1; j <= 2 * a; ++j) sc.push_back(detail::num(j));
  if (i == -1)
    sc.insert(sc.end(), {"alpha", "alpha'", "beta"});
  else
    sc.insert(sc.end(), {"alpha", "alpha'", "beta", "beta'", "zeta"});
  detail::append_primes_desc(sc, 2 * a);
  sc.insert(sc.end(), {"gamma", "delta", "gamma'"});
  Perm s =
      Perm::from_cycles(std::array{d.cycle(sc), d.cycle({"delta'", "epsilon"})}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {4, n}, d.freeze(),
                                    {ConstructionId::C4_1, a, i, 0, false}, false);
}

// a = 0 extension: drop the numbered points; n = 6 (i=-1) or 8 (i=1).
inline GeneratorSet build_c4_1_a0(int i) {
  detail::require(i == 1 || i == -1, "C4_1_a0 needs i in {-1,1}");
  const unsigned n = i == -1 ? 6 : 8;
  detail::DiagramBuilder d;
  for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon"}) d.add_label(l);
  if (i == 1) d.add_label("zeta");
  for (const char* l : {"alpha'", "beta'", "gamma'", "delta'"}) d.add_label(l);

  Perm t = Perm::from_cycles(
      std::array{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"}),
                 d.cycle({"gamma", "gamma'"}), d.cycle({"delta", "delta'"})},
      d.degree());
  std::vector<std::string> sc =
      i == -1 ? std::vector<std::string>{"alpha", "alpha'", "beta", "gamma", "delta", "gamma'"}
              : std::vector<std::string>{"alpha", "alpha'", "beta", "beta'",
                                         "zeta",  "gamma",  "delta", "gamma'"};
  Perm s =
      Perm::from_cycles(std::array{d.cycle(sc), d.cycle({"delta'", "epsilon"})}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {4, n}, d.freeze(),
                                    {ConstructionId::C4_1_a0, 0, i, 0, false}, false);
}

// --- m = 6, even n = 4a+7+i --------------------------------------------------
inline GeneratorSet build_c4_3(unsigned a, int i) {
  detail::require(a >= 1 && (i == 1 || i == -1), "C4_3 needs a >= 1, i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(4 * a + 7) + i);
  detail::DiagramBuilder d;
  d.add_numbered(1, 2 * a, true);
  for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon"}) d.add_label(l);
  if (i == 1) d.add_label("zeta");
  for (const char* l : {"alpha'", "beta'", "gamma'", "delta'"}) d.add_label(l);

  std::vector<std::vector<Point>> tc{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"}),
                                     d.cycle({"gamma", "gamma'"}), d.cycle({"delta", "delta'"})};
  for (unsigned j = 1; j <= 2 * a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  Perm t = Perm::from_cycles(tc, d.degree());

  std::vector<std::string> sc;
  for (unsigned j = 1; j <= 2 * a; ++j) sc.push_back(detail::num(j));
  std::vector<Point> extra;
  if (i == -1) {
    sc.insert(sc.end(), {"alpha", "alpha'", "beta"});
    detail::append_primes_desc(sc, 2 * a);
    sc.insert(sc.end(), {"delta", "epsilon", "delta'"});
    extra = d.cycle({"beta'", "gamma"});
  } else {
    sc.insert(sc.end(), {"alpha", "alpha'", "beta", "beta'", "gamma"});
    detail::append_primes_desc(sc, 2 * a);
    sc.insert(sc.end(), {"delta", "epsilon", "delta'"});
    extra = d.cycle({"gamma'", "zeta"});
  }
  Perm s = Perm::from_cycles(std::array{d.cycle(sc), extra}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {6, n}, d.freeze(),
                                    {ConstructionId::C4_3, a, i, 0, false}, false);
}

// a = 0, i = 1 extension: type {6,8}.
inline GeneratorSet build_c4_3_a0() {
  detail::DiagramBuilder d;
  for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "alpha'",
                        "beta'", "gamma'", "delta'"})
    d.add_label(l);
  Perm t = Perm::from_cycles(
      std::array{d.cycle({"alpha", "alpha'"}), d.cycle({"beta", "beta'"}),
                 d.cycle({"gamma", "gamma'"}), d.cycle({"delta", "delta'"})},
      d.degree());
  Perm s = Perm::from_cycles(
      std::array{
          d.cycle({"alpha", "alpha'", "beta", "beta'", "gamma", "delta", "epsilon", "delta'"}),
          d.cycle({"gamma'", "zeta"})},
      d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {6, 8}, d.freeze(),
                                    {ConstructionId::C4_3_a0, 0, 1, 0, false}, false);
}

// --- m = 8, even n = 4a+7+i >= 8 ----------------------------------------------
inline GeneratorSet build_c4_5(unsigned a, int i) {
  detail::require(i == 1 || i == -1, "C4_5 needs i in {-1,1}");
  const unsigned n = static_cast<unsigned>(static_cast<int>(4 * a + 7) + i);
  detail::require(n >= 8, "C4_5 needs n >= 8");
  detail::DiagramBuilder d;
  d.add_numbered(1, 2 * a, true);
  for (const char* l : {"alpha", "beta", "gamma", "delta", "epsilon", "zeta"}) d.add_label(l);
  if (i == 1) d.add_label("eta");
  for (const char* l : {"alpha'", "beta'", "gamma'", "delta'"}) d.add_label(l);

  std::vector<std::vector<Point>> tc;
  for (unsigned j = 1; j <= 2 * a; ++j) tc.push_back(d.cycle({detail::num(j), detail::primed(j)}));
  for (const char* p : {"alpha", "beta", "gamma", "delta"})
    tc.push_back(d.cycle({p, std::string(p) + "'"}));
  Perm t = Perm::from_cycles(tc, d.degree());

  std::vector<std::string> sc;
  for (unsigned j = 1; j <= 2 * a; ++j) sc.push_back(detail::num(j));
  std::vector<Point> extra;
  if (i == -1) {
    sc.insert(sc.end(), {"alpha", "gamma", "epsilon"});
    detail::append_primes_desc(sc, 2 * a);
    sc.insert(sc.end(), {"delta", "zeta", "delta'"});
    extra = d.cycle({"alpha'", "beta"});
  } else {
    sc.insert(sc.end(), {"alpha", "beta", "gamma", "gamma'", "epsilon"});
    detail::append_primes_desc(sc, 2 * a);
    sc.insert(sc.end(), {"delta", "zeta", "delta'"});
    extra = d.cycle({"alpha'", "eta"});
  }
  Perm s = Perm::from_cycles(std::array{d.cycle(sc), extra}, d.degree());
  return detail::make_generator_set(std::move(s), std::move(t), {8, n}, d.freeze(),
                                    {ConstructionId::C4_5, a, i, 0, false}, false);
}

// --- both even, 10 <= m <= n = m+4a+i with i in {0,2}; defined through r, t ----
inline GeneratorSet build_c4_7(unsigned m, unsigned n) {
  detail::require(m % 2 == 0 && n % 2 == 0 && m >= 10 && m <= n, "C4_7 needs even 10 <= m <= n");
  const unsigned diff = n - m;
  const int i = diff % 4 == 0 ? 0 : 2;
  const unsigned a = (diff - static_cast<unsigned>(i)) / 4;

  detail::DiagramBuilder d;
  Perm r{}, t{};
  if (m == n && m % 4 == 0) {
    d.add_numbered(1, m, false);
    for (const char* l : {"1'", "alpha", "beta", "gamma"}) d.add_label(l);
    std::vector<std::string> main;
    for (unsigned j = 1; j <= m; ++j) main.push_back(detail::num(j));
    r = Perm::from_cycles(
        std::array{d.cycle(main), d.cycle({"1'", "alpha", "beta", "gamma"})}, d.degree());
    t = Perm::from_cycles(std::array{d.cycle({"1", "1'"}), d.cycle({"2", "3"}),
                                     d.cycle({"4", "5"}), d.cycle({"6", "8"})},
                          d.degree());
  } else {
    d.add_numbered(1, m, false);
    d.add_label("1'");
    d.add_label(detail::primed(m - 1));
    d.add_label(detail::primed(m));
    for (unsigned j = 1; j <= a; ++j) {
      d.add_label("alpha_" + detail::num(j));
      d.add_label("alpha_" + detail::num(j) + "'");
      d.add_label("beta_" + detail::num(j));
      d.add_label("beta_" + detail::num(j) + "'");
    }
    d.add_label("alpha_" + detail::num(a + 1));
    if (i == 2) {
      d.add_label("gamma");
      d.add_label("delta");
    }

    std::vector<std::vector<Point>> rc;
    std::vector<std::string> main;
    for (unsigned j = 1; j <= m; ++j) main.push_back(detail::num(j));
    rc.push_back(d.cycle(main));
    rc.push_back(d.cycle({"1'", "alpha_1"}));
    for (unsigned j = 1; j <= a; ++j) {
      rc.push_back(d.cycle({"alpha_" + detail::num(j) + "'", "beta_" + detail::num(j)}));
      rc.push_back(d.cycle({"beta_" + detail::num(j) + "'", "alpha_" + detail::num(j + 1)}));
    }
    if (i == 2) {
      rc.push_back(d.cycle({detail::primed(m - 1), "gamma"}));
      rc.push_back(d.cycle({detail::primed(m), "delta"}));
    }
    r = Perm::from_cycles(rc, d.degree());

    std::vector<std::vector<Point>> tc{
        d.cycle({"1", "1'"}),
        d.cycle({"2", "3"}),
        d.cycle({"4", "5"}),
        d.cycle({"6", "8"}),
        d.cycle({detail::num(m - 1), detail::primed(m - 1)}),
        d.cycle({detail::num(m), detail::primed(m)})};
    for (unsigned j = 1; j <= a; ++j) {
      tc.push_back(d.cycle({"alpha_" + detail::num(j), "alpha_" + detail::num(j) + "'"}));
      tc.push_back(d.cycle({"beta_" + detail::num(j), "beta_" + detail::num(j) + "'"}));
    }
    t = Perm::from_cycles(tc, d.degree());
  }

  Perm s = compose(inverse(r), t);
  return detail::make_generator_set(std::move(s), std::move(t), {m, n}, d.freeze(),
                                    {ConstructionId::C4_7, a, i, 0, false}, true);
}

// --- Table of the missing types ------------------------------------------------

struct Table1Row {
  HyperbolicType type;
  const char* s;
  const char* t;
  Point degree;
};

inline std::span<const Table1Row> table1_rows() {
  static const std::array<Table1Row, 15> rows{{
      {{4, 5}, "(1,2,3,4,5)", "(1,3)(4,6)", 6},
      {{6, 5}, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)(7,8)(9,10)", 10},
      {{8, 5}, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)", 10},
      {{10, 5}, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)(7,11)(8,12)", 12},
      {{12, 5}, "(1,2,3,4,5)(6,7,8,9,10)", "(1,6)(2,4)(7,11)(8,12)(9,13)(10,14)", 14},
      {{6, 6}, "(1,2,3,4,5,6)(7,8,9,10,11,12)", "(1,7)(2,5)(6,13)(8,12)(9,14)(10,15)", 15},
      {{4, 7}, "(1,2,3,4,5,6,7)", "(1,5)(2,3)(4,9)(7,8)", 9},
      {{6, 7}, "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", "(1,3)(4,6)(7,8)(9,13)(10,15)(11,16)", 16},
      {{10, 7}, "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", "(1,8)(2,4)(5,6)(9,10)", 14},
      {{12, 7}, "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)",
       "(1,8)(2,3)(4,5)(6,15)(7,16)(9,17)(10,12)(13,14)", 17},
      {{14, 7}, "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", "(1,8)(7,9)(10,15)(11,16)", 16},
      {{14, 9}, "(1,2,3,4,5,6,7,8,9)(10,11,12)", "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)", 16},
      {{16, 9}, "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)",
       "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)", 18},
      {{18, 9}, "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)(14,19,20)",
       "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)", 20},
      {{20, 9}, "(1,2,3,4,5,6,7,8,9)(10,11,12)(13,17,18)(14,19,20)(15,21,22)",
       "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)", 22},
  }};
  return rows;
}

inline GeneratorSet table1_lookup(HyperbolicType type) {
  for (const Table1Row& row : table1_rows()) {
    if (row.type != type) continue;
    std::vector<std::string> names;
    names.reserve(row.degree);
    for (Point x = 1; x <= row.degree; ++x) names.push_back(std::to_string(x));
    Perm s = parse_cycle_string(row.s, row.degree);
    Perm t = parse_cycle_string(row.t, row.degree);
    return detail::make_generator_set(std::move(s), std::move(t), type,
                                      LabelMap(std::move(names)),
                                      {ConstructionId::TABLE1, 0, 0, 0, false}, false);
  }
  throw NotInTable("type {" + std::to_string(type.m) + "," + std::to_string(type.n) +
                   "} is not a Table 1 row");
}

// Swap the face and vertex roles: the dual map has type {n,m}.
inline GeneratorSet dualize(const GeneratorSet& g) {
  GeneratorSet out;
  out.s = g.r;
  out.t = g.t;
  out.r = inverse(compose(out.s, out.t));
  out.degree = g.degree;
  out.labels = g.labels;
  out.type = g.type.dual();
  out.params = g.params;
  out.params.dualized = !g.params.dualized;
  out.diagram_uses_r = !g.diagram_uses_r;
  return out;
}

// --- dispatcher -----------------------------------------------------------------

struct ConstructionPlan {
  enum class Outcome { Supported, UnsupportedExternal, NotHyperbolic };
  enum class External { None, CHNS, BCC };

  Outcome outcome = Outcome::NotHyperbolic;
  HyperbolicType requested{};
  HyperbolicType normalized{};  // the type actually constructed (m even; m <= n if both even)
  ConstructionId id = ConstructionId::TABLE1;
  unsigned a = 0;
  int i = 0;
  unsigned nu = 0;
  bool dualized = false;
  External external = External::None;

  bool supported() const { return outcome == Outcome::Supported; }
};

inline bool in_table1(HyperbolicType t) {
  for (const Table1Row& row : table1_rows())
    if (row.type == t) return true;
  return false;
}

// The covering case analysis: normalize by duality so m is
// even (and m <= n when both are even), send odd-odd and n = 3 to the
// external results, the finitely many gap types to the table, and everything
// else to its construction.
inline ConstructionPlan dispatch(HyperbolicType type) {
  ConstructionPlan plan;
  plan.requested = type;
  if (!type.is_hyperbolic())
    throw NotHyperbolic("type {" + std::to_string(type.m) + "," + std::to_string(type.n) +
                        "} is not hyperbolic");

  unsigned M = type.m, N = type.n;
  bool dual = false;
  if (M % 2 == 1 && N % 2 == 1) {
    plan.outcome = ConstructionPlan::Outcome::UnsupportedExternal;
    plan.external = ConstructionPlan::External::CHNS;
    return plan;
  }
  if (M % 2 == 1 || (N % 2 == 0 && M > N)) {
    std::swap(M, N);
    dual = true;
  }
  plan.normalized = {M, N};
  plan.dualized = dual;
  plan.outcome = ConstructionPlan::Outcome::Supported;

  auto set = [&](ConstructionId id, unsigned a, int i, unsigned nu = 0) {
    plan.id = id;
    plan.a = a;
    plan.i = i;
    plan.nu = nu;
  };

  if (N == 3) {
    plan.outcome = ConstructionPlan::Outcome::UnsupportedExternal;
    plan.external = ConstructionPlan::External::BCC;
    return plan;
  }
  if (in_table1({M, N})) {
    set(ConstructionId::TABLE1, 0, 0);
    return plan;
  }
  if (M == 4) {
    if (N % 2 == 1) {  // N >= 9: the smaller odd N are table rows
      int i = N % 4 == 1 ? 1 : -1;
      set(ConstructionId::C3_1, static_cast<unsigned>((static_cast<int>(N) - 4 - i) / 4), i);
    } else if (N == 6 || N == 8) {
      set(ConstructionId::C4_1_a0, 0, N == 6 ? -1 : 1);
    } else {
      int i = N % 4 == 2 ? -1 : 1;
      set(ConstructionId::C4_1, static_cast<unsigned>((static_cast<int>(N) - 7 - i) / 4), i);
    }
    return plan;
  }
  if (M == 6) {
    if (N % 2 == 1) {
      int i = N % 4 == 1 ? -1 : 1;
      set(ConstructionId::C3_3, static_cast<unsigned>((static_cast<int>(N) - 6 - i) / 4), i);
    } else if (N == 8) {
      set(ConstructionId::C4_3_a0, 0, 1);
    } else {
      int i = N % 4 == 2 ? -1 : 1;
      set(ConstructionId::C4_3, static_cast<unsigned>((static_cast<int>(N) - 7 - i) / 4), i);
    }
    return plan;
  }
  if (M == 8) {
    if (N == 7) {
      set(ConstructionId::C3_11, 1, 0);  // m = n+1
    } else if (N % 2 == 1) {
      int i = N % 4 == 1 ? -1 : 1;
      set(ConstructionId::C3_5, static_cast<unsigned>((static_cast<int>(N) - 6 - i) / 4), i);
    } else {
      int i = N % 4 == 2 ? -1 : 1;
      set(ConstructionId::C4_5, static_cast<unsigned>((static_cast<int>(N) - 7 - i) / 4), i);
    }
    return plan;
  }
  // even M >= 10
  if (N % 2 == 0) {
    set(ConstructionId::C4_7, (N - M) % 4 == 0 ? (N - M) / 4 : (N - M - 2) / 4,
        (N - M) % 4 == 0 ? 0 : 2);
    return plan;
  }
  if (N > M) {
    unsigned diff = N - M;
    int i = diff % 4 == 1 ? 1 : -1;
    set(ConstructionId::C3_7, static_cast<unsigned>((static_cast<int>(diff) - i) / 4), i);
    return plan;
  }
  if (N == 5) {
    set(ConstructionId::C3_9, (M + 6) % 5, 0, (M + 6) / 5);
    return plan;
  }
  if (N + 1 <= M && M <= 2 * N - 6) {
    set(ConstructionId::C3_11, M - N, 0);
    return plan;
  }
  if (N == 7 || N == 9) {
    set(ConstructionId::C3_15, (M + 6) % N, 0, (M + 6) / N);
    return plan;
  }
  set(ConstructionId::C3_13, (M + 6) % N, 0, (M + 6) / N);  // odd N >= 11, M > 2N-6
  return plan;
}

inline GeneratorSet build(const ConstructionPlan& plan) {
  if (!plan.supported())
    throw PlanUnsupported("cannot build an unsupported plan for type {" +
                          std::to_string(plan.requested.m) + "," +
                          std::to_string(plan.requested.n) + "}");
  const unsigned M = plan.normalized.m, N = plan.normalized.n;
  GeneratorSet g;
  switch (plan.id) {
    case ConstructionId::C3_1: g = build_c3_1(plan.a, plan.i); break;
    case ConstructionId::C3_3: g = build_c3_3(plan.a, plan.i); break;
    case ConstructionId::C3_5: g = build_c3_5(plan.a, plan.i); break;
    case ConstructionId::C3_7: g = build_c3_7(M, plan.a, plan.i); break;
    case ConstructionId::C3_9: g = build_c3_9(M); break;
    case ConstructionId::C3_11: g = build_c3_11(N, plan.a); break;
    case ConstructionId::C3_13: g = build_c3_13(N, M); break;
    case ConstructionId::C3_15: g = build_c3_15(N, M); break;
    case ConstructionId::C4_1: g = build_c4_1(plan.a, plan.i); break;
    case ConstructionId::C4_1_a0: g = build_c4_1_a0(plan.i); break;
    case ConstructionId::C4_3: g = build_c4_3(plan.a, plan.i); break;
    case ConstructionId::C4_3_a0: g = build_c4_3_a0(); break;
    case ConstructionId::C4_5: g = build_c4_5(plan.a, plan.i); break;
    case ConstructionId::C4_7: g = build_c4_7(M, N); break;
    case ConstructionId::TABLE1: g = table1_lookup(plan.normalized); break;
  }
  if (plan.dualized) g = dualize(g);
  if (g.type != plan.requested)
    throw BadParams("built type does not match the requested type");
  return g;
}

}  // namespace chiralmap
