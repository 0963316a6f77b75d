#pragma once

// What group does a set of permutations generate? Orbits, primitivity via
// minimal block systems, exact order via a stabilizer chain, and
// alternating/symmetric recognition through Jordan/Jones cycle witnesses.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "perm.hpp"

namespace chiralmap {

inline void require_equal_degrees(std::span<const Perm> gens) {
  for (const Perm& g : gens)
    if (g.degree() != gens.front().degree())
      throw DegreeMismatch("generators have mixed degrees");
}

// Partition of {0..k-1} into <gens>-orbits; orbits sorted by minimum point,
// points sorted within each orbit.
inline std::vector<std::vector<Point>> orbits(std::span<const Perm> gens) {
  if (gens.empty()) return {};
  require_equal_degrees(gens);
  const Point k = gens.front().degree();
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(k, false);
  for (Point x = 0; x < k; ++x) {
    if (seen[x]) continue;
    std::vector<Point> orb{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens) {
        Point y = g(orb[i]);
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline bool is_transitive(std::span<const Perm> gens) {
  auto orbs = orbits(gens);
  return orbs.size() == 1 && !orbs.empty();
}

struct BlockSystem {
  std::vector<unsigned> block_of;  // point -> block id, ids numbered by first occurrence
  unsigned num_blocks = 0;

  bool operator==(const BlockSystem&) const = default;
};

// Every generator must permute the blocks setwise.
inline bool block_system_is_invariant(std::span<const Perm> gens, const BlockSystem& bs) {
  const Point k = static_cast<Point>(bs.block_of.size());
  for (const Perm& g : gens) {
    std::vector<int> image_block(bs.num_blocks, -1);
    for (Point x = 0; x < k; ++x) {
      unsigned b = bs.block_of[x];
      unsigned ib = bs.block_of[g(x)];
      if (image_block[b] < 0)
        image_block[b] = static_cast<int>(ib);
      else if (image_block[b] != static_cast<int>(ib))
        return false;
    }
  }
  return true;
}

struct PrimitivityResult {
  bool primitive = false;
  std::optional<BlockSystem> witness;  // a minimal nontrivial system when imprimitive
};

namespace detail {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(Point k) : parent(k) {
    for (Point x = 0; x < k; ++x) parent[x] = x;
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Finest block system whose block contains {0, delta}: union-find refinement
// under the generator action (Atkinson's algorithm).
inline BlockSystem finest_block_system(std::span<const Perm> gens, Point delta) {
  const Point k = gens.front().degree();
  UnionFind uf(k);
  std::vector<std::pair<Point, Point>> queue{{0, delta}};
  uf.unite(0, delta);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Point ga = g(a), gb = g(b);
      if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
    }
  }
  BlockSystem bs;
  bs.block_of.assign(k, 0);
  std::vector<int> id_of_root(k, -1);
  for (Point x = 0; x < k; ++x) {
    Point r = uf.find(x);
    if (id_of_root[r] < 0) id_of_root[r] = static_cast<int>(bs.num_blocks++);
    bs.block_of[x] = static_cast<unsigned>(id_of_root[r]);
  }
  return bs;
}

}  // namespace detail

// Primitive iff every finest system containing {0, delta} is trivial.
inline PrimitivityResult is_primitive(std::span<const Perm> gens) {
  require_equal_degrees(gens);
  if (!is_transitive(gens)) throw NotTransitive("primitivity requires a transitive group");
  const Point k = gens.front().degree();
  for (Point delta = 1; delta < k; ++delta) {
    BlockSystem bs = detail::finest_block_system(gens, delta);
    if (bs.num_blocks > 1 && bs.num_blocks < k) return {false, bs};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims, base points in increasing
// point order). Gives the exact group order and a membership test.

class StabilizerChain {
public:
  StabilizerChain(std::span<const Perm> gens, Point degree) : degree_(degree) {
    for (const Perm& g : gens)
      if (g.degree() != degree) throw DegreeMismatch("stabilizer chain: generator degree");
    for (const Perm& g : gens) add_strong(g);
    close();
    order_ = 1;
    for (const Level& lv : levels_) order_ *= static_cast<unsigned>(lv.orbit.size());
  }

  const BigInt& order() const { return order_; }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, level] = sift(p, 0);
    return residue.is_identity();
  }

private:
  // Level l acts with the strong generators that fix the bases of levels
  // 0..l-1 pointwise; the generating sets are nested by construction, which
  // is what makes the Schreier certification in close() sound.
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;                      // BFS order from base
    std::vector<std::optional<Perm>> transversal;  // point -> rep with base^rep = point
  };

  std::vector<Level> levels_;
  Point degree_;
  BigInt order_ = 1;

  static Point min_moved(const Perm& p) {
    for (Point x = 0; x < p.degree(); ++x)
      if (p(x) != x) return x;
    return p.degree();
  }

  void rebuild(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit.clear();
    lv.transversal.assign(degree_, std::nullopt);
    lv.orbit.push_back(lv.base);
    lv.transversal[lv.base] = Perm(degree_);
    for (std::size_t i = 0; i < lv.orbit.size(); ++i)
      for (const Perm& g : lv.gens) {
        Point y = g(lv.orbit[i]);
        if (!lv.transversal[y]) {
          lv.transversal[y] = compose(*lv.transversal[lv.orbit[i]], g);
          lv.orbit.push_back(y);
        }
      }
  }

  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
      Point x = p(levels_[li].base);
      const auto& rep = levels_[li].transversal[x];
      if (!rep) return {std::move(p), li};
      p = compose(p, inverse(*rep));
    }
    return {std::move(p), levels_.size()};
  }

  // p fixes the bases of levels 0..j-1 and moves base j (or every existing
  // base, in which case it opens a new level); it joins every level it fixes
  // into, keeping the sets nested.
  void add_strong(const Perm& p) {
    if (p.is_identity()) return;
    std::size_t j = 0;
    while (j < levels_.size() && p(levels_[j].base) == levels_[j].base) ++j;
    if (j == levels_.size()) {
      Level lv;
      lv.base = min_moved(p);
      levels_.push_back(std::move(lv));
    }
    for (std::size_t li = 0; li <= j; ++li) {
      levels_[li].gens.push_back(p);
      rebuild(li);
    }
  }

  // Sweep until every Schreier generator of every level sifts to the
  // identity. At that fixpoint Stab(base_l) within level l's group equals
  // level l+1's group, so the order is the product of orbit sizes.
  // add_strong may grow levels_, so elements are re-fetched by index.
  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t li = 0; li < levels_.size(); ++li) {
        for (std::size_t oi = 0; oi < levels_[li].orbit.size(); ++oi) {
          for (std::size_t gi = 0; gi < levels_[li].gens.size(); ++gi) {
            const Point x = levels_[li].orbit[oi];
            const Perm g = levels_[li].gens[gi];
            Perm schreier = compose(compose(*levels_[li].transversal[x], g),
                                    inverse(*levels_[li].transversal[g(x)]));
            auto [residue, stop] = sift(std::move(schreier), li + 1);
            if (!residue.is_identity()) {
              add_strong(residue);
              (void)stop;
              changed = true;
            }
          }
        }
      }
    }
  }
};

inline constexpr Point kDefaultDegreeCap = 64;

inline BigInt group_order(std::span<const Perm> gens, Point degree_cap = kDefaultDegreeCap) {
  if (gens.empty()) return 1;
  require_equal_degrees(gens);
  const Point k = gens.front().degree();
  if (k > degree_cap)
    throw DegreeTooLarge("degree " + std::to_string(k) + " exceeds cap " +
                         std::to_string(degree_cap));
  return StabilizerChain(gens, k).order();
}

// Full Cayley-graph BFS enumeration. Returns nullopt once more than `cap`
// elements have been found.
inline std::optional<std::vector<Perm>> enumerate_elements(std::span<const Perm> gens,
                                                           std::size_t cap) {
  if (gens.empty()) return std::vector<Perm>{};
  require_equal_degrees(gens);
  const Point k = gens.front().degree();
  auto key = [k](const Perm& p) {
    std::string s(k, '\0');
    for (Point x = 0; x < k; ++x) s[x] = static_cast<char>(p(x));
    return s;
  };
  std::unordered_set<std::string> seen;
  std::vector<Perm> elems{Perm(k)};
  seen.insert(key(elems[0]));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : gens) {
      Perm q = compose(elems[i], g);
      if (seen.insert(key(q)).second) {
        if (elems.size() + 1 > cap) return std::nullopt;
        elems.push_back(std::move(q));
      }
    }
  return elems;
}

// ---------------------------------------------------------------------------
// Alternating/symmetric recognition.

struct JordanWitness {
  std::string word;      // e.g. "(s^3 t)^2"
  Perm element;
  unsigned cycle_length = 0;
  unsigned fixed_count = 0;
  bool prime_length = false;

  bool operator==(const JordanWitness&) const = default;
};

struct WordTemplate {
  bool use_r = false;  // word over (r, t) instead of (s, t)
  int e = 1;           // generator exponent
  int f = 1;           // outer exponent; f == 0 means the bare power g^e
};

// Generator-power words first (s itself is often a long cycle with enough
// fixed points), then the (s^e t)^f grid, then the r-based grid.
inline std::vector<WordTemplate> default_word_pool(bool with_r, unsigned m_for_named = 0) {
  std::vector<WordTemplate> pool;
  pool.push_back({false, 1, 0});
  pool.push_back({false, 2, 0});
  for (int e = 1; e <= 5; ++e)
    for (int f = 1; f <= 12; ++f) pool.push_back({false, e, f});
  if (with_r) {
    for (int e = 1; e <= 5; ++e)
      for (int f = 1; f <= 12; ++f) pool.push_back({true, e, f});
    if (m_for_named >= 2 && m_for_named / 2 > 12)
      pool.push_back({true, 2, static_cast<int>(m_for_named / 2)});
  }
  return pool;
}

inline std::string word_name(const WordTemplate& w) {
  std::string g = w.use_r ? "r" : "s";
  if (w.f == 0) return w.e == 1 ? g : g + "^" + std::to_string(w.e);
  std::string base = "(" + (w.e == 1 ? g : g + "^" + std::to_string(w.e)) + " t)";
  return w.f == 1 ? base : base + "^" + std::to_string(w.f);
}

inline bool is_prime(unsigned long long v) {
  if (v < 2) return false;
  for (unsigned long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// First pool word evaluating to a single cycle with >= 3 fixed points.
inline std::optional<JordanWitness> find_jordan_witness(
    const Perm& s, const Perm& t, const std::optional<Perm>& r,
    std::span<const WordTemplate> pool) {
  for (const WordTemplate& w : pool) {
    if (w.use_r && !r) continue;
    const Perm& base = w.use_r ? *r : s;
    Perm el = w.f == 0 ? power(base, w.e) : power(compose(power(base, w.e), t), w.f);
    auto d = cycle_decomposition(el);
    if (d.cycles.size() != 1) continue;
    unsigned len = static_cast<unsigned>(d.cycles[0].size());
    unsigned fixed = static_cast<unsigned>(d.fixed_points.size());
    if (fixed < 3) continue;
    return JordanWitness{word_name(w), std::move(el), len, fixed, is_prime(len)};
  }
  return std::nullopt;
}

struct GroupClassification {
  enum class Verdict { Alternating, Symmetric, Other };
  Verdict verdict = Verdict::Other;
  unsigned degree = 0;
  BigInt order = 0;
  bool order_known = false;
  std::optional<JordanWitness> evidence;
  bool primitive = false;
  bool transitive = false;

  bool is_alternating() const { return verdict == Verdict::Alternating; }
};

// Jones' theorem: a primitive group of degree k containing a single cycle
// with f >= 3 fixed points contains A_k. All-even generators then pin A_k
// itself; otherwise S_k. Without a witness, fall back on the exact order.
inline GroupClassification classify(const Perm& s, const Perm& t,
                                    const std::optional<Perm>& r = std::nullopt,
                                    Point degree_cap = kDefaultDegreeCap) {
  const Point k = s.degree();
  std::vector<Perm> gens{s, t};
  GroupClassification cls;
  cls.degree = k;
  cls.transitive = is_transitive(gens);
  if (cls.transitive) cls.primitive = is_primitive(gens).primitive;
  const bool all_even = parity(s) == Parity::Even && parity(t) == Parity::Even;

  if (cls.transitive && cls.primitive) {
    unsigned m_named = r ? static_cast<unsigned>(order(compose(s, t))) : 0;
    auto pool = default_word_pool(r.has_value(), m_named);
    cls.evidence = find_jordan_witness(s, t, r, pool);
    if (cls.evidence) {
      cls.verdict = all_even ? GroupClassification::Verdict::Alternating
                             : GroupClassification::Verdict::Symmetric;
      cls.order = all_even ? alternating_order(k) : factorial(k);
      cls.order_known = true;
      return cls;
    }
  }

  if (k > degree_cap) {
    cls.verdict = GroupClassification::Verdict::Other;
    cls.order_known = false;
    return cls;
  }
  cls.order = group_order(gens, degree_cap);
  cls.order_known = true;
  if (cls.order == alternating_order(k) && all_even)
    cls.verdict = GroupClassification::Verdict::Alternating;
  else if (cls.order == factorial(k))
    cls.verdict = GroupClassification::Verdict::Symmetric;
  else
    cls.verdict = GroupClassification::Verdict::Other;
  return cls;
}

}  // namespace chiralmap
