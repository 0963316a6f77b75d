#pragma once

// Reflexible or chiral? Three routes: the two diagram lemmas (fast,
// one-directional), an exhaustive relabelling search over the coset
// {pi : s^pi = s^-1} (sound whenever Aut(G) <= S_k), and an abstract
// automorphism-extension oracle for small groups (always sound).

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace chiralmap {

enum class Lemma { L2_6, L2_7 };

struct LemmaWitness {
  Point zeta = 0;
  int b = 0;
  int c = 0;
  Lemma lemma = Lemma::L2_6;
  int power_variant = 1;  // lemma 2.7 allows s or s^2
  bool on_r = false;      // conditions checked with r in place of s

  bool operator==(const LemmaWitness&) const = default;
};

namespace detail {

// The unique point fixed by s^b t but not by t, if there is exactly one.
inline std::optional<Point> unique_moved_fixed_point(const Perm& s, const Perm& t, int b) {
  Perm sbt = compose(power(s, b), t);
  std::optional<Point> zeta;
  for (Point x = 0; x < s.degree(); ++x) {
    if (sbt(x) != x || t(x) == x) continue;
    if (zeta) return std::nullopt;
    zeta = x;
  }
  return zeta;
}

template <typename Fn>
inline void for_each_signed(int bound, bool include_zero, Fn&& fn) {
  if (include_zero && fn(0)) return;
  for (int v = 1; v <= bound; ++v) {
    if (fn(v)) return;
    if (fn(-v)) return;
  }
}

}  // namespace detail

// Lemma 2.6 second condition: zeta s^c fixed by t while zeta t s^-c is not.
inline bool lemma_2_6_holds(const Perm& s, const Perm& t, int b, int c) {
  auto zeta = detail::unique_moved_fixed_point(s, t, b);
  if (!zeta) return false;
  Point zc = power(s, c)(*zeta);
  if (t(zc) != zc) return false;
  Point w = power(s, -c)(t(*zeta));
  return t(w) != w;
}

// Lemma 2.7 second condition: zeta s^c t fixed by s (or s^2) while
// zeta t s^-c t is not.
inline bool lemma_2_7_holds(const Perm& s, const Perm& t, int b, int c,
                            int power_variant = 0) {
  auto zeta = detail::unique_moved_fixed_point(s, t, b);
  if (!zeta) return false;
  for (int pv : {1, 2}) {
    if (power_variant != 0 && pv != power_variant) continue;
    Perm spv = power(s, pv);
    Point zct = t(power(s, c)(*zeta));
    if (spv(zct) != zct) continue;
    Point w = t(power(s, -c)(t(*zeta)));
    if (spv(w) != w) return true;
  }
  return false;
}

// Deterministic search order: |b| ascending (positive before negative),
// then |c| ascending. Absence of a witness is NOT evidence of reflexibility.
inline std::optional<LemmaWitness> check_lemma_2_6(const Perm& s, const Perm& t, int b_range,
                                                   int c_range) {
  std::optional<LemmaWitness> found;
  detail::for_each_signed(b_range, false, [&](int b) {
    auto zeta = detail::unique_moved_fixed_point(s, t, b);
    if (!zeta) return false;
    bool hit = false;
    detail::for_each_signed(c_range, true, [&](int c) {
      Point zc = power(s, c)(*zeta);
      if (t(zc) != zc) return false;
      Point w = power(s, -c)(t(*zeta));
      if (t(w) == w) return false;
      found = LemmaWitness{*zeta, b, c, Lemma::L2_6, 1, false};
      hit = true;
      return true;
    });
    return hit;
  });
  return found;
}

inline std::optional<LemmaWitness> check_lemma_2_7(const Perm& s, const Perm& t, int b_range,
                                                   int c_range) {
  std::optional<LemmaWitness> found;
  detail::for_each_signed(b_range, false, [&](int b) {
    auto zeta = detail::unique_moved_fixed_point(s, t, b);
    if (!zeta) return false;
    bool hit = false;
    for (int pv : {1, 2}) {
      Perm spv = power(s, pv);
      detail::for_each_signed(c_range, true, [&](int c) {
        Point zct = t(power(s, c)(*zeta));
        if (spv(zct) != zct) return false;
        Point w = t(power(s, -c)(t(*zeta)));
        if (spv(w) == w) return false;
        found = LemmaWitness{*zeta, b, c, Lemma::L2_7, pv, false};
        hit = true;
        return true;
      });
      if (hit) break;
    }
    return hit;
  });
  return found;
}

// GeneratorSet front ends with the default ranges b in [-n,n]\{0}, c in [-k,k].
inline std::optional<LemmaWitness> check_lemma_2_6(const GeneratorSet& g, int b_range = 0,
                                                   int c_range = 0) {
  if (b_range == 0) b_range = static_cast<int>(g.type.n);
  if (c_range == 0) c_range = static_cast<int>(g.degree);
  return check_lemma_2_6(g.s, g.t, b_range, c_range);
}

inline std::optional<LemmaWitness> check_lemma_2_7(const GeneratorSet& g, int b_range = 0,
                                                   int c_range = 0) {
  if (b_range == 0) b_range = static_cast<int>(g.type.n);
  if (c_range == 0) c_range = static_cast<int>(g.degree);
  return check_lemma_2_7(g.s, g.t, b_range, c_range);
}

// ---------------------------------------------------------------------------
// Exhaustive relabelling search.

struct Relabelling {
  Perm pi;  // s^pi = s^-1 and t^pi = t
};

inline bool relabelling_is_valid(const Perm& s, const Perm& t, const Perm& pi) {
  Perm pi_inv = inverse(pi);
  return compose(compose(pi_inv, s), pi) == inverse(s) &&
         compose(compose(pi_inv, t), pi) == t;
}

struct ConjugationResult {
  std::optional<Relabelling> relabelling;  // empty: no relabelling exists
  std::uint64_t nodes_explored = 0;        // exhaustion certificate
};

namespace detail {

struct ConjugationSearcher {
  const Perm& s;
  const Perm& t;
  Point k;
  std::vector<std::vector<Point>> s_cycles;
  std::vector<Point> s_fixed;
  std::vector<std::vector<Point>> target_cycles;  // cycles of s^-1
  std::uint64_t nodes = 0;
  const std::atomic<bool>* cancel;
  std::vector<Point> pi;
  std::vector<bool> target_used;
  static constexpr Point kUnset = ~Point{0};

  ConjugationSearcher(const Perm& s_, const Perm& t_, const std::atomic<bool>* cancel_)
      : s(s_), t(t_), k(s_.degree()), cancel(cancel_) {
    auto ds = cycle_decomposition(s);
    s_cycles = ds.cycles;
    s_fixed = ds.fixed_points;
    target_cycles = cycle_decomposition(inverse(s)).cycles;
    pi.assign(k, kUnset);
    target_used.assign(target_cycles.size(), false);
  }

  // Partial consistency with t^pi = t: whenever x and t(x) are both
  // assigned, pi must commute with t on x.
  bool assign(Point x, Point y) {
    pi[x] = y;
    Point tx = t(x);
    if (tx == x) return t(y) == y;
    if (t(y) == y) return false;
    if (pi[tx] != kUnset && pi[tx] != t(y)) return false;
    return true;
  }

  bool search_cycles(std::size_t ci) {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled("relabelling search");
    ++nodes;
    if (ci == s_cycles.size()) return search_fixed(0, std::vector<bool>(s_fixed.size(), false));
    const auto& c = s_cycles[ci];
    for (std::size_t ti = 0; ti < target_cycles.size(); ++ti) {
      if (target_used[ti] || target_cycles[ti].size() != c.size()) continue;
      const auto& tc = target_cycles[ti];
      target_used[ti] = true;
      for (std::size_t rot = 0; rot < c.size(); ++rot) {
        bool ok = true;
        for (std::size_t j = 0; j < c.size() && ok; ++j)
          ok = assign(c[j], tc[(j + rot) % tc.size()]);
        if (ok && search_cycles(ci + 1)) return true;
        for (Point x : c) pi[x] = kUnset;
      }
      target_used[ti] = false;
    }
    return false;
  }

  bool search_fixed(std::size_t fi, std::vector<bool> used) {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled("relabelling search");
    ++nodes;
    if (fi == s_fixed.size()) {
      for (Point x = 0; x < k; ++x)
        if (pi[t(x)] != t(pi[x])) return false;
      return true;
    }
    Point x = s_fixed[fi];
    for (std::size_t j = 0; j < s_fixed.size(); ++j) {
      if (used[j]) continue;
      if (!assign(x, s_fixed[j])) {
        pi[x] = kUnset;
        continue;
      }
      used[j] = true;
      if (search_fixed(fi + 1, used)) return true;
      used[j] = false;
      pi[x] = kUnset;
    }
    return false;
  }
};

}  // namespace detail

// Size of the coset {pi : s^pi = s^-1}: cycles of equal length may be
// matched in any order and rotation, fixed points in any bijection.
inline BigInt conjugation_coset_size(const Perm& s) {
  auto d = cycle_decomposition(s);
  std::unordered_map<std::size_t, unsigned> count_by_len;
  for (const auto& c : d.cycles) ++count_by_len[c.size()];
  BigInt size = 1;
  for (auto [len, cnt] : count_by_len) size *= factorial(cnt) * pow(BigInt(len), cnt);
  size *= factorial(static_cast<unsigned>(d.fixed_points.size()));
  return size;
}

// Backtracking over the coset {pi : s^pi = s^-1}, built by aligning cycles of
// s with equal-length cycles of s^-1 in all rotations, testing t^pi = t.
inline ConjugationResult conjugation_search(const Perm& s, const Perm& t,
                                            std::uint64_t coset_limit = 10'000'000,
                                            const std::atomic<bool>* cancel = nullptr) {
  if (s.degree() != t.degree()) throw DegreeMismatch("conjugation_search");
  if (conjugation_coset_size(s) > coset_limit)
    throw SearchTooLarge("relabelling coset exceeds " + std::to_string(coset_limit) +
                         " candidates");
  detail::ConjugationSearcher searcher(s, t, cancel);
  ConjugationResult res;
  if (searcher.search_cycles(0)) {
    Perm pi = Perm::from_images(searcher.pi);
    if (!relabelling_is_valid(s, t, pi))
      throw CrossOracleDisagreement("relabelling failed re-verification");
    res.relabelling = Relabelling{std::move(pi)};
  }
  res.nodes_explored = searcher.nodes;
  return res;
}

inline ConjugationResult conjugation_search(const GeneratorSet& g,
                                            std::uint64_t coset_limit = 10'000'000,
                                            const std::atomic<bool>* cancel = nullptr) {
  return conjugation_search(g.s, g.t, coset_limit, cancel);
}

// ---------------------------------------------------------------------------
// Abstract oracle.

enum class Reflexibility { Reflexible, Chiral };

// Builds the Cayley graph of G = <s,t> by BFS over permutation values while
// attempting to define phi by phi(w(s,t)) = w(s^-1,t), checking
// well-definedness at every rediscovered element. Consistency of phi is
// exactly the existence of an automorphism fixing t and inverting s, whether
// or not it is induced by a relabelling.
inline Reflexibility abstract_reflexibility(const Perm& s, const Perm& t,
                                            std::uint64_t order_bound = 100'000,
                                            const std::atomic<bool>* cancel = nullptr) {
  const Point k = s.degree();
  if (k > 255) throw DegreeTooLarge("abstract oracle supports degree <= 255");
  {
    std::vector<Perm> gens{s, t};
    BigInt ord = StabilizerChain(gens, k).order();
    if (ord > order_bound)
      throw GroupTooLarge("group order " + ord.str() + " exceeds bound " +
                          std::to_string(order_bound));
  }
  auto key = [k](const std::vector<Point>& img) {
    std::string out(k, '\0');
    for (Point x = 0; x < k; ++x) out[x] = static_cast<char>(img[x]);
    return out;
  };
  const Perm si = inverse(s);
  struct Edge {
    const Perm* fwd;
    const Perm* img;
  };
  const Edge edges[2] = {{&s, &si}, {&t, &t}};

  std::unordered_map<std::string, std::string> phi;
  std::vector<std::pair<std::vector<Point>, std::vector<Point>>> frontier;
  std::vector<Point> ident(k);
  for (Point x = 0; x < k; ++x) ident[x] = x;
  phi.emplace(key(ident), key(ident));
  frontier.emplace_back(ident, ident);

  while (!frontier.empty()) {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled("abstract oracle");
    auto [g, pg] = std::move(frontier.back());
    frontier.pop_back();
    for (const Edge& e : edges) {
      std::vector<Point> ng(k), npg(k);
      for (Point x = 0; x < k; ++x) {
        ng[x] = (*e.fwd)(g[x]);
        npg[x] = (*e.img)(pg[x]);
      }
      auto [it, inserted] = phi.emplace(key(ng), key(npg));
      if (!inserted) {
        if (it->second != key(npg)) return Reflexibility::Chiral;
      } else {
        frontier.emplace_back(std::move(ng), std::move(npg));
      }
    }
  }
  return Reflexibility::Reflexible;
}

// ---------------------------------------------------------------------------
// Combined decision.

enum class ChiralityMethod { LemmaL2_6, LemmaL2_7, ConjugationSearch, AbstractOracle };

inline const char* to_string(ChiralityMethod m) {
  switch (m) {
    case ChiralityMethod::LemmaL2_6: return "lemma_2_6";
    case ChiralityMethod::LemmaL2_7: return "lemma_2_7";
    case ChiralityMethod::ConjugationSearch: return "conjugation_search";
    case ChiralityMethod::AbstractOracle: return "abstract_oracle";
  }
  return "?";
}

struct ChiralityVerdict {
  enum class Verdict { Chiral, Reflexible };
  Verdict verdict = Verdict::Chiral;
  ChiralityMethod method = ChiralityMethod::ConjugationSearch;
  std::optional<LemmaWitness> lemma;
  std::optional<Relabelling> relabelling;  // evidence for Reflexible via search
  std::uint64_t search_nodes = 0;
  bool abstract_oracle_ran = false;
  std::optional<std::string> caveat;

  bool chiral() const { return verdict == Verdict::Chiral; }
};

enum class OracleMode { Auto, Conjugation, Abstract };

struct ChiralityOptions {
  int b_range = 0;  // 0: use n (or m when checking on r)
  int c_range = 0;  // 0: use the degree
  std::uint64_t search_coset_limit = 10'000'000;
  std::uint64_t abstract_order_bound = 100'000;
  OracleMode mode = OracleMode::Auto;
  const std::atomic<bool>* cancel = nullptr;
};

namespace detail {

inline std::optional<LemmaWitness> lemma_fast_path(const GeneratorSet& g,
                                                   const ChiralityOptions& opt) {
  int c_range = opt.c_range ? opt.c_range : static_cast<int>(g.degree);
  int bs = opt.b_range ? opt.b_range : static_cast<int>(g.type.n);
  int br = opt.b_range ? opt.b_range : static_cast<int>(g.type.m);
  if (auto w = check_lemma_2_6(g.s, g.t, bs, c_range)) return w;
  if (auto w = check_lemma_2_7(g.s, g.t, bs, c_range)) return w;
  // The diagrams can equally be read with r in the role of s.
  if (auto w = check_lemma_2_6(g.r, g.t, br, c_range)) {
    w->on_r = true;
    return w;
  }
  if (auto w = check_lemma_2_7(g.r, g.t, br, c_range)) {
    w->on_r = true;
    return w;
  }
  return std::nullopt;
}

}  // namespace detail

// For Alternating/Symmetric classifications of degree k >= 7, Aut(G) <= S_k,
// so the exhaustive relabelling search is authoritative; the lemma checkers
// are fast certificates that must agree with it. Below degree 7 (or for
// unclassified groups) only the abstract oracle decides.
inline ChiralityVerdict decide_chirality(const GeneratorSet& g, const GroupClassification& cls,
                                         const ChiralityOptions& opt = {}) {
  ChiralityVerdict out;
  out.lemma = detail::lemma_fast_path(g, opt);

  const bool symmetric_aut =
      (cls.verdict == GroupClassification::Verdict::Alternating ||
       cls.verdict == GroupClassification::Verdict::Symmetric) &&
      cls.degree >= 7;

  const bool use_conjugation =
      opt.mode == OracleMode::Conjugation || (opt.mode == OracleMode::Auto && symmetric_aut);

  if (use_conjugation) {
    if (out.lemma) {
      // A lemma witness already rules out every relabelling; the exhaustive
      // search is confirmation and may be skipped when its coset is too big.
      out.verdict = ChiralityVerdict::Verdict::Chiral;
      out.method = out.lemma->lemma == Lemma::L2_6 ? ChiralityMethod::LemmaL2_6
                                                   : ChiralityMethod::LemmaL2_7;
      try {
        ConjugationResult res =
            conjugation_search(g.s, g.t, opt.search_coset_limit, opt.cancel);
        out.search_nodes = res.nodes_explored;
        if (res.relabelling)
          throw CrossOracleDisagreement(
              "lemma witness coexists with a relabelling under Aut(G) <= S_k");
      } catch (const SearchTooLarge&) {
        out.caveat = "relabelling coset too large; verdict rests on the lemma witness";
      }
    } else {
      ConjugationResult res = conjugation_search(g.s, g.t, opt.search_coset_limit, opt.cancel);
      out.search_nodes = res.nodes_explored;
      if (res.relabelling) {
        out.verdict = ChiralityVerdict::Verdict::Reflexible;
        out.method = ChiralityMethod::ConjugationSearch;
        out.relabelling = std::move(res.relabelling);
      } else {
        out.verdict = ChiralityVerdict::Verdict::Chiral;
        out.method = ChiralityMethod::ConjugationSearch;
      }
    }
    if (opt.mode == OracleMode::Conjugation && !symmetric_aut)
      out.caveat = "relabelling search is authoritative only when Aut(G) embeds in S_k";
    return out;
  }

  Reflexibility refl = abstract_reflexibility(g.s, g.t, opt.abstract_order_bound, opt.cancel);
  out.abstract_oracle_ran = true;
  out.method = ChiralityMethod::AbstractOracle;
  out.verdict = refl == Reflexibility::Chiral ? ChiralityVerdict::Verdict::Chiral
                                              : ChiralityVerdict::Verdict::Reflexible;
  if (opt.mode == OracleMode::Auto) {
    try {
      ConjugationResult res = conjugation_search(g.s, g.t, opt.search_coset_limit, opt.cancel);
      out.search_nodes = res.nodes_explored;
      if (!symmetric_aut) {
        out.caveat = res.relabelling
                         ? "relabelling exists but Aut(G) <= S_k is not guaranteed"
                         : "no relabelling exists but Aut(G) may exceed S_k; abstract oracle decides";
      }
    } catch (const SearchTooLarge&) {
      out.caveat = "relabelling coset too large; abstract oracle decides";
    }
  }
  return out;
}

}  // namespace chiralmap
