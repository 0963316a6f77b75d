#pragma once

// End-to-end verification pipeline and its flat, JSON-stable report.
// Field names are frozen snake_case; cycle notation strings are 1-based;
// big integers travel as decimal strings.

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chirality.hpp"
#include "constructions.hpp"
#include "group.hpp"
#include "map_model.hpp"
#include "perm.hpp"

namespace chiralmap {

struct OrderCheck {
  unsigned long long expected = 0;
  unsigned long long actual = 0;
  bool pass = false;

  bool operator==(const OrderCheck&) const = default;
};

struct LemmaReport {
  unsigned zeta = 0;  // 1-based point
  int b = 0;
  int c = 0;
  std::string lemma;  // "2.6" | "2.7"
  int power_variant = 1;
  bool on_r = false;

  bool operator==(const LemmaReport&) const = default;
};

struct VerificationReport {
  unsigned requested_m = 0, requested_n = 0;

  std::string plan_outcome;  // "supported" | "unsupported_external" | "not_hyperbolic"
  std::optional<std::string> construction;
  std::optional<unsigned> a;
  std::optional<int> i;
  std::optional<unsigned> nu;
  bool dualized = false;
  std::optional<std::string> external_theorem;  // "CHNS" | "BCC"

  std::optional<unsigned> degree;
  std::optional<std::string> gen_s, gen_t, gen_r;

  std::optional<OrderCheck> order_s, order_t, order_st;
  std::optional<bool> s_even, t_even, parity_pass;
  std::optional<bool> transitive, primitive;

  std::optional<std::string> classification_verdict;  // "alternating" | "symmetric" | "other"
  std::optional<unsigned> classification_degree;
  std::optional<std::string> group_order;  // decimal
  std::optional<bool> order_known;
  std::optional<std::string> witness_word;

  std::optional<std::string> chirality_verdict;  // "chiral" | "reflexible"
  std::optional<std::string> chirality_method;
  std::optional<LemmaReport> lemma;
  std::optional<std::string> relabelling;
  std::optional<unsigned long long> search_nodes;
  std::optional<std::string> chirality_caveat;

  std::optional<std::string> vertices, edges, faces, euler_characteristic, genus;

  std::string overall;  // "PASS" | "FAIL" | "UNSUPPORTED" | "SKIPPED"
  std::optional<std::string> error;

  bool operator==(const VerificationReport&) const = default;
};

struct VerifyOptions {
  Point degree_cap = kDefaultDegreeCap;
  ChiralityOptions chirality;
};

inline Point degree_cap_from_env(Point fallback = kDefaultDegreeCap) {
  if (const char* v = std::getenv("CHIRALMAP_DEGREE_CAP")) {
    long parsed = std::strtol(v, nullptr, 10);
    if (parsed > 0) return static_cast<Point>(parsed);
  }
  return fallback;
}

namespace detail {

inline void fill_plan(VerificationReport& rep, const ConstructionPlan& plan) {
  switch (plan.outcome) {
    case ConstructionPlan::Outcome::Supported:
      rep.plan_outcome = "supported";
      rep.construction = to_string(plan.id);
      rep.a = plan.a;
      rep.i = plan.i;
      rep.nu = plan.nu;
      break;
    case ConstructionPlan::Outcome::UnsupportedExternal:
      rep.plan_outcome = "unsupported_external";
      rep.external_theorem =
          plan.external == ConstructionPlan::External::CHNS ? "CHNS" : "BCC";
      break;
    case ConstructionPlan::Outcome::NotHyperbolic:
      rep.plan_outcome = "not_hyperbolic";
      break;
  }
  rep.dualized = plan.dualized;
}

}  // namespace detail

// Full pipeline: dispatch -> build -> exact order/parity checks ->
// transitivity/primitivity -> classification -> chirality -> map record.
inline VerificationReport verify_type(HyperbolicType type, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.requested_m = type.m;
  rep.requested_n = type.n;

  ConstructionPlan plan = dispatch(type);  // throws NotHyperbolic
  detail::fill_plan(rep, plan);
  if (!plan.supported()) {
    rep.overall = "UNSUPPORTED";
    return rep;
  }

  try {
    GeneratorSet g = build(plan);
    rep.degree = g.degree;
    rep.gen_s = to_cycle_string(g.s);
    rep.gen_t = to_cycle_string(g.t);
    rep.gen_r = to_cycle_string(g.r);
    if (g.degree > opt.degree_cap) {
      rep.overall = "SKIPPED";
      return rep;
    }

    auto check = [](unsigned long long want, unsigned long long got) {
      return OrderCheck{want, got, want == got};
    };
    rep.order_s = check(type.n, order(g.s));
    rep.order_t = check(2, order(g.t));
    rep.order_st = check(type.m, order(compose(g.s, g.t)));
    rep.s_even = parity(g.s) == Parity::Even;
    rep.t_even = parity(g.t) == Parity::Even;
    rep.parity_pass = *rep.s_even && *rep.t_even;

    GroupClassification cls =
        classify(g.s, g.t, g.diagram_uses_r ? std::optional<Perm>(g.r) : std::nullopt,
                 opt.degree_cap);
    rep.transitive = cls.transitive;
    rep.primitive = cls.primitive;
    rep.classification_verdict =
        cls.verdict == GroupClassification::Verdict::Alternating  ? "alternating"
        : cls.verdict == GroupClassification::Verdict::Symmetric ? "symmetric"
                                                                  : "other";
    rep.classification_degree = cls.degree;
    rep.order_known = cls.order_known;
    if (cls.order_known) rep.group_order = cls.order.str();
    if (cls.evidence) rep.witness_word = cls.evidence->word;

    ChiralityVerdict ch = decide_chirality(g, cls, opt.chirality);
    rep.chirality_verdict = ch.chiral() ? "chiral" : "reflexible";
    rep.chirality_method = to_string(ch.method);
    if (ch.lemma)
      rep.lemma = LemmaReport{ch.lemma->zeta + 1, ch.lemma->b, ch.lemma->c,
                              ch.lemma->lemma == Lemma::L2_6 ? "2.6" : "2.7",
                              ch.lemma->power_variant, ch.lemma->on_r};
    if (ch.relabelling) rep.relabelling = to_cycle_string(ch.relabelling->pi);
    rep.search_nodes = ch.search_nodes;
    rep.chirality_caveat = ch.caveat;

    if (cls.order_known) {
      MapRecord rec = build_record(g, cls, ch);
      rep.vertices = rec.vertices.str();
      rep.edges = rec.edges.str();
      rep.faces = rec.faces.str();
      rep.euler_characteristic = rec.euler_characteristic.str();
      rep.genus = rec.genus.str();
    }

    bool pass = rep.order_s->pass && rep.order_t->pass && rep.order_st->pass &&
                *rep.parity_pass && cls.transitive && cls.primitive &&
                cls.verdict == GroupClassification::Verdict::Alternating && ch.chiral();
    rep.overall = pass ? "PASS" : "FAIL";
  } catch (const Error& e) {
    rep.overall = "FAIL";
    rep.error = e.what();
  }
  return rep;
}

// --- JSON ---------------------------------------------------------------------

namespace detail {

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

template <typename T>
void from_opt(const nlohmann::json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace detail

inline nlohmann::json to_json(const OrderCheck& c) {
  return {{"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["requested_type"] = {{"m", r.requested_m}, {"n", r.requested_n}};
  j["plan"] = {{"outcome", r.plan_outcome},
               {"construction", detail::opt_json(r.construction)},
               {"a", detail::opt_json(r.a)},
               {"i", detail::opt_json(r.i)},
               {"nu", detail::opt_json(r.nu)},
               {"dualized", r.dualized},
               {"external_theorem", detail::opt_json(r.external_theorem)}};
  j["degree"] = detail::opt_json(r.degree);
  j["generators"] = {{"s", detail::opt_json(r.gen_s)},
                     {"t", detail::opt_json(r.gen_t)},
                     {"r", detail::opt_json(r.gen_r)}};
  nlohmann::json oc;
  oc["s"] = r.order_s ? to_json(*r.order_s) : nlohmann::json(nullptr);
  oc["t"] = r.order_t ? to_json(*r.order_t) : nlohmann::json(nullptr);
  oc["st"] = r.order_st ? to_json(*r.order_st) : nlohmann::json(nullptr);
  j["order_checks"] = oc;
  j["parity_checks"] = {{"s_even", detail::opt_json(r.s_even)},
                        {"t_even", detail::opt_json(r.t_even)},
                        {"pass", detail::opt_json(r.parity_pass)}};
  j["transitive"] = detail::opt_json(r.transitive);
  j["primitive"] = detail::opt_json(r.primitive);
  j["classification"] = {{"verdict", detail::opt_json(r.classification_verdict)},
                         {"degree", detail::opt_json(r.classification_degree)},
                         {"order", detail::opt_json(r.group_order)},
                         {"order_known", detail::opt_json(r.order_known)},
                         {"witness_word", detail::opt_json(r.witness_word)}};
  nlohmann::json lem = nullptr;
  if (r.lemma)
    lem = {{"zeta", r.lemma->zeta},       {"b", r.lemma->b},
           {"c", r.lemma->c},             {"lemma", r.lemma->lemma},
           {"power_variant", r.lemma->power_variant}, {"on_r", r.lemma->on_r}};
  j["chirality"] = {{"verdict", detail::opt_json(r.chirality_verdict)},
                    {"method", detail::opt_json(r.chirality_method)},
                    {"lemma", lem},
                    {"relabelling", detail::opt_json(r.relabelling)},
                    {"search_nodes", detail::opt_json(r.search_nodes)},
                    {"caveat", detail::opt_json(r.chirality_caveat)}};
  j["map"] = {{"vertices", detail::opt_json(r.vertices)},
              {"edges", detail::opt_json(r.edges)},
              {"faces", detail::opt_json(r.faces)},
              {"euler_characteristic", detail::opt_json(r.euler_characteristic)},
              {"genus", detail::opt_json(r.genus)}};
  j["overall"] = r.overall;
  j["error"] = detail::opt_json(r.error);
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.requested_m = j.at("requested_type").at("m").get<unsigned>();
  r.requested_n = j.at("requested_type").at("n").get<unsigned>();
  const auto& plan = j.at("plan");
  r.plan_outcome = plan.at("outcome").get<std::string>();
  detail::from_opt(plan, "construction", r.construction);
  detail::from_opt(plan, "a", r.a);
  detail::from_opt(plan, "i", r.i);
  detail::from_opt(plan, "nu", r.nu);
  r.dualized = plan.at("dualized").get<bool>();
  detail::from_opt(plan, "external_theorem", r.external_theorem);
  detail::from_opt(j, "degree", r.degree);
  const auto& gens = j.at("generators");
  detail::from_opt(gens, "s", r.gen_s);
  detail::from_opt(gens, "t", r.gen_t);
  detail::from_opt(gens, "r", r.gen_r);
  auto read_oc = [&](const char* key, std::optional<OrderCheck>& out) {
    const auto& v = j.at("order_checks").at(key);
    if (v.is_null()) return;
    out = OrderCheck{v.at("expected").get<unsigned long long>(),
                     v.at("actual").get<unsigned long long>(), v.at("pass").get<bool>()};
  };
  read_oc("s", r.order_s);
  read_oc("t", r.order_t);
  read_oc("st", r.order_st);
  const auto& pc = j.at("parity_checks");
  detail::from_opt(pc, "s_even", r.s_even);
  detail::from_opt(pc, "t_even", r.t_even);
  detail::from_opt(pc, "pass", r.parity_pass);
  detail::from_opt(j, "transitive", r.transitive);
  detail::from_opt(j, "primitive", r.primitive);
  const auto& cls = j.at("classification");
  detail::from_opt(cls, "verdict", r.classification_verdict);
  detail::from_opt(cls, "degree", r.classification_degree);
  detail::from_opt(cls, "order", r.group_order);
  detail::from_opt(cls, "order_known", r.order_known);
  detail::from_opt(cls, "witness_word", r.witness_word);
  const auto& ch = j.at("chirality");
  detail::from_opt(ch, "verdict", r.chirality_verdict);
  detail::from_opt(ch, "method", r.chirality_method);
  if (!ch.at("lemma").is_null()) {
    const auto& lem = ch.at("lemma");
    r.lemma = LemmaReport{lem.at("zeta").get<unsigned>(),    lem.at("b").get<int>(),
                          lem.at("c").get<int>(),            lem.at("lemma").get<std::string>(),
                          lem.at("power_variant").get<int>(), lem.at("on_r").get<bool>()};
  }
  detail::from_opt(ch, "relabelling", r.relabelling);
  detail::from_opt(ch, "search_nodes", r.search_nodes);
  detail::from_opt(ch, "caveat", r.chirality_caveat);
  const auto& map = j.at("map");
  detail::from_opt(map, "vertices", r.vertices);
  detail::from_opt(map, "edges", r.edges);
  detail::from_opt(map, "faces", r.faces);
  detail::from_opt(map, "euler_characteristic", r.euler_characteristic);
  detail::from_opt(map, "genus", r.genus);
  r.overall = j.at("overall").get<std::string>();
  detail::from_opt(j, "error", r.error);
  return r;
}

// --- sweep ---------------------------------------------------------------------

// All hyperbolic {m,n} with lo <= m <= max_m, lo <= n <= max_n, evaluated
// concurrently (each type's pipeline is independent), output sorted by (m,n).
inline std::vector<VerificationReport> run_sweep(unsigned lo, unsigned max_m, unsigned max_n,
                                                 const VerifyOptions& opt = {},
                                                 unsigned threads = 0) {
  std::vector<HyperbolicType> types;
  for (unsigned m = lo; m <= max_m; ++m)
    for (unsigned n = lo; n <= max_n; ++n)
      if (HyperbolicType{m, n}.is_hyperbolic()) types.push_back({m, n});

  std::vector<VerificationReport> reports(types.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, types.size() ? types.size() : 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < types.size(); idx = next.fetch_add(1))
      reports[idx] = verify_type(types[idx], opt);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;  // types were generated in (m,n) order
}

struct SweepSummary {
  unsigned pass = 0, fail = 0, unsupported = 0, skipped = 0;
};

inline SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    if (r.overall == "PASS") ++s.pass;
    else if (r.overall == "FAIL") ++s.fail;
    else if (r.overall == "UNSUPPORTED") ++s.unsupported;
    else ++s.skipped;
  }
  return s;
}

}  // namespace chiralmap
