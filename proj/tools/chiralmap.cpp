// chiralmap: construct and verify chiral orientably-regular maps with
// alternating automorphism group for hyperbolic types {m,n}.
//
// Exit codes: 0 PASS, 1 FAIL/internal error, 2 UNSUPPORTED, 3 not hyperbolic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "chiralmap/map_model.hpp"
#include "chiralmap/report.hpp"

namespace {

using namespace chiralmap;

int exit_code_for(const VerificationReport& rep) {
  if (rep.overall == "PASS" || rep.overall == "SKIPPED") return 0;
  if (rep.overall == "UNSUPPORTED") return 2;
  return 1;
}

void print_human(const VerificationReport& r, std::ostream& os) {
  os << "type {" << r.requested_m << "," << r.requested_n << "}: " << r.overall << "\n";
  if (r.plan_outcome == "unsupported_external") {
    os << "  covered externally by " << *r.external_theorem << "\n";
    return;
  }
  os << "  construction " << r.construction.value_or("-") << (r.dualized ? " (dualized)" : "")
     << ", degree " << (r.degree ? std::to_string(*r.degree) : "-") << "\n";
  if (r.gen_s) os << "  s = " << *r.gen_s << "\n";
  if (r.gen_t) os << "  t = " << *r.gen_t << "\n";
  if (r.gen_r) os << "  r = " << *r.gen_r << "\n";
  if (r.order_s)
    os << "  orders: s " << r.order_s->actual << "/" << r.order_s->expected << " t "
       << r.order_t->actual << "/" << r.order_t->expected << " st " << r.order_st->actual << "/"
       << r.order_st->expected << "\n";
  if (r.transitive)
    os << "  transitive " << (*r.transitive ? "yes" : "no") << ", primitive "
       << (*r.primitive ? "yes" : "no") << "\n";
  if (r.classification_verdict) {
    os << "  group: " << *r.classification_verdict << "(" << *r.classification_degree << ")";
    if (r.group_order) os << ", order " << *r.group_order;
    if (r.witness_word) os << ", witness " << *r.witness_word;
    os << "\n";
  }
  if (r.chirality_verdict) {
    os << "  chirality: " << *r.chirality_verdict << " via " << *r.chirality_method;
    if (r.lemma)
      os << " (zeta=" << r.lemma->zeta << ", b=" << r.lemma->b << ", c=" << r.lemma->c
         << (r.lemma->on_r ? ", on r" : "") << ")";
    os << "\n";
    if (r.chirality_caveat) os << "  caveat: " << *r.chirality_caveat << "\n";
  }
  if (r.genus)
    os << "  map: V=" << *r.vertices << " E=" << *r.edges << " F=" << *r.faces
       << " chi=" << *r.euler_characteristic << " genus=" << *r.genus << "\n";
  if (r.error) os << "  error: " << *r.error << "\n";
}

OracleMode parse_oracle(const std::string& s) {
  if (s == "conjugation") return OracleMode::Conjugation;
  if (s == "abstract") return OracleMode::Abstract;
  return OracleMode::Auto;
}

int cmd_construct(unsigned m, unsigned n, bool as_json, const std::string& dot_path,
                  const std::string& oracle) {
  VerifyOptions opt;
  opt.degree_cap = degree_cap_from_env();
  opt.chirality.mode = parse_oracle(oracle);
  VerificationReport rep;
  try {
    rep = verify_type({m, n}, opt);
  } catch (const NotHyperbolic& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  if (!dot_path.empty() && rep.plan_outcome == "supported") {
    ConstructionPlan plan = dispatch({m, n});
    GeneratorSet g = build(plan);
    std::ofstream out(dot_path);
    out << export_dot(g);
  }
  if (as_json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    print_human(rep, std::cout);
  return exit_code_for(rep);
}

int cmd_sweep(unsigned max_m, unsigned max_n, unsigned degree_cap, const std::string& out_path,
              unsigned threads) {
  VerifyOptions opt;
  opt.degree_cap = degree_cap ? degree_cap : degree_cap_from_env();
  auto reports = run_sweep(3, max_m, max_n, opt, threads);
  SweepSummary sum = summarize(reports);
  nlohmann::json j;
  j["max_m"] = max_m;
  j["max_n"] = max_n;
  j["degree_cap"] = opt.degree_cap;
  j["summary"] = {{"pass", sum.pass},
                  {"fail", sum.fail},
                  {"unsupported", sum.unsupported},
                  {"skipped", sum.skipped}};
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["reports"] = arr;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
  std::cout << "sweep " << max_m << "x" << max_n << ": " << sum.pass << " pass, " << sum.fail
            << " fail, " << sum.unsupported << " unsupported, " << sum.skipped << " skipped\n";
  for (const auto& r : reports)
    if (r.overall == "FAIL")
      std::cout << "  FAIL {" << r.requested_m << "," << r.requested_n << "}"
                << (r.error ? ": " + *r.error : "") << "\n";
  return sum.fail == 0 ? 0 : 1;
}

int cmd_table1(bool as_json) {
  VerifyOptions opt;
  opt.degree_cap = degree_cap_from_env();
  nlohmann::json arr = nlohmann::json::array();
  bool all_pass = true;
  for (const Table1Row& row : table1_rows()) {
    for (HyperbolicType type : {row.type, row.type.dual()}) {
      VerificationReport rep = verify_type(type, opt);
      all_pass = all_pass && rep.overall == "PASS";
      if (as_json)
        arr.push_back(to_json(rep));
      else
        print_human(rep, std::cout);
    }
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive verifier for chiral maps with alternating automorphism group"};
  app.require_subcommand(1);

  unsigned m = 0, n = 0;
  bool as_json = false;
  std::string dot_path, oracle = "auto";
  auto* construct = app.add_subcommand("construct", "construct and verify one type {m,n}");
  construct->add_option("-m", m, "face length")->required();
  construct->add_option("-n", n, "vertex valency")->required();
  construct->add_flag("--json", as_json, "emit the JSON report");
  construct->add_option("--dot", dot_path, "write the permutation diagram as DOT");
  construct->add_option("--oracle", oracle, "chirality oracle: auto|conjugation|abstract")
      ->check(CLI::IsMember({"auto", "conjugation", "abstract"}));

  unsigned max_m = 21, max_n = 21, degree_cap = 0, threads = 0;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "verify every hyperbolic type in a range");
  sweep->add_option("--max-m", max_m, "largest m")->required();
  sweep->add_option("--max-n", max_n, "largest n")->required();
  sweep->add_option("--degree-cap", degree_cap, "skip types with diagram degree above this");
  sweep->add_option("--threads", threads, "worker threads (default: cores)");
  sweep->add_option("--out", out_path, "JSON report file")->required();

  bool t1_json = false;
  auto* table1 = app.add_subcommand("table1", "verify the gap table rows and their duals");
  table1->add_flag("--json", t1_json, "emit JSON reports");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(m, n, as_json, dot_path, oracle);
    if (sweep->parsed()) return cmd_sweep(max_m, max_n, degree_cap, out_path, threads);
    if (table1->parsed()) return cmd_table1(t1_json);
  } catch (const chiralmap::NotHyperbolic& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const chiralmap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
