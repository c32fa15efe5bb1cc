// diamondlab command-line front end.
//
// Exit status: 0 when every requested check passes, 1 on a verification
// violation, 2 on a usage or IO error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamondlab/certificate.hpp"
#include "diamondlab/error.hpp"
#include "diamondlab/graph.hpp"
#include "diamondlab/lattice.hpp"
#include "diamondlab/patterns.hpp"
#include "diamondlab/report.hpp"
#include "diamondlab/search.hpp"
#include "diamondlab/verify.hpp"

namespace dl = diamondlab;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = -1;
  int v_max = -1;
  int n_max = -1;
  int count = -1;
  std::string pattern = "diamond";
  std::string family_path;
  std::string graph_path;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string format = "text";
  std::string out_path;
  bool exhaustive = false;
  std::uint64_t node_budget = 200'000'000;
  std::string witness_out;
  std::string which = "all";
};

void write_output(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw dl::Error(dl::ErrorCode::Parse, "cannot write " + o.out_path);
  out << text;
}

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ";") + scalar_text(e);
    return s;
  }
  return v.dump();
}

// Query results: a flat JSON object. Text prints `key: value` lines, or just the
// value when `bare` names a single key to show.
int emit_query(const Options& o, const ojson& obj, const std::string& bare = {}) {
  std::ostringstream s;
  if (o.format == "json") {
    s << obj.dump(2) << '\n';
  } else if (o.format == "csv") {
    bool first = true;
    for (const auto& [k, v] : obj.items()) s << (first ? "" : ",") << k, first = false;
    s << '\n';
    first = true;
    for (const auto& [k, v] : obj.items()) s << (first ? "" : ",") << scalar_text(v), first = false;
    s << '\n';
  } else if (!bare.empty()) {
    s << scalar_text(obj.at(bare)) << '\n';
  } else {
    for (const auto& [k, v] : obj.items()) s << k << ": " << scalar_text(v) << '\n';
  }
  write_output(o, s.str());
  return kExitOk;
}

int emit_reports(const Options& o, const std::vector<dl::Report>& reports) {
  std::string text = o.format == "json" ? dl::format_json(reports)
                     : o.format == "csv" ? dl::format_csv(reports)
                                         : dl::format_text(reports);
  write_output(o, text);
  for (const auto& r : reports)
    if (!r.ok()) return kExitViolation;
  return kExitOk;
}

dl::Family need_family(const Options& o) {
  if (o.family_path.empty()) throw dl::Error(dl::ErrorCode::BadParameter, "--family FILE is required");
  return dl::read_family_file(o.family_path);
}

ojson set_list(const dl::Family& f) {
  auto arr = ojson::array();
  for (auto s : f) arr.push_back(dl::format_set(s));
  return arr;
}

int run_lubell(const Options& o) {
  const auto f = need_family(o);
  ojson obj;
  obj["n"] = f.universe();
  obj["members"] = f.size();
  obj["lubell"] = dl::to_string(dl::lubell(f));
  return emit_query(o, obj, "lubell");
}

int run_census(const Options& o) {
  const auto f = need_family(o);
  const auto c = dl::psi_census(f, o.threads);
  ojson obj;
  obj["n"] = f.universe();
  auto counts = ojson::array();
  for (auto x : c.counts) counts.push_back(x);
  obj["counts"] = counts;
  obj["chains"] = c.total();
  obj["lubell"] = dl::to_string(dl::lubell(f));
  obj["average_hits"] = dl::to_string(c.average_hits());
  return emit_query(o, obj);
}

int run_check(const Options& o) {
  const auto f = need_family(o);
  const auto p = dl::parse_pattern(o.pattern);
  const auto w = dl::find_pattern(f, p);
  ojson obj;
  obj["pattern"] = p.name();
  obj["contains"] = w.has_value();
  if (w) {
    auto arr = ojson::array();
    for (auto idx : *w) arr.push_back(dl::format_set(f.members()[idx]));
    obj["witness"] = arr;
  }
  if (p.name() == "diamond") obj["fast_diamond_free"] = dl::is_diamond_free(f);
  return emit_query(o, obj);
}

int emit_search(const Options& o, const dl::SearchResult& r, const std::string& what) {
  if (!o.witness_out.empty()) {
    std::ofstream out(o.witness_out, std::ios::binary);
    if (!out) throw dl::Error(dl::ErrorCode::Parse, "cannot write " + o.witness_out);
    dl::write_family(out, r.witness);
  }
  ojson obj;
  obj["search"] = what;
  obj["n"] = r.witness.universe();
  obj["objective"] = dl::to_string(r.objective);
  obj["exhaustive"] = r.exhaustive;
  obj["nodes_explored"] = r.nodes_explored;
  obj["witness"] = set_list(r.witness);
  return emit_query(o, obj);
}

dl::SearchConfig search_config(const Options& o) {
  return {.exhaustive = o.exhaustive, .node_budget = o.node_budget, .threads = o.threads};
}

int run_search_la(const Options& o) {
  if (o.n < 0) throw dl::Error(dl::ErrorCode::BadParameter, "--n is required");
  const auto p = dl::parse_pattern(o.pattern);
  return emit_search(o, dl::la(o.n, p, search_config(o)), "la(" + p.name() + ")");
}

int run_lubell_star(const Options& o) {
  if (o.n < 0) throw dl::Error(dl::ErrorCode::BadParameter, "--n is required");
  return emit_search(o, dl::lubell_star(o.n, search_config(o)), "lubell_star");
}

int run_f_value(const Options& o) {
  dl::StructureW s;
  if (!o.graph_path.empty()) {
    s = dl::read_structure_file(o.graph_path);
  } else {
    s = dl::extract_structure(need_family(o));
  }
  const int n = s.universe();
  ojson obj;
  obj["n"] = n;
  obj["v"] = s.graph.order();
  obj["w"] = s.parts.size();
  obj["f"] = dl::to_string(dl::f_value(n, s));
  if (s.graph.order() >= 4) obj["per_H_sum"] = dl::to_string(dl::per_H_sum(n, s));
  if (s.graph.order() <= 22 && n >= 3) obj["worst_case_f"] = dl::to_string(dl::worst_case_f(n, s.graph));
  return emit_query(o, obj);
}

int run_verify(const std::string& which, const Options& o) {
  if (which == "lemma2") {
    dl::Lemma2Options l;
    l.seed = o.seed;
    l.threads = o.threads;
    if (o.count >= 0) l.random_count = o.count;
    if (o.n >= 0) {
      if (o.exhaustive) {
        l.exhaustive_n_max = o.n;
        l.random_n.clear();
      } else {
        l.exhaustive_n_max = 0;
        l.random_n = {o.n};
      }
    }
    return emit_reports(o, dl::verify_lemma2(l));
  }
  if (which == "fH") return emit_reports(o, {dl::verify_fh(o.count >= 0 ? o.count : 500, o.seed, o.threads)});
  if (which == "psi-bounds") {
    if (!o.family_path.empty()) {
      const auto f = need_family(o);
      const auto r = dl::psi_bounds_check(f, o.threads);
      dl::Report rep("psi_bounds");
      rep.check(r.psi1_holds, "psi1", "|Psi_1| = " + std::to_string(r.psi1) + " below bound");
      rep.check(r.psi3_holds, "psi3", "|Psi_3| = " + std::to_string(r.psi3) + " above bound");
      rep.check(r.difference_holds, "psi3-psi1", "difference above bound");
      rep.info()["n"] = r.n;
      rep.info()["psi1"] = r.psi1;
      rep.info()["psi3"] = r.psi3;
      rep.info()["psi1_lower_over_(n-3)!"] = dl::to_string(r.psi1_lower);
      rep.info()["psi3_upper_over_(n-3)!"] = dl::to_string(r.psi3_upper);
      rep.info()["difference_upper_over_(n-3)!"] = dl::to_string(r.difference_upper);
      return emit_reports(o, {rep});
    }
    return emit_reports(o, {dl::verify_psi_bounds(o.n >= 0 ? o.n : 7, o.count >= 0 ? o.count : 500, o.seed, o.threads)});
  }
  if (which == "epsilon") return emit_reports(o, {dl::epsilon_table_check(5, o.n_max >= 0 ? o.n_max : 30)});
  if (which == "sq-identity")
    return emit_reports(o, {dl::verify_sq_identity(o.count >= 0 ? o.count : 200, o.v_max >= 0 ? o.v_max : 16, o.seed, o.threads)});
  if (which == "case1") return emit_reports(o, {dl::case1_check(6, o.n_max >= 0 ? o.n_max : 60)});
  if (which == "lemma3")
    return emit_reports(o, {dl::lemma3_scan(o.v_max >= 0 ? o.v_max : 7, o.n_max >= 0 ? o.n_max : 40, o.threads)});
  if (which == "tables") return emit_reports(o, dl::verify_tables(o.which));
  throw dl::Error(dl::ErrorCode::BadParameter, "unknown verification " + which);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diamondlab: diamond-free families, Lubell values and the flag-algebra certificate"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out_path, "Write output to FILE");
    sub->add_option("--threads", o.threads, "Worker threads (default: $DIAMONDLAB_THREADS or hardware)");
  };

  auto* lubell = app.add_subcommand("lubell", "Lubell value of a family");
  lubell->add_option("--family", o.family_path, "Family file")->required();
  add_common(lubell);

  auto* census = app.add_subcommand("census", "Full-chain census |Psi_i|");
  census->add_option("--family", o.family_path, "Family file")->required();
  add_common(census);

  auto* check = app.add_subcommand("check", "Weak-subposet containment");
  check->add_option("--family", o.family_path, "Family file")->required();
  check->add_option("--pattern", o.pattern, "diamond, P<k>, V<r> or D<k>");
  add_common(check);

  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Universe size")->required();
    sub->add_flag("--exhaustive", o.exhaustive, "Ignore the node budget");
    sub->add_option("--node-budget", o.node_budget, "Total search nodes");
    sub->add_option("--witness-out", o.witness_out, "Write the witness family to FILE");
    add_common(sub);
  };
  auto* search_la = app.add_subcommand("search-la", "Largest P-free family");
  search_la->add_option("--pattern", o.pattern, "diamond, P<k>, V<r> or D<k>");
  add_search(search_la);
  auto* lstar = app.add_subcommand("lubell-star", "Max Lubell value of a diamond-free family containing the empty set");
  add_search(lstar);

  auto* fval = app.add_subcommand("f-value", "Graph invariant f(n, G, W)");
  fval->add_option("--graph", o.graph_path, "Structure file (graph plus w lines)");
  fval->add_option("--family", o.family_path, "Family file (structure is extracted)");
  add_common(fval);

  auto* verify = app.add_subcommand("verify", "Verification runs");
  verify->require_subcommand(1);
  std::string verify_name;
  for (const char* name : {"lemma2", "fH", "psi-bounds", "epsilon", "sq-identity", "case1", "lemma3", "tables"}) {
    auto* sub = verify->add_subcommand(name);
    sub->add_option("--n", o.n, "Universe size");
    sub->add_option("--v-max", o.v_max, "Largest vertex count");
    sub->add_option("--n-max", o.n_max, "Largest n");
    sub->add_option("--count", o.count, "Random corpus size");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--family", o.family_path, "Family file");
    sub->add_flag("--exhaustive", o.exhaustive, "Exhaustive corpus for n = 1..N");
    if (std::string(name) == "tables")
      sub->add_option("--which", o.which, "Table group")
          ->check(CLI::IsMember({"eps", "dstar", "gamma_c", "simplified", "gmax", "all"}));
    add_common(sub);
    sub->callback([&verify_name, name] { verify_name = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lubell) return run_lubell(o);
    if (*census) return run_census(o);
    if (*check) return run_check(o);
    if (*search_la) return run_search_la(o);
    if (*lstar) return run_lubell_star(o);
    if (*fval) return run_f_value(o);
    if (*verify) return run_verify(verify_name, o);
  } catch (const dl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
