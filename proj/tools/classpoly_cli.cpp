#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "classpoly/csp.hpp"
#include "classpoly/graph.hpp"
#include "classpoly/graph_io.hpp"
#include "classpoly/group.hpp"
#include "classpoly/histogram.hpp"
#include "classpoly/json_io.hpp"
#include "classpoly/verify.hpp"

namespace cp = classpoly;
using Json = nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GraphInput {
  std::string g6;
  std::string edges;
  std::vector<std::string> family;
};

void add_graph_input(CLI::App* sub, GraphInput& in) {
  auto* g6 = sub->add_option("--g6", in.g6, "Graph in graph6 format");
  auto* edges = sub->add_option("--edges", in.edges, "Edge-list file: 'n m' header, then one 'u v' per line");
  auto* fam = sub->add_option("--family", in.family, "Family kind and parameters, e.g. --family star 3")
                  ->expected(1, -1);
  g6->excludes(edges)->excludes(fam);
  edges->excludes(fam);
}

std::vector<int> parse_int_params(const std::vector<std::string>& words, std::size_t from) {
  std::vector<int> out;
  for (std::size_t i = from; i < words.size(); ++i) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(words[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != words[i].size()) throw std::invalid_argument("family parameter '" + words[i] + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

cp::Graph family_from_words(const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("family needs a kind");
  auto params = parse_int_params(words, 1);
  return cp::family(cp::parse_family_kind(words[0]), params);
}

cp::Graph load_graph(const GraphInput& in) {
  if (!in.g6.empty()) return cp::parse_graph6(in.g6);
  if (!in.edges.empty()) {
    std::ifstream file(in.edges);
    if (!file) throw std::invalid_argument("cannot read " + in.edges);
    return cp::parse_edge_list(file);
  }
  if (!in.family.empty()) return family_from_words(in.family);
  throw std::invalid_argument("one of --g6, --edges or --family is required");
}

cp::EnumerationOptions enumeration(int subset_cap) {
  cp::EnumerationOptions e;
  e.max_vertices = subset_cap;
  return e;
}

std::string zeta_string(const cp::DirichletPoly& z) {
  std::string out;
  for (const auto& [e, c] : z.terms) {
    if (!out.empty()) out += " + ";
    if (e == 1) {
      out += c.str();
    } else {
      out += (c == 1 ? std::string() : c.str() + "*") + e.str() + "^-s";
    }
  }
  return out.empty() ? "0" : out;
}

void print_report(const cp::GraphPolyReport& r, bool latex) {
  std::cout << "graph6: " << r.graph6 << "\n";
  std::cout << "n = " << r.n << ", m = " << r.m << "\n";
  if (latex) {
    std::cout << "C(X,Y) = " << r.C.to_latex() << "\n";
    std::cout << "F(X,Y) = " << r.F.to_latex() << "\n";
    std::cout << "f(X) = " << r.f.to_latex() << "\n";
  } else {
    std::cout << "C(X,Y) = " << r.C << "\n";
    std::cout << "F(X,Y) = " << r.F << "\n";
    std::cout << "f(X) = " << r.f << "\n";
  }
  std::cout << "eta = " << r.eta << ", deg f = " << r.deg_f << ", rank = " << r.rank
            << ", isolated = " << r.isolated << "\n";
}

int cmd_poly(const GraphInput& in, bool json, bool latex, int subset_cap) {
  cp::Graph g = load_graph(in);
  auto report = cp::make_report(g, enumeration(subset_cap), true);
  if (json) {
    std::cout << cp::to_json(report).dump(2) << "\n";
  } else {
    print_report(report, latex);
  }
  return kExitPass;
}

int cmd_family(const std::vector<std::string>& words, bool json, int subset_cap) {
  if (words.empty()) throw std::invalid_argument("family needs a kind");
  cp::FamilyKind kind = cp::parse_family_kind(words[0]);
  auto params = parse_int_params(words, 1);
  cp::Graph g = cp::family(kind, params);
  auto report = cp::make_report(g, enumeration(subset_cap), true);

  cp::ClosedForm closed;
  bool has_closed = true;
  try {
    closed = cp::closed_form(kind, params);
  } catch (const std::invalid_argument&) {
    has_closed = false;
  }
  Json checks = Json::object();
  bool ok = true;
  auto check = [&](const char* name, bool match) {
    checks[name] = match;
    ok = ok && match;
  };
  if (closed.C) check("C", *closed.C == report.C);
  if (closed.F) check("F", *closed.F == report.F);
  if (closed.f) check("f", *closed.f == report.f);

  if (json) {
    Json out = cp::to_json(report);
    out["family"] = cp::family_name(kind);
    out["params"] = params;
    out["edges"] = cp::to_edge_list(g);
    out["closed_form"] = has_closed ? checks : Json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family: " << cp::family_name(kind);
    for (int p : params) std::cout << " " << p;
    std::cout << "\n";
    print_report(report, false);
    if (!has_closed) {
      std::cout << "closed form: none for this family\n";
    } else {
      for (const auto& [name, match] : checks.items())
        std::cout << "closed form " << name << ": " << (match.get<bool>() ? "match" : "MISMATCH") << "\n";
    }
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_zeta(const GraphInput& in, const std::vector<int>& qs, const std::vector<int>& moduli, bool json,
             double budget_elems, int subset_cap) {
  cp::Graph g = load_graph(in);
  cp::XYPoly F = cp::compute_F(g, enumeration(subset_cap));
  bool ok = true;
  Json results = Json::array();
  for (int q : qs) {
    cp::ClassHistogram from_poly = cp::histogram_from_class_size_polynomial(F, q);
    cp::ClassHistogram lie = cp::lie_class_histogram(g, q);
    bool identity = cp::zeta_identity_check(g, q);
    bool match = lie == from_poly && identity;
    ok = ok && match;
    auto zeta = cp::class_zeta(from_poly);
    if (json) {
      results.push_back({{"ring", "F" + std::to_string(q)},
                         {"group_order", from_poly.mass().str()},
                         {"class_number", from_poly.class_number().str()},
                         {"histogram", cp::to_json(from_poly)},
                         {"zeta", cp::to_json(zeta)},
                         {"match", match}});
    } else {
      std::cout << "F" << q << ": |G| = " << from_poly.mass() << ", k(G) = " << from_poly.class_number()
                << ", histogram " << from_poly << "\n";
      std::cout << "  zeta(s) = " << zeta_string(zeta) << "\n";
      std::cout << "  Lie centralisers vs F(q,Y): " << (match ? "match" : "MISMATCH") << "\n";
    }
  }
  for (int n : moduli) {
    cp::BruteForceOptions bo;
    bo.budget_elements = budget_elems;
    cp::ClassHistogram h = cp::brute_force_class_histogram(g, cp::GroupRing::integers_mod(n), bo);
    auto zeta = cp::class_zeta(h);
    if (json) {
      results.push_back({{"ring", "Z/" + std::to_string(n)},
                         {"group_order", h.mass().str()},
                         {"class_number", h.class_number().str()},
                         {"histogram", cp::to_json(h)},
                         {"zeta", cp::to_json(zeta)}});
    } else {
      std::cout << "Z/" << n << ": |G| = " << h.mass() << ", k(G) = " << h.class_number() << ", histogram " << h
                << "\n";
      std::cout << "  zeta(s) = " << zeta_string(zeta) << "\n";
    }
  }
  if (json) {
    std::cout << Json{{"schema", cp::kJsonSchemaVersion}, {"graph6", cp::encode_graph6(g)}, {"results", results}}.dump(2)
              << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_domset(const GraphInput& in, bool json, int subset_cap) {
  cp::Graph g = load_graph(in);
  if (g.order() < 2) throw std::invalid_argument("domset needs at least 2 vertices");
  auto sets = cp::connected_dominating_sets(g);
  cp::XPoly poly = cp::connected_domination_poly(g);
  cp::XYPoly C = cp::compute_C(g, enumeration(subset_cap));
  cp::XPoly extracted = cp::shift_x(C.coeff_y(g.order() - 1), 1);
  bool match = extracted == poly;
  if (json) {
    Json list = Json::array();
    for (auto s : sets) list.push_back(s.members());
    std::cout << Json{{"schema", cp::kJsonSchemaVersion},
                      {"graph6", cp::encode_graph6(g)},
                      {"connected_dominating_sets", list},
                      {"polynomial", cp::to_json(poly)},
                      {"from_C", cp::to_json(extracted)},
                      {"match", match}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "connected dominating sets: " << sets.size() << "\n";
    for (auto s : sets) std::cout << "  " << cp::to_string(s) << "\n";
    std::cout << "D(X) = " << poly << "\n";
    std::cout << "[Y^(n-1)] C(X+1,Y) = " << extracted << " (" << (match ? "match" : "MISMATCH") << ")\n";
  }
  return match ? kExitPass : kExitFail;
}

int cmd_eta(const GraphInput& in, bool json, int subset_cap) {
  cp::Graph g = load_graph(in);
  auto opts = enumeration(subset_cap);
  int eta = cp::eta(g, opts);
  int eta_dom = cp::eta_via_dominating(g, subset_cap);
  int deg_f = cp::compute_f(g, opts).degree().value();
  int alpha = cp::independence_number(g);
  int hansen = cp::hansen_independence_bound(g.order(), g.size());
  bool ok = eta == eta_dom && deg_f == g.size() + eta && eta <= alpha && alpha <= hansen;
  if (json) {
    std::cout << Json{{"schema", cp::kJsonSchemaVersion},
                      {"graph6", cp::encode_graph6(g)},
                      {"eta", eta},
                      {"eta_dominating", eta_dom},
                      {"deg_f", deg_f},
                      {"m", g.size()},
                      {"alpha", alpha},
                      {"hansen_bound", hansen},
                      {"consistent", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "eta = " << eta << " (dominating sets: " << eta_dom << ")\n";
    std::cout << "deg f = " << deg_f << " = m + eta with m = " << g.size() << "\n";
    std::cout << "alpha = " << alpha << " <= " << hansen << "\n";
    if (!ok) std::cout << "INCONSISTENT\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, cp::SuiteOptions opts, bool nmin_given, bool json, bool timestamp) {
  bool pair_suite = suite == "compose" || suite == "zeta-join";
  if (!nmin_given) opts.nmin = pair_suite ? 2 : opts.nmax;
  auto report = cp::run_suite(suite, opts);
  if (json) {
    std::cout << cp::to_json(report, timestamp).dump(2) << "\n";
  } else {
    for (const auto& c : report.cases) {
      if (c.status == cp::CaseStatus::kPass) continue;
      std::cout << cp::to_string(c.status) << " " << c.graph6;
      if (!c.params.empty()) std::cout << " " << c.params.dump();
      std::cout << ": " << c.witness << "\n";
    }
    std::cout << suite << ": " << report.cases.size() << " cases, " << report.count(cp::CaseStatus::kPass)
              << " pass, " << report.count(cp::CaseStatus::kFail) << " fail, "
              << report.count(cp::CaseStatus::kSkip) << " skip\n";
  }
  return report.ok() ? kExitPass : kExitFail;
}

int cmd_batch(const std::string& path, bool json, int subset_cap, int threads) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot read " + path);
    in = &file;
  }
  auto opts = enumeration(subset_cap);
  opts.threads = threads;
  auto records = cp::run_batch(*in, opts);
  if (json) {
    std::cout << cp::to_json(records).dump(2) << "\n";
  } else {
    std::cout << cp::to_csv(records);
  }
  for (const auto& r : records)
    if (r.status != "ok") return kExitFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class-counting polynomials of graphical groups"};
  app.name("classpoly");
  app.require_subcommand(1);

  bool json = false;
  bool latex = false;
  bool csv = false;
  bool no_timestamp = false;
  int budget_subsets = cp::kDefaultSubsetCapVertices;
  double budget_elems = 2e5;
  GraphInput input;

  auto* poly = app.add_subcommand("poly", "C, F, f, eta of one graph");
  add_graph_input(poly, input);
  poly->add_flag("--json", json, "JSON output");
  poly->add_flag("--latex", latex, "LaTeX polynomials");
  poly->add_option("--budget-subsets", budget_subsets, "Largest n for subset enumeration");

  std::vector<std::string> family_words;
  auto* fam = app.add_subcommand("family", "Report for a named family, checked against its closed form");
  fam->add_option("family", family_words, "Kind and parameters, e.g. star 3 or complete-bipartite 2 3")
      ->required()
      ->expected(1, -1);
  fam->add_flag("--json", json, "JSON output");
  fam->add_option("--budget-subsets", budget_subsets, "Largest n for subset enumeration");

  std::vector<int> qs{2, 3};
  std::vector<int> moduli;
  auto* zeta = app.add_subcommand("zeta", "Class histograms and class zeta functions");
  add_graph_input(zeta, input);
  zeta->add_option("--q", qs, "Field orders")->delimiter(',');
  zeta->add_option("--N", moduli, "Moduli N for Z/N (brute force)")->delimiter(',');
  zeta->add_flag("--json", json, "JSON output");
  zeta->add_option("--budget-elems", budget_elems, "Largest group order for brute force");
  zeta->add_option("--budget-subsets", budget_subsets, "Largest n for subset enumeration");

  auto* domset = app.add_subcommand("domset", "Connected dominating sets and their generating polynomial");
  add_graph_input(domset, input);
  domset->add_flag("--json", json, "JSON output");
  domset->add_option("--budget-subsets", budget_subsets, "Largest n for subset enumeration");

  auto* eta = app.add_subcommand("eta", "eta, computed two ways, with the independence bounds");
  add_graph_input(eta, input);
  eta->add_flag("--json", json, "JSON output");
  eta->add_option("--budget-subsets", budget_subsets, "Largest n for subset enumeration");

  std::string suite;
  cp::SuiteOptions suite_opts;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over all labelled graphs in scope");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(cp::suite_names()));
  auto* nmin_opt = verify->add_option("--nmin", suite_opts.nmin,
                                      "Smallest n (default: nmax; 2 for pair suites, where n = n1 + n2)");
  verify->add_option("--nmax", suite_opts.nmax, "Largest n (n1 + n2 for pair suites)");
  verify->add_option("--q", suite_opts.qs, "Field orders")->delimiter(',');
  verify->add_option("--N", suite_opts.moduli, "Moduli for the crt suite")->delimiter(',');
  verify->add_option("--budget-elems", suite_opts.budget_elements, "Largest group order for brute force");
  verify->add_option("--budget-subsets", suite_opts.budget_subset_vertices, "Largest n for subset enumeration");
  verify->add_option("--threads", suite_opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--no-timestamp", no_timestamp, "Omit timestamp and wall time from the JSON report");

  std::string batch_path;
  int batch_threads = 1;
  auto* batch = app.add_subcommand("batch", "Reports for a file of graph6 lines ('-' for stdin)");
  batch->add_option("file", batch_path, "Input file")->required();
  auto* batch_json = batch->add_flag("--json", json, "JSON records");
  batch->add_flag("--csv", csv, "CSV records (default)")->excludes(batch_json);
  batch->add_option("--threads", batch_threads, "Worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--budget-subsets", budget_subsets, "Largest n for subset enumeration");

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
    if (*poly) return cmd_poly(input, json, latex, budget_subsets);
    if (*fam) return cmd_family(family_words, json, budget_subsets);
    if (*zeta) return cmd_zeta(input, qs, moduli, json, budget_elems, budget_subsets);
    if (*domset) return cmd_domset(input, json, budget_subsets);
    if (*eta) return cmd_eta(input, json, budget_subsets);
    if (*verify) return cmd_verify(suite, suite_opts, nmin_opt->count() > 0, json, !no_timestamp);
    if (*batch) return cmd_batch(batch_path, json, budget_subsets, batch_threads);
  } catch (const cp::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
