// qgc: search, construct and verify qudit graph codes.
//
// Exit codes: 0 success, 1 invalid input, 2 budget exhausted, 3 verification failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgc/qgc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct GraphArgs {
  std::string graph_file;
  std::string family;
  int n = 0;
  int modulus = 0;
  bool double_edge = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qgc::InvalidArgument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw qgc::InvalidArgument("cannot write " + path);
  out << text;
}

qgc::Graph load_graph(const GraphArgs& a) {
  if (!a.graph_file.empty()) {
    auto g = qgc::parse_graph(read_file(a.graph_file));
    if (a.modulus != 0 && a.modulus != g.modulus()) {
      throw qgc::InvalidArgument("--D " + std::to_string(a.modulus) + " does not match D = " + std::to_string(g.modulus()) + " in " + a.graph_file);
    }
    return g;
  }
  if (a.family.empty()) throw qgc::InvalidArgument("give either --graph FILE or --family NAME");
  if (a.n < 1) throw qgc::InvalidArgument("--family needs --n");
  if (a.modulus < 2) throw qgc::InvalidArgument("--family needs --D >= 2");
  return qgc::build_family(qgc::parse_family(a.family), a.n, a.modulus, {a.double_edge});
}

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  auto* file = cmd->add_option("--graph", a.graph_file, "Graph file (header 'D n', then n rows of weights)");
  auto* fam = cmd->add_option("--family", a.family, "bar, star, cycle, wheel or hypercube");
  file->excludes(fam);
  cmd->add_option("--n", a.n, "Number of vertices");
  cmd->add_option("--D", a.modulus, "Qudit dimension");
  cmd->add_flag("--double-edge", a.double_edge, "Cycle only: weight 2 on the edge {1,2}");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_distance_failure(const qgc::DistanceReport& r) {
  std::cout << "FAIL: " << r.message << "\n";
  if (r.shift) std::cout << "  label shift " << r.shift->to_digits() << ", size " << r.witness_size << "\n";
  if (r.witness) std::cout << "  witness " << qgc::to_string(*r.witness) << "\n";
}

// Emits the report after re-checking the code; returns the exit code.
int finish(const qgc::GraphCode& code, const qgc::CodeReport& report, const std::string& out) {
  const auto check = qgc::assert_distance(code);
  if (!check.pass || code.K() > code.qs_bound()) {
    std::cerr << "internal verification failed: " << (check.pass ? "K exceeds the Singleton bound" : check.message) << "\n";
    return kExitVerify;
  }
  write_output(out, qgc::serialize_report(report));
  if (!out.empty()) {
    std::cout << "K=" << code.K() << " n=" << code.n() << " D=" << code.modulus() << " delta=" << code.delta()
              << (code.additive() ? " additive" : " nonadditive") << (code.exhaustive() ? "" : " (search incomplete)") << " -> " << out << "\n";
  }
  return code.exhaustive() ? kExitOk : kExitBudget;
}

struct SearchArgs {
  GraphArgs graph;
  int delta = 0;
  bool additive_only = false;
  double budget = 0;
  std::string out;
  bool seq = false;
};

qgc::SearchOptions search_options(double budget, bool seq) {
  qgc::SearchOptions o;
  if (budget > 0) o.budget = std::chrono::duration<double>(budget);
  o.parallel = !seq;
  return o;
}

int cmd_search(const SearchArgs& a) {
  const auto g = load_graph(a.graph);
  const auto t0 = std::chrono::steady_clock::now();
  const std::string method = a.additive_only ? "search-additive" : "search";
  try {
    const auto opts = search_options(a.budget, a.seq);
    auto res = a.additive_only ? qgc::search_additive(g, a.delta, opts) : qgc::search_code(g, a.delta, opts);
    return finish(res.code, qgc::make_report(res.code, method, seconds_since(t0)), a.out);
  } catch (const qgc::DegenerateRegime& e) {
    write_output(a.out, qgc::serialize_report(qgc::make_refusal(g, a.delta, method, "diagonal-distance", seconds_since(t0))));
    if (!a.out.empty()) std::cout << "K=0: " << e.what() << "\n";
    return kExitOk;
  }
}

struct ConstructArgs {
  std::string method;
  GraphArgs graph;
  std::vector<int> v1;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  if (a.method == "hypercube16") {
    const auto code = qgc::hypercube16_code();
    return finish(code, qgc::make_report(code, a.method, seconds_since(t0)), a.out);
  }
  if (a.method == "star-odd") {
    if (a.graph.n < 3) throw qgc::InvalidArgument("star-odd needs --n");
    if (a.graph.modulus != 0 && a.graph.modulus != 2) throw qgc::InvalidArgument("star-odd codes are qubit codes (D = 2)");
    const auto code = qgc::star_code_odd(a.graph.n);
    return finish(code, qgc::make_report(code, a.method, seconds_since(t0)), a.out);
  }
  if (a.method == "partition") {
    GraphArgs ga = a.graph;
    if (ga.graph_file.empty() && ga.family.empty()) ga.family = "bar";
    const auto g = load_graph(ga);
    qgc::PartitionSpec spec = qgc::bar_partition(g);
    if (!a.v1.empty()) {
      spec.v1.clear();
      for (int v : a.v1) spec.v1.push_back(v - 1);
    }
    const auto code = qgc::partition_code(spec);
    return finish(code, qgc::make_report(code, a.method, seconds_since(t0)), a.out);
  }
  throw qgc::InvalidArgument("unknown method '" + a.method + "' (partition, star-odd, hypercube16)");
}

int cmd_verify(const std::string& file, bool oracle) {
  const auto report = qgc::parse_report(read_file(file));
  if (report.K() == 0) {
    std::cout << "no code in report" << (report.reason ? " (" + *report.reason + ")" : "") << "\n";
    return kExitOk;
  }
  const auto& g = report.graph;
  const auto& words = report.codewords;
  bool ok = true;
  if (std::find_if(words.begin(), words.end(), [](const qgc::ModTuple& w) { return w.is_zero(); }) == words.end()) {
    std::cout << "FAIL: the zero label is not a codeword\n";
    ok = false;
  }
  const auto dist = qgc::assert_distance(g, report.delta, words);
  if (dist.pass) {
    std::cout << "distance: pass (delta " << report.delta << ", K " << words.size() << ")\n";
  } else {
    print_distance_failure(dist);
    ok = false;
  }
  const auto bound = qgc::qs_bound(g.n(), report.delta, g.modulus());
  if (words.size() > bound) {
    std::cout << "FAIL: K = " << words.size() << " exceeds the Singleton bound " << bound << "\n";
    ok = false;
  }
  const bool additive = qgc::is_additive(g.modulus(), g.n(), words).additive;
  if (additive != report.additive) {
    std::cout << "FAIL: report says additive = " << report.additive << " but the codewords say " << additive << "\n";
    ok = false;
  }
  if (oracle) {
    const auto kl = qgc::kl_verify(g, words, report.delta);
    if (kl.pass) {
      std::cout << "oracle: pass (" << kl.products_checked << " products" << (kl.nondegenerate ? ", nondegenerate" : "") << ")\n";
    } else {
      std::cout << "oracle: FAIL: " << kl.message << "\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_stabilizer(const std::string& file) {
  const auto code = qgc::parse_report(read_file(file)).to_code();
  const auto stab = qgc::stabilizer_subgroup(code);
  const auto r = qgc::verify_stabilizer(code, stab);
  std::cout << "|C| = " << code.K() << ", |S| = " << stab.order << "\n";
  for (const auto& c : r.checks) {
    std::cout << (c.pass ? "pass " : "FAIL ") << c.name << (c.exhaustive ? "" : " (generators only)") << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  if (stab.enumerated) {
    for (std::size_t i = 0; i < stab.tuples.size() && i < 16; ++i) std::cout << "  " << stab.tuples[i].to_digits() << "  " << qgc::to_string(stab.elements[i]) << "\n";
    if (stab.tuples.size() > 16) std::cout << "  ... " << stab.tuples.size() - 16 << " more\n";
  }
  return r.pass ? kExitOk : kExitVerify;
}

struct TableArgs {
  GraphArgs graph;
  int n_min = 0;
  int n_max = 0;
  std::string deltas;
  double budget = 0;
  bool additive_only = false;
  bool seq = false;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw qgc::InvalidArgument("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw qgc::InvalidArgument("empty list");
  return out;
}

int cmd_table(const TableArgs& a) {
  if (a.graph.family.empty()) throw qgc::InvalidArgument("table needs --family");
  if (a.n_min < 1 || a.n_max < a.n_min) throw qgc::InvalidArgument("need 1 <= --n-min <= --n-max");
  const auto deltas = parse_int_list(a.deltas);
  const auto opts = search_options(a.budget, a.seq);
  bool incomplete = false;

  std::cout << "n";
  for (int n = a.n_min; n <= a.n_max; ++n) std::cout << '\t' << n;
  std::cout << "\n";
  for (int delta : deltas) {
    std::cout << "delta=" << delta;
    for (int n = a.n_min; n <= a.n_max; ++n) {
      GraphArgs ga = a.graph;
      ga.n = n;
      std::string cell;
      try {
        const auto g = load_graph(ga);
        const auto res = a.additive_only ? qgc::search_additive(g, delta, opts) : qgc::search_code(g, delta, opts);
        cell = (res.code.exhaustive() ? "" : ">=") + std::to_string(res.code.K());
        incomplete = incomplete || !res.code.exhaustive();
      } catch (const qgc::DegenerateRegime&) {
        cell = "0";
      } catch (const qgc::InvalidArgument&) {
        cell = "-";
      }
      std::cout << '\t' << cell;
    }
    std::cout << "\n";
  }
  return incomplete ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit graph code workbench"};
  app.require_subcommand(1);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Find an optimal code on one graph");
  add_graph_options(s, search.graph);
  s->add_option("--delta", search.delta, "Target distance")->required();
  s->add_flag("--additive-only", search.additive_only, "Restrict to additive codes");
  s->add_option("--budget", search.budget, "Wall-clock limit in seconds");
  s->add_option("--out", search.out, "Report file (default stdout)");
  s->add_flag("--seq", search.seq, "Single-threaded");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a closed-form code");
  c->add_option("--method", construct.method, "partition, star-odd or hypercube16")->required();
  add_graph_options(c, construct.graph);
  c->add_option("--v1", construct.v1, "Partition part V1 as 1-based vertices")->delimiter(',');
  c->add_option("--out", construct.out, "Report file (default stdout)");

  std::string verify_file;
  bool verify_oracle = false;
  auto* v = app.add_subcommand("verify", "Re-check a code report");
  v->add_option("--code", verify_file, "Code report")->required();
  v->add_flag("--oracle", verify_oracle, "Also run the dense Knill-Laflamme check");

  std::string stab_file;
  auto* st = app.add_subcommand("stabilizer", "Stabilizer of an additive code");
  st->add_option("--code", stab_file, "Code report")->required();

  TableArgs table;
  auto* t = app.add_subcommand("table", "Maximum K over a range of n");
  add_graph_options(t, table.graph);
  t->add_option("--n-min", table.n_min)->required();
  t->add_option("--n-max", table.n_max)->required();
  t->add_option("--delta", table.deltas, "Comma-separated distances")->required();
  t->add_option("--budget", table.budget, "Per-entry limit in seconds");
  t->add_flag("--additive-only", table.additive_only);
  t->add_flag("--seq", table.seq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (s->parsed()) return cmd_search(search);
    if (c->parsed()) return cmd_construct(construct);
    if (v->parsed()) return cmd_verify(verify_file, verify_oracle);
    if (st->parsed()) return cmd_stabilizer(stab_file);
    if (t->parsed()) return cmd_table(table);
  } catch (const qgc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
