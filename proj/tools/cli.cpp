#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptc/extremal.hpp"
#include "ptc/generators.hpp"
#include "ptc/graph_io.hpp"
#include "ptc/report.hpp"
#include "ptc/tree_packing.hpp"

namespace ptc::cli {

namespace {

struct Common {
  bool dry_run = false;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string output;
  bool json = false;
  bool timing = false;
};

struct GraphSource {
  std::string spec;    // generator spec or file path
  std::string graph6;  // inline graph6
};

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Edge lists start with a decimal vertex count; graph6 never contains whitespace.
bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    return std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ' ' || c == '\t'; });
  }
  return true;
}

Graph parse_any(const std::string& text) {
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  const std::string t = trim(text);
  const std::string first = t.substr(0, t.find('\n'));
  return decode_graph6(trim(first.rfind(">>graph6<<", 0) == 0 ? first.substr(10) : first));
}

Graph load_graph(const GraphSource& src) {
  if (!src.graph6.empty()) return decode_graph6(src.graph6);
  if (std::filesystem::is_regular_file(src.spec)) {
    std::ifstream in(src.spec);
    if (!in) throw InputError("cannot read '" + src.spec + "'");
    return parse_any(slurp(in));
  }
  return parse_generator_spec(src.spec).build();
}

std::filesystem::path output_path(const std::string& requested) {
  std::filesystem::path p(requested);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes to -o if given, otherwise to out.
class Sink {
 public:
  Sink(const Common& c, std::ostream& out) : out_(&out) {
    if (!c.output.empty()) {
      const auto p = output_path(c.output);
      if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
      file_.open(p);
      if (!file_) throw InputError("cannot write '" + p.string() + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void add_common(CLI::App* sub, Common& c, bool with_json = true) {
  sub->add_flag("--dry-run", c.dry_run, "Validate inputs without computing");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--seed", c.seed, "Recorded for reproducibility");
  sub->add_option("-o,--output", c.output, "Output file (relative paths use $" + std::string(kOutputDirEnv) + ")");
  if (with_json) sub->add_flag("--json", c.json, "Emit a JSON report line");
  sub->add_flag("--timing", c.timing, "Include elapsed time in reports");
}

void add_source(CLI::App* sub, GraphSource& s) {
  auto* g = sub->add_option("-g,--graph", s.spec, "Generator spec (e.g. harary:9,3) or graph file");
  auto* g6 = sub->add_option("--graph6", s.graph6, "Inline graph6 string");
  g->excludes(g6);
  g6->excludes(g);
}

void require_source(const GraphSource& s) {
  if (s.spec.empty() && s.graph6.empty()) throw InputError("an input graph is required (-g or --graph6)");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string tree_text(const SteinerTree& t) {
  std::string s;
  for (const Edge& e : t.edges) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return s;
}

VertexSet parse_terminals(const std::string& text, int n) {
  std::vector<int> vs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) v = -1;
    } catch (const std::exception&) {
    }
    if (v < 0 || v >= n) throw InputError("terminal '" + item + "' is not a vertex");
    vs.push_back(v);
  }
  return VertexSet::of(vs);
}

int run_connectivity(Mode mode, const Common& c, const GraphSource& src, int k, const std::string& terminals,
                     bool witness, bool generic, std::ostream& out) {
  require_source(src);
  const Graph g = load_graph(src);
  const std::string name = std::string(mode == Mode::InternalPendant ? "tau" : mode == Mode::EdgePendant ? "mu" : "kappa");
  if (terminals.empty() && (k < 2 || k > g.order())) throw InputError("k must satisfy 2 <= k <= n");
  VertexSet s;
  if (!terminals.empty()) {
    s = parse_terminals(terminals, g.order());
    if (s.size() < 2) throw InputError("at least two terminals are required");
  }
  if (c.dry_run) {
    out << "ok: " << name << " on n=" << g.order() << " m=" << g.edge_count() << '\n';
    return kOk;
  }
  Sink sink(c, out);
  const auto t0 = std::chrono::steady_clock::now();
  if (!terminals.empty()) {
    const LocalResult r = local_connectivity(g, s, mode);
    if (c.json) {
      ReportRecord rec;
      rec.operation = name + "_local";
      rec.inputs = {{"graph6", encode_graph6(g)}, {"terminals", to_string(s)}};
      rec.outputs = {{"value", r.value}};
      if (witness) rec.witness = to_json(r.witness);
      rec.exhaustive = r.exact;
      if (c.timing) rec.elapsed_ms = elapsed_ms(t0);
      sink.stream() << to_line(rec) << '\n';
    } else {
      sink.stream() << name << "(" << to_string(s) << ") = " << r.value << '\n';
      if (witness) {
        for (const SteinerTree& t : r.witness.trees) sink.stream() << "tree " << tree_text(t) << '\n';
      }
    }
    return kOk;
  }
  SolveOptions so;
  so.threads = c.threads;
  so.fast_paths = !generic;
  so.bound_caps = !generic;
  const ConnectivityResult r = global_connectivity(g, k, mode, so);
  if (c.json) {
    ReportRecord rec = connectivity_report(g, k, mode, r, witness);
    if (c.timing) rec.elapsed_ms = elapsed_ms(t0);
    sink.stream() << to_line(rec) << '\n';
  } else {
    sink.stream() << name << '_' << k << " = " << r.value << '\n';
    sink.stream() << "minimizing S = " << to_string(r.minimizing_terminals) << '\n';
    if (witness) {
      for (const SteinerTree& t : r.witness.trees) sink.stream() << "tree " << tree_text(t) << '\n';
    }
    if (c.timing) sink.stream() << "elapsed_ms = " << elapsed_ms(t0) << '\n';
  }
  return kOk;
}

std::string encode(const Graph& g, const std::string& format) {
  if (format == "graph6") return encode_graph6(g) + '\n';
  if (format == "edgelist") return write_edge_list(g);
  throw InputError("unknown format '" + format + "' (graph6 or edgelist)");
}

Strategy default_strategy(int n, int k, int l) {
  const int floor = l == 0 ? 0 : (k >= 3 ? k + l - 1 : l);
  return l >= 1 && n - 1 - floor <= 2 ? Strategy::DenseDesc : Strategy::SparseAsc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pendant-tree connectivity toolkit", "ptc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common c;
  GraphSource src;
  int k = 0;
  bool witness = false;
  bool generic = false;
  std::string terminals;

  auto connectivity_cmd = [&](const std::string& name, const std::string& about) {
    auto* sub = app.add_subcommand(name, about);
    add_common(sub, c);
    add_source(sub, src);
    sub->add_option("-k", k, "Terminal set size");
    sub->add_option("-S,--terminals", terminals, "Comma-separated terminals (local value instead of the minimum)");
    sub->add_flag("--witness", witness, "Print the witness packing");
    sub->add_flag("--generic", generic, "Disable closed-form shortcuts and bound caps");
    return sub;
  };
  auto* tau = connectivity_cmd("tau", "Pendant-tree k-connectivity");
  auto* mu = connectivity_cmd("mu", "Pendant-tree k-edge-connectivity");
  auto* kappa_k = connectivity_cmd("kappa-k", "Generalized k-connectivity");

  auto* kappa = app.add_subcommand("kappa", "Classical vertex connectivity");
  add_common(kappa, c);
  add_source(kappa, src);

  std::string spec;
  std::string to_format = "graph6";
  auto* gen = app.add_subcommand("gen", "Build a graph from a generator spec");
  add_common(gen, c, false);
  gen->add_option("spec", spec, "Generator spec, e.g. harary:9,3")->required();
  gen->add_option("--to", to_format, "graph6 or edgelist");

  std::string from_format = "auto";
  std::string input_file;
  auto* convert = app.add_subcommand("convert", "Transcode graphs between graph6 and edge lists");
  add_common(convert, c, false);
  convert->add_option("--from", from_format, "auto, graph6 or edgelist");
  convert->add_option("--to", to_format, "graph6 or edgelist");
  convert->add_option("-i,--input", input_file, "Input file (default: standard input)");
  bool strict = false;
  convert->add_flag("--strict", strict, "Fail on the first malformed graph6 line");

  int n = 0;
  int l = -1;
  std::string strategy;
  std::uint64_t budget_graphs = 0;
  double budget_seconds = 0;
  bool long_run = false;
  bool csv = false;
  auto* extremal = app.add_subcommand("extremal", "Minimum edges of a connected graph with tau_k = l");
  add_common(extremal, c, false);
  extremal->add_option("-n", n, "Order")->required();
  extremal->add_option("-k", k, "Terminal set size")->required();
  extremal->add_option("-l", l, "Target tau_k")->required();
  extremal->add_option("--strategy", strategy, "sparse, dense or construction (default: by regime)");
  extremal->add_option("--budget-graphs", budget_graphs, "Stop after this many candidate graphs");
  extremal->add_option("--budget-seconds", budget_seconds, "Stop after this much wall time");
  extremal->add_flag("--long-run", long_run, "Allow sparse search above n = 7");
  extremal->add_flag("--csv", csv, "Emit a CSV summary row instead of JSON");

  std::vector<std::string> theorems;
  std::vector<std::string> lemmas;
  int n_min = 5;
  int n_max = 10;
  int k_min = 3;
  int k_max = 64;
  double verify_seconds = 60;
  auto* verify = app.add_subcommand("verify", "Check theorem claims and characterizations");
  add_common(verify, c, false);
  verify->add_option("--theorem", theorems, "T1.1, T1.2 or T1.3 (repeatable)");
  verify->add_option("--lemma", lemmas, "L2.5, L2.6, L3.1, L3.2, L3.3, P3.1 or L3.6 (repeatable)");
  verify->add_option("--n-min", n_min, "Smallest order");
  verify->add_option("--n-max", n_max, "Largest order");
  verify->add_option("--k-min", k_min, "Smallest k");
  verify->add_option("--k-max", k_max, "Largest k");
  verify->add_option("--budget-seconds", verify_seconds, "Wall-time budget per extremal value");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kInputError;
  }

  try {
    if (tau->parsed() || mu->parsed() || kappa_k->parsed()) {
      const Mode mode = tau->parsed() ? Mode::InternalPendant : mu->parsed() ? Mode::EdgePendant : Mode::InternalPlain;
      if (k == 0 && terminals.empty()) throw InputError("-k or --terminals is required");
      return run_connectivity(mode, c, src, k, terminals, witness, generic, out);
    }
    if (kappa->parsed()) {
      require_source(src);
      const Graph g = load_graph(src);
      if (c.dry_run) {
        out << "ok: kappa on n=" << g.order() << " m=" << g.edge_count() << '\n';
        return kOk;
      }
      Sink sink(c, out);
      const int value = vertex_connectivity(g);
      if (c.json) {
        ReportRecord rec;
        rec.operation = "vertex_connectivity";
        rec.inputs = {{"graph6", encode_graph6(g)}};
        rec.outputs = {{"value", value}};
        rec.exhaustive = true;
        sink.stream() << to_line(rec) << '\n';
      } else {
        sink.stream() << "kappa = " << value << '\n';
      }
      return kOk;
    }
    if (gen->parsed()) {
      const Graph g = parse_generator_spec(spec).build();
      const std::string text = encode(g, to_format);
      if (c.dry_run) {
        out << "ok: " << parse_generator_spec(spec).to_string() << " n=" << g.order() << " m=" << g.edge_count() << '\n';
        return kOk;
      }
      Sink sink(c, out);
      sink.stream() << text;
      return kOk;
    }
    if (convert->parsed()) {
      if (to_format != "graph6" && to_format != "edgelist") throw InputError("unknown format '" + to_format + "'");
      std::string text;
      if (input_file.empty()) {
        text = slurp(std::cin);
      } else {
        std::ifstream in(input_file);
        if (!in) throw InputError("cannot read '" + input_file + "'");
        text = slurp(in);
      }
      std::vector<Graph> graphs;
      std::vector<StreamWarning> warnings;
      const bool edge_list = from_format == "edgelist" || (from_format == "auto" && looks_like_edge_list(text));
      if (from_format != "auto" && from_format != "graph6" && from_format != "edgelist") {
        throw InputError("unknown format '" + from_format + "'");
      }
      if (edge_list) {
        graphs.push_back(parse_edge_list(text));
      } else {
        std::istringstream in(text);
        graphs = ingest_graph6_stream(in, {}, strict, &warnings);
      }
      for (const StreamWarning& w : warnings) err << "warning: line " << w.line << ": " << w.message << '\n';
      if (c.dry_run) {
        out << "ok: " << graphs.size() << " graph(s)\n";
        return kOk;
      }
      Sink sink(c, out);
      for (const Graph& g : graphs) sink.stream() << encode(g, to_format);
      return kOk;
    }
    if (extremal->parsed()) {
      if (n < 2 || n > kMaxOrder || k < 2 || k > n || l < 0 || l > n - k) {
        throw InputError("need 2 <= k <= n <= 64 and 0 <= l <= n-k");
      }
      if (n >= 8 && budget_graphs == 0 && budget_seconds <= 0) {
        throw InputError("extremal with n >= 8 needs --budget-graphs or --budget-seconds");
      }
      ExtremalOptions eo;
      eo.strategy = strategy.empty() ? default_strategy(n, k, l) : parse_strategy(strategy);
      eo.budget = {budget_graphs, budget_seconds};
      eo.threads = c.threads;
      eo.allow_long_run = long_run;
      if (eo.strategy == Strategy::SparseAsc && n > 7 && !long_run) {
        throw InputError("sparse search above n = 7 needs --long-run");
      }
      if (c.dry_run) {
        out << "ok: extremal n=" << n << " k=" << k << " l=" << l << " strategy=" << to_string(eo.strategy) << '\n';
        return kOk;
      }
      Sink sink(c, out);
      const auto t0 = std::chrono::steady_clock::now();
      const ExtremalRecord r = f_min_edges(n, k, l, eo);
      if (csv) {
        sink.stream() << csv_summary({r});
      } else {
        ReportRecord rec = extremal_report(r);
        if (c.timing) rec.elapsed_ms = elapsed_ms(t0);
        sink.stream() << to_line(rec) << '\n';
      }
      return r.status == SearchStatus::BudgetExhausted ? kBudgetExhausted : kOk;
    }
    if (verify->parsed()) {
      if (theorems.empty() && lemmas.empty()) throw InputError("--theorem or --lemma is required");
      for (const std::string& t : theorems) {
        if (t != "T1.1" && t != "T1.2" && t != "T1.3") throw InputError("unknown theorem '" + t + "'");
      }
      if (n_min < 2 || n_max > 16 || n_min > n_max) throw InputError("n range must lie within 2..16");
      static const std::vector<std::string> known = {"L2.5", "L2.6", "L3.1", "L3.2", "L3.3", "P3.1", "L3.6"};
      for (const std::string& id : lemmas) {
        if (std::find(known.begin(), known.end(), id) == known.end()) throw InputError("unknown characterization '" + id + "'");
      }
      if (c.dry_run) {
        out << "ok: verify n=" << n_min << ".." << n_max << '\n';
        return kOk;
      }
      Sink sink(c, out);
      bool violated = false;
      bool budget = false;
      if (!theorems.empty()) {
        VerifyOptions vo;
        vo.budget.max_seconds = verify_seconds;
        vo.threads = c.threads;
        for (const TheoremCheck& check : verify_theorems(n_min, n_max, k_min, k_max, theorems, vo)) {
          violated = violated || check.verdict == Verdict::Violated;
          budget = budget || check.verdict == Verdict::SkippedBudget;
          sink.stream() << to_json(check).dump() << '\n';
        }
      }
      for (const std::string& id : lemmas) {
        for (int m = n_min; m <= n_max; ++m) {
          for (const CharacterizationCheck& check : verify_characterization(id, m)) {
            violated = violated || check.verdict == Verdict::Violated;
            sink.stream() << to_json(check).dump() << '\n';
          }
        }
      }
      if (violated) return kViolated;
      return budget ? kBudgetExhausted : kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ptc::cli
