#include "ptc/report.hpp"

#include <sstream>

#include "ptc/graph_io.hpp"

namespace ptc {

using nlohmann::json;

json to_json(const ReportRecord& r) {
  json j;
  j["op"] = r.operation;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  j["witness"] = r.witness;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  if (r.exhaustive) j["exhaustive"] = *r.exhaustive;
  return j;
}

ReportRecord report_from_json(const json& j) {
  try {
    ReportRecord r;
    r.operation = j.at("op").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.witness = j.value("witness", json());
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    if (j.contains("exhaustive")) r.exhaustive = j["exhaustive"].get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report record: ") + e.what());
  }
}

std::string to_line(const ReportRecord& r) { return to_json(r).dump(); }

ReportRecord parse_report_line(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) throw InputError("report line is not valid JSON");
  return report_from_json(j);
}

namespace {

json members(VertexSet s) {
  json a = json::array();
  for (int v : s.members()) a.push_back(v);
  return a;
}

long upper_claim(const ExtremalRecord& r) { return r.status == SearchStatus::Infeasible ? -1 : r.f_value; }

}  // namespace

json to_json(const TreePacking& p) {
  json j;
  j["mode"] = std::string(to_string(p.mode));
  j["terminals"] = members(p.terminals);
  j["trees"] = json::array();
  for (const SteinerTree& t : p.trees) {
    json edges = json::array();
    for (const Edge& e : t.edges) edges.push_back({e.u, e.v});
    j["trees"].push_back(edges);
  }
  return j;
}

json to_json(const ExtremalRecord& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["l"] = r.l;
  j["f"] = r.f_value < 0 ? json() : json(r.f_value);
  j["strategy"] = std::string(to_string(r.strategy));
  j["status"] = std::string(to_string(r.status));
  j["exhaustive"] = r.exhaustive;
  j["graphs_examined"] = r.graphs_examined;
  j["refuted_below"] = r.refuted_below;
  j["lower_bound"] = extremal_lower_bound(r.n, r.k, r.l);
  j["domain"] = "connected";
  j["witness"] = r.witness ? json(encode_graph6(*r.witness)) : json();
  return j;
}

json to_json(const TheoremCheck& c) {
  json j;
  j["id"] = c.id;
  j["n"] = c.n;
  j["k"] = c.k;
  j["l"] = c.l;
  j["claim"] = c.claim_low == c.claim_high ? json(c.claim_low) : json::array({c.claim_low, c.claim_high});
  j["computed"] = c.computed < 0 ? json() : json(c.computed);
  j["computed_exact"] = c.computed_exact;
  j["verdict"] = std::string(to_string(c.verdict));
  j["band"] = c.in_hypothesis ? "in_hypothesis" : "exploratory";
  j["note"] = c.note;
  return j;
}

json to_json(const CharacterizationCheck& c) {
  json j;
  j["id"] = c.id;
  if (!c.reading.empty()) j["reading"] = c.reading;
  j["n"] = c.n;
  j["k"] = c.k;
  j["graphs_checked"] = c.graphs_checked;
  j["class_members"] = c.class_members;
  j["forward_failures"] = c.forward_failures;
  j["backward_failures"] = c.backward_failures;
  j["verdict"] = std::string(to_string(c.verdict));
  if (!c.example.empty()) j["example"] = c.example;
  j["note"] = c.note;
  return j;
}

ReportRecord connectivity_report(const Graph& g, int k, Mode mode, const ConnectivityResult& r, bool with_witness) {
  ReportRecord rec;
  rec.operation = std::string(to_string(mode));
  rec.inputs = {{"graph6", encode_graph6(g)}, {"k", k}};
  rec.outputs = {{"value", r.value},
                 {"minimizing_terminals", members(r.minimizing_terminals)},
                 {"terminal_sets_examined", r.terminal_sets_examined},
                 {"fast_path", r.used_fast_path}};
  if (with_witness) rec.witness = to_json(r.witness);
  rec.exhaustive = true;
  return rec;
}

ReportRecord extremal_report(const ExtremalRecord& r) {
  ReportRecord rec;
  rec.operation = "extremal";
  rec.inputs = {{"n", r.n}, {"k", r.k}, {"l", r.l}, {"strategy", std::string(to_string(r.strategy))}};
  rec.outputs = to_json(r);
  rec.outputs.erase("witness");
  if (r.witness) rec.witness = encode_graph6(*r.witness);
  rec.exhaustive = r.exhaustive;
  return rec;
}

std::string csv_summary(const std::vector<ExtremalRecord>& records) {
  std::ostringstream out;
  out << "n,k,l,f,lower_bound,upper_bound,exhaustive,status\n";
  for (const ExtremalRecord& r : records) {
    out << r.n << ',' << r.k << ',' << r.l << ',';
    if (r.f_value >= 0 && r.exhaustive) out << r.f_value;
    out << ',' << std::max(r.refuted_below, extremal_lower_bound(r.n, r.k, r.l)) << ',';
    if (upper_claim(r) >= 0) out << upper_claim(r);
    out << ',' << (r.exhaustive ? "true" : "false") << ',' << to_string(r.status) << '\n';
  }
  return out.str();
}

}  // namespace ptc
