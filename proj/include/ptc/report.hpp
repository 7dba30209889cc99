#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptc/extremal.hpp"
#include "ptc/tree_packing.hpp"

namespace ptc {

/// One line of a report stream.
struct ReportRecord {
  std::string operation;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json witness;  // null when absent
  std::optional<double> elapsed_ms;
  std::optional<bool> exhaustive;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

nlohmann::json to_json(const ReportRecord& r);
ReportRecord report_from_json(const nlohmann::json& j);

/// Compact single-line JSON, keys sorted.
std::string to_line(const ReportRecord& r);
ReportRecord parse_report_line(const std::string& line);

nlohmann::json to_json(const TreePacking& p);
nlohmann::json to_json(const ExtremalRecord& r);
nlohmann::json to_json(const TheoremCheck& c);
nlohmann::json to_json(const CharacterizationCheck& c);

ReportRecord connectivity_report(const Graph& g, int k, Mode mode, const ConnectivityResult& r, bool with_witness);
ReportRecord extremal_report(const ExtremalRecord& r);

/// Header "n,k,l,f,lower_bound,upper_bound,exhaustive,status" plus one row per record.
std::string csv_summary(const std::vector<ExtremalRecord>& records);

}  // namespace ptc
