#include <doctest.h>

#include "ptc/generators.hpp"
#include "ptc/graph_io.hpp"
#include "ptc/report.hpp"

using namespace ptc;

TEST_SUITE("report") {
  TEST_CASE("report records round-trip through one line") {
    const Graph g = harary(8, 3);
    const auto r = global_connectivity(g, 3, Mode::InternalPendant);
    ReportRecord rec = connectivity_report(g, 3, Mode::InternalPendant, r, true);
    rec.elapsed_ms = 1.5;
    const std::string line = to_line(rec);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(parse_report_line(line) == rec);
    CHECK(rec.outputs["value"] == 1);
    CHECK(rec.inputs["graph6"] == encode_graph6(g));
    CHECK_THROWS_AS(parse_report_line("{"), InputError);
    CHECK_THROWS_AS(parse_report_line("{}"), InputError);
  }

  TEST_CASE("extremal records serialize with witness graph6") {
    ExtremalOptions o;
    o.strategy = Strategy::DenseDesc;
    const auto r = f_min_edges(8, 3, 4, o);
    const ReportRecord rec = extremal_report(r);
    CHECK(rec.witness == encode_graph6(*r.witness));
    CHECK(rec.outputs["f"] == 26);
    CHECK(rec.outputs["exhaustive"] == true);
    CHECK(parse_report_line(to_line(rec)) == rec);
  }

  TEST_CASE("csv summary") {
    ExtremalOptions o;
    o.strategy = Strategy::DenseDesc;
    const std::string csv = csv_summary({f_min_edges(8, 3, 5, o), f_min_edges(8, 3, 4, o)});
    CHECK(csv == "n,k,l,f,lower_bound,upper_bound,exhaustive,status\n"
                 "8,3,5,28,28,28,true,EXACT\n"
                 "8,3,4,26,26,26,true,EXACT\n");
  }
}
