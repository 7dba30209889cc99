#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

/// Malformed serialized input. position() is a byte offset for graph6 text
/// and a 1-based line number for edge lists and streams.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position) : InputError(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Short-form graph6 (n <= 62).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// "n" followed by whitespace-separated "u v" pairs; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

struct StreamWarning {
  std::size_t line = 0;
  std::string message;
};

/// Reads one graph6 string per line. Blank lines and a leading ">>graph6<<"
/// header are skipped. Malformed lines throw in strict mode and are recorded
/// as warnings otherwise.
class Graph6Stream {
 public:
  using Filter = std::function<bool(const Graph&)>;

  explicit Graph6Stream(std::istream& in, Filter filter = {}, bool strict = false);

  std::optional<Graph> next();
  const std::vector<StreamWarning>& warnings() const { return warnings_; }

 private:
  std::istream& in_;
  Filter filter_;
  bool strict_;
  std::size_t line_ = 0;
  std::vector<StreamWarning> warnings_;
};

/// Drains a Graph6Stream into a vector.
std::vector<Graph> ingest_graph6_stream(std::istream& in, const Graph6Stream::Filter& filter = {},
                                        bool strict = false, std::vector<StreamWarning>* warnings = nullptr);

}  // namespace ptc
