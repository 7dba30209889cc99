#include "ptc/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace ptc {

namespace {

constexpr int kBias = 63;
constexpr int kShortFormMax = 62;

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kShortFormMax) throw InputError("graph6 short form supports n <= 62");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("graph6: character out of range at byte " + std::to_string(i), i);
  }
  const int n = text[0] - kBias;
  if (n > kShortFormMax) throw ParseError("graph6: only the short form (n <= 62) is supported", 0);
  if (n == 0) throw ParseError("graph6: order 0 is not a graph here", 0);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pairs + 5) / 6;
  if (text.size() != expected) {
    const std::size_t at = std::min(text.size(), expected);
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size()),
                     at);
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int pad = 6 - static_cast<int>(pairs % 6);
    const int last = text.back() - kBias;
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", text.size() - 1);
  }
  return b.build();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long, std::size_t>> tokens;  // value, line
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r' && text[j] != '\n' && text[j] != '#') ++j;
      const std::string_view token = text.substr(i, j - i);
      long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("edge list line " + std::to_string(line) + ": '" + std::string(token) + "' is not an integer", line);
      }
      tokens.emplace_back(value, line);
      i = j;
    }
  }
  if (tokens.empty()) throw ParseError("edge list: missing vertex count", 1);
  const long n = tokens[0].first;
  if (n < 1 || n > kMaxOrder) {
    throw ParseError("edge list line " + std::to_string(tokens[0].second) + ": vertex count must be in 1..64", tokens[0].second);
  }
  if ((tokens.size() - 1) % 2 != 0) {
    throw ParseError("edge list line " + std::to_string(tokens.back().second) + ": dangling endpoint", tokens.back().second);
  }
  GraphBuilder b(static_cast<int>(n));
  for (std::size_t t = 1; t < tokens.size(); t += 2) {
    const auto [u, lu] = tokens[t];
    const auto [v, lv] = tokens[t + 1];
    for (const auto& [x, lx] : {tokens[t], tokens[t + 1]}) {
      if (x < 0 || x >= n) {
        throw ParseError("edge list line " + std::to_string(lx) + ": vertex " + std::to_string(x) + " out of range", lx);
      }
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(lv) + ": self-loop at " + std::to_string(u), lv);
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
    (void)lu;
  }
  return b.build();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph6Stream::Graph6Stream(std::istream& in, Filter filter, bool strict)
    : in_(in), filter_(std::move(filter)), strict_(strict) {}

std::optional<Graph> Graph6Stream::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
    if (line_ == 1 && text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
    if (text.empty()) continue;
    try {
      Graph g = decode_graph6(text);
      if (!filter_ || filter_(g)) return g;
    } catch (const ParseError& e) {
      if (strict_) throw ParseError("line " + std::to_string(line_) + ": " + e.what(), line_);
      warnings_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

std::vector<Graph> ingest_graph6_stream(std::istream& in, const Graph6Stream::Filter& filter, bool strict,
                                        std::vector<StreamWarning>* warnings) {
  Graph6Stream stream(in, filter, strict);
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  if (warnings != nullptr) *warnings = stream.warnings();
  return out;
}

}  // namespace ptc
