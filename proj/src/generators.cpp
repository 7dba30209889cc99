#include "ptc/generators.hpp"

#include <cctype>
#include <sstream>

namespace ptc {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

Graph empty_graph(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  return Graph(n);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph complete_bipartite(int r, int s) {
  require(r >= 1 && s >= 1, "complete bipartite graph needs both parts nonempty");
  GraphBuilder b(r + s);
  for (int u = 0; u < r; ++u) {
    for (int v = 0; v < s; ++v) b.add_edge(u, r + v);
  }
  return b.build();
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph wheel(int n) {
  require(n >= 4, "wheel needs n >= 4");
  return join(complete(1), cycle(n - 1));
}

Graph harary(int n, int d) {
  require(d >= 2 && d < n, "harary graph needs 2 <= d < n");
  GraphBuilder b(n);
  const int r = d / 2;
  for (int i = 0; i < n; ++i) {
    for (int off = 1; off <= r; ++off) b.add_edge(i, (i + off) % n);
  }
  if (d % 2 == 1) {
    if (n % 2 == 0) {
      for (int i = 1; i <= n / 2; ++i) b.add_edge(i, (i + n / 2) % n);
    } else {
      b.add_edge(0, (n - 1) / 2);
      b.add_edge(0, (n + 1) / 2);
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        const int j = (i + (n + 1) / 2) % n;
        if (i != j) b.add_edge(i, j);
      }
    }
  }
  return b.build();
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, shift + v);
  }
  return b.build();
}

Graph cartesian(const Graph& g, const Graph& h) {
  const int m = h.order();
  GraphBuilder b(g.order() * m);
  for (int u = 0; u < g.order(); ++u) {
    for (const Edge& e : h.edges()) b.add_edge(u * m + e.u, u * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int v = 0; v < m; ++v) b.add_edge(e.u * m + v, e.v * m + v);
  }
  return b.build();
}

Graph lexicographic(const Graph& g, const Graph& h) {
  const int m = h.order();
  GraphBuilder b(g.order() * m);
  for (int u = 0; u < g.order(); ++u) {
    for (const Edge& e : h.edges()) b.add_edge(u * m + e.u, u * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int v = 0; v < m; ++v) {
      for (int w = 0; w < m; ++w) b.add_edge(e.u * m + v, e.v * m + w);
    }
  }
  return b.build();
}

Graph complete_minus_matching(int n, int r) {
  require(r >= 0 && 2 * r <= n, "complete_minus_matching needs 0 <= 2r <= n");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool matched = v == u + 1 && u % 2 == 0 && u < 2 * r;
      if (!matched) b.add_edge(u, v);
    }
  }
  return b.build();
}

bool prop_2_3_in_range(int n, int k, int l) {
  return k >= 3 && k <= n && 2 * l >= n - 2 * k + 4 && l <= n - k;
}

long prop_2_3_edge_formula(int n, int k, int l) {
  const long c = k + l - 1;
  return c * (n - k - l + 1) + choose2(c);
}

Graph prop_2_3_graph(int n, int k, int l) {
  require(k >= 1 && l >= 0 && k + l - 1 >= 1 && k + l - 1 < n,
          "prop_2_3_graph needs 1 <= k+l-1 < n (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  return join(complete(k + l - 1), empty_graph(n - k - l + 1));
}

long prop_3_3_edge_formula(int n, int l) { return static_cast<long>(l + 1) * (n - l) + 1; }

Graph prop_3_3_graph(int n, int l) {
  require(l >= 3 && 3 * l <= n - 4, "prop_3_3_graph needs 3 <= l <= (n-4)/3");
  const Graph base = join(empty_graph(l), cycle(n - l));
  GraphBuilder b(n);
  for (const Edge& e : base.edges()) b.add_edge(e.u, e.v);
  // cycle vertex y_i is l + i - 1
  b.add_edge(l, l + (n - l) / 2 - 1);
  return b.build();
}

long prop_3_4_edge_formula(int n, int l) {
  const long width = l + 1;
  const long s = n / width;
  const long r = n % width;
  return s * width * width + (r + 1) * width + r - 1;
}

Prop34Construction prop_3_4_construction(int n, int l) {
  require(l >= 1, "prop_3_4_graph needs l >= 1");
  const int width = l + 1;
  const int s = n / width;
  const int r = n % width;
  require(r >= 2, "prop_3_4_graph needs n mod (l+1) >= 2 (got " + std::to_string(r) + ")");
  require(s >= 2, "prop_3_4_graph needs at least two layers");
  auto at = [&](int layer, int j) { return (layer - 1) * width + (j - 1); };  // (u_layer, v_j)
  GraphBuilder b(n);
  for (int layer = 1; layer < s; ++layer) {
    for (int i = 1; i <= width; ++i) {
      for (int j = 1; j <= width; ++j) b.add_edge(at(layer, i), at(layer + 1, j));
    }
  }
  for (int i = 1; i <= width; ++i) {
    for (int j = 1; j <= r; ++j) b.add_edge(at(s, i), at(s + 1, j));
  }
  for (int j = 1; j < r; ++j) b.add_edge(at(s + 1, j), at(s + 1, j + 1));
  for (int j = 1; j <= l; ++j) b.add_edge(at(1, j), at(1, j + 1));
  Prop34Construction out;
  out.graph = b.build();
  out.layers = s;
  out.extra = r;
  out.formula_edges = prop_3_4_edge_formula(n, l);
  out.in_proposition_range = 3 * l >= n - 4 && 2 * l <= n - r - 2;
  return out;
}

Graph prop_3_4_graph(int n, int l) { return prop_3_4_construction(n, l).graph; }

std::vector<FamilyMember> lemma_3_6_family(int n) {
  require(n >= 10, "lemma_3_6_family needs n >= 10");
  std::vector<FamilyMember> out;
  auto add = [&](const std::string& name, std::vector<Graph> parts) {
    Graph acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, parts[i]);
    out.push_back({name, acc, complement(acc)});
  };
  auto matching = [](int count) {
    Graph m = complete(2);
    for (int i = 1; i < count; ++i) m = disjoint_union(m, complete(2));
    return m;
  };
  auto isolated = [&](std::vector<Graph>& parts, int used) {
    if (used < n) parts.push_back(empty_graph(n - used));
  };
  auto tail = [](int count, const char* what) {
    return count > 0 ? "+" + std::to_string(count) + what : std::string();
  };
  for (int i = 3; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) {
      std::vector<Graph> parts{cycle(i), cycle(j)};
      isolated(parts, i + j);
      add("C" + std::to_string(i) + "+C" + std::to_string(j) + tail(n - i - j, "K1"), parts);
    }
  }
  for (int i = 3; i <= 4; ++i) {
    const int pairs = (n - i) / 2;
    std::vector<Graph> parts{cycle(i), matching(pairs)};
    isolated(parts, i + 2 * pairs);
    add("C" + std::to_string(i) + tail(pairs, "K2") + tail(n - i - 2 * pairs, "K1"), parts);
  }
  {
    const int pairs = (n - 5) / 2;
    std::vector<Graph> parts{path(5), matching(pairs)};
    isolated(parts, 5 + 2 * pairs);
    add("P5" + tail(pairs, "K2") + tail(n - 5 - 2 * pairs, "K1"), parts);
  }
  for (int i = 5; i <= 7; ++i) {
    std::vector<Graph> parts{cycle(i)};
    isolated(parts, i);
    add("C" + std::to_string(i) + tail(n - i, "K1"), parts);
  }
  return out;
}

namespace {

struct KindInfo {
  GeneratorSpec::Kind kind;
  const char* name;
  int params;    // -1: variable
  int operands;  // nested specs
};

constexpr KindInfo kKinds[] = {
    {GeneratorSpec::Kind::Empty, "empty", 1, 0},
    {GeneratorSpec::Kind::Complete, "complete", 1, 0},
    {GeneratorSpec::Kind::CompleteBipartite, "complete_bipartite", 2, 0},
    {GeneratorSpec::Kind::Path, "path", 1, 0},
    {GeneratorSpec::Kind::Cycle, "cycle", 1, 0},
    {GeneratorSpec::Kind::Wheel, "wheel", 1, 0},
    {GeneratorSpec::Kind::Harary, "harary", 2, 0},
    {GeneratorSpec::Kind::Join, "join", 0, 2},
    {GeneratorSpec::Kind::Cartesian, "cartesian", 0, 2},
    {GeneratorSpec::Kind::Lex, "lex", 0, 2},
    {GeneratorSpec::Kind::CompleteMinusMatching, "complete_minus_matching", 2, 0},
    {GeneratorSpec::Kind::Prop23, "prop23", 3, 0},
    {GeneratorSpec::Kind::Prop33, "prop33", 2, 0},
    {GeneratorSpec::Kind::Prop34, "prop34", 2, 0},
    {GeneratorSpec::Kind::Lemma36Family, "lemma36", 2, 0},
};

const KindInfo& info(GeneratorSpec::Kind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown generator kind");
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GeneratorSpec parse_all() {
    GeneratorSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("generator spec '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  GeneratorSpec parse_spec() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "kbip") name = "complete_bipartite";
    if (name == "kminus") name = "complete_minus_matching";
    if (name == "lexicographic") name = "lex";
    const KindInfo* found = nullptr;
    for (const auto& k : kKinds) {
      if (name == k.name) found = &k;
    }
    if (found == nullptr) fail("unknown generator '" + name + "'");
    GeneratorSpec spec;
    spec.kind = found->kind;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      for (;;) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
          ++pos_;
          spec.operands.push_back(parse_spec());
          skip_space();
          if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
          ++pos_;
        } else {
          spec.params.push_back(parse_int());
        }
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    if (static_cast<int>(spec.params.size()) != found->params || static_cast<int>(spec.operands.size()) != found->operands) {
      fail("'" + name + "' takes " + std::to_string(found->params) + " integer(s) and " +
           std::to_string(found->operands) + " nested spec(s)");
    }
    return spec;
  }

  int parse_int() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string GeneratorSpec::to_string() const {
  std::ostringstream out;
  out << info(kind).name;
  if (!params.empty() || !operands.empty()) out << ':';
  bool first = true;
  for (const auto& op : operands) {
    out << (first ? "" : ",") << '(' << op.to_string() << ')';
    first = false;
  }
  for (int p : params) {
    out << (first ? "" : ",") << p;
    first = false;
  }
  return out.str();
}

Graph GeneratorSpec::build() const {
  const auto& p = params;
  switch (kind) {
    case Kind::Empty: return empty_graph(p[0]);
    case Kind::Complete: return complete(p[0]);
    case Kind::CompleteBipartite: return complete_bipartite(p[0], p[1]);
    case Kind::Path: return path(p[0]);
    case Kind::Cycle: return cycle(p[0]);
    case Kind::Wheel: return wheel(p[0]);
    case Kind::Harary: return harary(p[0], p[1]);
    case Kind::Join: return join(operands[0].build(), operands[1].build());
    case Kind::Cartesian: return cartesian(operands[0].build(), operands[1].build());
    case Kind::Lex: return lexicographic(operands[0].build(), operands[1].build());
    case Kind::CompleteMinusMatching: return complete_minus_matching(p[0], p[1]);
    case Kind::Prop23: return prop_2_3_graph(p[0], p[1], p[2]);
    case Kind::Prop33: return prop_3_3_graph(p[0], p[1]);
    case Kind::Prop34: return prop_3_4_graph(p[0], p[1]);
    case Kind::Lemma36Family: {
      const auto family = lemma_3_6_family(p[0]);
      require(p[1] >= 0 && p[1] < static_cast<int>(family.size()),
              "lemma36 member index must be in 0.." + std::to_string(family.size() - 1));
      return family[p[1]].graph;
    }
  }
  throw std::logic_error("unhandled generator kind");
}

}  // namespace ptc
