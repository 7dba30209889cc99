#include "ptc/tree_packing.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "combinations.hpp"
#include "flow.hpp"

namespace ptc {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::InternalPendant: return "tau";
    case Mode::EdgePendant: return "mu";
    case Mode::InternalPlain: return "kappa";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "tau" || text == "internal-pendant") return Mode::InternalPendant;
  if (text == "mu" || text == "edge-pendant") return Mode::EdgePendant;
  if (text == "kappa" || text == "kappa-k" || text == "internal-plain") return Mode::InternalPlain;
  throw InputError("unknown mode '" + std::string(text) + "' (expected tau, mu or kappa)");
}

std::string_view to_string(PackingFault fault) {
  switch (fault) {
    case PackingFault::None: return "ok";
    case PackingFault::TooFewTerminals: return "too-few-terminals";
    case PackingFault::EdgeNotInGraph: return "edge-not-in-graph";
    case PackingFault::DuplicateEdge: return "duplicate-edge";
    case PackingFault::NotATree: return "not-a-tree";
    case PackingFault::MissingTerminal: return "missing-terminal";
    case PackingFault::TerminalNotLeaf: return "terminal-not-leaf";
    case PackingFault::SharedEdge: return "shared-edge";
    case PackingFault::SharedVertex: return "shared-vertex";
  }
  return "?";
}

VertexSet SteinerTree::vertices() const {
  VertexSet out;
  for (const Edge& e : edges) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

PackingCheck verify_packing(const Graph& g, const TreePacking& p) {
  if (p.terminals.size() < 2 || !p.terminals.subset_of(g.vertices())) {
    return {PackingFault::TooFewTerminals};
  }
  const int n = g.order();
  for (int t = 0; t < p.size(); ++t) {
    const auto& edges = p.trees[t].edges;
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const Edge& e = sorted[i];
      if (e.u < 0 || e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v)) return {PackingFault::EdgeNotInGraph, t};
      if (i > 0 && sorted[i - 1] == e) return {PackingFault::DuplicateEdge, t};
    }
    const VertexSet verts = p.trees[t].vertices();
    if (!p.terminals.subset_of(verts)) return {PackingFault::MissingTerminal, t};
    // a tree: connected with |E| = |V| - 1
    if (static_cast<int>(edges.size()) != verts.size() - 1) return {PackingFault::NotATree, t};
    GraphBuilder tb(n);
    for (const Edge& e : edges) tb.add_edge(e.u, e.v);
    const Graph tree = tb.build();
    if (reachable(tree, lowest(verts.bits())) != verts.bits()) return {PackingFault::NotATree, t};
    if (is_pendant(p.mode)) {
      for (int s : p.terminals.members()) {
        if (tree.degree(s) != 1) return {PackingFault::TerminalNotLeaf, t};
      }
    }
  }
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      for (const Edge& e : p.trees[a].edges) {
        if (std::find(p.trees[b].edges.begin(), p.trees[b].edges.end(), e) != p.trees[b].edges.end()) {
          return {PackingFault::SharedEdge, a, b};
        }
      }
      if (is_internal(p.mode) && (p.trees[a].vertices() & p.trees[b].vertices()) != p.terminals) {
        return {PackingFault::SharedVertex, a, b};
      }
    }
  }
  return {};
}

namespace {

constexpr int kUnlimited = std::numeric_limits<int>::max();

SteinerTree path_tree(const std::vector<int>& path) {
  SteinerTree t;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) t.edges.emplace_back(path[i], path[i + 1]);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

LocalResult two_terminal(const Graph& g, VertexSet terminals, Mode mode, int limit) {
  const int x = lowest(terminals.bits());
  const int y = lowest(terminals.bits() & (terminals.bits() - 1));
  const auto paths = mode == Mode::EdgePendant ? detail::edge_disjoint_paths(g, x, y, limit)
                                               : detail::disjoint_paths(g, x, y, limit);
  LocalResult out;
  out.witness.mode = mode;
  out.witness.terminals = terminals;
  for (const auto& path : paths) out.witness.trees.push_back(path_tree(path));
  std::sort(out.witness.trees.begin(), out.witness.trees.end(),
            [](const SteinerTree& a, const SteinerTree& b) { return a.edges < b.edges; });
  out.value = out.witness.size();
  out.exact = limit < 0 || out.value < limit;
  return out;
}

// Internal modes: a tree is fixed by its internal vertex set and the
// terminal-terminal edges ("links") it uses; both are exclusive resources.
struct Candidate {
  Mask inner = 0;
  Mask links = 0;
};

class InternalSearch {
 public:
  InternalSearch(const Graph& g, VertexSet terminals, Mode mode)
      : g_(g), mode_(mode), terms_(terminals.bits()), pool_(g.vertices().bits() & ~terminals.bits()) {
    for_each_bit(terms_, [&](int s) { terminal_list_.push_back(s); });
    for (int i = 0; mode == Mode::InternalPlain && i < static_cast<int>(terminal_list_.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(terminal_list_.size()); ++j) {
        if (g.adjacent(terminal_list_[i], terminal_list_[j])) links_.emplace_back(terminal_list_[i], terminal_list_[j]);
      }
    }
    if (links_.size() > 63) throw InputError("too many edges among the terminals");
    for (int s : terminal_list_) {
      vertex_res_.push_back(g.neighbors(s) & pool_);
      Mask lm = 0;
      for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
        if (links_[i].u == s || links_[i].v == s) lm |= bit(i);
      }
      link_res_.push_back(lm);
    }
    if (mode == Mode::InternalPendant) {
      collect_pendant();
    } else {
      collect_plain();
    }
    by_vertex_.assign(kMaxOrder, {});
    by_link_.assign(links_.size(), {});
    for (int c = 0; c < static_cast<int>(cands_.size()); ++c) {
      for_each_bit(cands_[c].inner, [&](int v) { by_vertex_[v].push_back(c); });
      for_each_bit(cands_[c].links, [&](int i) { by_link_[i].push_back(c); });
    }
  }

  LocalResult run(int limit) {
    limit_ = limit < 0 ? kUnlimited : limit;
    if (limit_ > 0) search(0, 0, 0, 0, 0);
    LocalResult out;
    out.nodes = nodes_;
    out.value = static_cast<int>(best_.size());
    out.exact = out.value < limit_;
    out.witness.mode = mode_;
    out.witness.terminals = VertexSet(terms_);
    std::vector<Candidate> chosen;
    for (int c : best_) chosen.push_back(cands_[c]);
    std::sort(chosen.begin(), chosen.end(), [](const Candidate& a, const Candidate& b) {
      if (a.inner != b.inner) return lex_less(VertexSet(a.inner), VertexSet(b.inner));
      return a.links < b.links;
    });
    for (const Candidate& c : chosen) out.witness.trees.push_back(realize(c));
    return out;
  }

 private:
  bool dominates(Mask inner) const {
    for (Mask r : vertex_res_) {
      if ((r & inner) == 0) return false;
    }
    return true;
  }

  bool pendant_valid(Mask inner) const { return inner != 0 && dominates(inner) && induces_connected(g_, inner); }

  bool pendant_minimal(Mask inner) const {
    bool minimal = true;
    for_each_bit(inner, [&](int v) {
      if (minimal && popcount(inner) > 1 && pendant_valid(inner & ~bit(v))) minimal = false;
    });
    return minimal;
  }

  // Connected vertex sets are enumerated once each from their smallest vertex;
  // extension stops at the first set that reaches every terminal, since any
  // larger set built from it is not minimal.
  void extend(Mask sub, Mask ext, Mask closed, int root) {
    while (ext != 0) {
      const int w = lowest(ext);
      ext &= ext - 1;
      const Mask next = sub | bit(w);
      if (dominates(next)) {
        if (pendant_minimal(next)) cands_.push_back({next, 0});
        continue;
      }
      const Mask fresh = g_.neighbors(w) & pool_ & ~closed & ~low_bits(root + 1);
      extend(next, ext | fresh, closed | g_.neighbors(w) | bit(w), root);
    }
  }

  void collect_pendant() {
    for_each_bit(pool_, [&](int v) {
      if (dominates(bit(v))) {
        cands_.push_back({bit(v), 0});
        return;
      }
      extend(bit(v), g_.neighbors(v) & pool_ & ~low_bits(v + 1), g_.neighbors(v) | bit(v), v);
    });
  }

  bool plain_valid(Mask inner, Mask links) const {
    const Mask span = inner | terms_;
    Mask seen = bit(terminal_list_.front());
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) {
        next |= g_.neighbors(v) & (((terms_ >> v) & 1U) ? inner : span);
      });
      for_each_bit(links, [&](int i) {
        if ((seen >> links_[i].u) & 1U) next |= bit(links_[i].v);
        if ((seen >> links_[i].v) & 1U) next |= bit(links_[i].u);
      });
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == span;
  }

  void collect_plain() {
    const int pool_size = popcount(pool_);
    const int link_count = static_cast<int>(links_.size());
    if (pool_size + link_count > 24) {
      throw InputError("generalized connectivity search supports at most 24 non-terminal vertices plus terminal edges");
    }
    const Mask all_links = low_bits(link_count);
    // iterate submasks of pool_
    Mask inner = 0;
    do {
      Mask links = 0;
      do {
        if (plain_valid(inner, links)) {
          bool minimal = true;
          for_each_bit(inner, [&](int v) {
            if (minimal && plain_valid(inner & ~bit(v), links)) minimal = false;
          });
          for_each_bit(links, [&](int i) {
            if (minimal && plain_valid(inner, links & ~bit(i))) minimal = false;
          });
          if (minimal) cands_.push_back({inner, links});
        }
        links = (links - all_links) & all_links;
      } while (links != 0);
      inner = (inner - pool_) & pool_;
    } while (inner != 0);
  }

  void search(int count, Mask used_v, Mask used_l, Mask ban_v, Mask ban_l) {
    ++nodes_;
    if (count > static_cast<int>(best_.size())) best_ = chosen_;
    if (static_cast<int>(best_.size()) >= limit_) return;
    const Mask block_v = used_v | ban_v;
    const Mask block_l = used_l | ban_l;
    int bound = kUnlimited;
    int pick = 0;
    for (int i = 0; i < static_cast<int>(terminal_list_.size()); ++i) {
      const int avail = popcount(vertex_res_[i] & ~block_v) + popcount(link_res_[i] & ~block_l);
      if (avail < bound) {
        bound = avail;
        pick = i;
      }
    }
    if (count + bound <= static_cast<int>(best_.size()) || bound == 0) return;
    const Mask av = vertex_res_[pick] & ~block_v;
    const bool on_vertex = av != 0;
    const int r = on_vertex ? lowest(av) : lowest(link_res_[pick] & ~block_l);
    const auto& list = on_vertex ? by_vertex_[r] : by_link_[r];
    for (int c : list) {
      const Candidate& cand = cands_[c];
      if ((cand.inner & block_v) != 0 || (cand.links & block_l) != 0) continue;
      chosen_.push_back(c);
      search(count + 1, used_v | cand.inner, used_l | cand.links, ban_v, ban_l);
      chosen_.pop_back();
      if (static_cast<int>(best_.size()) >= limit_) return;
    }
    if (on_vertex) {
      search(count, used_v, used_l, ban_v | bit(r), ban_l);
    } else {
      search(count, used_v, used_l, ban_v, ban_l | bit(r));
    }
  }

  SteinerTree realize(const Candidate& c) const {
    SteinerTree t;
    const Mask span = c.inner | terms_;
    // BFS spanning tree of the allowed edges on terminals plus inner vertices
    const int start = c.inner != 0 ? lowest(c.inner) : terminal_list_.front();
    Mask seen = bit(start);
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const bool v_term = (terms_ >> v) & 1U;
      if (mode_ == Mode::InternalPendant && v_term) continue;  // terminals stay leaves
      Mask nb = g_.neighbors(v) & (v_term ? c.inner : span);
      for_each_bit(c.links, [&](int i) {
        if (links_[i].u == v) nb |= bit(links_[i].v);
        if (links_[i].v == v) nb |= bit(links_[i].u);
      });
      for_each_bit(nb & ~seen, [&](int w) {
        seen |= bit(w);
        t.edges.emplace_back(v, w);
        queue.push_back(w);
      });
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
  }

  const Graph& g_;
  Mode mode_;
  Mask terms_;
  Mask pool_;
  std::vector<int> terminal_list_;
  std::vector<Edge> links_;
  std::vector<Mask> vertex_res_;
  std::vector<Mask> link_res_;
  std::vector<Candidate> cands_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<std::vector<int>> by_link_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  int limit_ = kUnlimited;
  std::uint64_t nodes_ = 0;
};

// Edge-pendant mode: trees share vertices but not edges, so the resources are
// edges. Trees are generated lazily around the branching edge.
class EdgeSearch {
 public:
  EdgeSearch(const Graph& g, VertexSet terminals) : g_(g), terms_(terminals.bits()) {
    pool_ = g.vertices().bits() & ~terms_;
    edges_ = g.edges();
    if (edges_.size() > 64) throw InputError("pendant edge-connectivity search supports at most 64 edges");
    id_.assign(g.order() * g.order(), -1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      id_[edges_[i].u * g.order() + edges_[i].v] = i;
      id_[edges_[i].v * g.order() + edges_[i].u] = i;
    }
    for_each_bit(terms_, [&](int s) {
      terminal_list_.push_back(s);
      Mask r = 0;
      for_each_bit(g.neighbors(s) & pool_, [&](int v) { r |= bit(edge_id(s, v)); });
      res_.push_back(r);
    });
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      if (((pool_ >> edges_[i].u) & 1U) && ((pool_ >> edges_[i].v) & 1U)) inner_edges_ |= bit(i);
    }
  }

  LocalResult run(int limit) {
    limit_ = limit < 0 ? kUnlimited : limit;
    if (limit_ > 0) search(0, 0, 0);
    LocalResult out;
    out.nodes = nodes_;
    out.value = static_cast<int>(best_.size());
    out.exact = out.value < limit_;
    out.witness.mode = Mode::EdgePendant;
    out.witness.terminals = VertexSet(terms_);
    for (Mask tree : best_) {
      SteinerTree t;
      for_each_bit(tree, [&](int i) { t.edges.push_back(edges_[i]); });
      out.witness.trees.push_back(std::move(t));
    }
    std::sort(out.witness.trees.begin(), out.witness.trees.end(),
              [](const SteinerTree& a, const SteinerTree& b) { return a.edges < b.edges; });
    return out;
  }

 private:
  int edge_id(int u, int v) const { return id_[u * g_.order() + v]; }
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  void search(int count, Mask used, Mask banned) {
    ++nodes_;
    if (count > static_cast<int>(best_.size())) best_ = chosen_;
    if (static_cast<int>(best_.size()) >= limit_) return;
    const Mask blocked = used | banned;
    int bound = kUnlimited;
    int pick = 0;
    for (int i = 0; i < static_cast<int>(terminal_list_.size()); ++i) {
      const int avail = popcount(res_[i] & ~blocked);
      if (avail < bound) {
        bound = avail;
        pick = i;
      }
    }
    if (bound == 0 || count + bound <= static_cast<int>(best_.size())) return;
    const int e = lowest(res_[pick] & ~blocked);
    for (Mask tree : trees_through(pick, e, blocked)) {
      chosen_.push_back(tree);
      search(count + 1, used | tree, banned);
      chosen_.pop_back();
      if (static_cast<int>(best_.size()) >= limit_) return;
    }
    search(count, used, banned | bit(e));
  }

  // Minimal pendant trees avoiding `blocked` in which terminal `pick` attaches by edge e.
  std::vector<Mask> trees_through(int pick, int e, Mask blocked) {
    std::vector<Mask> out;
    std::vector<int> attach(terminal_list_.size(), -1);
    attach[pick] = e;
    choose_attachments(0, attach, blocked, out);
    std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    return out;
  }

  void choose_attachments(int i, std::vector<int>& attach, Mask blocked, std::vector<Mask>& out) {
    if (i == static_cast<int>(terminal_list_.size())) {
      Mask points = 0;
      Mask tree = 0;
      for (int j = 0; j < static_cast<int>(attach.size()); ++j) {
        points |= bit(other_end(attach[j], terminal_list_[j]));
        tree |= bit(attach[j]);
      }
      connect_points(points, tree, blocked | tree, out);
      return;
    }
    if (attach[i] >= 0) {
      choose_attachments(i + 1, attach, blocked, out);
      return;
    }
    for_each_bit(res_[i] & ~blocked, [&](int a) {
      attach[i] = a;
      choose_attachments(i + 1, attach, blocked, out);
    });
    attach[i] = -1;
  }

  // Appends base | T for every spanning tree T of some vertex set U >= points,
  // using free inner edges, whose leaves all lie in points.
  void connect_points(Mask points, Mask base, Mask blocked, std::vector<Mask>& out) {
    const Mask free_inner = inner_edges_ & ~blocked;
    const Mask extra_pool = pool_ & ~points;
    Mask extra = 0;
    do {
      const Mask span = points | extra;
      std::vector<int> local_edges;
      for_each_bit(free_inner, [&](int i) {
        if (((span >> edges_[i].u) & 1U) && ((span >> edges_[i].v) & 1U)) local_edges.push_back(i);
      });
      spanning_trees(span, points, local_edges, base, out);
      extra = (extra - extra_pool) & extra_pool;
    } while (extra != 0);
  }

  void spanning_trees(Mask span, Mask points, const std::vector<int>& local_edges, Mask base,
                      std::vector<Mask>& out) {
    const int need = popcount(span) - 1;
    if (need == 0) {
      out.push_back(base);
      return;
    }
    std::vector<int> comp(g_.order());
    for (int v = 0; v < g_.order(); ++v) comp[v] = v;
    grow_tree(0, need, span, points, local_edges, comp, 0, base, out);
  }

  static int find(std::vector<int>& comp, int v) {
    while (comp[v] != v) v = comp[v];
    return v;
  }

  void grow_tree(std::size_t idx, int need, Mask span, Mask points, const std::vector<int>& local_edges,
                 std::vector<int> comp, Mask chosen, Mask base, std::vector<Mask>& out) {
    if (need == 0) {
      // every vertex outside `points` must be interior
      bool ok = true;
      for_each_bit(span & ~points, [&](int v) {
        int deg = 0;
        for_each_bit(chosen, [&](int i) { deg += (edges_[i].u == v || edges_[i].v == v); });
        if (deg < 2) ok = false;
      });
      if (ok) out.push_back(base | chosen);
      return;
    }
    if (static_cast<int>(local_edges.size() - idx) < need) return;
    const int e = local_edges[idx];
    const int a = find(comp, edges_[e].u);
    const int b = find(comp, edges_[e].v);
    if (a != b) {
      std::vector<int> joined = comp;
      joined[a] = b;
      grow_tree(idx + 1, need - 1, span, points, local_edges, std::move(joined), chosen | bit(e), base, out);
    }
    grow_tree(idx + 1, need, span, points, local_edges, std::move(comp), chosen, base, out);
  }

  const Graph& g_;
  Mask terms_;
  Mask pool_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> id_;
  std::vector<int> terminal_list_;
  std::vector<Mask> res_;
  Mask inner_edges_ = 0;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_;
  int limit_ = kUnlimited;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LocalResult local_connectivity(const Graph& g, VertexSet terminals, Mode mode, int limit) {
  if (terminals.size() < 2) throw InputError("terminal set needs at least two vertices");
  if (!terminals.subset_of(g.vertices())) throw InputError("terminal set exceeds graph order");
  if (limit == 0) {
    LocalResult out;
    out.witness.mode = mode;
    out.witness.terminals = terminals;
    out.exact = false;
    return out;
  }
  if (terminals.size() == 2) return two_terminal(g, terminals, mode, limit);
  if (mode == Mode::EdgePendant) return EdgeSearch(g, terminals).run(limit);
  return InternalSearch(g, terminals, mode).run(limit);
}

int complete_bipartite_tau(int r, int s, int k) { return std::max(std::min(r - k + 1, s - k + 1), 0); }

bool complete_bipartite_parts(const Graph& g, int& r, int& s) {
  const Mask all = g.vertices().bits();
  const Mask side_b = g.neighbors(0);
  const Mask side_a = all & ~side_b;
  if (side_b == 0) return false;
  bool ok = true;
  for_each_bit(side_a, [&](int v) { ok = ok && g.neighbors(v) == side_b; });
  for_each_bit(side_b, [&](int v) { ok = ok && g.neighbors(v) == side_a; });
  if (!ok) return false;
  r = std::min(popcount(side_a), popcount(side_b));
  s = std::max(popcount(side_a), popcount(side_b));
  return true;
}

int connectivity_upper_bound(const Graph& g, int k) {
  const int n = g.order();
  if (k < 3 || k > n) throw InputError("upper bound needs 3 <= k <= n");
  const int bound = std::min({min_degree(g) - k + 1, vertex_connectivity(g) - k + 2, n - k});
  return std::max(bound, 0);
}

namespace {

void check_k(const Graph& g, int k) {
  if (k < 2 || k > g.order()) {
    throw InputError("k must satisfy 2 <= k <= n (k=" + std::to_string(k) + ", n=" + std::to_string(g.order()) + ")");
  }
}

// Terminal sets tried first: a minimum-degree vertex with k-1 of its neighbours,
// which realizes the delta-k+1 bound.
std::vector<Mask> terminal_order(const Graph& g, int k) {
  std::vector<Mask> sets = detail::k_subsets(g.order(), k);
  int v = 0;
  for (int u = 1; u < g.order(); ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  Mask lead = bit(v);
  for_each_bit(g.neighbors(v), [&](int u) {
    if (popcount(lead) < k) lead |= bit(u);
  });
  for_each_bit(g.vertices().bits() & ~lead, [&](int u) {
    if (popcount(lead) < k) lead |= bit(u);
  });
  auto it = std::find(sets.begin(), sets.end(), lead);
  if (it != sets.end()) std::rotate(sets.begin(), it, it + 1);
  return sets;
}

}  // namespace

int connectivity_value(const Graph& g, int k, Mode mode, int cap, int stop_below) {
  check_k(g, k);
  if (!is_connected(g)) return 0;
  if (k == g.order() && k >= 3 && is_pendant(mode)) return 0;
  int current = cap;
  for (Mask s : terminal_order(g, k)) {
    if (current <= 0 || current < stop_below) break;
    current = std::min(current, local_connectivity(g, VertexSet(s), mode, current).value);
  }
  return std::max(current, 0);
}

ConnectivityResult global_connectivity(const Graph& g, int k, Mode mode, const SolveOptions& options) {
  check_k(g, k);
  const int n = g.order();
  ConnectivityResult out;
  int value = -1;
  if (!is_connected(g) || (k == n && k >= 3 && is_pendant(mode))) {
    value = 0;
  } else if (options.fast_paths && mode == Mode::InternalPendant && k >= 3) {
    int r = 0;
    int s = 0;
    if (g.is_complete()) {
      value = n - k;
      out.used_fast_path = true;
    } else if (complete_bipartite_parts(g, r, s)) {
      value = complete_bipartite_tau(r, s, k);
      out.used_fast_path = true;
    }
  }
  if (value < 0) {
    int cap = n;
    if (mode == Mode::InternalPendant && options.bound_caps && k >= 3) cap = connectivity_upper_bound(g, k);
    const std::vector<Mask> sets = terminal_order(g, k);
    std::atomic<int> current{cap};
    std::atomic<std::uint64_t> examined{0};
    auto work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t i = first; i < sets.size(); i += stride) {
        int seen = current.load();
        if (seen <= 0) return;
        const int v = local_connectivity(g, VertexSet(sets[i]), mode, seen).value;
        examined.fetch_add(1);
        while (v < seen && !current.compare_exchange_weak(seen, v)) {
        }
      }
    };
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
    }
    value = current.load();
    out.terminal_sets_examined = examined.load();
  }
  // lexicographically first terminal set attaining the minimum, with a maximum packing
  for (Mask s : detail::k_subsets(n, k)) {
    ++out.terminal_sets_examined;
    LocalResult r = local_connectivity(g, VertexSet(s), mode, value + 1);
    if (r.value == value) {
      out.value = value;
      out.minimizing_terminals = VertexSet(s);
      out.witness = std::move(r.witness);
      return out;
    }
    if (r.value < value) {
      throw std::logic_error("terminal set " + to_string(VertexSet(s)) + " falls below the computed minimum");
    }
  }
  throw std::logic_error("no terminal set attains the computed minimum " + std::to_string(value));
}

}  // namespace ptc
