#include "pdmatch/primitives.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace pdmatch {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dinic max flow over a small arc-list representation.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes)
      : head_(nodes, kNone), tail_(nodes, kNone), level_(nodes), iter_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::size_t cap) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, cap, kNone});
    arcs_.push_back({from, 0, kNone});
    link(from, id);
    link(to, id + 1);
    return id;
  }

  std::size_t max_flow(std::size_t s, std::size_t t) {
    std::size_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (std::size_t f = dfs(s, t, std::numeric_limits<std::size_t>::max())) flow += f;
    }
    return flow;
  }

  std::size_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

 private:
  struct Arc {
    std::size_t to;
    std::size_t cap;
    std::size_t next;
  };

  // Arcs are appended to the tail of each node's list so that scans follow
  // insertion order.
  void link(std::size_t node, std::size_t arc) {
    if (head_[node] == kNone) {
      head_[node] = arc;
    } else {
      arcs_[tail_[node]].next = arc;
    }
    tail_[node] = arc;
  }

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), kNone);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t a = head_[u]; a != kNone; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] == kNone) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] != kNone;
  }

  std::size_t dfs(std::size_t u, std::size_t t, std::size_t pushed) {
    if (u == t) return pushed;
    for (std::size_t& a = iter_[u]; a != kNone; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap == 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::size_t f = dfs(arc.to, t, std::min(pushed, arc.cap))) {
        arc.cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::size_t> head_, tail_, level_, iter_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> max_b_matching(const CapacitatedBipartiteGraph& g) {
  if (g.right_caps.size() != g.right_count) {
    throw std::invalid_argument("right_caps must have one entry per right vertex");
  }
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].first >= g.left_count || edges[k].second >= g.right_count) {
      throw std::invalid_argument("b-matching edge endpoint out of range");
    }
    if (k > 0 && edges[k] == edges[k - 1]) throw std::invalid_argument("duplicate b-matching edge");
  }

  const std::size_t source = 0;
  const std::size_t left0 = 1;
  const std::size_t right0 = left0 + g.left_count;
  const std::size_t sink = right0 + g.right_count;
  FlowNetwork net(sink + 1);

  for (std::size_t u = 0; u < g.left_count; ++u) net.add_arc(source, left0 + u, 1);
  std::vector<std::size_t> edge_arc(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    edge_arc[k] = net.add_arc(left0 + edges[k].first, right0 + edges[k].second, 1);
  }
  for (std::size_t v = 0; v < g.right_count; ++v) {
    if (g.right_caps[v] > 0) net.add_arc(right0 + v, sink, g.right_caps[v]);
  }
  net.max_flow(source, sink);

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (net.flow_on(edge_arc[k]) > 0) out.push_back(edges[k]);
  }
  return out;
}

namespace {

// Edmonds' algorithm: grow alternating BFS trees from each free vertex and
// contract odd cycles onto their base when two even vertices meet.
class Blossom {
 public:
  explicit Blossom(const GeneralGraph& g)
      : n_(g.vertex_count), adj_(n_), match_(n_, kNone), parent_(n_), base_(n_), used_(n_),
        blossom_(n_) {
    for (auto [u, v] : g.edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::vector<std::pair<std::size_t, std::size_t>> solve() {
    // Greedy warm start shortens the augmenting phase without affecting optimality.
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_[u] != kNone) continue;
      for (std::size_t v : adj_[u]) {
        if (match_[v] == kNone) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (std::size_t root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      std::size_t v = find_path(root);
      while (v != kNone) {
        const std::size_t pv = parent_[v];
        const std::size_t ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_[u] != kNone && u < match_[u]) out.emplace_back(u, match_[u]);
    }
    return out;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const std::size_t cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> max_general_matching(const GeneralGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u >= g.vertex_count || v >= g.vertex_count) {
      throw std::invalid_argument("general graph edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop in general graph");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw std::invalid_argument("duplicate edge in general graph");
    }
  }
  return Blossom(g).solve();
}

}  // namespace pdmatch
