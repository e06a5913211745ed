#include "pcp/arc_graph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "pcp/errors.hpp"

namespace pcp {

ArcGraph::ArcGraph(const ColoredMultiDigraph& g) : g_(&g) {
  succ_.resize(g.arc_count());
  for (int f = 0; f < g.arc_count(); ++f) {
    const Arc& a = g.arc(f);
    for (int id : g.out_arcs(a.head)) {
      if (g.arc(id).color != a.color) succ_[f].push_back(id);
    }
  }
}

// The search runs over a split view: node 2f is "about to traverse arc f",
// node 2f+1 is "just traversed f" (the hop between them costs f's weight),
// plus a virtual source 2m. Labels are (weight, hops) ordered
// lexicographically, so every edge strictly increases the label and each
// node's optimal predecessors all settle before the node itself; that makes
// the per-node lexicographic parent choice final by settling time.
FevTrailSearch::FevTrailSearch(const ArcGraph& ag, int source_vertex, ColorSet start_colors)
    : ag_(&ag) {
  const ColoredMultiDigraph& g = ag.graph();
  if (source_vertex < 0 || source_vertex >= g.vertex_count()) {
    throw InputError("vertex out of range");
  }
  const int m = g.arc_count();
  const int source = 2 * m;
  dist_.assign(2 * m + 1, Rational(0));
  steps_.assign(2 * m + 1, 0);
  parent_.assign(2 * m + 1, -1);
  reached_.assign(2 * m + 1, 0);
  std::vector<char> settled(2 * m + 1, 0);

  using Entry = std::tuple<Rational, int, int>;  // weight, hops, node
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;

  auto relax = [&](int node, const Rational& d, int st, int from) {
    if (reached_[node]) {
      if (std::tie(dist_[node], steps_[node]) < std::tie(d, st)) return;
      if (std::tie(dist_[node], steps_[node]) == std::tie(d, st)) {
        if (settled[node]) return;
        std::vector<int> cand = arc_sequence(from);
        std::vector<int> cur = arc_sequence(parent_[node]);
        if (std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end())) {
          parent_[node] = from;
        }
        return;
      }
    }
    reached_[node] = 1;
    dist_[node] = d;
    steps_[node] = st;
    parent_[node] = from;
    pq.emplace(d, st, node);
  };

  reached_[source] = 1;
  pq.emplace(Rational(0), 0, source);
  while (!pq.empty()) {
    auto [d, st, x] = pq.top();
    pq.pop();
    if (settled[x]) continue;
    settled[x] = 1;
    if (x == source) {
      for (int f : g.out_arcs(source_vertex)) {
        if (start_colors.allows(g.arc(f).color)) relax(2 * f, d, st + 1, source);
      }
    } else if (x % 2 == 0) {
      relax(x + 1, d + g.arc(x / 2).weight, st + 1, x);
    } else {
      for (int next : ag.successors(x / 2)) relax(2 * next, d, st + 1, x);
    }
  }
}

std::vector<int> FevTrailSearch::arc_sequence(int node) const {
  std::vector<int> seq;
  for (int x = node; x >= 0 && x < 2 * ag_->node_count(); x = parent_[x]) {
    if (x % 2 == 0) seq.push_back(x / 2);
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::optional<Trail> FevTrailSearch::trail_to(int target_vertex, ColorSet end_colors) const {
  const ColoredMultiDigraph& g = ag_->graph();
  if (target_vertex < 0 || target_vertex >= g.vertex_count()) {
    throw InputError("vertex out of range");
  }
  int best = -1;
  std::vector<int> best_seq;
  for (int f : g.in_arcs(target_vertex)) {
    if (!end_colors.allows(g.arc(f).color)) continue;
    int node = 2 * f + 1;
    if (!reached_[node]) continue;
    if (best < 0 ||
        std::tie(dist_[node], steps_[node]) < std::tie(dist_[best], steps_[best])) {
      best = node;
      best_seq = arc_sequence(node);
      continue;
    }
    if (std::tie(dist_[node], steps_[node]) == std::tie(dist_[best], steps_[best])) {
      std::vector<int> seq = arc_sequence(node);
      if (std::lexicographical_compare(seq.begin(), seq.end(), best_seq.begin(), best_seq.end())) {
        best = node;
        best_seq = std::move(seq);
      }
    }
  }
  if (best < 0) return std::nullopt;
  Trail t = Trail::from_arcs(g, best_seq);
  if (t.total_weight != dist_[best]) {
    throw InvariantViolation("trail weight disagrees with search label");
  }
  return t;
}

std::optional<Trail> min_weight_pc_fev_trail(const ArcGraph& ag, int s, int t,
                                             ColorSet start_colors, ColorSet end_colors) {
  FevTrailSearch search(ag, s, std::move(start_colors));
  return search.trail_to(t, std::move(end_colors));
}

bool pc_trail_exists(const ArcGraph& ag, int f1, int f2) {
  if (f1 < 0 || f1 >= ag.node_count() || f2 < 0 || f2 >= ag.node_count()) {
    throw InputError("arc id out of range");
  }
  if (f1 == f2) return true;
  std::vector<char> vis(ag.node_count(), 0);
  std::queue<int> q;
  vis[f1] = 1;
  q.push(f1);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int next : ag.successors(f)) {
      if (next == f2) return true;
      if (!vis[next]) {
        vis[next] = 1;
        q.push(next);
      }
    }
  }
  return false;
}

ConnectivityReport is_pc_trail_connected(const ArcGraph& ag) {
  const int m = ag.node_count();
  if (m < 1) throw InputError("trail-connectivity needs at least 1 arc");

  // Iterative Tarjan; connected iff there is exactly one strongly connected
  // component.
  std::vector<int> index(m, -1), low(m, 0), stack;
  std::vector<char> on_stack(m, 0);
  int next_index = 0, scc_count = 0;
  std::vector<std::pair<int, std::size_t>> work;
  for (int root = 0; root < m && scc_count < 2; ++root) {
    if (index[root] != -1) continue;
    work.emplace_back(root, 0);
    while (!work.empty()) {
      auto& [v, child] = work.back();
      if (child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (child < ag.successors(v).size()) {
        int w = ag.successors(v)[child++];
        if (index[w] == -1) {
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        ++scc_count;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
        } while (w != v);
      }
      int finished = v;
      work.pop_back();
      if (!work.empty()) {
        low[work.back().first] = std::min(low[work.back().first], low[finished]);
      }
    }
  }
  if (scc_count == 1) return {true, -1, -1};

  // Lexicographically first ordered pair with no connecting trail.
  for (int f1 = 0; f1 < m; ++f1) {
    std::vector<char> vis(m, 0);
    std::queue<int> q;
    vis[f1] = 1;
    q.push(f1);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int next : ag.successors(f)) {
        if (!vis[next]) {
          vis[next] = 1;
          q.push(next);
        }
      }
    }
    for (int f2 = 0; f2 < m; ++f2) {
      if (!vis[f2]) return {false, f1, f2};
    }
  }
  throw InvariantViolation("multiple components reported but no witness pair found");
}

}  // namespace pcp
