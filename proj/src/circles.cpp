#include "incalg/circles.hpp"

#include <algorithm>
#include <map>

namespace incalg {

namespace {

std::vector<std::vector<int>> comparability_adjacency(const PreOrder& order) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(order.size()));
  for (auto [u, v] : order.comparability_edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

void check_bound(const PreOrder& order, int bound) {
  if (order.size() > bound)
    fail(ErrorKind::OracleBoundExceeded,
         "set has " + std::to_string(order.size()) + " elements, oracle bound is " +
             std::to_string(bound));
}

void cycle_dfs(const std::vector<std::vector<int>>& adj, int start, std::vector<int>& path,
               std::vector<char>& used, std::vector<Circle>& out) {
  int u = path.back();
  for (int w : adj[static_cast<std::size_t>(u)]) {
    if (w <= start || used[static_cast<std::size_t>(w)]) continue;
    // Close the cycle start, path[1], ..., u, w when w is adjacent to start;
    // orientation path[1] < w keeps one of the two traversals.
    if (path.size() >= 2 && path[1] < w &&
        std::find(adj[static_cast<std::size_t>(w)].begin(), adj[static_cast<std::size_t>(w)].end(),
                  start) != adj[static_cast<std::size_t>(w)].end()) {
      Circle c;
      c.vertices = path;
      c.vertices.push_back(w);
      out.push_back(std::move(c));
    }
    used[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
    cycle_dfs(adj, start, path, used, out);
    path.pop_back();
    used[static_cast<std::size_t>(w)] = 0;
  }
}

// Undirected edge ids in the order of comparability_edges().
struct EdgeIndex {
  explicit EdgeIndex(const PreOrder& order)
      : n(order.size()), edges(order.comparability_edges()),
        table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      table[static_cast<std::size_t>(u * n + v)] = static_cast<int>(e);
      table[static_cast<std::size_t>(v * n + u)] = static_cast<int>(e);
    }
  }
  int id(int u, int v) const { return table[static_cast<std::size_t>(u * n + v)]; }

  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> table;
};

// Groups the directed edges by the group label of their underlying
// undirected edge; canonical ordering as documented in the header.
std::vector<std::vector<std::pair<int, int>>> group_directed_edges(const PreOrder& order,
                                                                   const EdgeIndex& index,
                                                                   const std::vector<int>& label) {
  std::map<int, std::vector<std::pair<int, int>>> grouped;
  for (auto [x, y] : order.directed_edges())
    grouped[label[static_cast<std::size_t>(index.id(x, y))]].emplace_back(x, y);
  std::vector<std::vector<std::pair<int, int>>> classes;
  classes.reserve(grouped.size());
  for (auto& [lbl, edges] : grouped) {
    std::sort(edges.begin(), edges.end());
    classes.push_back(std::move(edges));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

struct BlockFinder {
  explicit BlockFinder(const EdgeIndex& index)
      : index(index), adj(static_cast<std::size_t>(index.n)),
        disc(static_cast<std::size_t>(index.n), -1), low(static_cast<std::size_t>(index.n), 0),
        edge_block(index.edges.size(), -1) {
    for (std::size_t e = 0; e < index.edges.size(); ++e) {
      auto [u, v] = index.edges[e];
      adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
      adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
    }
    for (int s = 0; s < index.n; ++s)
      if (disc[static_cast<std::size_t>(s)] == -1) dfs(s, -1);
  }

  void dfs(int u, int parent_edge) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    for (auto [v, eid] : adj[static_cast<std::size_t>(u)]) {
      if (eid == parent_edge) continue;
      if (disc[static_cast<std::size_t>(v)] == -1) {
        stack.push_back(eid);
        dfs(v, eid);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
          // u separates the subtree below v: pop one complete block.
          int block = block_count++;
          while (true) {
            int top = stack.back();
            stack.pop_back();
            edge_block[static_cast<std::size_t>(top)] = block;
            if (top == eid) break;
          }
        }
      } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
        stack.push_back(eid);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
  }

  const EdgeIndex& index;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge id)
  std::vector<int> disc, low;
  std::vector<int> edge_block;
  std::vector<int> stack;
  int timer = 0;
  int block_count = 0;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

}  // namespace

std::vector<Circle> enumerate_circles(const PreOrder& order, int bound) {
  check_bound(order, bound);
  auto adj = comparability_adjacency(order);
  std::vector<Circle> out;
  for (auto [u, v] : order.comparability_edges()) out.push_back(Circle{{u, v}});
  std::vector<char> used(static_cast<std::size_t>(order.size()), 0);
  std::vector<int> path;
  for (int s = 0; s < order.size(); ++s) {
    path.assign(1, s);
    used[static_cast<std::size_t>(s)] = 1;
    cycle_dfs(adj, s, path, used, out);
    used[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const Circle& a, const Circle& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<std::vector<std::pair<int, int>>> directed_edge_classes(const PreOrder& order) {
  EdgeIndex index(order);
  BlockFinder blocks(index);
  return group_directed_edges(order, index, blocks.edge_block);
}

PropernessReport properness_guaranteed(const PreOrder& order) {
  PropernessReport report;
  auto components = order.connected_components();
  auto classes = directed_edge_classes(order);
  std::vector<int> component_of(static_cast<std::size_t>(order.size()), -1);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (int x : components[c]) component_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  report.components.resize(components.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    report.components[c].members = components[c];
  for (auto& cls : classes) {
    auto c = static_cast<std::size_t>(component_of[static_cast<std::size_t>(cls.front().first)]);
    report.components[c].edge_classes.push_back(std::move(cls));
  }
  for (const auto& comp : report.components)
    if (comp.edge_classes.size() > 1) report.guaranteed = false;
  return report;
}

std::vector<std::vector<std::pair<int, int>>> directed_edge_classes_oracle(const PreOrder& order,
                                                                           int bound) {
  EdgeIndex index(order);
  UnionFind dsu(index.edges.size());
  for (const Circle& circle : enumerate_circles(order, bound)) {
    const auto& vs = circle.vertices;
    if (vs.size() < 3) continue;  // a single pair links nothing new
    int first = index.id(vs[0], vs[1]);
    for (std::size_t i = 1; i < vs.size(); ++i)
      dsu.unite(first, index.id(vs[i], vs[(i + 1) % vs.size()]));
  }
  std::vector<int> label(index.edges.size());
  for (std::size_t e = 0; e < index.edges.size(); ++e)
    label[e] = dsu.find(static_cast<int>(e));
  return group_directed_edges(order, index, label);
}

}  // namespace incalg
