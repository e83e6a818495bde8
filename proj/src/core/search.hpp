// search.hpp -- small graph helpers shared by the cycle searches
#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace moddiag {

struct SccResult {
  std::vector<int> comp;  // component id per node, -1 for non-members
  int count = 0;
};

/// Tarjan over the subgraph induced by `member` (iterative). Components are
/// numbered in completion order, which is deterministic for a fixed adjacency.
inline SccResult tarjan_scc(const std::vector<std::vector<int>>& adj,
                            const std::vector<bool>& member) {
  int n = static_cast<int>(adj.size());
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> idx(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_idx = 0;

  struct Frame {
    int node;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (!member[root] || idx[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = next_idx++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      int s = f.node;
      if (f.edge < adj[s].size()) {
        int w = adj[s][f.edge++];
        if (!member[w]) continue;
        if (idx[w] < 0) {
          idx[w] = low[w] = next_idx++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[s] = std::min(low[s], idx[w]);
        }
      } else {
        if (low[s] == idx[s]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = res.count;
            if (w == s) break;
          }
          ++res.count;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[s]);
      }
    }
  }
  return res;
}

/// Layered BFS keeping, per node, the lexicographically least shortest event
/// path; ties broken by the id of the incoming edge, so results are stable
/// for a fixed expansion order.
struct PathInfo {
  std::vector<int> events;
  int pred_node = -1;
  int pred_edge = -1;
  bool reached = false;
};

class PathSearch {
 public:
  explicit PathSearch(int nodes) : info_(nodes) {}

  const PathInfo& at(int node) const { return info_[node]; }

  /// expand(node, visit): call visit(succ, event, edge_id) for each out-edge.
  template <typename Expand>
  void run(int start, Expand expand) {
    info_[start].reached = true;
    std::vector<int> frontier{start};
    while (!frontier.empty()) {
      std::vector<int> next;
      std::set<int> next_set;
      for (int node : frontier) {
        expand(node, [&](int succ, int event, int edge_id) {
          PathInfo cand;
          cand.events = info_[node].events;
          cand.events.push_back(event);
          cand.pred_node = node;
          cand.pred_edge = edge_id;
          cand.reached = true;
          PathInfo& cur = info_[succ];
          if (!cur.reached) {
            cur = std::move(cand);
            if (next_set.insert(succ).second) next.push_back(succ);
          } else if (next_set.count(succ) &&
                     std::tie(cand.events, cand.pred_edge) < std::tie(cur.events, cur.pred_edge)) {
            cur = std::move(cand);  // same depth, better path
          }
        });
      }
      frontier = std::move(next);
    }
  }

  /// Edge ids along the stored path into `node`, source first.
  std::vector<int> chain(int node) const {
    std::vector<int> out;
    for (int cur = node; info_[cur].pred_node >= 0; cur = info_[cur].pred_node)
      out.push_back(info_[cur].pred_edge);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<PathInfo> info_;
};

}  // namespace moddiag
