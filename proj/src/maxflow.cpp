#include "mmorder/maxflow.hpp"

#include <deque>

namespace mm {

int MaxFlowGraph::add_edge(int from, int to, Int cap) {
    adj_[from].push_back(Edge{to, std::move(cap), static_cast<int>(adj_[to].size())});
    adj_[to].push_back(Edge{from, Int(0), static_cast<int>(adj_[from].size()) - 1});
    edge_refs_.emplace_back(from, static_cast<int>(adj_[from].size()) - 1);
    return static_cast<int>(edge_refs_.size()) - 1;
}

bool MaxFlowGraph::bfs(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::deque<int> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const Edge& e : adj_[v]) {
            if (e.cap > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return level_[sink] >= 0;
}

Int MaxFlowGraph::dfs(int v, int sink, Int limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
        Edge& e = adj_[v][i];
        if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
        Int pushed = dfs(e.to, sink, limit < e.cap ? limit : e.cap);
        if (pushed > 0) {
            e.cap -= pushed;
            adj_[e.to][e.rev].cap += pushed;
            return pushed;
        }
    }
    level_[v] = -1;
    return 0;
}

Int MaxFlowGraph::run(int source, int sink) {
    Int total = 0;
    Int inf = 0;
    for (const auto& edges : adj_)
        for (const Edge& e : edges) inf += e.cap;
    inf += 1;
    while (bfs(source, sink)) {
        iter_.assign(adj_.size(), 0);
        while (true) {
            Int pushed = dfs(source, sink, inf);
            if (pushed == 0) break;
            total += pushed;
        }
    }
    return total;
}

Int MaxFlowGraph::flow_on(int edge_id) const {
    auto [v, idx] = edge_refs_[edge_id];
    const Edge& e = adj_[v][idx];
    // Flow shows up as capacity on the reverse edge.
    return adj_[e.to][e.rev].cap;
}

}  // namespace mm
