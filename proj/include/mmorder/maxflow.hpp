#pragma once

#include <vector>

#include "mmorder/rational.hpp"

namespace mm {

// Dinic max-flow over exact big integers. Adjacency order is fixed by the
// order of add_edge calls, so the resulting flow is deterministic.
class MaxFlowGraph {
public:
    explicit MaxFlowGraph(int n) : adj_(n) {}

    // Returns an edge id usable with flow_on() after run().
    int add_edge(int from, int to, Int cap);

    Int run(int source, int sink);

    Int flow_on(int edge_id) const;

private:
    struct Edge {
        int to;
        Int cap;
        int rev;
    };

    bool bfs(int source, int sink);
    Int dfs(int v, int sink, Int limit);

    std::vector<std::vector<Edge>> adj_;
    std::vector<std::pair<int, int>> edge_refs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace mm
