#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lamprime {

using Node = int;
using Edge = std::pair<Node, Node>;

/// Undirected simple graph on nodes 0..n-1. Immutable after construction.
class Graph {
public:
    /// Edges may be given in any order and orientation; self-loops, duplicates and
    /// out-of-range endpoints throw PreconditionError.
    Graph(int n, std::vector<Edge> edges);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    /// Sorted, each edge stored with first < second.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Node>& neighbors(Node v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Node v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Node u, Node v) const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Node>> adj_;
    std::vector<char> matrix_;
};

/// Maps unordered pairs i < j to 0..C(n,2)-1 in lexicographic order.
class PairIndex {
public:
    explicit PairIndex(int n);

    int num_nodes() const { return n_; }
    int size() const { return size_; }
    int operator()(Node i, Node j) const;
    Edge pair(int index) const { return pairs_[static_cast<std::size_t>(index)]; }

private:
    int n_;
    int size_;
    std::vector<int> row_start_;
    std::vector<Edge> pairs_;
};

/// Cycle on 2^k nodes, node i adjacent to (i+1) mod n. Requires k >= 2.
Graph gen_ring(int k);

/// Node 0 is the centre, adjacent to 1..n-1. Requires n >= 3.
Graph gen_star(int n);

Graph gen_path(int n);
Graph gen_complete(int n);

/// Erdos-Renyi G(n, p) from a fixed seed (mt19937_64, pairs in lexicographic order).
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// Edge-list text: "u v" lines, '#' comments, optional "n <count>" header.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Writes "n <count>" followed by sorted "u v" lines with u < v.
std::string save_graph(const Graph& g);

}  // namespace lamprime
