#include "lamprime/graph.hpp"

#include "lamprime/rational.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace lamprime {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw PreconditionError("graph needs at least one node");
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    adj_.resize(static_cast<std::size_t>(n));
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw PreconditionError("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
        auto& cell = matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
        if (cell) throw PreconditionError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        cell = 1;
        matrix_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = 1;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Node u, Node v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Node v = stack.back();
        stack.pop_back();
        for (Node w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

PairIndex::PairIndex(int n) : n_(n), size_(n * (n - 1) / 2) {
    row_start_.resize(static_cast<std::size_t>(std::max(n, 1)));
    pairs_.reserve(static_cast<std::size_t>(size_));
    int next = 0;
    for (int i = 0; i < n; ++i) {
        row_start_[static_cast<std::size_t>(i)] = next - (i + 1);
        for (int j = i + 1; j < n; ++j) {
            pairs_.emplace_back(i, j);
            ++next;
        }
    }
}

int PairIndex::operator()(Node i, Node j) const {
    if (i > j) std::swap(i, j);
    return row_start_[static_cast<std::size_t>(i)] + j;
}

Graph gen_ring(int k) {
    if (k < 2) throw PreconditionError("ring generator needs k >= 2");
    if (k > 20) throw PreconditionError("ring generator capped at k = 20");
    int n = 1 << k;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph gen_star(int n) {
    if (n < 3) throw PreconditionError("star generator needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, std::move(edges));
}

Graph gen_path(int n) {
    if (n < 2) throw PreconditionError("path generator needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
    if (n < 2) throw PreconditionError("complete graph generator needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("G(n,p) needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("G(n,p) needs p in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph load_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int declared_n = -1;
    int max_index = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty() || (fields >> extra)) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two fields");
        }
        auto to_int = [&](const std::string& s) {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || value < 0 || value > (1L << 24)) {
                throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
            }
            return static_cast<int>(value);
        };
        if (a == "n") {
            if (declared_n >= 0 || !edges.empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": 'n' header must come first and once");
            }
            declared_n = to_int(b);
            if (declared_n < 1) throw ParseError("header n must be positive");
            continue;
        }
        int u = to_int(a);
        int v = to_int(b);
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
            throw ParseError("line " + std::to_string(line_no) + ": node index exceeds declared n");
        }
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
    }
    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (n < 1) throw ParseError("graph has no nodes");
    try {
        return Graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string save_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.num_nodes() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace lamprime
