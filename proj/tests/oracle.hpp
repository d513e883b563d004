// Brute-force reference implementations used only by tests. These stay
// independent of the library's algorithms: adjacency matrices, exhaustive
// path enumeration and full subset scans instead of BFS, Brandes and
// Bron-Kerbosch.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "collabnet/graph.hpp"

namespace oracle {

constexpr int kInf = 1 << 20;

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(int n_) : n(n_), adj(static_cast<size_t>(n_),
                                         std::vector<bool>(static_cast<size_t>(n_), false)) {}

    void connect(int a, int b) {
        adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
        adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = true;
    }
};

inline Matrix from_graph(const collabnet::CollabGraph& g) {
    Matrix m(g.node_count());
    for (const auto& e : g.edges()) m.connect(e.u, e.v);
    return m;
}

// All-pairs distances by iterated relaxation over the adjacency matrix.
inline std::vector<std::vector<int>> all_pairs_distances(const Matrix& m) {
    std::vector<std::vector<int>> dist(static_cast<size_t>(m.n),
                                       std::vector<int>(static_cast<size_t>(m.n), kInf));
    for (int v = 0; v < m.n; ++v) dist[static_cast<size_t>(v)][static_cast<size_t>(v)] = 0;
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            if (m.adj[static_cast<size_t>(a)][static_cast<size_t>(b)])
                dist[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    for (int k = 0; k < m.n; ++k)
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) {
                const int via = dist[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                                dist[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (via < dist[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = via;
            }
    return dist;
}

inline double closeness(const Matrix& m, int v) {
    auto dist = all_pairs_distances(m);
    double sum = 0.0;
    for (int u = 0; u < m.n; ++u) {
        const int d = dist[static_cast<size_t>(v)][static_cast<size_t>(u)];
        if (u != v && d < kInf) sum += 1.0 / d;
    }
    return sum;
}

inline double average_distance(const Matrix& m) {
    auto dist = all_pairs_distances(m);
    long long total = 0, pairs = 0;
    for (int a = 0; a < m.n; ++a)
        for (int b = a + 1; b < m.n; ++b) {
            const int d = dist[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (d < kInf) {
                total += d;
                ++pairs;
            }
        }
    return static_cast<double>(total) / static_cast<double>(pairs);
}

namespace detail {

// Enumerates every simple path s -> t no longer than `limit`; counts the
// shortest ones and how often each interior node lies on one.
struct PathCounter {
    const Matrix& m;
    int target, limit;
    long long geodesics = 0;
    std::vector<long long> through;
    std::vector<bool> on_path;
    std::vector<int> path;

    PathCounter(const Matrix& m_, int t, int limit_)
        : m(m_), target(t), limit(limit_),
          through(static_cast<size_t>(m_.n), 0),
          on_path(static_cast<size_t>(m_.n), false) {}

    void dfs(int v) {
        if (v == target) {
            if (static_cast<int>(path.size()) - 1 == limit) {
                ++geodesics;
                for (size_t i = 1; i + 1 < path.size(); ++i)
                    ++through[static_cast<size_t>(path[i])];
            }
            return;
        }
        if (static_cast<int>(path.size()) - 1 >= limit) return;
        for (int u = 0; u < m.n; ++u) {
            if (!m.adj[static_cast<size_t>(v)][static_cast<size_t>(u)] ||
                on_path[static_cast<size_t>(u)])
                continue;
            on_path[static_cast<size_t>(u)] = true;
            path.push_back(u);
            dfs(u);
            path.pop_back();
            on_path[static_cast<size_t>(u)] = false;
        }
    }
};

}  // namespace detail

// Pair-normalized betweenness of every node via exhaustive enumeration of
// all shortest simple paths. Feasible for n <= 8 or so.
inline std::vector<double> betweenness_all(const Matrix& m) {
    auto dist = all_pairs_distances(m);
    std::vector<double> result(static_cast<size_t>(m.n), 0.0);
    for (int s = 0; s < m.n; ++s)
        for (int t = s + 1; t < m.n; ++t) {
            const int d = dist[static_cast<size_t>(s)][static_cast<size_t>(t)];
            if (d >= kInf || d == 0) continue;
            detail::PathCounter counter(m, t, d);
            counter.on_path[static_cast<size_t>(s)] = true;
            counter.path.push_back(s);
            counter.dfs(s);
            for (int v = 0; v < m.n; ++v)
                if (counter.through[static_cast<size_t>(v)] > 0)
                    result[static_cast<size_t>(v)] +=
                        static_cast<double>(counter.through[static_cast<size_t>(v)]) /
                        static_cast<double>(counter.geodesics);
        }
    return result;
}

// Maximal cliques of size >= min_size by scanning every vertex subset.
// Feasible for n <= 12 or so. Returns sorted member-index vectors.
inline std::vector<std::vector<int>> maximal_cliques(const Matrix& m, int min_size) {
    std::vector<std::vector<int>> result;
    for (unsigned mask = 1; mask < (1u << m.n); ++mask) {
        if (__builtin_popcount(mask) < min_size) continue;
        std::vector<int> members;
        for (int v = 0; v < m.n; ++v)
            if (mask & (1u << v)) members.push_back(v);
        bool complete = true;
        for (size_t i = 0; i < members.size() && complete; ++i)
            for (size_t j = i + 1; j < members.size() && complete; ++j)
                if (!m.adj[static_cast<size_t>(members[i])][static_cast<size_t>(members[j])])
                    complete = false;
        if (!complete) continue;
        bool maximal = true;
        for (int v = 0; v < m.n && maximal; ++v) {
            if (mask & (1u << v)) continue;
            bool adjacent_to_all = true;
            for (int u : members)
                if (!m.adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) {
                    adjacent_to_all = false;
                    break;
                }
            if (adjacent_to_all) maximal = false;
        }
        if (maximal) result.push_back(std::move(members));
    }
    return result;
}

inline std::vector<std::set<int>> components(const Matrix& m) {
    auto dist = all_pairs_distances(m);
    std::vector<bool> assigned(static_cast<size_t>(m.n), false);
    std::vector<std::set<int>> result;
    for (int v = 0; v < m.n; ++v) {
        if (assigned[static_cast<size_t>(v)]) continue;
        std::set<int> comp;
        for (int u = 0; u < m.n; ++u)
            if (dist[static_cast<size_t>(v)][static_cast<size_t>(u)] < kInf) {
                comp.insert(u);
                assigned[static_cast<size_t>(u)] = true;
            }
        result.push_back(std::move(comp));
    }
    return result;
}

// Triple-counting clustering: closed triples at v over connected triples at v.
inline double clustering_avg_by_triples(const Matrix& m) {
    double sum = 0.0;
    long long defined = 0;
    for (int v = 0; v < m.n; ++v) {
        long long open = 0, closed = 0;
        for (int a = 0; a < m.n; ++a)
            for (int b = a + 1; b < m.n; ++b) {
                if (a == v || b == v) continue;
                if (!m.adj[static_cast<size_t>(v)][static_cast<size_t>(a)] ||
                    !m.adj[static_cast<size_t>(v)][static_cast<size_t>(b)])
                    continue;
                ++open;
                if (m.adj[static_cast<size_t>(a)][static_cast<size_t>(b)]) ++closed;
            }
        if (open == 0) continue;  // degree < 2
        sum += static_cast<double>(closed) / static_cast<double>(open);
        ++defined;
    }
    return sum / static_cast<double>(defined);
}

// Freeman centralization evaluated directly from a score vector, with the
// normalizer computed on an explicit star adjacency matrix.
inline double centralization_sum(const std::vector<double>& scores) {
    double max = *std::max_element(scores.begin(), scores.end());
    double sum = 0.0;
    for (double s : scores) sum += max - s;
    return sum;
}

inline Matrix star(int n) {
    Matrix m(n);
    for (int leaf = 1; leaf < n; ++leaf) m.connect(0, leaf);
    return m;
}

// Random test graphs: G(n, p) with integer weights in [1, max_weight].
inline collabnet::CollabGraph random_graph(std::mt19937& rng, int n, double p,
                                           long long max_weight = 5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long long> weight(1, max_weight);
    std::vector<std::tuple<std::string, std::string, long long>> edges;
    auto name = [](int v) {
        std::string s = std::to_string(v);
        return std::string("n") + std::string(2 - std::min<size_t>(2, s.size()), '0') + s;
    };
    std::vector<std::string> nodes;
    for (int v = 0; v < n; ++v) nodes.push_back(name(v));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < p) edges.emplace_back(name(a), name(b), weight(rng));
    return collabnet::CollabGraph::from_edges(collabnet::Level::author, edges, {}, nodes);
}

}  // namespace oracle
