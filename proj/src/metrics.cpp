#include "collabnet/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "collabnet/errors.hpp"
#include "collabnet/threading.hpp"

namespace collabnet {

namespace {

double dyad_count(const CollabGraph& g, const char* what) {
    const int n = g.node_count();
    if (n < 2)
        throw UndefinedResultError(std::string(what) +
                                   " is undefined: graph has fewer than 2 nodes");
    return static_cast<double>(n) * (n - 1) / 2.0;
}

// Per-source BFS scratch, reused across the sources of one block.
struct BrandesScratch {
    std::vector<int> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<int> order;  // BFS visit order
    std::vector<int> queue;

    explicit BrandesScratch(size_t n) : dist(n), sigma(n), delta(n) {
        order.reserve(n);
        queue.resize(n);
    }
};

struct SourceSweep {
    double closeness = 0.0;
    long long reachable = 0;     // nodes reached, source excluded
    long long distance_sum = 0;  // hop counts to reached nodes
};

// One BFS from `source`; with_dependencies additionally runs the Brandes
// dependency accumulation, leaving per-node contributions in scratch.delta.
SourceSweep single_source(const CollabGraph& g, int source, BrandesScratch& scratch,
                          bool with_dependencies) {
    const int n = g.node_count();
    std::fill(scratch.dist.begin(), scratch.dist.end(), -1);
    if (with_dependencies) std::fill(scratch.sigma.begin(), scratch.sigma.end(), 0.0);
    scratch.order.clear();

    scratch.dist[static_cast<size_t>(source)] = 0;
    if (with_dependencies) scratch.sigma[static_cast<size_t>(source)] = 1.0;
    size_t head = 0, tail = 0;
    scratch.queue[tail++] = source;
    while (head < tail) {
        const int v = scratch.queue[head++];
        scratch.order.push_back(v);
        const int dv = scratch.dist[static_cast<size_t>(v)];
        for (const auto& [u, w] : g.neighbors(v)) {
            int& du = scratch.dist[static_cast<size_t>(u)];
            if (du < 0) {
                du = dv + 1;
                scratch.queue[tail++] = u;
            }
            if (with_dependencies && du == dv + 1)
                scratch.sigma[static_cast<size_t>(u)] += scratch.sigma[static_cast<size_t>(v)];
        }
    }

    SourceSweep sweep;
    for (int u = 0; u < n; ++u) {
        const int d = scratch.dist[static_cast<size_t>(u)];
        if (u == source || d <= 0) continue;
        sweep.closeness += 1.0 / d;
        ++sweep.reachable;
        sweep.distance_sum += d;
    }

    if (with_dependencies) {
        std::fill(scratch.delta.begin(), scratch.delta.end(), 0.0);
        for (auto it = scratch.order.rbegin(); it != scratch.order.rend(); ++it) {
            const int v = *it;
            const int dv = scratch.dist[static_cast<size_t>(v)];
            for (const auto& [u, w] : g.neighbors(v)) {
                if (scratch.dist[static_cast<size_t>(u)] == dv + 1)
                    scratch.delta[static_cast<size_t>(v)] +=
                        scratch.sigma[static_cast<size_t>(v)] /
                        scratch.sigma[static_cast<size_t>(u)] *
                        (1.0 + scratch.delta[static_cast<size_t>(u)]);
            }
        }
    }
    return sweep;
}

struct PairStats {
    std::vector<double> closeness;
    std::vector<double> betweenness;      // pair-normalized (unordered pairs)
    long long ordered_reachable = 0;      // ordered reachable pairs
    long long ordered_distance_sum = 0;
};

// Sources are processed in fixed blocks and block contributions are merged
// in ascending order, so the floating-point accumulation is identical for
// any worker count.
constexpr int kSourceBlock = 64;

struct BlockResult {
    std::vector<double> betweenness;
    long long reachable = 0;
    long long distance_sum = 0;
};

PairStats all_pairs_stats(const CollabGraph& g, bool with_betweenness, int workers) {
    const int n = g.node_count();
    PairStats stats;
    stats.closeness.assign(static_cast<size_t>(n), 0.0);
    if (with_betweenness) stats.betweenness.assign(static_cast<size_t>(n), 0.0);
    if (n == 0) return stats;

    const int num_blocks = (n + kSourceBlock - 1) / kSourceBlock;
    auto compute = [&](int block) {
        BlockResult result;
        if (with_betweenness) result.betweenness.assign(static_cast<size_t>(n), 0.0);
        BrandesScratch scratch(static_cast<size_t>(n));
        const int begin = block * kSourceBlock;
        const int end = std::min(n, begin + kSourceBlock);
        for (int s = begin; s < end; ++s) {
            SourceSweep sweep = single_source(g, s, scratch, with_betweenness);
            stats.closeness[static_cast<size_t>(s)] = sweep.closeness;
            result.reachable += sweep.reachable;
            result.distance_sum += sweep.distance_sum;
            if (with_betweenness)
                for (int v = 0; v < n; ++v)
                    if (v != s)
                        result.betweenness[static_cast<size_t>(v)] +=
                            scratch.delta[static_cast<size_t>(v)];
        }
        return result;
    };
    auto merge = [&](int, BlockResult&& result) {
        stats.ordered_reachable += result.reachable;
        stats.ordered_distance_sum += result.distance_sum;
        if (with_betweenness)
            for (int v = 0; v < n; ++v)
                stats.betweenness[static_cast<size_t>(v)] +=
                    result.betweenness[static_cast<size_t>(v)];
    };
    ordered_block_reduce<BlockResult>(num_blocks, workers, compute, merge);

    // Each unordered pair was visited from both endpoints.
    if (with_betweenness)
        for (double& b : stats.betweenness) b /= 2.0;
    return stats;
}

}  // namespace

double density_binary(const CollabGraph& g) {
    return static_cast<double>(g.edge_count()) / dyad_count(g, "density_binary");
}

double density_weighted(const CollabGraph& g) {
    return static_cast<double>(g.total_weight()) / dyad_count(g, "density_weighted");
}

std::map<std::string, int> shortest_path_lengths(const CollabGraph& g,
                                                 const std::string& source) {
    const int s = g.index_of(source);
    BrandesScratch scratch(static_cast<size_t>(g.node_count()));
    single_source(g, s, scratch, false);
    std::map<std::string, int> result;
    for (int v = 0; v < g.node_count(); ++v)
        if (v != s && scratch.dist[static_cast<size_t>(v)] >= 0)
            result.emplace(g.name_of(v), scratch.dist[static_cast<size_t>(v)]);
    return result;
}

double closeness(const CollabGraph& g, const std::string& node) {
    const int s = g.index_of(node);
    BrandesScratch scratch(static_cast<size_t>(g.node_count()));
    return single_source(g, s, scratch, false).closeness;
}

double betweenness(const CollabGraph& g, const std::string& node) {
    const int v = g.index_of(node);
    return betweenness_all(g)[static_cast<size_t>(v)];
}

std::vector<double> closeness_all(const CollabGraph& g) {
    return all_pairs_stats(g, false, thread_budget()).closeness;
}

std::vector<double> betweenness_all(const CollabGraph& g) {
    return all_pairs_stats(g, true, thread_budget()).betweenness;
}

namespace {

double centralization_sum(const std::vector<double>& scores) {
    double max = 0.0;
    for (double s : scores) max = std::max(max, s);
    double sum = 0.0;
    for (double s : scores) sum += max - s;
    return sum;
}

// Sum of differences attained by the star on n nodes, the maximizer, under
// the same [0, 1] normalization as the observed scores.
double star_normalizer(int n, CentralityMeasure measure) {
    std::vector<double> star(static_cast<size_t>(n));
    star[0] = 1.0;  // hub
    double leaf = 0.0;
    switch (measure) {
    case CentralityMeasure::degree: leaf = 1.0 / (n - 1); break;
    case CentralityMeasure::closeness: leaf = (1.0 + 0.5 * (n - 2)) / (n - 1); break;
    case CentralityMeasure::betweenness: leaf = 0.0; break;
    }
    for (int i = 1; i < n; ++i) star[static_cast<size_t>(i)] = leaf;
    return centralization_sum(star);
}

std::vector<double> normalized_scores(const CollabGraph& g, CentralityMeasure measure) {
    const int n = g.node_count();
    std::vector<double> scores(static_cast<size_t>(n));
    switch (measure) {
    case CentralityMeasure::degree:
        for (int v = 0; v < n; ++v)
            scores[static_cast<size_t>(v)] = static_cast<double>(g.degree(v)) / (n - 1);
        break;
    case CentralityMeasure::closeness: {
        auto values = closeness_all(g);
        for (int v = 0; v < n; ++v)
            scores[static_cast<size_t>(v)] = values[static_cast<size_t>(v)] / (n - 1);
        break;
    }
    case CentralityMeasure::betweenness: {
        auto values = betweenness_all(g);
        const double pairs = static_cast<double>(n - 1) * (n - 2) / 2.0;
        for (int v = 0; v < n; ++v)
            scores[static_cast<size_t>(v)] = values[static_cast<size_t>(v)] / pairs;
        break;
    }
    }
    return scores;
}

}  // namespace

double centralization(const CollabGraph& g, CentralityMeasure measure) {
    if (g.node_count() < 3)
        throw UndefinedResultError(
            "centralization is undefined: graph has fewer than 3 nodes");
    return centralization_sum(normalized_scores(g, measure)) /
           star_normalizer(g.node_count(), measure);
}

std::optional<double> clustering_local(const CollabGraph& g, const std::string& node) {
    const int v = g.index_of(node);
    const auto nbrs = g.neighbors(v);
    const int k = static_cast<int>(nbrs.size());
    if (k < 2) return std::nullopt;
    long long links = 0;
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i].first, nbrs[j].first)) ++links;
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
}

double clustering_avg(const CollabGraph& g, bool include_low_degree_as_zero) {
    double sum = 0.0;
    long long defined = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        const int k = static_cast<int>(nbrs.size());
        if (k < 2) continue;
        long long links = 0;
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i].first, nbrs[j].first)) ++links;
        sum += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
        ++defined;
    }
    if (include_low_degree_as_zero) {
        if (g.node_count() == 0)
            throw UndefinedResultError("clustering_avg is undefined: graph is empty");
        return sum / g.node_count();
    }
    if (defined == 0)
        throw UndefinedResultError(
            "clustering_avg is undefined: no node has degree >= 2");
    return sum / static_cast<double>(defined);
}

std::vector<std::vector<std::string>> components(const CollabGraph& g) {
    const int n = g.node_count();
    std::vector<int> label(static_cast<size_t>(n), -1);
    std::vector<std::vector<std::string>> result;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (label[static_cast<size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(result.size());
        result.emplace_back();
        label[static_cast<size_t>(start)] = id;
        stack.assign(1, start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            result[static_cast<size_t>(id)].push_back(g.name_of(v));
            for (const auto& [u, w] : g.neighbors(v)) {
                if (label[static_cast<size_t>(u)] < 0) {
                    label[static_cast<size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(result.back().begin(), result.back().end());
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return result;
}

double connectedness(const CollabGraph& g) {
    const double pairs = dyad_count(g, "connectedness") * 2.0;  // ordered
    double reachable = 0.0;
    for (const auto& comp : components(g)) {
        const double s = static_cast<double>(comp.size());
        reachable += s * (s - 1);
    }
    return reachable / pairs;
}

double average_distance(const CollabGraph& g) {
    PairStats stats = all_pairs_stats(g, false, thread_budget());
    if (stats.ordered_reachable == 0)
        throw UndefinedResultError(
            "average_distance is undefined: graph has no reachable pair");
    return static_cast<double>(stats.ordered_distance_sum) /
           static_cast<double>(stats.ordered_reachable);
}

namespace {

// Bron-Kerbosch with pivoting over sorted index sets.
class CliqueEnumerator {
public:
    CliqueEnumerator(const CollabGraph& g, size_t min_size)
        : g_(g), min_size_(min_size) {}

    std::vector<std::vector<int>> run() {
        const int n = g_.node_count();
        std::vector<int> all(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
        std::vector<int> clique;
        expand(clique, std::move(all), {});
        return std::move(found_);
    }

private:
    std::vector<int> neighbor_indices(int v) const {
        const auto nbrs = g_.neighbors(v);
        std::vector<int> out;
        out.reserve(nbrs.size());
        for (const auto& [u, w] : nbrs) out.push_back(u);
        return out;
    }

    // Candidate maximizing |N(u) and P|, ties to the smallest index.
    int pick_pivot(const std::vector<int>& candidates, const std::vector<int>& excluded) const {
        int pivot = -1;
        size_t best = 0;
        auto consider = [&](int u) {
            const auto nbrs = neighbor_indices(u);
            std::vector<int> tmp;
            std::set_intersection(nbrs.begin(), nbrs.end(), candidates.begin(),
                                  candidates.end(), std::back_inserter(tmp));
            if (pivot < 0 || tmp.size() > best) {
                pivot = u;
                best = tmp.size();
            }
        };
        for (int u : candidates) consider(u);
        for (int u : excluded) consider(u);
        return pivot;
    }

    void expand(std::vector<int>& clique, std::vector<int> candidates,
                std::vector<int> excluded) {
        if (candidates.empty() && excluded.empty()) {
            if (clique.size() >= min_size_) found_.push_back(clique);
            return;
        }
        const auto pivot_nbrs = neighbor_indices(pick_pivot(candidates, excluded));
        std::vector<int> frontier;
        std::set_difference(candidates.begin(), candidates.end(), pivot_nbrs.begin(),
                            pivot_nbrs.end(), std::back_inserter(frontier));
        for (int v : frontier) {
            const auto nbrs = neighbor_indices(v);
            std::vector<int> next_candidates, next_excluded;
            std::set_intersection(candidates.begin(), candidates.end(), nbrs.begin(),
                                  nbrs.end(), std::back_inserter(next_candidates));
            std::set_intersection(excluded.begin(), excluded.end(), nbrs.begin(), nbrs.end(),
                                  std::back_inserter(next_excluded));
            clique.push_back(v);
            expand(clique, std::move(next_candidates), std::move(next_excluded));
            clique.pop_back();
            candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
            excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
        }
    }

    const CollabGraph& g_;
    size_t min_size_;
    std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<Clique> maximal_cliques(const CollabGraph& g, int min_size) {
    if (min_size < 3) throw DataError("clique min_size must be at least 3");
    CliqueEnumerator enumerator(g, static_cast<size_t>(min_size));
    std::vector<Clique> cliques;
    for (auto& members : enumerator.run()) {
        Clique c;
        c.members.reserve(members.size());
        std::sort(members.begin(), members.end());
        for (int v : members) c.members.push_back(g.name_of(v));
        cliques.push_back(std::move(c));
    }
    std::sort(cliques.begin(), cliques.end(), [](const Clique& a, const Clique& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.members < b.members;
    });
    return cliques;
}

std::vector<std::pair<std::string, int>> clique_overlap(const std::vector<Clique>& cliques) {
    std::map<std::string, int> counts;
    for (const auto& clique : cliques)
        for (const auto& member : clique.members) ++counts[member];
    std::vector<std::pair<std::string, int>> overlap;
    for (const auto& [name, count] : counts)
        if (count >= 2) overlap.emplace_back(name, count);
    return overlap;
}

std::vector<NodeCentrality> node_centralities(const CollabGraph& g) {
    PairStats stats = all_pairs_stats(g, true, thread_budget());
    std::vector<NodeCentrality> result;
    result.reserve(static_cast<size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        NodeCentrality c;
        c.node = g.name_of(v);
        c.degree = g.degree(v);
        c.weighted_degree = g.weighted_degree(v);
        c.closeness = stats.closeness[static_cast<size_t>(v)];
        c.betweenness = stats.betweenness[static_cast<size_t>(v)];
        c.clustering = clustering_local(g, c.node);
        result.push_back(std::move(c));
    }
    return result;
}

MetricsReport full_report(const CollabGraph& g, bool clustering_zero_variant) {
    const int n = g.node_count();
    if (n < 3)
        throw UndefinedResultError("full_report is undefined: graph has fewer than 3 nodes");

    MetricsReport report;
    report.level = g.level();
    report.window = g.window();
    report.policy = g.policy();
    report.nodes = n;
    report.links = g.edge_count();
    report.total_weight = g.total_weight();
    report.clustering_zero_variant = clustering_zero_variant;

    report.density_binary = density_binary(g);
    report.density_weighted = density_weighted(g);

    auto comps = components(g);
    report.component_count = static_cast<long long>(comps.size());
    for (const auto& comp : comps)
        report.component_sizes.push_back(static_cast<long long>(comp.size()));
    report.giant_size = report.component_sizes.empty() ? 0 : report.component_sizes.front();

    double reachable_ordered = 0.0;
    for (long long s : report.component_sizes)
        reachable_ordered += static_cast<double>(s) * (s - 1);
    report.connectedness = reachable_ordered / (static_cast<double>(n) * (n - 1));

    report.clustering_avg = clustering_avg(g, clustering_zero_variant);

    PairStats stats = all_pairs_stats(g, true, thread_budget());
    if (stats.ordered_reachable == 0)
        throw UndefinedResultError(
            "average_distance is undefined: graph has no reachable pair");
    report.average_distance = static_cast<double>(stats.ordered_distance_sum) /
                              static_cast<double>(stats.ordered_reachable);

    // Centralizations from the shared pass: normalize, difference-sum, star.
    {
        std::vector<double> scores(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            scores[static_cast<size_t>(v)] = static_cast<double>(g.degree(v)) / (n - 1);
        report.centralization_degree =
            centralization_sum(scores) / star_normalizer(n, CentralityMeasure::degree);

        for (int v = 0; v < n; ++v)
            scores[static_cast<size_t>(v)] = stats.closeness[static_cast<size_t>(v)] / (n - 1);
        report.centralization_closeness =
            centralization_sum(scores) / star_normalizer(n, CentralityMeasure::closeness);

        const double pairs = static_cast<double>(n - 1) * (n - 2) / 2.0;
        for (int v = 0; v < n; ++v)
            scores[static_cast<size_t>(v)] =
                stats.betweenness[static_cast<size_t>(v)] / pairs;
        report.centralization_betweenness =
            centralization_sum(scores) / star_normalizer(n, CentralityMeasure::betweenness);
    }
    return report;
}

}  // namespace collabnet
