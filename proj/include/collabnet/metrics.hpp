#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "collabnet/graph.hpp"

namespace collabnet {

enum class CentralityMeasure { degree, closeness, betweenness };

struct NodeCentrality {
    std::string node;
    int degree = 0;
    long long weighted_degree = 0;
    double closeness = 0.0;    // sum of reciprocal geodesic distances
    double betweenness = 0.0;  // pair-normalized shortest-path counts
    std::optional<double> clustering;  // undefined when degree < 2
};

// The Table-3-shaped measure bundle for one graph.
struct MetricsReport {
    Level level = Level::author;
    std::optional<YearWindow> window;
    WeightPolicy policy = WeightPolicy::per_publication;
    int nodes = 0;
    long long links = 0;
    long long total_weight = 0;

    double density_binary = 0.0;
    double density_weighted = 0.0;
    double connectedness = 0.0;
    double clustering_avg = 0.0;
    long long component_count = 0;
    std::vector<long long> component_sizes;  // descending
    long long giant_size = 0;
    double average_distance = 0.0;
    double centralization_degree = 0.0;
    double centralization_closeness = 0.0;
    double centralization_betweenness = 0.0;
    bool clustering_zero_variant = false;  // degree<2 nodes counted as zero

    bool operator==(const MetricsReport&) const = default;
};

struct Clique {
    std::vector<std::string> members;  // sorted
    bool operator==(const Clique&) const = default;
};

// Geodesics are hop counts; edge weights never enter distances.

double density_binary(const CollabGraph& g);    // edges / dyads, needs n >= 2
double density_weighted(const CollabGraph& g);  // total weight / dyads, needs n >= 2

// Hop distances from source to every reachable node; the source itself and
// unreachable nodes are absent.
std::map<std::string, int> shortest_path_lengths(const CollabGraph& g,
                                                 const std::string& source);

double closeness(const CollabGraph& g, const std::string& node);
double betweenness(const CollabGraph& g, const std::string& node);
std::vector<double> closeness_all(const CollabGraph& g);
std::vector<double> betweenness_all(const CollabGraph& g);

// Freeman centralization with per-node scores normalized to [0, 1] and the
// star-graph normalizer computed under the same normalization. Needs n >= 3.
double centralization(const CollabGraph& g, CentralityMeasure measure);

std::optional<double> clustering_local(const CollabGraph& g, const std::string& node);
double clustering_avg(const CollabGraph& g, bool include_low_degree_as_zero = false);

// Connected components, each sorted by name, ordered by size descending then
// smallest member.
std::vector<std::vector<std::string>> components(const CollabGraph& g);

double connectedness(const CollabGraph& g);     // reachable pairs / all pairs, needs n >= 2
double average_distance(const CollabGraph& g);  // mean geodesic over reachable pairs

// All maximal cliques with at least min_size members (min_size >= 3),
// ordered by size descending then lexicographic member sequence.
std::vector<Clique> maximal_cliques(const CollabGraph& g, int min_size = 3);

// Nodes that belong to two or more of the given cliques, with their counts.
std::vector<std::pair<std::string, int>> clique_overlap(const std::vector<Clique>& cliques);

std::vector<NodeCentrality> node_centralities(const CollabGraph& g);

// Everything above in one shared shortest-path pass. Needs n >= 3; undefined
// sub-measures propagate as UndefinedResultError naming the field.
MetricsReport full_report(const CollabGraph& g, bool clustering_zero_variant = false);

}  // namespace collabnet
