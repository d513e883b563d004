#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "collabnet/corpus.hpp"
#include "collabnet/registry.hpp"

namespace collabnet {

// How a record contributes to an entity-pair weight.
//   per_publication:     each record adds at most 1 per distinct entity pair.
//   per_pair_occurrence: each co-occurring entity-instance pair adds 1 (two
//                        authors from institute A and one from B add 2 to A-B).
enum class WeightPolicy { per_publication, per_pair_occurrence };

WeightPolicy policy_from_string(const std::string& s);
std::string to_string(WeightPolicy policy);

// Which affiliations of a multi-affiliation author feed the institute and
// country projections.
enum class AffiliationAttribution { all, first };

struct GraphEdge {
    int u = 0, v = 0;  // node indices, u < v
    long long weight = 0;
    int first_year = 0, last_year = 0;  // 0 when unknown (imported graphs)
};

// Undirected weighted simple graph at one level. Nodes are kept sorted by
// name and addressed by index; edges are sorted by (u, v). Immutable after
// construction, safe to share across threads.
class CollabGraph {
public:
    CollabGraph() = default;

    // Edges as (a, b, weight) name triples; a == b or a repeated pair is a
    // DataError. Extra nodes introduce isolates (or attach attributes).
    static CollabGraph from_edges(
        Level level, const std::vector<std::tuple<std::string, std::string, long long>>& edges,
        const std::map<std::string, std::map<std::string, std::string>>& node_attributes = {},
        const std::vector<std::string>& extra_nodes = {});

    Level level() const { return level_; }
    const std::optional<YearWindow>& window() const { return window_; }
    WeightPolicy policy() const { return policy_; }

    int node_count() const { return static_cast<int>(names_.size()); }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    long long total_weight() const { return total_weight_; }

    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& name_of(int v) const { return names_[static_cast<size_t>(v)]; }
    int index_of(const std::string& name) const;  // DataError naming an unknown node
    bool contains(const std::string& name) const;

    const std::vector<GraphEdge>& edges() const { return edges_; }
    // Neighbors of v as (neighbor index, edge weight), sorted by index.
    std::span<const std::pair<int, long long>> neighbors(int v) const;
    int degree(int v) const;
    long long weighted_degree(int v) const;
    bool has_edge(int u, int v) const;

    const std::map<std::string, std::string>& attributes(int v) const {
        return attrs_[static_cast<size_t>(v)];
    }

private:
    friend CollabGraph build_graph(const std::vector<PublicationRecord>&, struct BuildOptions const&,
                                   const EntityRegistry*);
    friend CollabGraph induced_subgraph(const CollabGraph&, const std::vector<std::string>&);

    void assemble(std::vector<std::string> names,
                  std::vector<std::tuple<int, int, long long, int, int>> indexed_edges);

    Level level_ = Level::author;
    std::optional<YearWindow> window_;
    WeightPolicy policy_ = WeightPolicy::per_publication;
    std::vector<std::string> names_;                       // sorted
    std::map<std::string, int> index_;
    std::vector<std::map<std::string, std::string>> attrs_;
    std::vector<GraphEdge> edges_;                         // sorted by (u, v)
    std::vector<std::pair<int, long long>> adjacency_;     // CSR payload
    std::vector<size_t> adjacency_offsets_;
    long long total_weight_ = 0;
};

struct BuildOptions {
    Level level = Level::country;
    std::optional<YearWindow> window;
    WeightPolicy policy = WeightPolicy::per_publication;
    bool include_isolates = false;
    AffiliationAttribution attribution = AffiliationAttribution::all;
};

// Projects canonicalized records onto a collaboration graph. The registry,
// when given, supplies node attributes (country of institutes, region of
// countries); observed affiliation countries fill the gaps for institutes.
CollabGraph build_graph(const std::vector<PublicationRecord>& records,
                        const BuildOptions& options,
                        const EntityRegistry* registry = nullptr);

struct GraphSummary {
    int nodes = 0;
    long long edges = 0;
    long long total_weight = 0;
    bool operator==(const GraphSummary&) const = default;
};

GraphSummary graph_summary(const CollabGraph& g);

// Subgraph induced by `nodes`; an unknown node is a DataError naming it.
CollabGraph induced_subgraph(const CollabGraph& g, const std::vector<std::string>& nodes);

// Weighted edge-list CSV (source,target,weight) and node-attribute CSV
// (node,attribute,value); import accepts the same formats.
void write_edge_csv(const CollabGraph& g, std::ostream& out);
void write_node_attr_csv(const CollabGraph& g, std::ostream& out);
CollabGraph read_edge_csv(std::istream& edges, std::istream* node_attrs, Level level);

}  // namespace collabnet
