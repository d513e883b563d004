#include "collabnet/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "collabnet/csv.hpp"
#include "collabnet/errors.hpp"

namespace collabnet {

WeightPolicy policy_from_string(const std::string& s) {
    if (s == "per-publication" || s == "per_publication") return WeightPolicy::per_publication;
    if (s == "per-pair" || s == "per_pair_occurrence") return WeightPolicy::per_pair_occurrence;
    throw DataError("unknown weight policy '" + s + "' (expected per-publication or per-pair)");
}

std::string to_string(WeightPolicy policy) {
    return policy == WeightPolicy::per_publication ? "per-publication" : "per-pair";
}

int CollabGraph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw DataError("node '" + name + "' is not in the graph");
    return it->second;
}

bool CollabGraph::contains(const std::string& name) const { return index_.count(name) > 0; }

std::span<const std::pair<int, long long>> CollabGraph::neighbors(int v) const {
    const size_t begin = adjacency_offsets_[static_cast<size_t>(v)];
    const size_t end = adjacency_offsets_[static_cast<size_t>(v) + 1];
    return {adjacency_.data() + begin, end - begin};
}

int CollabGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

long long CollabGraph::weighted_degree(int v) const {
    long long sum = 0;
    for (const auto& [u, w] : neighbors(v)) sum += w;
    return sum;
}

bool CollabGraph::has_edge(int u, int v) const {
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const auto& entry, int node) { return entry.first < node; });
    return it != nbrs.end() && it->first == v;
}

// Takes node names (sorted, unique) and edges as (u, v, weight, first, last)
// index tuples with u < v, and builds the sorted edge list plus CSR adjacency.
void CollabGraph::assemble(std::vector<std::string> names,
                           std::vector<std::tuple<int, int, long long, int, int>> indexed_edges) {
    names_ = std::move(names);
    index_.clear();
    for (int i = 0; i < node_count(); ++i) index_.emplace(names_[static_cast<size_t>(i)], i);
    attrs_.assign(names_.size(), {});

    std::sort(indexed_edges.begin(), indexed_edges.end());
    edges_.clear();
    edges_.reserve(indexed_edges.size());
    total_weight_ = 0;
    for (const auto& [u, v, w, fy, ly] : indexed_edges) {
        edges_.push_back({u, v, w, fy, ly});
        total_weight_ += w;
    }

    const size_t n = names_.size();
    std::vector<size_t> counts(n + 1, 0);
    for (const auto& e : edges_) {
        ++counts[static_cast<size_t>(e.u) + 1];
        ++counts[static_cast<size_t>(e.v) + 1];
    }
    adjacency_offsets_.assign(n + 1, 0);
    for (size_t i = 1; i <= n; ++i) adjacency_offsets_[i] = adjacency_offsets_[i - 1] + counts[i];
    adjacency_.assign(adjacency_offsets_[n], {});
    std::vector<size_t> cursor(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[cursor[static_cast<size_t>(e.u)]++] = {e.v, e.weight};
        adjacency_[cursor[static_cast<size_t>(e.v)]++] = {e.u, e.weight};
    }
    for (size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + static_cast<long>(adjacency_offsets_[v]),
                  adjacency_.begin() + static_cast<long>(adjacency_offsets_[v + 1]));
}

CollabGraph CollabGraph::from_edges(
    Level level, const std::vector<std::tuple<std::string, std::string, long long>>& edges,
    const std::map<std::string, std::map<std::string, std::string>>& node_attributes,
    const std::vector<std::string>& extra_nodes) {
    std::set<std::string> names;
    for (const auto& [a, b, w] : edges) {
        if (a == b) throw DataError("self-loop on node '" + a + "'");
        if (w < 1) throw DataError("edge '" + a + "' -- '" + b + "' has non-positive weight");
        names.insert(a);
        names.insert(b);
    }
    for (const auto& n : extra_nodes) names.insert(n);
    for (const auto& [n, attrs] : node_attributes) names.insert(n);

    CollabGraph g;
    g.level_ = level;
    std::vector<std::string> sorted(names.begin(), names.end());
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        index.emplace(sorted[static_cast<size_t>(i)], i);

    std::set<std::pair<int, int>> seen;
    std::vector<std::tuple<int, int, long long, int, int>> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b, w] : edges) {
        int u = index.at(a), v = index.at(b);
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second)
            throw DataError("duplicate edge '" + a + "' -- '" + b + "'");
        indexed.emplace_back(u, v, w, 0, 0);
    }
    g.assemble(std::move(sorted), std::move(indexed));
    for (const auto& [name, attrs] : node_attributes) {
        auto it = g.index_.find(name);
        if (it != g.index_.end()) g.attrs_[static_cast<size_t>(it->second)] = attrs;
    }
    return g;
}

namespace {

// Distinct entity names of one record at the given level, plus the full
// instance multiset (for per_pair_occurrence counting).
void record_entities(const PublicationRecord& rec, Level level,
                     AffiliationAttribution attribution, std::vector<std::string>& instances) {
    instances.clear();
    for (const auto& author : rec.authors) {
        if (level == Level::author) {
            instances.push_back(author.name);
            continue;
        }
        size_t limit = author.affiliations.size();
        if (attribution == AffiliationAttribution::first && limit > 1) limit = 1;
        for (size_t i = 0; i < limit; ++i) {
            const Affiliation& aff = author.affiliations[i];
            if (level == Level::institute && aff.institute) instances.push_back(*aff.institute);
            if (level == Level::country && aff.country) instances.push_back(*aff.country);
        }
    }
}

struct EdgeAccum {
    long long weight = 0;
    int first_year = 0;
    int last_year = 0;
};

}  // namespace

CollabGraph build_graph(const std::vector<PublicationRecord>& records,
                        const BuildOptions& options, const EntityRegistry* registry) {
    if (options.window && options.window->from > options.window->to)
        throw DataError("year window [" + std::to_string(options.window->from) + ", " +
                        std::to_string(options.window->to) + "] is empty");

    std::map<std::pair<std::string, std::string>, EdgeAccum> edge_map;
    std::set<std::string> entities_seen;
    // Observed countries per institute, for the node attribute fallback.
    std::map<std::string, std::map<std::string, long long>> observed_country;

    std::vector<std::string> instances;
    for (const auto& rec : records) {
        if (options.window && !options.window->contains(rec.year)) continue;
        record_entities(rec, options.level, options.attribution, instances);

        std::map<std::string, long long> multiplicity;
        for (const auto& name : instances) ++multiplicity[name];
        for (const auto& [name, count] : multiplicity) entities_seen.insert(name);

        if (options.level == Level::institute) {
            for (const auto& author : rec.authors) {
                size_t limit = author.affiliations.size();
                if (options.attribution == AffiliationAttribution::first && limit > 1) limit = 1;
                for (size_t i = 0; i < limit; ++i) {
                    const Affiliation& aff = author.affiliations[i];
                    if (aff.institute && aff.country)
                        ++observed_country[*aff.institute][*aff.country];
                }
            }
        }

        for (auto a = multiplicity.begin(); a != multiplicity.end(); ++a) {
            for (auto b = std::next(a); b != multiplicity.end(); ++b) {
                long long delta = options.policy == WeightPolicy::per_publication
                                      ? 1
                                      : a->second * b->second;
                EdgeAccum& acc = edge_map[{a->first, b->first}];
                acc.weight += delta;
                if (acc.first_year == 0 || rec.year < acc.first_year) acc.first_year = rec.year;
                if (rec.year > acc.last_year) acc.last_year = rec.year;
            }
        }
    }

    std::set<std::string> names;
    for (const auto& [pair, acc] : edge_map) {
        names.insert(pair.first);
        names.insert(pair.second);
    }
    if (options.include_isolates)
        names.insert(entities_seen.begin(), entities_seen.end());

    CollabGraph g;
    g.level_ = options.level;
    g.window_ = options.window;
    g.policy_ = options.policy;

    std::vector<std::string> sorted(names.begin(), names.end());
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        index.emplace(sorted[static_cast<size_t>(i)], i);

    std::vector<std::tuple<int, int, long long, int, int>> indexed;
    indexed.reserve(edge_map.size());
    for (const auto& [pair, acc] : edge_map) {
        int u = index.at(pair.first), v = index.at(pair.second);
        if (u > v) std::swap(u, v);
        indexed.emplace_back(u, v, acc.weight, acc.first_year, acc.last_year);
    }
    g.assemble(std::move(sorted), std::move(indexed));

    // Node attributes: country for institutes (registry first, then the most
    // frequent observed country, ties broken lexicographically), region for
    // countries (registry only).
    if (options.level == Level::institute) {
        for (int v = 0; v < g.node_count(); ++v) {
            const std::string& institute = g.name_of(v);
            std::optional<std::string> country;
            if (registry) country = registry->country_of_institute(institute);
            if (!country) {
                auto it = observed_country.find(institute);
                if (it != observed_country.end() && !it->second.empty()) {
                    long long best = 0;
                    for (const auto& [name, cnt] : it->second)
                        if (cnt > best) {
                            best = cnt;
                            country = name;
                        }
                }
            }
            if (country) g.attrs_[static_cast<size_t>(v)]["country"] = *country;
        }
    } else if (options.level == Level::country && registry) {
        for (int v = 0; v < g.node_count(); ++v)
            if (auto region = registry->region_of_country(g.name_of(v)))
                g.attrs_[static_cast<size_t>(v)]["region"] = to_string(*region);
    }
    return g;
}

GraphSummary graph_summary(const CollabGraph& g) {
    return {g.node_count(), g.edge_count(), g.total_weight()};
}

CollabGraph induced_subgraph(const CollabGraph& g, const std::vector<std::string>& nodes) {
    std::set<int> keep;
    for (const auto& name : nodes) keep.insert(g.index_of(name));

    CollabGraph sub;
    sub.level_ = g.level();
    sub.window_ = g.window();
    sub.policy_ = g.policy();

    std::vector<std::string> names;
    names.reserve(keep.size());
    for (int v : keep) names.push_back(g.name_of(v));
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        index.emplace(names[static_cast<size_t>(i)], i);

    std::vector<std::tuple<int, int, long long, int, int>> indexed;
    for (const auto& e : g.edges()) {
        if (!keep.count(e.u) || !keep.count(e.v)) continue;
        indexed.emplace_back(index.at(g.name_of(e.u)), index.at(g.name_of(e.v)), e.weight,
                             e.first_year, e.last_year);
    }
    sub.assemble(std::move(names), std::move(indexed));
    for (int v = 0; v < sub.node_count(); ++v)
        sub.attrs_[static_cast<size_t>(v)] = g.attributes(g.index_of(sub.name_of(v)));
    return sub;
}

void write_edge_csv(const CollabGraph& g, std::ostream& out) {
    out << "source,target,weight\n";
    for (const auto& e : g.edges())
        csv::write_row(out, {g.name_of(e.u), g.name_of(e.v), std::to_string(e.weight)});
}

void write_node_attr_csv(const CollabGraph& g, std::ostream& out) {
    out << "node,attribute,value\n";
    for (int v = 0; v < g.node_count(); ++v)
        for (const auto& [key, value] : g.attributes(v))
            csv::write_row(out, {g.name_of(v), key, value});
}

CollabGraph read_edge_csv(std::istream& edges_in, std::istream* node_attrs, Level level) {
    csv::Reader reader(edges_in);
    std::vector<std::string> row;
    if (!reader.next(row) || row != std::vector<std::string>{"source", "target", "weight"})
        throw DataError("edge CSV: expected header 'source,target,weight'");

    std::vector<std::tuple<std::string, std::string, long long>> edges;
    while (reader.next(row)) {
        if (row.size() == 1 && row[0].empty()) continue;
        if (row.size() != 3)
            throw DataError("edge CSV line " + std::to_string(reader.line()) +
                            ": expected 3 columns");
        char* end = nullptr;
        long long w = std::strtoll(row[2].c_str(), &end, 10);
        if (row[2].empty() || end != row[2].c_str() + row[2].size() || w < 1)
            throw DataError("edge CSV line " + std::to_string(reader.line()) +
                            ": weight must be a positive integer, got '" + row[2] + "'");
        edges.emplace_back(row[0], row[1], w);
    }

    std::map<std::string, std::map<std::string, std::string>> attrs;
    std::vector<std::string> extra_nodes;
    if (node_attrs) {
        csv::Reader nreader(*node_attrs);
        if (!nreader.next(row) || row != std::vector<std::string>{"node", "attribute", "value"})
            throw DataError("node CSV: expected header 'node,attribute,value'");
        while (nreader.next(row)) {
            if (row.size() == 1 && row[0].empty()) continue;
            if (row.size() != 3)
                throw DataError("node CSV line " + std::to_string(nreader.line()) +
                                ": expected 3 columns");
            extra_nodes.push_back(row[0]);
            if (!row[1].empty()) attrs[row[0]][row[1]] = row[2];
        }
    }
    CollabGraph g = CollabGraph::from_edges(level, edges, attrs, extra_nodes);
    return g;
}

}  // namespace collabnet
