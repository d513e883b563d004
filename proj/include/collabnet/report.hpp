#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "collabnet/corpus.hpp"
#include "collabnet/graph.hpp"

namespace collabnet {

struct RankedEntityRow {
    int rank = 0;
    std::string entity;
    long long collaborations = 0;  // weighted degree
    int collaborators = 0;         // binary degree
    bool operator==(const RankedEntityRow&) const = default;
};

struct TopEntitiesTable {
    Level level = Level::country;
    std::vector<RankedEntityRow> rows;
};

// Top k by total collaborations; ties by collaborator count, then by name.
TopEntitiesTable top_entities(const CollabGraph& g, int k);

struct RankedLinkRow {
    int rank = 0;
    std::string source, target;  // source < target
    long long weight = 0;
    bool operator==(const RankedLinkRow&) const = default;
};

struct StrongestLinksTable {
    Level level = Level::country;
    std::vector<RankedLinkRow> rows;
    // Share of total graph weight held by the listed links.
    double concentration = 0.0;
};

StrongestLinksTable strongest_links(const CollabGraph& g, int k);

enum class DistributionAxis { authors_per_pub, institutes_per_pub, countries_per_pub };

DistributionAxis axis_from_string(const std::string& s);
std::string to_string(DistributionAxis axis);

struct DistributionRow {
    int count = 0;  // distinct entities on the record
    long long publications = 0;
    double share = 0.0;
    bool operator==(const DistributionRow&) const = default;
};

struct DistributionTable {
    DistributionAxis axis = DistributionAxis::authors_per_pub;
    std::vector<DistributionRow> rows;  // ascending count
};

DistributionTable authorship_distribution(const std::vector<PublicationRecord>& records,
                                          DistributionAxis axis);

enum class ExportFormat { edge_csv, dot, graphml };

// Writes the graph for external tooling; node attributes and edge weights are
// preserved, DOT pen widths are proportional to weight.
void export_graph(const CollabGraph& g, ExportFormat format, std::ostream& out);

}  // namespace collabnet
