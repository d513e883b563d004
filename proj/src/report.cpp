#include "collabnet/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "collabnet/csv.hpp"
#include "collabnet/errors.hpp"

namespace collabnet {

TopEntitiesTable top_entities(const CollabGraph& g, int k) {
    if (k < 1) throw DataError("top_entities requires k >= 1");
    struct Entry {
        std::string name;
        long long total;
        int degree;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
        entries.push_back({g.name_of(v), g.weighted_degree(v), g.degree(v)});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.total != b.total) return a.total > b.total;
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.name < b.name;
    });
    if (static_cast<size_t>(k) < entries.size()) entries.resize(static_cast<size_t>(k));

    TopEntitiesTable table;
    table.level = g.level();
    for (size_t i = 0; i < entries.size(); ++i)
        table.rows.push_back({static_cast<int>(i) + 1, entries[i].name, entries[i].total,
                              entries[i].degree});
    return table;
}

StrongestLinksTable strongest_links(const CollabGraph& g, int k) {
    if (k < 1) throw DataError("strongest_links requires k >= 1");
    std::vector<GraphEdge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [&](const GraphEdge& a, const GraphEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (g.name_of(a.u) != g.name_of(b.u)) return g.name_of(a.u) < g.name_of(b.u);
        return g.name_of(a.v) < g.name_of(b.v);
    });
    if (static_cast<size_t>(k) < edges.size()) edges.resize(static_cast<size_t>(k));

    StrongestLinksTable table;
    table.level = g.level();
    long long top_weight = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
        table.rows.push_back({static_cast<int>(i) + 1, g.name_of(edges[i].u),
                              g.name_of(edges[i].v), edges[i].weight});
        top_weight += edges[i].weight;
    }
    table.concentration = g.total_weight() > 0
                              ? static_cast<double>(top_weight) /
                                    static_cast<double>(g.total_weight())
                              : 0.0;
    return table;
}

DistributionAxis axis_from_string(const std::string& s) {
    if (s == "authors" || s == "authors_per_pub") return DistributionAxis::authors_per_pub;
    if (s == "institutes" || s == "institutes_per_pub")
        return DistributionAxis::institutes_per_pub;
    if (s == "countries" || s == "countries_per_pub")
        return DistributionAxis::countries_per_pub;
    throw DataError("unknown distribution axis '" + s +
                    "' (expected authors, institutes or countries)");
}

std::string to_string(DistributionAxis axis) {
    switch (axis) {
    case DistributionAxis::authors_per_pub: return "authors_per_pub";
    case DistributionAxis::institutes_per_pub: return "institutes_per_pub";
    case DistributionAxis::countries_per_pub: return "countries_per_pub";
    }
    return "?";
}

DistributionTable authorship_distribution(const std::vector<PublicationRecord>& records,
                                          DistributionAxis axis) {
    if (records.empty()) throw DataError("distribution requires a non-empty corpus");
    std::map<int, long long> histogram;
    std::set<std::string> distinct;
    for (const auto& rec : records) {
        distinct.clear();
        for (const auto& author : rec.authors) {
            switch (axis) {
            case DistributionAxis::authors_per_pub:
                distinct.insert(author.name);
                break;
            case DistributionAxis::institutes_per_pub:
                for (const auto& aff : author.affiliations)
                    if (aff.institute) distinct.insert(*aff.institute);
                break;
            case DistributionAxis::countries_per_pub:
                for (const auto& aff : author.affiliations)
                    if (aff.country) distinct.insert(*aff.country);
                break;
            }
        }
        ++histogram[static_cast<int>(distinct.size())];
    }

    DistributionTable table;
    table.axis = axis;
    const double total = static_cast<double>(records.size());
    for (const auto& [count, publications] : histogram)
        table.rows.push_back({count, publications, static_cast<double>(publications) / total});
    return table;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out += "\"";
    return out;
}

void write_dot(const CollabGraph& g, std::ostream& out) {
    out << "graph " << to_string(g.level()) << "_collaboration {\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << "  " << dot_quote(g.name_of(v));
        const auto& attrs = g.attributes(v);
        if (!attrs.empty()) {
            out << " [";
            bool first = true;
            for (const auto& [key, value] : attrs) {
                if (!first) out << ", ";
                out << key << "=" << dot_quote(value);
                first = false;
            }
            out << "]";
        }
        out << ";\n";
    }
    for (const auto& e : g.edges())
        out << "  " << dot_quote(g.name_of(e.u)) << " -- " << dot_quote(g.name_of(e.v))
            << " [weight=" << e.weight << ", penwidth=" << e.weight << "];\n";
    out << "}\n";
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

void write_graphml(const CollabGraph& g, std::ostream& out) {
    // Attribute keys actually used by the nodes, in sorted order.
    std::set<std::string> keys;
    for (int v = 0; v < g.node_count(); ++v)
        for (const auto& [key, value] : g.attributes(v)) keys.insert(key);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    for (const auto& key : keys)
        out << "  <key id=\"" << xml_escape(key) << "\" for=\"node\" attr.name=\""
            << xml_escape(key) << "\" attr.type=\"string\"/>\n";
    out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
        << "  <key id=\"first_year\" for=\"edge\" attr.name=\"first_year\" attr.type=\"int\"/>\n"
        << "  <key id=\"last_year\" for=\"edge\" attr.name=\"last_year\" attr.type=\"int\"/>\n"
        << "  <graph id=\"" << to_string(g.level())
        << "_collaboration\" edgedefault=\"undirected\">\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << "    <node id=\"" << xml_escape(g.name_of(v)) << "\"";
        const auto& attrs = g.attributes(v);
        if (attrs.empty()) {
            out << "/>\n";
        } else {
            out << ">\n";
            for (const auto& [key, value] : attrs)
                out << "      <data key=\"" << xml_escape(key) << "\">" << xml_escape(value)
                    << "</data>\n";
            out << "    </node>\n";
        }
    }
    for (const auto& e : g.edges()) {
        out << "    <edge source=\"" << xml_escape(g.name_of(e.u)) << "\" target=\""
            << xml_escape(g.name_of(e.v)) << "\">\n"
            << "      <data key=\"weight\">" << e.weight << "</data>\n";
        if (e.first_year > 0)
            out << "      <data key=\"first_year\">" << e.first_year << "</data>\n"
                << "      <data key=\"last_year\">" << e.last_year << "</data>\n";
        out << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

}  // namespace

void export_graph(const CollabGraph& g, ExportFormat format, std::ostream& out) {
    switch (format) {
    case ExportFormat::edge_csv: write_edge_csv(g, out); break;
    case ExportFormat::dot: write_dot(g, out); break;
    case ExportFormat::graphml: write_graphml(g, out); break;
    }
}

}  // namespace collabnet
