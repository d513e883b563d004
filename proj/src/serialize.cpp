#include "collabnet/serialize.hpp"

#include <sstream>

#include "collabnet/csv.hpp"

namespace collabnet {

namespace {

ordered_json window_json(const std::optional<YearWindow>& window) {
    if (!window) return nullptr;
    return ordered_json{{"from", window->from}, {"to", window->to}};
}

std::string join_sizes(const std::vector<long long>& sizes) {
    std::string out;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(sizes[i]);
    }
    return out;
}

}  // namespace

ordered_json stats_json(const CorpusSummary& summary, const CleaningStats& cleaning) {
    ordered_json per_year = ordered_json::object();
    for (const auto& [year, count] : summary.publications_per_year)
        per_year[std::to_string(year)] = count;
    return ordered_json{
        {"papers", summary.papers},
        {"authors", summary.authors},
        {"institutes", summary.institutes},
        {"countries", summary.countries},
        {"multi_affiliation_authors", summary.multi_affiliation_authors},
        {"authors_without_affiliation", summary.authors_without_affiliation},
        {"publications_per_year", per_year},
        {"cleaning",
         {{"row_errors", cleaning.row_errors},
          {"rewritten_fields", cleaning.rewritten_fields},
          {"inferred_countries", cleaning.inferred_countries},
          {"unresolved_affiliations", cleaning.unresolved_affiliations},
          {"empty_affiliations_dropped", cleaning.empty_affiliations_dropped}}},
    };
}

ordered_json to_json(const MetricsReport& r) {
    return ordered_json{
        {"level", to_string(r.level)},
        {"window", window_json(r.window)},
        {"policy", to_string(r.policy)},
        {"nodes", r.nodes},
        {"links", r.links},
        {"total_weight", r.total_weight},
        {"density_binary", r.density_binary},
        {"density_weighted", r.density_weighted},
        {"connectedness", r.connectedness},
        {"clustering_avg", r.clustering_avg},
        {"component_count", r.component_count},
        {"component_sizes", r.component_sizes},
        {"giant_size", r.giant_size},
        {"average_distance", r.average_distance},
        {"centralization_degree", r.centralization_degree},
        {"centralization_closeness", r.centralization_closeness},
        {"centralization_betweenness", r.centralization_betweenness},
        {"clustering_zero_variant", r.clustering_zero_variant},
    };
}

std::string to_csv(const MetricsReport& r) {
    std::ostringstream out;
    out << "measure,value\n";
    auto row = [&](const std::string& key, const std::string& value) {
        csv::write_row(out, {key, value});
    };
    row("level", to_string(r.level));
    row("window", r.window ? std::to_string(r.window->from) + "-" + std::to_string(r.window->to)
                           : "");
    row("policy", to_string(r.policy));
    row("nodes", std::to_string(r.nodes));
    row("links", std::to_string(r.links));
    row("total_weight", std::to_string(r.total_weight));
    row("density_binary", csv::format_double(r.density_binary));
    row("density_weighted", csv::format_double(r.density_weighted));
    row("connectedness", csv::format_double(r.connectedness));
    row("clustering_avg", csv::format_double(r.clustering_avg));
    row("component_count", std::to_string(r.component_count));
    row("component_sizes", join_sizes(r.component_sizes));
    row("giant_size", std::to_string(r.giant_size));
    row("average_distance", csv::format_double(r.average_distance));
    row("centralization_degree", csv::format_double(r.centralization_degree));
    row("centralization_closeness", csv::format_double(r.centralization_closeness));
    row("centralization_betweenness", csv::format_double(r.centralization_betweenness));
    row("clustering_zero_variant", r.clustering_zero_variant ? "true" : "false");
    return out.str();
}

ordered_json to_json(const TopEntitiesTable& table) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"rank", row.rank},
                        {"entity", row.entity},
                        {"collaborations", row.collaborations},
                        {"collaborators", row.collaborators}});
    return ordered_json{{"level", to_string(table.level)}, {"rows", rows}};
}

std::string to_csv(const TopEntitiesTable& table) {
    std::ostringstream out;
    out << "rank,entity,collaborations,collaborators\n";
    for (const auto& row : table.rows)
        csv::write_row(out, {std::to_string(row.rank), row.entity,
                             std::to_string(row.collaborations),
                             std::to_string(row.collaborators)});
    return out.str();
}

ordered_json to_json(const StrongestLinksTable& table) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"rank", row.rank},
                        {"source", row.source},
                        {"target", row.target},
                        {"weight", row.weight}});
    return ordered_json{{"level", to_string(table.level)},
                        {"rows", rows},
                        {"concentration", table.concentration}};
}

std::string to_csv(const StrongestLinksTable& table) {
    std::ostringstream out;
    out << "rank,source,target,weight\n";
    for (const auto& row : table.rows)
        csv::write_row(out, {std::to_string(row.rank), row.source, row.target,
                             std::to_string(row.weight)});
    out << "# concentration," << csv::format_double(table.concentration) << "\n";
    return out.str();
}

ordered_json cliques_json(const std::vector<Clique>& cliques, int min_size) {
    ordered_json members = ordered_json::array();
    for (const auto& clique : cliques) members.push_back(clique.members);
    ordered_json overlap = ordered_json::array();
    for (const auto& [node, count] : clique_overlap(cliques))
        overlap.push_back({{"node", node}, {"cliques", count}});
    return ordered_json{{"min_size", min_size},
                        {"count", cliques.size()},
                        {"cliques", members},
                        {"overlap_nodes", overlap}};
}

ordered_json to_json(const YearlySeries& series) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : series.rows)
        rows.push_back({{"year", row.year},
                        {"active_nodes", row.active_nodes},
                        {"unique_links", row.unique_links},
                        {"weight_sum", row.weight_sum}});
    return ordered_json{{"level", to_string(series.level)},
                        {"policy", to_string(series.policy)},
                        {"rows", rows}};
}

std::string to_csv(const YearlySeries& series) {
    std::ostringstream out;
    out << "year,active_nodes,unique_links,weight_sum\n";
    for (const auto& row : series.rows)
        csv::write_row(out, {std::to_string(row.year), std::to_string(row.active_nodes),
                             std::to_string(row.unique_links), std::to_string(row.weight_sum)});
    return out.str();
}

ordered_json to_json(const PeriodComparison& comparison) {
    ordered_json periods = ordered_json::array();
    for (const auto& period : comparison.periods) {
        ordered_json entry{
            {"label", period.label},
            {"from", period.window.from},
            {"to", period.window.to},
            {"nodes", period.totals.nodes},
            {"links", period.totals.links},
            {"weight", period.totals.weight},
        };
        if (period.report) {
            entry["report"] = to_json(*period.report);
        } else {
            entry["report"] = nullptr;
            entry["undefined_reason"] = period.undefined_reason;
        }
        periods.push_back(std::move(entry));
    }
    return ordered_json{{"level", to_string(comparison.level)},
                        {"policy", to_string(comparison.policy)},
                        {"cumulative", comparison.cumulative},
                        {"periods", periods}};
}

ordered_json to_json(const GrowthReport& report) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"entity", row.entity},
                        {"growth", row.growth},
                        {"av_recent", row.av_recent},
                        {"av_early", row.av_early}});
    ordered_json entrants = ordered_json::array();
    for (const auto& [entity, av_recent] : report.new_entrants)
        entrants.push_back({{"entity", entity}, {"av_recent", av_recent}});
    return ordered_json{{"level", to_string(report.level)},
                        {"early", {{"from", report.early.from}, {"to", report.early.to}}},
                        {"recent", {{"from", report.recent.from}, {"to", report.recent.to}}},
                        {"min_total", report.min_total},
                        {"rows", rows},
                        {"new_entrants", entrants}};
}

std::string to_csv(const GrowthReport& report) {
    std::ostringstream out;
    out << "entity,growth,av_recent,av_early\n";
    for (const auto& row : report.rows)
        csv::write_row(out, {row.entity, csv::format_double(row.growth),
                             csv::format_double(row.av_recent),
                             csv::format_double(row.av_early)});
    return out.str();
}

ordered_json to_json(const DistributionTable& table) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"count", row.count},
                        {"publications", row.publications},
                        {"share", row.share}});
    return ordered_json{{"axis", to_string(table.axis)}, {"rows", rows}};
}

std::string to_csv(const DistributionTable& table) {
    std::ostringstream out;
    out << "count,publications,share\n";
    for (const auto& row : table.rows)
        csv::write_row(out, {std::to_string(row.count), std::to_string(row.publications),
                             csv::format_double(row.share)});
    return out.str();
}

}  // namespace collabnet
