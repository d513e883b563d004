#include "collabnet/temporal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "collabnet/errors.hpp"

namespace collabnet {

YearlySeries yearly_series(const std::vector<PublicationRecord>& records, Level level,
                           WeightPolicy policy, AffiliationAttribution attribution) {
    std::set<int> years;
    for (const auto& rec : records) years.insert(rec.year);

    YearlySeries series;
    series.level = level;
    series.policy = policy;
    for (int year : years) {
        BuildOptions options{level, YearWindow{year, year}, policy, false, attribution};
        CollabGraph g = build_graph(records, options);
        series.rows.push_back({year, g.node_count(), g.edge_count(), g.total_weight()});
    }
    return series;
}

PeriodComparison period_compare(const std::vector<PublicationRecord>& records, Level level,
                                const std::vector<LabeledWindow>& periods, WeightPolicy policy,
                                bool allow_overlap, AffiliationAttribution attribution) {
    for (size_t i = 0; i < periods.size(); ++i) {
        if (periods[i].window.from > periods[i].window.to)
            throw DataError("period '" + periods[i].label + "' has an empty window");
        for (size_t j = i + 1; j < periods.size(); ++j)
            if (!allow_overlap && periods[i].window.overlaps(periods[j].window))
                throw DataError("periods '" + periods[i].label + "' and '" + periods[j].label +
                                "' overlap; pass the cumulative flag to allow this");
    }

    PeriodComparison comparison;
    comparison.level = level;
    comparison.policy = policy;
    comparison.cumulative = allow_overlap;
    for (const auto& period : periods) {
        BuildOptions options{level, period.window, policy, false, attribution};
        CollabGraph g = build_graph(records, options);
        PeriodReport report;
        report.label = period.label;
        report.window = period.window;
        report.totals = {g.node_count(), g.edge_count(), g.total_weight()};
        try {
            report.report = full_report(g);
        } catch (const UndefinedResultError& e) {
            report.undefined_reason = e.what();
        }
        comparison.periods.push_back(std::move(report));
    }
    return comparison;
}

namespace {

// Weighted degree of every node of the window graph.
std::map<std::string, long long> window_collaborations(
    const std::vector<PublicationRecord>& records, Level level, YearWindow window,
    WeightPolicy policy, AffiliationAttribution attribution) {
    BuildOptions options{level, window, policy, false, attribution};
    CollabGraph g = build_graph(records, options);
    std::map<std::string, long long> totals;
    for (int v = 0; v < g.node_count(); ++v) totals[g.name_of(v)] = g.weighted_degree(v);
    return totals;
}

}  // namespace

GrowthReport growth_rates(const std::vector<PublicationRecord>& records, Level level,
                          YearWindow early, YearWindow recent, WeightPolicy policy,
                          int min_total, AffiliationAttribution attribution) {
    if (early.from > early.to || recent.from > recent.to)
        throw DataError("growth windows must be non-empty");
    if (early.overlaps(recent))
        throw DataError("growth windows overlap");
    if (min_total < 1) throw DataError("min_total must be at least 1");

    GrowthReport report;
    report.level = level;
    report.early = early;
    report.recent = recent;
    report.min_total = min_total;

    auto early_totals = window_collaborations(records, level, early, policy, attribution);
    auto recent_totals = window_collaborations(records, level, recent, policy, attribution);

    for (const auto& [entity, recent_total] : recent_totals) {
        if (recent_total < 1) continue;
        const double av_recent = static_cast<double>(recent_total) / recent.span_years();
        auto it = early_totals.find(entity);
        if (it == early_totals.end() || it->second < 1) {
            report.new_entrants.emplace_back(entity, av_recent);
            continue;
        }
        if (it->second + recent_total < min_total) continue;
        const double av_early = static_cast<double>(it->second) / early.span_years();
        report.rows.push_back({entity, av_recent / av_early, av_recent, av_early});
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const GrowthRow& a, const GrowthRow& b) {
        if (a.growth != b.growth) return a.growth > b.growth;
        return a.entity < b.entity;
    });
    std::sort(report.new_entrants.begin(), report.new_entrants.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    return report;
}

}  // namespace collabnet
