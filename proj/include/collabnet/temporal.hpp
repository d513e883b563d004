#pragma once

#include <optional>
#include <string>
#include <vector>

#include "collabnet/graph.hpp"
#include "collabnet/metrics.hpp"

namespace collabnet {

struct YearlyRow {
    int year = 0;
    long long active_nodes = 0;  // entities with at least one collaboration that year
    long long unique_links = 0;
    long long weight_sum = 0;
    bool operator==(const YearlyRow&) const = default;
};

struct YearlySeries {
    Level level = Level::country;
    WeightPolicy policy = WeightPolicy::per_publication;
    std::vector<YearlyRow> rows;  // one per year with at least one record
};

YearlySeries yearly_series(const std::vector<PublicationRecord>& records, Level level,
                           WeightPolicy policy,
                           AffiliationAttribution attribution = AffiliationAttribution::all);

struct LabeledWindow {
    std::string label;
    YearWindow window;
};

struct PeriodTotals {
    int nodes = 0;
    long long links = 0;
    long long weight = 0;
    bool operator==(const PeriodTotals&) const = default;
};

struct PeriodReport {
    std::string label;
    YearWindow window;
    PeriodTotals totals;
    std::optional<MetricsReport> report;  // absent when undefined for the period
    std::string undefined_reason;
};

struct PeriodComparison {
    Level level = Level::country;
    WeightPolicy policy = WeightPolicy::per_publication;
    bool cumulative = false;  // overlapping windows were explicitly allowed
    std::vector<PeriodReport> periods;
};

// One graph and full report per labeled window. Overlapping windows are a
// DataError unless allow_overlap marks the comparison as cumulative.
PeriodComparison period_compare(const std::vector<PublicationRecord>& records, Level level,
                                const std::vector<LabeledWindow>& periods, WeightPolicy policy,
                                bool allow_overlap = false,
                                AffiliationAttribution attribution = AffiliationAttribution::all);

struct GrowthRow {
    std::string entity;
    double growth = 0.0;     // av_recent / av_early
    double av_recent = 0.0;  // mean collaborations per year, recent window
    double av_early = 0.0;
    bool operator==(const GrowthRow&) const = default;
};

struct GrowthReport {
    Level level = Level::country;
    YearWindow early, recent;
    int min_total = 1;
    std::vector<GrowthRow> rows;  // growth descending, ties by name
    // Active in the recent window only; no growth ratio is defined for them.
    std::vector<std::pair<std::string, double>> new_entrants;  // (entity, av_recent)
};

// An entity's collaborations in a window are the summed weights of its
// incident edges in that window's graph. Averages divide by the inclusive
// year span. Entities must be active in both windows and have a combined
// total of at least min_total collaborations to receive a growth row.
GrowthReport growth_rates(const std::vector<PublicationRecord>& records, Level level,
                          YearWindow early, YearWindow recent, WeightPolicy policy,
                          int min_total = 1,
                          AffiliationAttribution attribution = AffiliationAttribution::all);

}  // namespace collabnet
