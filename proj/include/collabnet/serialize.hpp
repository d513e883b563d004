#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "collabnet/corpus.hpp"
#include "collabnet/ingest.hpp"
#include "collabnet/metrics.hpp"
#include "collabnet/report.hpp"
#include "collabnet/temporal.hpp"

namespace collabnet {

using ordered_json = nlohmann::ordered_json;

// Ingest-pipeline bookkeeping reported alongside corpus stats.
struct CleaningStats {
    long long row_errors = 0;
    long long rewritten_fields = 0;
    long long inferred_countries = 0;
    long long unresolved_affiliations = 0;
    long long empty_affiliations_dropped = 0;
};

ordered_json stats_json(const CorpusSummary& summary, const CleaningStats& cleaning);

ordered_json to_json(const MetricsReport& report);
std::string to_csv(const MetricsReport& report);

ordered_json to_json(const TopEntitiesTable& table);
std::string to_csv(const TopEntitiesTable& table);

ordered_json to_json(const StrongestLinksTable& table);
std::string to_csv(const StrongestLinksTable& table);

ordered_json cliques_json(const std::vector<Clique>& cliques, int min_size);

ordered_json to_json(const YearlySeries& series);
std::string to_csv(const YearlySeries& series);

ordered_json to_json(const PeriodComparison& comparison);

ordered_json to_json(const GrowthReport& report);
std::string to_csv(const GrowthReport& report);

ordered_json to_json(const DistributionTable& table);
std::string to_csv(const DistributionTable& table);

}  // namespace collabnet
