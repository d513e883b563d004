#include "collabnet/registry.hpp"

#include <istream>
#include <set>
#include <vector>

#include "collabnet/csv.hpp"
#include "collabnet/errors.hpp"

namespace collabnet {

Level level_from_string(const std::string& s) {
    if (s == "author") return Level::author;
    if (s == "institute") return Level::institute;
    if (s == "country") return Level::country;
    throw DataError("unknown level '" + s + "' (expected author, institute or country)");
}

std::string to_string(Level level) {
    switch (level) {
    case Level::author: return "author";
    case Level::institute: return "institute";
    case Level::country: return "country";
    }
    return "?";
}

Region region_from_string(const std::string& s) {
    if (s == "America") return Region::America;
    if (s == "Oceania") return Region::Oceania;
    if (s == "Africa") return Region::Africa;
    if (s == "Asia") return Region::Asia;
    if (s == "Europe") return Region::Europe;
    throw DataError("unknown region '" + s +
                    "' (expected America, Oceania, Africa, Asia or Europe)");
}

std::string to_string(Region region) {
    switch (region) {
    case Region::America: return "America";
    case Region::Oceania: return "Oceania";
    case Region::Africa: return "Africa";
    case Region::Asia: return "Asia";
    case Region::Europe: return "Europe";
    }
    return "?";
}

void EntityRegistry::add_alias(Level level, const std::string& alias,
                               const std::string& canonical) {
    if (alias == canonical) return;  // self-alias carries no information
    auto& table = aliases_[index(level)];
    auto [it, inserted] = table.emplace(alias, canonical);
    if (!inserted && it->second != canonical)
        throw DataError("conflicting aliases for " + to_string(level) + " '" + alias +
                        "': '" + it->second + "' vs '" + canonical + "'");
    finalized_ = false;
}

void EntityRegistry::set_institute_country(const std::string& institute,
                                           const std::string& country) {
    auto [it, inserted] = institute_country_.emplace(institute, country);
    if (!inserted && it->second != country)
        throw DataError("conflicting countries for institute '" + institute + "': '" +
                        it->second + "' vs '" + country + "'");
    finalized_ = false;
}

void EntityRegistry::set_region(const std::string& country, Region region) {
    auto [it, inserted] = region_.emplace(country, region);
    if (!inserted && it->second != region)
        throw DataError("conflicting regions for country '" + country + "'");
    finalized_ = false;
}

namespace {

// Compresses alias chains to their terminal canonical form. A cycle is
// reported with its full member list.
void compress(std::map<std::string, std::string>& table, Level level) {
    for (auto& [alias, canonical] : table) {
        std::vector<std::string> chain{alias};
        std::set<std::string> seen{alias};
        std::string current = canonical;
        while (true) {
            if (seen.count(current)) {
                std::string cycle;
                for (const auto& name : chain) cycle += "'" + name + "' -> ";
                cycle += "'" + current + "'";
                throw DataError("alias cycle in " + to_string(level) + " table: " + cycle);
            }
            auto it = table.find(current);
            if (it == table.end()) break;
            seen.insert(current);
            chain.push_back(current);
            current = it->second;
        }
        canonical = current;
    }
}

}  // namespace

void EntityRegistry::finalize() {
    if (finalized_) return;
    for (Level level : {Level::author, Level::institute, Level::country})
        compress(aliases_[index(level)], level);

    // Rewrite lookup maps through the (now idempotent) alias tables.
    std::map<std::string, std::string> ic;
    for (const auto& [institute, country] : institute_country_) {
        const std::string& inst = resolve(Level::institute, institute);
        const std::string& ctry = resolve(Level::country, country);
        auto [it, inserted] = ic.emplace(inst, ctry);
        if (!inserted && it->second != ctry)
            throw DataError("institute '" + inst + "' maps to two countries after aliasing: '" +
                            it->second + "' vs '" + ctry + "'");
    }
    institute_country_ = std::move(ic);

    std::map<std::string, Region> rg;
    for (const auto& [country, region] : region_) {
        const std::string& ctry = resolve(Level::country, country);
        auto [it, inserted] = rg.emplace(ctry, region);
        if (!inserted && it->second != region)
            throw DataError("country '" + ctry + "' maps to two regions after aliasing");
    }
    region_ = std::move(rg);

    finalized_ = true;
}

const std::string& EntityRegistry::resolve(Level level, const std::string& name) const {
    const auto& table = aliases_[index(level)];
    auto it = table.find(name);
    return it == table.end() ? name : it->second;
}

std::optional<std::string> EntityRegistry::country_of_institute(
    const std::string& institute) const {
    auto it = institute_country_.find(institute);
    if (it == institute_country_.end()) return std::nullopt;
    return it->second;
}

std::optional<Region> EntityRegistry::region_of_country(const std::string& country) const {
    auto it = region_.find(country);
    if (it == region_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<std::vector<std::string>> read_table(std::istream& in,
                                                 const std::vector<std::string>& header,
                                                 const char* what) {
    csv::Reader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row) || row != header) {
        std::string expected;
        for (size_t i = 0; i < header.size(); ++i)
            expected += (i ? "," : "") + header[i];
        throw DataError(std::string(what) + ": expected header '" + expected + "'");
    }
    std::vector<std::vector<std::string>> rows;
    while (reader.next(row)) {
        if (row.size() == 1 && row[0].empty()) continue;  // blank line
        if (row.size() != header.size())
            throw DataError(std::string(what) + " line " + std::to_string(reader.line()) +
                            ": expected " + std::to_string(header.size()) + " columns, got " +
                            std::to_string(row.size()));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

void load_aliases_csv(std::istream& in, EntityRegistry& registry) {
    for (const auto& row : read_table(in, {"level", "alias", "canonical"}, "alias map"))
        registry.add_alias(level_from_string(row[0]), row[1], row[2]);
}

void load_institute_countries_csv(std::istream& in, EntityRegistry& registry) {
    for (const auto& row : read_table(in, {"institute", "country"}, "institute-country map"))
        registry.set_institute_country(row[0], row[1]);
}

void load_regions_csv(std::istream& in, EntityRegistry& registry) {
    for (const auto& row : read_table(in, {"country", "region"}, "region map"))
        registry.set_region(row[0], region_from_string(row[1]));
}

}  // namespace collabnet
