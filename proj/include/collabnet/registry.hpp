#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "collabnet/corpus.hpp"

namespace collabnet {

enum class Region { America, Oceania, Africa, Asia, Europe };

Region region_from_string(const std::string& s);
std::string to_string(Region region);

// Canonicalization tables for authors, institutes and countries, plus the
// institute -> country and country -> region lookup maps.
//
// Alias chains (a -> b, b -> c) are compressed by finalize() so that
// resolution is idempotent; a cycle is a DataError listing its members.
// finalize() also rewrites the lookup-map keys and values through the alias
// tables so the registry is consistent with its own canonical forms.
class EntityRegistry {
public:
    // Conflicting aliases (same alias, different canonicals) are a DataError.
    void add_alias(Level level, const std::string& alias, const std::string& canonical);
    void set_institute_country(const std::string& institute, const std::string& country);
    void set_region(const std::string& country, Region region);

    void finalize();
    bool finalized() const { return finalized_; }

    // Canonical form of a name; unknown names resolve to themselves.
    const std::string& resolve(Level level, const std::string& name) const;

    std::optional<std::string> country_of_institute(const std::string& institute) const;
    std::optional<Region> region_of_country(const std::string& country) const;

    size_t alias_count(Level level) const { return aliases_[index(level)].size(); }
    size_t institute_country_count() const { return institute_country_.size(); }
    size_t region_count() const { return region_.size(); }

private:
    static int index(Level level) { return static_cast<int>(level); }

    std::map<std::string, std::string> aliases_[3];
    std::map<std::string, std::string> institute_country_;
    std::map<std::string, Region> region_;
    bool finalized_ = true;  // an empty registry is trivially idempotent
};

// CSV loaders. Formats (with header):
//   aliases:             level,alias,canonical      (level in author|institute|country)
//   institute countries: institute,country
//   regions:             country,region             (region in America|Oceania|Africa|Asia|Europe)
void load_aliases_csv(std::istream& in, EntityRegistry& registry);
void load_institute_countries_csv(std::istream& in, EntityRegistry& registry);
void load_regions_csv(std::istream& in, EntityRegistry& registry);

}  // namespace collabnet
