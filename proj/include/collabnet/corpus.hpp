#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace collabnet {

// Projection level of a collaboration network: micro / meso / macro.
enum class Level { author, institute, country };

Level level_from_string(const std::string& s);
std::string to_string(Level level);

// Inclusive calendar-year window.
struct YearWindow {
    int from = 0;
    int to = 0;

    bool contains(int year) const { return year >= from && year <= to; }
    int span_years() const { return to - from + 1; }
    bool overlaps(const YearWindow& other) const {
        return from <= other.to && other.from <= to;
    }
    bool operator==(const YearWindow&) const = default;
};

struct Affiliation {
    std::optional<std::string> institute;
    std::optional<std::string> country;

    bool empty() const { return !institute && !country; }
    auto operator<=>(const Affiliation&) const = default;
};

struct AuthorEntry {
    std::string name;
    std::vector<Affiliation> affiliations;

    bool operator==(const AuthorEntry&) const = default;
};

// One publication as parsed from the corpus.
struct PublicationRecord {
    std::string id;
    std::string title;
    int year = 0;
    std::string journal;
    std::vector<AuthorEntry> authors;
    std::vector<std::string> keywords;

    bool operator==(const PublicationRecord&) const = default;
};

// Corpus-wide entity counts plus the per-year publication series.
struct CorpusSummary {
    long long papers = 0;
    long long authors = 0;
    long long institutes = 0;
    long long countries = 0;
    long long multi_affiliation_authors = 0;
    long long authors_without_affiliation = 0;
    std::map<int, long long> publications_per_year;

    bool operator==(const CorpusSummary&) const = default;
};

}  // namespace collabnet
