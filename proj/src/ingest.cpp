#include "collabnet/ingest.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "collabnet/csv.hpp"
#include "collabnet/errors.hpp"

namespace collabnet {

using nlohmann::json;

CorpusFormat corpus_format_from_string(const std::string& s) {
    if (s == "jsonl") return CorpusFormat::jsonl;
    if (s == "csv") return CorpusFormat::csv;
    throw DataError("unknown corpus format '" + s + "' (expected jsonl or csv)");
}

namespace {

constexpr int kYearMin = 1000;
constexpr int kYearMax = 3000;

std::optional<std::string> opt_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw DataError(std::string("field '") + key + "' must be a string");
    std::string value = it->get<std::string>();
    if (value.empty()) return std::nullopt;
    return value;
}

PublicationRecord record_from_json(const json& obj) {
    if (!obj.is_object()) throw DataError("record must be a JSON object");

    PublicationRecord rec;
    auto id = opt_string(obj, "id");
    if (!id) throw DataError("missing or empty 'id'");
    rec.id = *id;

    auto year_it = obj.find("year");
    if (year_it == obj.end() || !year_it->is_number_integer())
        throw DataError("missing or non-integer 'year'");
    rec.year = year_it->get<int>();
    if (rec.year < kYearMin || rec.year > kYearMax)
        throw DataError("year " + std::to_string(rec.year) + " outside [" +
                        std::to_string(kYearMin) + ", " + std::to_string(kYearMax) + "]");

    rec.title = opt_string(obj, "title").value_or("");
    rec.journal = opt_string(obj, "journal").value_or("");

    auto authors_it = obj.find("authors");
    if (authors_it == obj.end() || !authors_it->is_array() || authors_it->empty())
        throw DataError("missing or empty 'authors'");

    std::set<std::string> names;
    for (const auto& a : *authors_it) {
        if (!a.is_object()) throw DataError("author entry must be an object");
        AuthorEntry entry;
        auto name = opt_string(a, "name");
        if (!name) throw DataError("author with missing or empty 'name'");
        entry.name = *name;
        if (!names.insert(entry.name).second)
            throw DataError("author '" + entry.name + "' listed twice");
        auto aff_it = a.find("affiliations");
        if (aff_it != a.end() && !aff_it->is_null()) {
            if (!aff_it->is_array()) throw DataError("'affiliations' must be an array");
            for (const auto& aff : *aff_it) {
                if (!aff.is_object()) throw DataError("affiliation entry must be an object");
                entry.affiliations.push_back(
                    {opt_string(aff, "institute"), opt_string(aff, "country")});
            }
        }
        rec.authors.push_back(std::move(entry));
    }

    auto kw_it = obj.find("keywords");
    if (kw_it != obj.end() && !kw_it->is_null()) {
        if (!kw_it->is_array()) throw DataError("'keywords' must be an array");
        for (const auto& kw : *kw_it) {
            if (!kw.is_string()) throw DataError("keyword must be a string");
            rec.keywords.push_back(kw.get<std::string>());
        }
    }
    return rec;
}

// Drops affiliation entries with neither institute nor country, counting them.
long long drop_empty_affiliations(PublicationRecord& rec) {
    long long dropped = 0;
    for (auto& author : rec.authors) {
        auto& affs = author.affiliations;
        auto keep = std::remove_if(affs.begin(), affs.end(),
                                   [](const Affiliation& a) { return a.empty(); });
        dropped += affs.end() - keep;
        affs.erase(keep, affs.end());
    }
    return dropped;
}

ParseResult parse_jsonl(std::istream& in) {
    ParseResult result;
    std::unordered_map<std::string, int> id_lines;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::optional<PublicationRecord> rec;
        try {
            rec = record_from_json(json::parse(line));
        } catch (const json::parse_error& e) {
            result.errors.push_back({line_no, std::string("invalid JSON: ") + e.what()});
            continue;
        } catch (const DataError& e) {
            result.errors.push_back({line_no, e.what()});
            continue;
        }
        auto [it, inserted] = id_lines.emplace(rec->id, line_no);
        if (!inserted)
            throw DataError("duplicate record id '" + rec->id + "' at lines " +
                            std::to_string(it->second) + " and " + std::to_string(line_no));
        result.empty_affiliations_dropped += drop_empty_affiliations(*rec);
        result.records.push_back(std::move(*rec));
    }
    return result;
}

ParseResult parse_csv(std::istream& in) {
    static const std::vector<std::string> kHeader = {"id",     "title",  "year",   "journal",
                                                     "author", "institute", "country"};
    ParseResult result;
    csv::Reader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row) || row != kHeader)
        throw DataError("corpus CSV: expected header 'id,title,year,journal,author,institute,country'");

    std::unordered_map<std::string, size_t> record_index;
    while (reader.next(row)) {
        if (row.size() == 1 && row[0].empty()) continue;
        const int line = reader.line();
        if (row.size() != kHeader.size()) {
            result.errors.push_back({line, "expected 7 columns, got " +
                                               std::to_string(row.size())});
            continue;
        }
        const std::string& id = row[0];
        if (id.empty()) {
            result.errors.push_back({line, "empty id"});
            continue;
        }
        int year = 0;
        {
            const std::string& ys = row[2];
            char* end = nullptr;
            long parsed = ys.empty() ? 0 : std::strtol(ys.c_str(), &end, 10);
            if (ys.empty() || end != ys.c_str() + ys.size() || parsed < kYearMin ||
                parsed > kYearMax) {
                result.errors.push_back({line, "unparseable year '" + ys + "'"});
                continue;
            }
            year = static_cast<int>(parsed);
        }
        if (row[4].empty()) {
            result.errors.push_back({line, "empty author"});
            continue;
        }

        auto it = record_index.find(id);
        if (it == record_index.end()) {
            PublicationRecord rec;
            rec.id = id;
            rec.title = row[1];
            rec.year = year;
            rec.journal = row[3];
            record_index.emplace(id, result.records.size());
            result.records.push_back(std::move(rec));
            it = record_index.find(id);
        } else {
            PublicationRecord& rec = result.records[it->second];
            if (rec.title != row[1] || rec.year != year || rec.journal != row[3]) {
                result.errors.push_back(
                    {line, "row conflicts with earlier values for id '" + id + "'"});
                continue;
            }
        }

        PublicationRecord& rec = result.records[it->second];
        auto author = std::find_if(rec.authors.begin(), rec.authors.end(),
                                   [&](const AuthorEntry& a) { return a.name == row[4]; });
        if (author == rec.authors.end()) {
            rec.authors.push_back({row[4], {}});
            author = rec.authors.end() - 1;
        }
        Affiliation aff{row[5].empty() ? std::nullopt : std::make_optional(row[5]),
                        row[6].empty() ? std::nullopt : std::make_optional(row[6])};
        if (aff.empty()) continue;  // author row without affiliation data
        if (std::find(author->affiliations.begin(), author->affiliations.end(), aff) ==
            author->affiliations.end())
            author->affiliations.push_back(std::move(aff));
    }
    return result;
}

}  // namespace

ParseResult parse_corpus(std::istream& in, CorpusFormat format) {
    return format == CorpusFormat::jsonl ? parse_jsonl(in) : parse_csv(in);
}

AliasStats apply_aliases(std::vector<PublicationRecord>& records,
                         const EntityRegistry& registry) {
    if (!registry.finalized())
        throw DataError("registry must be finalized before applying aliases");
    AliasStats stats;
    auto rewrite = [&](Level level, std::string& value) {
        const std::string& canonical = registry.resolve(level, value);
        if (canonical != value) {
            value = canonical;
            ++stats.rewritten_fields;
        }
    };
    for (auto& rec : records) {
        for (auto& author : rec.authors) {
            rewrite(Level::author, author.name);
            for (auto& aff : author.affiliations) {
                if (aff.institute) rewrite(Level::institute, *aff.institute);
                if (aff.country) rewrite(Level::country, *aff.country);
            }
        }
    }
    return stats;
}

InferStats infer_countries(std::vector<PublicationRecord>& records,
                           const EntityRegistry& registry) {
    InferStats stats;
    for (auto& rec : records) {
        for (auto& author : rec.authors) {
            for (auto& aff : author.affiliations) {
                if (aff.country || !aff.institute) continue;
                if (auto country = registry.country_of_institute(*aff.institute)) {
                    aff.country = std::move(country);
                    ++stats.resolved;
                } else {
                    ++stats.unresolved;
                }
            }
        }
    }
    return stats;
}

CorpusSummary corpus_stats(const std::vector<PublicationRecord>& records) {
    CorpusSummary summary;
    summary.papers = static_cast<long long>(records.size());

    std::map<std::string, std::set<Affiliation>> author_affiliations;
    std::set<std::string> institutes;
    std::set<std::string> countries;
    for (const auto& rec : records) {
        ++summary.publications_per_year[rec.year];
        for (const auto& author : rec.authors) {
            auto& affs = author_affiliations[author.name];
            for (const auto& aff : author.affiliations) {
                if (aff.empty()) continue;
                affs.insert(aff);
                if (aff.institute) institutes.insert(*aff.institute);
                if (aff.country) countries.insert(*aff.country);
            }
        }
    }

    summary.authors = static_cast<long long>(author_affiliations.size());
    summary.institutes = static_cast<long long>(institutes.size());
    summary.countries = static_cast<long long>(countries.size());
    for (const auto& [name, affs] : author_affiliations) {
        if (affs.size() >= 2) ++summary.multi_affiliation_authors;
        if (affs.empty()) ++summary.authors_without_affiliation;
    }
    return summary;
}

}  // namespace collabnet
