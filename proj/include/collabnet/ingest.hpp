#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "collabnet/corpus.hpp"
#include "collabnet/registry.hpp"

namespace collabnet {

enum class CorpusFormat { jsonl, csv };

CorpusFormat corpus_format_from_string(const std::string& s);

struct RowError {
    int line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<PublicationRecord> records;
    std::vector<RowError> errors;  // malformed rows, never silently dropped
    // Affiliation entries that carried neither institute nor country; the
    // record is retained, the empty entry is not.
    long long empty_affiliations_dropped = 0;
};

// JSONL: one record object per line (canonical interchange format).
// CSV: columns id,title,year,journal,author,institute,country with one row
// per (record, author, affiliation); rows sharing an id fold into one record.
// A duplicate record id is a DataError naming both rows.
ParseResult parse_corpus(std::istream& in, CorpusFormat format);

struct AliasStats {
    long long rewritten_fields = 0;  // author names + institutes + countries changed
};

// Replaces author/institute/country strings by their canonical forms, in
// place. Never adds or removes records, authors or affiliations.
AliasStats apply_aliases(std::vector<PublicationRecord>& records,
                         const EntityRegistry& registry);

struct InferStats {
    long long resolved = 0;
    long long unresolved = 0;  // institute present but country still unknown
};

// Fills missing affiliation countries from the institute -> country map.
// Never overwrites a present country.
InferStats infer_countries(std::vector<PublicationRecord>& records,
                           const EntityRegistry& registry);

CorpusSummary corpus_stats(const std::vector<PublicationRecord>& records);

}  // namespace collabnet
