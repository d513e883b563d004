#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collabnet::csv {

// Streaming RFC-4180 reader: quoted fields, embedded commas, quotes and
// newlines. Rows are returned in file order.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // Reads the next row into `row`. Returns false at end of input.
    // Throws DataError on a stray quote.
    bool next(std::vector<std::string>& row);

    // 1-based line number where the last returned row started.
    int line() const { return row_line_; }

private:
    std::istream& in_;
    int line_ = 1;
    int row_line_ = 0;
};

// Quotes a field if it contains a comma, quote or newline.
std::string escape(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Shortest round-trip decimal form (std::to_chars), locale independent.
std::string format_double(double value);

}  // namespace collabnet::csv
