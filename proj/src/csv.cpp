#include "collabnet/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "collabnet/errors.hpp"

namespace collabnet::csv {

bool Reader::next(std::vector<std::string>& row) {
    row.clear();
    int c = in_.get();
    if (c == EOF) return false;
    row_line_ = line_;

    std::string field;
    bool quoted = false;
    bool row_done = false;
    while (!row_done) {
        if (quoted) {
            switch (c) {
            case EOF:
                throw DataError("line " + std::to_string(row_line_) +
                                ": unterminated quoted field");
            case '"':
                c = in_.get();
                if (c == '"') {  // escaped quote
                    field.push_back('"');
                    c = in_.get();
                } else {
                    quoted = false;
                }
                break;
            case '\n':
                ++line_;
                field.push_back('\n');
                c = in_.get();
                break;
            default:
                field.push_back(static_cast<char>(c));
                c = in_.get();
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty())
                throw DataError("line " + std::to_string(line_) +
                                ": quote inside unquoted field");
            quoted = true;
            c = in_.get();
            break;
        case ',':
            row.push_back(std::move(field));
            field.clear();
            c = in_.get();
            break;
        case '\r':
            c = in_.get();
            break;  // tolerate CRLF
        case '\n':
            ++line_;
            row_done = true;
            break;
        case EOF:
            row_done = true;
            break;
        default:
            field.push_back(static_cast<char>(c));
            c = in_.get();
        }
    }
    row.push_back(std::move(field));
    return true;
}

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

}  // namespace collabnet::csv
