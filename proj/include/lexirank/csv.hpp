#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lexirank::csv {

// One record together with the 1-based physical line it started on.
struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

// Streaming reader for RFC 4180 style CSV: comma delimiter, double-quote
// quoting, "" as an escaped quote, quoted fields may span lines. CRLF and
// LF line endings are both accepted.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // Next record, or nullopt at end of input. Throws ParseError on an
    // unterminated quote or garbage after a closing quote.
    std::optional<Row> next();

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Reads and checks the header row; throws ParseError when it differs.
void expect_header(Reader& reader, const std::vector<std::string_view>& header);

}  // namespace lexirank::csv
