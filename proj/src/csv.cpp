#include "lexirank/csv.hpp"

#include "lexirank/error.hpp"

namespace lexirank::csv {

std::optional<Row> Reader::next() {
    int ch = in_.get();
    if (ch == std::char_traits<char>::eof()) return std::nullopt;

    Row row;
    row.line = ++line_;
    std::string field;
    enum class State { field_start, unquoted, quoted, quote_in_quoted } state = State::field_start;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
    };

    for (;; ch = in_.get()) {
        const bool eof = ch == std::char_traits<char>::eof();
        if (state == State::quoted) {
            if (eof) throw ParseError("unterminated quoted field", row.line);
            if (ch == '"') {
                state = State::quote_in_quoted;
            } else {
                if (ch == '\n') ++line_;
                field.push_back(static_cast<char>(ch));
            }
            continue;
        }
        if (state == State::quote_in_quoted && ch == '"') {
            field.push_back('"');
            state = State::quoted;
            continue;
        }
        if (eof || ch == '\n') {
            if (!field.empty() && field.back() == '\r' && state == State::unquoted) field.pop_back();
            end_field();
            return row;
        }
        if (ch == '\r' && in_.peek() == '\n') continue;
        if (ch == ',') {
            end_field();
            state = State::field_start;
            continue;
        }
        switch (state) {
            case State::field_start:
                if (ch == '"') {
                    state = State::quoted;
                } else {
                    field.push_back(static_cast<char>(ch));
                    state = State::unquoted;
                }
                break;
            case State::unquoted:
                if (ch == '"') throw ParseError("stray quote in unquoted field", row.line);
                field.push_back(static_cast<char>(ch));
                break;
            case State::quote_in_quoted:
                throw ParseError("unexpected character after closing quote", row.line);
            case State::quoted:
                break;
        }
    }
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

void expect_header(Reader& reader, const std::vector<std::string_view>& header) {
    auto row = reader.next();
    if (!row) throw ParseError("missing header", 1);
    bool same = row->fields.size() == header.size();
    for (std::size_t i = 0; same && i < header.size(); ++i) same = row->fields[i] == header[i];
    if (!same) {
        std::string expected;
        for (auto h : header) expected += (expected.empty() ? "" : ",") + std::string(h);
        throw ParseError("expected header '" + expected + "'", row->line);
    }
}

}  // namespace lexirank::csv
