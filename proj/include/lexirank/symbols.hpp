#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexirank {

// Sorted, coalesced set of inclusive codepoint intervals.
class RangeTable {
public:
    RangeTable() = default;
    explicit RangeTable(std::vector<std::pair<char32_t, char32_t>> ranges);

    // Parses `U+XXXX..U+YYYY` lines (a lone `U+XXXX` is a one-codepoint
    // range); blank lines and `#` comments are skipped.
    static RangeTable parse(std::string_view text);
    static RangeTable load(const std::string& path);

    bool contains(char32_t cp) const;
    std::size_t range_count() const { return ranges_.size(); }
    std::size_t codepoint_count() const;
    const std::vector<std::pair<char32_t, char32_t>>& ranges() const { return ranges_; }

private:
    std::vector<std::pair<char32_t, char32_t>> ranges_;
};

// Unicode 8.0 general category So, compiled into the library.
const RangeTable& bundled_symbol_table();

// The bundled table, or the file named by LEXIRANK_UNICODE_TABLE when set.
// Resolved once per process.
const RangeTable& active_symbol_table();

inline constexpr const char* kUnicodeTableEnv = "LEXIRANK_UNICODE_TABLE";

// Membership in the active So table.
bool is_symbol_other(char32_t cp);

struct SymbolOccurrence {
    char32_t codepoint = 0;
    std::size_t index = 0;  // codepoint offset in the source text
    double position = 0.0;  // index / max(L - 1, 1)

    bool operator==(const SymbolOccurrence&) const = default;
};

bool is_regional_indicator(char32_t cp);

// Single-codepoint symbols of `table` in text order. Adjacent pairs of
// regional indicators (flags) are skipped; a lone indicator still counts.
std::vector<SymbolOccurrence> extract_occurrences(std::u32string_view text, const RangeTable& table);
std::vector<SymbolOccurrence> extract_occurrences(std::u32string_view text);
// UTF-8 input; throws EncodingError on malformed bytes.
std::vector<SymbolOccurrence> extract_occurrences(std::string_view utf8_text);

bool has_symbol_occurrence(std::u32string_view text, const RangeTable& table);

// Codepoint -> occurrence count. Keys are only present with count >= 1.
class SymbolInventory {
public:
    void add(char32_t cp, std::uint64_t count = 1);
    std::uint64_t count(char32_t cp) const;
    bool contains(char32_t cp) const { return counts_.contains(cp); }
    std::size_t size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    std::set<char32_t> keys() const;
    const std::map<char32_t, std::uint64_t>& counts() const { return counts_; }

    SymbolInventory& operator+=(const SymbolInventory& other);

private:
    std::map<char32_t, std::uint64_t> counts_;
};

struct InventoryDiff {
    std::set<char32_t> common;
    std::set<char32_t> only_a;
    std::set<char32_t> only_b;
};

InventoryDiff inventory_diff(const SymbolInventory& a, const SymbolInventory& b);

// External counts file: CSV `codepoint,count` with U+XXXX codepoints and an
// optional header row. Repeated codepoints are summed.
SymbolInventory read_counts_csv(std::istream& in);
void write_counts_csv(std::ostream& out, const SymbolInventory& inventory);

}  // namespace lexirank
