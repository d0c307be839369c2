#include "lexirank/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lexirank/csv.hpp"
#include "lexirank/error.hpp"
#include "lexirank/format.hpp"
#include "lexirank/utf8.hpp"

namespace lexirank {

namespace detail {
extern const std::string_view kBundledSoRanges;
}

RangeTable::RangeTable(std::vector<std::pair<char32_t, char32_t>> ranges) {
    std::sort(ranges.begin(), ranges.end());
    for (const auto& [lo, hi] : ranges) {
        if (lo > hi) throw DomainError("inverted range " + format_codepoint(lo) + ".." + format_codepoint(hi));
        if (!ranges_.empty() && lo <= ranges_.back().second + 1) {
            ranges_.back().second = std::max(ranges_.back().second, hi);
        } else {
            ranges_.emplace_back(lo, hi);
        }
    }
}

RangeTable RangeTable::parse(std::string_view text) {
    std::vector<std::pair<char32_t, char32_t>> ranges;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        if (line.empty()) continue;

        const auto dots = line.find("..");
        if (dots == std::string_view::npos) {
            const char32_t cp = parse_codepoint(line, line_no);
            ranges.emplace_back(cp, cp);
        } else {
            ranges.emplace_back(parse_codepoint(line.substr(0, dots), line_no),
                                parse_codepoint(line.substr(dots + 2), line_no));
        }
    }
    return RangeTable(std::move(ranges));
}

RangeTable RangeTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open range table '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool RangeTable::contains(char32_t cp) const {
    // First range whose upper bound is >= cp.
    auto it = std::lower_bound(ranges_.begin(), ranges_.end(), cp,
                               [](const auto& range, char32_t v) { return range.second < v; });
    return it != ranges_.end() && it->first <= cp;
}

std::size_t RangeTable::codepoint_count() const {
    std::size_t n = 0;
    for (const auto& [lo, hi] : ranges_) n += static_cast<std::size_t>(hi - lo) + 1;
    return n;
}

const RangeTable& bundled_symbol_table() {
    static const RangeTable table = RangeTable::parse(detail::kBundledSoRanges);
    return table;
}

const RangeTable& active_symbol_table() {
    static const RangeTable table = [] {
        if (const char* path = std::getenv(kUnicodeTableEnv); path && *path) return RangeTable::load(path);
        return bundled_symbol_table();
    }();
    return table;
}

bool is_symbol_other(char32_t cp) { return active_symbol_table().contains(cp); }

bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

std::vector<SymbolOccurrence> extract_occurrences(std::u32string_view text, const RangeTable& table) {
    std::vector<SymbolOccurrence> out;
    const double denom = static_cast<double>(std::max<std::size_t>(text.size(), 2) - 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        // Two adjacent regional indicators form a flag, which is not a
        // single-character symbol; pairs are taken left to right.
        if (is_regional_indicator(text[i]) && i + 1 < text.size() && is_regional_indicator(text[i + 1])) {
            ++i;
            continue;
        }
        if (table.contains(text[i])) out.push_back({text[i], i, static_cast<double>(i) / denom});
    }
    return out;
}

bool has_symbol_occurrence(std::u32string_view text, const RangeTable& table) {
    return !extract_occurrences(text, table).empty();
}

std::vector<SymbolOccurrence> extract_occurrences(std::u32string_view text) {
    return extract_occurrences(text, active_symbol_table());
}

std::vector<SymbolOccurrence> extract_occurrences(std::string_view utf8_text) {
    return extract_occurrences(utf8::decode(utf8_text), active_symbol_table());
}

void SymbolInventory::add(char32_t cp, std::uint64_t count) {
    if (count) counts_[cp] += count;
}

std::uint64_t SymbolInventory::count(char32_t cp) const {
    auto it = counts_.find(cp);
    return it == counts_.end() ? 0 : it->second;
}

std::set<char32_t> SymbolInventory::keys() const {
    std::set<char32_t> out;
    for (const auto& [cp, n] : counts_) out.insert(out.end(), cp);
    return out;
}

SymbolInventory& SymbolInventory::operator+=(const SymbolInventory& other) {
    for (const auto& [cp, n] : other.counts_) add(cp, n);
    return *this;
}

InventoryDiff inventory_diff(const SymbolInventory& a, const SymbolInventory& b) {
    InventoryDiff diff;
    for (const auto& [cp, n] : a.counts()) (b.contains(cp) ? diff.common : diff.only_a).insert(cp);
    for (const auto& [cp, n] : b.counts())
        if (!a.contains(cp)) diff.only_b.insert(cp);
    return diff;
}

SymbolInventory read_counts_csv(std::istream& in) {
    csv::Reader reader(in);
    SymbolInventory inventory;
    while (auto row = reader.next()) {
        auto& f = row->fields;
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != 2) throw ParseError("expected 2 fields, found " + std::to_string(f.size()), row->line);
        if (row->line == 1 && f[0] == "codepoint") continue;
        const char32_t cp = parse_codepoint(f[0], row->line);
        std::uint64_t count = 0;
        const auto* end = f[1].data() + f[1].size();
        auto [ptr, ec] = std::from_chars(f[1].data(), end, count);
        if (f[1].empty() || ec != std::errc{} || ptr != end)
            throw ParseError("bad count '" + f[1] + "'", row->line);
        inventory.add(cp, count);
    }
    return inventory;
}

void write_counts_csv(std::ostream& out, const SymbolInventory& inventory) {
    out << "codepoint,count\n";
    for (const auto& [cp, n] : inventory.counts()) out << format_codepoint(cp) << ',' << n << '\n';
}

}  // namespace lexirank
