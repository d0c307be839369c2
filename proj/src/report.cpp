#include "lexirank/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "lexirank/csv.hpp"
#include "lexirank/error.hpp"
#include "lexirank/format.hpp"
#include "lexirank/utf8.hpp"

namespace lexirank::report {

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

// Coordinates are printed with two decimals so output bytes do not depend
// on the last bits of a double.
std::string px(double v) { return fixed(v, 2); }

std::string entry_label(const LexiconEntry& e) {
    return utf8::encode(e.codepoint) + " " + format_codepoint(e.codepoint);
}

constexpr const char* kXmlProlog = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

std::string bar_svg_element(const LexiconEntry& entry, const BarOptions& options) {
    const BarGeometry g = bar_geometry(entry, options);
    const auto widths = g.segment_pixels();
    const int h = g.height_px;
    const double band_h = h / 3.0;
    const double band_y = (h - band_h) / 2.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << g.width_px << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << g.width_px << ' ' << h << "\">\n";
    svg << "<title>" << xml_escape(entry_label(entry)) << " score " << signed_fixed(g.score, 3) << "</title>\n";
    const char* colors[3] = {kRed, kYellow, kGreen};
    int x = 0;
    for (int k = 0; k < 3; ++k) {
        svg << "<rect x=\"" << x << "\" y=\"0\" width=\"" << widths[static_cast<std::size_t>(k)] << "\" height=\""
            << h << "\" fill=\"" << colors[k] << "\"/>\n";
        x += widths[static_cast<std::size_t>(k)];
    }
    const double lo = g.x_of(g.marker_lo);
    const double hi = g.x_of(g.marker_hi);
    svg << "<rect x=\"" << px(lo) << "\" y=\"" << px(band_y) << "\" width=\"" << px(hi - lo) << "\" height=\""
        << px(band_h) << "\" fill=\"" << kGrey << "\" fill-opacity=\"0.85\"/>\n";
    const double center = g.x_of(g.score);
    svg << "<line x1=\"" << px(center) << "\" y1=\"" << px(band_y) << "\" x2=\"" << px(center) << "\" y2=\""
        << px(band_y + band_h) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string hex_color(double r, double g, double b) {
    char buf[8];
    auto c = [](double v) { return static_cast<unsigned>(std::lround(std::clamp(v, 0.0, 255.0))); };
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c(r), c(g), c(b));
    return buf;
}

struct Rgb {
    double r, g, b;
};

Rgb parse_hex(const char* hex) {
    unsigned r = 0, g = 0, b = 0;
    std::sscanf(hex, "#%02x%02x%02x", &r, &g, &b);
    return {double(r), double(g), double(b)};
}

std::uint64_t parse_uint(const std::string& field, std::size_t line) {
    std::uint64_t v = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc{} || ptr != end) throw ParseError("bad integer '" + field + "'", line);
    return v;
}

double parse_real(const std::string& field, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || *end != '\0') throw ParseError("bad number '" + field + "'", line);
    return v;
}

std::size_t display_width(std::string_view s) {
    return utf8::is_valid(s) ? utf8::decode(s).size() : s.size();
}

}  // namespace

std::array<int, 3> BarGeometry::segment_pixels() const {
    const int b1 = static_cast<int>(std::lround(neg_end * width_px));
    const int b2 = std::max(b1, static_cast<int>(std::lround(neut_end * width_px)));
    return {b1, b2 - b1, width_px - b2};
}

double BarGeometry::x_of(double score_value) const { return (score_value + 1.0) / 2.0 * width_px; }

BarGeometry bar_geometry(const LexiconEntry& entry, const BarOptions& options) {
    if (options.width_px <= 0 || options.height_px <= 0) throw DomainError("bar dimensions must be positive");
    const auto& d = entry.distribution;
    BarGeometry g;
    g.width_px = options.width_px;
    g.height_px = options.height_px;
    g.neg_end = std::clamp(d.p_neg, 0.0, 1.0);
    g.neut_end = std::clamp(d.p_neg + d.p_neut, g.neg_end, 1.0);
    g.score = std::clamp(d.score, -1.0, 1.0);
    const double half = kBandSigmas * d.sem.value_or(0.0);
    g.marker_lo = std::clamp(g.score - half, -1.0, 1.0);
    g.marker_hi = std::clamp(g.score + half, -1.0, 1.0);
    return g;
}

std::string render_sentiment_bar(const LexiconEntry& entry, const BarOptions& options) {
    return kXmlProlog + bar_svg_element(entry, options);
}

std::string score_color(double score) {
    static const Rgb red = parse_hex(kRed);
    static const Rgb yellow = parse_hex(kYellow);
    static const Rgb green = parse_hex(kGreen);
    const double s = std::clamp(score, -1.0, 1.0);
    const Rgb& from = s < 0.0 ? red : yellow;
    const Rgb& to = s < 0.0 ? yellow : green;
    const double t = s < 0.0 ? s + 1.0 : s;
    return hex_color(from.r + (to.r - from.r) * t, from.g + (to.g - from.g) * t, from.b + (to.b - from.b) * t);
}

double map_radius(std::uint64_t occurrences, const MapOptions& options) {
    const double r = occurrences > 0 ? options.radius_per_decade * std::log10(static_cast<double>(occurrences)) : 0.0;
    return std::max(r, options.min_radius);
}

std::string render_sentiment_map(const RankedLexicon& lexicon, const MapOptions& options) {
    if (lexicon.empty()) throw DomainError("sentiment map of an empty lexicon");
    const int w = options.width_px;
    const int h = options.height_px;
    const int m = options.margin_px;
    if (w <= 2 * m || h <= 2 * m) throw DomainError("map too small for its margins");
    const double plot_w = w - 2.0 * m;
    const double plot_h = h - 2.0 * m;
    auto x_of = [&](double score) { return m + (score + 1.0) / 2.0 * plot_w; };
    auto y_of = [&](double p0) { return m + (1.0 - p0) * plot_h; };

    std::ostringstream svg;
    svg << kXmlProlog;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    svg << "<title>Sentiment map</title>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

    // Axes: x = score in [-1, 1], y = neutrality in [0, 1].
    svg << "<g stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
    svg << "<line x1=\"" << m << "\" y1=\"" << px(y_of(0.0)) << "\" x2=\"" << w - m << "\" y2=\"" << px(y_of(0.0))
        << "\"/>\n";
    svg << "<line x1=\"" << m << "\" y1=\"" << px(y_of(0.0)) << "\" x2=\"" << m << "\" y2=\"" << px(y_of(1.0))
        << "\"/>\n";
    svg << "<line x1=\"" << px(x_of(0.0)) << "\" y1=\"" << px(y_of(0.0)) << "\" x2=\"" << px(x_of(0.0))
        << "\" y2=\"" << px(y_of(1.0)) << "\" stroke-dasharray=\"4 4\"/>\n";
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
    for (double tick : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        svg << "<text x=\"" << px(x_of(tick)) << "\" y=\"" << px(y_of(0.0) + 16) << "\" text-anchor=\"middle\">"
            << signed_fixed(tick, 1) << "</text>\n";
    }
    for (double tick : {0.0, 0.5, 1.0}) {
        svg << "<text x=\"" << m - 6 << "\" y=\"" << px(y_of(tick) + 4) << "\" text-anchor=\"end\">" << fixed(tick, 1)
            << "</text>\n";
    }
    svg << "<text x=\"" << px(x_of(0.0)) << "\" y=\"" << h - 8 << "\" text-anchor=\"middle\">sentiment score</text>\n";
    svg << "<text x=\"14\" y=\"" << px(y_of(0.5)) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << px(y_of(0.5)) << ")\">neutrality</text>\n";
    svg << "</g>\n";

    // Most frequent symbols first so the small ones stay visible on top.
    svg << "<g stroke=\"#333333\" stroke-width=\"0.5\" fill-opacity=\"0.8\">\n";
    for (const auto& e : lexicon.entries) {
        svg << "<circle cx=\"" << px(x_of(e.distribution.score)) << "\" cy=\"" << px(y_of(e.distribution.p_neut))
            << "\" r=\"" << px(map_radius(e.occurrences, options)) << "\" fill=\"" << score_color(e.distribution.score)
            << "\"><title>" << xml_escape(entry_label(e)) << " N=" << e.occurrences << "</title></circle>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

void export_lexicon_csv(std::ostream& out, const RankedLexicon& lexicon) {
    out << kLexiconHeader << '\n';
    for (const auto& e : lexicon.entries) {
        const auto& d = e.distribution;
        csv::write_row(out, {utf8::encode(e.codepoint), format_codepoint(e.codepoint), std::to_string(e.occurrences),
                             fixed(e.mean_position, 4), std::to_string(e.counts.neg), std::to_string(e.counts.neut),
                             std::to_string(e.counts.pos), fixed(d.p_neg, 4), fixed(d.p_neut, 4), fixed(d.p_pos, 4),
                             fixed(d.score, 4), fixed(d.sd, 4), d.sem ? fixed(*d.sem, 4) : std::string()});
    }
}

std::string export_lexicon_csv(const RankedLexicon& lexicon) {
    std::ostringstream out;
    export_lexicon_csv(out, lexicon);
    return out.str();
}

RankedLexicon read_lexicon_csv(std::istream& in) {
    csv::Reader reader(in);
    csv::expect_header(reader, {"emoji", "codepoint", "occurrences", "position", "n_neg", "n_neut", "n_pos",
                                "p_neg", "p_neut", "p_pos", "score", "sd", "sem"});
    RankedLexicon lexicon;
    while (auto row = reader.next()) {
        const auto& f = row->fields;
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != 13) throw ParseError("expected 13 fields, found " + std::to_string(f.size()), row->line);
        LexiconEntry e;
        e.codepoint = parse_codepoint(f[1], row->line);
        if (!utf8::is_valid(f[0])) throw EncodingError("invalid UTF-8", row->line);
        if (f[0] != utf8::encode(e.codepoint))
            throw ParseError("emoji column does not match " + f[1], row->line);
        e.occurrences = parse_uint(f[2], row->line);
        e.mean_position = parse_real(f[3], row->line);
        e.counts = {parse_uint(f[4], row->line), parse_uint(f[5], row->line), parse_uint(f[6], row->line)};
        if (e.counts.total() != e.occurrences)
            throw DomainError("occurrences differ from the sum of class counts", row->line);
        if (!lexicon.entries.empty() && e.occurrences > lexicon.entries.back().occurrences)
            throw DomainError("rows are not in rank order", row->line);
        e.distribution = laplace_distribution(e.counts);
        e.rank = lexicon.entries.size() + 1;
        lexicon.entries.push_back(e);
    }
    lexicon.min_occurrences = lexicon.empty() ? 1 : std::max<std::uint64_t>(1, lexicon.entries.back().occurrences);
    return lexicon;
}

std::string export_lexicon_html(const RankedLexicon& lexicon, const std::string& title) {
    std::ostringstream html;
    html << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" << xml_escape(title)
         << "</title>\n<style>\ntable{border-collapse:collapse;font-family:sans-serif;font-size:14px}\n"
            "td,th{padding:2px 8px;border-bottom:1px solid #ddd;text-align:right}\n"
            "td.char{font-size:22px;text-align:center}\n</style>\n</head>\n<body>\n<h1>"
         << xml_escape(title) << "</h1>\n<table>\n<thead><tr><th>Rank</th><th>Char</th><th>Unicode</th>"
         << "<th>Occurrences</th><th>Position</th><th>Neg</th><th>Neut</th><th>Pos</th><th>Score</th>"
         << "<th>Sentiment bar</th></tr></thead>\n<tbody>\n";
    const BarOptions small{200, 20};
    for (const auto& e : lexicon.entries) {
        const auto& d = e.distribution;
        html << "<tr><td>" << e.rank << "</td><td class=\"char\">" << xml_escape(utf8::encode(e.codepoint))
             << "</td><td>" << format_codepoint(e.codepoint) << "</td><td>" << e.occurrences << "</td><td>"
             << fixed(e.mean_position, 3) << "</td><td>" << fixed(d.p_neg, 3) << "</td><td>" << fixed(d.p_neut, 3)
             << "</td><td>" << fixed(d.p_pos, 3) << "</td><td>" << signed_fixed(d.score, 3) << "</td><td>"
             << bar_svg_element(e, small) << "</td></tr>\n";
    }
    html << "</tbody>\n</table>\n</body>\n</html>\n";
    return html.str();
}

std::vector<LanguageRow> language_report(std::span<const AnnotatedText> corpus, const RankedLexicon& reference,
                                         std::uint64_t min_occurrences, double level) {
    if (min_occurrences < 1) throw DomainError("min_occurrences must be >= 1");
    std::vector<LanguageRow> rows;
    for (const auto& [language, texts] : split_by_language(corpus)) {
        LexiconAccumulator acc;
        for (const auto& t : texts) acc.add(t);
        const RankedLexicon local = acc.finish(min_occurrences);

        LanguageRow row;
        row.language = language;
        row.texts_with_symbols = acc.texts_with_symbols();
        row.distinct_symbols = local.size();

        std::vector<double> mine, theirs;
        for (const auto& e : local.entries) {
            if (const auto* ref = reference.find(e.codepoint)) {
                mine.push_back(e.distribution.score);
                theirs.push_back(ref->distribution.score);
            }
        }
        row.shared_symbols = mine.size();
        if (mine.size() >= 4) {
            const Eigen::Map<const stats::Vector> x(mine.data(), static_cast<Eigen::Index>(mine.size()));
            const Eigen::Map<const stats::Vector> y(theirs.data(), static_cast<Eigen::Index>(theirs.size()));
            try {
                CorrelationCell p;
                p.r = stats::pearson(x, y);
                p.test = stats::correlation_significant(p.r, mine.size(), level);
                CorrelationCell s;
                s.r = stats::spearman(x, y);
                s.test = stats::correlation_significant(s.r, mine.size(), level);
                row.pearson = p;
                row.spearman = s;
            } catch (const DomainError&) {
                // constant scores on one side: no correlation to report
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void TextTable::print(std::ostream& out) const {
    std::vector<std::size_t> widths(header_.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], display_width(row[i]));
    };
    measure(header_);
    for (const auto& row : rows_) measure(row);

    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t i = 0; i < widths.size(); ++i) {
            const std::string cell = i < row.size() ? row[i] : std::string();
            const std::string pad(widths[i] - display_width(cell), ' ');
            if (i) line += "  ";
            line += i == 0 ? cell + pad : pad + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    emit(header_);
    std::size_t rule = 0;
    for (auto w : widths) rule += w;
    out << std::string(rule + 2 * (widths.size() - 1), '-') << '\n';
    for (const auto& row : rows_) emit(row);
}

void TextTable::print_csv(std::ostream& out) const {
    csv::write_row(out, header_);
    for (const auto& row : rows_) csv::write_row(out, row);
}

}  // namespace lexirank::report
