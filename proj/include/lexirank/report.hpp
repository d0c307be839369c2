#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lexirank/corpus.hpp"
#include "lexirank/sentiment.hpp"
#include "lexirank/stats.hpp"

namespace lexirank::report {

inline constexpr const char* kRed = "#d7191c";
inline constexpr const char* kYellow = "#ffdf00";
inline constexpr const char* kGreen = "#1a9641";
inline constexpr const char* kGrey = "#808080";

// Half-width of the confidence band in units of SEM (95% interval).
inline constexpr double kBandSigmas = 1.96;

struct BarOptions {
    int width_px = 400;
    int height_px = 40;
};

// Layout of a sentiment bar. Segment boundaries are fractions of the bar
// width; the marker is a score interval in [-1, +1].
struct BarGeometry {
    int width_px = 0;
    int height_px = 0;
    double neg_end = 0.0;   // p_neg
    double neut_end = 0.0;  // p_neg + p_neut
    double marker_lo = 0.0;
    double marker_hi = 0.0;
    double score = 0.0;

    // Pixel widths of the three segments; they sum to width_px exactly.
    std::array<int, 3> segment_pixels() const;
    // Score in [-1, +1] -> x pixel.
    double x_of(double score_value) const;
};

BarGeometry bar_geometry(const LexiconEntry& entry, const BarOptions& options = {});

std::string render_sentiment_bar(const LexiconEntry& entry, const BarOptions& options = {});

struct MapOptions {
    int width_px = 1000;
    int height_px = 700;
    int margin_px = 50;
    double radius_per_decade = 6.0;  // radius = radius_per_decade * log10(N)
    double min_radius = 2.0;
};

// Color for a score: red at -1, yellow at 0, green at +1, linear in between.
std::string score_color(double score);

// Scatter of (score, p_neut), radius proportional to log10(N), clamped
// below at MapOptions::min_radius.
std::string render_sentiment_map(const RankedLexicon& lexicon, const MapOptions& options = {});

double map_radius(std::uint64_t occurrences, const MapOptions& options = {});

inline constexpr const char* kLexiconHeader =
    "emoji,codepoint,occurrences,position,n_neg,n_neut,n_pos,p_neg,p_neut,p_pos,score,sd,sem";

void export_lexicon_csv(std::ostream& out, const RankedLexicon& lexicon);
std::string export_lexicon_csv(const RankedLexicon& lexicon);

// Inverse of export_lexicon_csv. Distributions are recomputed from the
// counts; mean_position keeps the 4-decimal value from the file.
RankedLexicon read_lexicon_csv(std::istream& in);

// Static HTML ranking table.
std::string export_lexicon_html(const RankedLexicon& lexicon, const std::string& title = "Sentiment ranking");

struct CorrelationCell {
    double r = 0.0;
    stats::CorrelationTest test;
};

struct LanguageRow {
    std::string language;
    std::size_t texts_with_symbols = 0;
    std::size_t distinct_symbols = 0;  // after the cutoff
    std::size_t shared_symbols = 0;    // also present in the reference
    std::optional<CorrelationCell> pearson;
    std::optional<CorrelationCell> spearman;
};

// Per-language lexicons compared against `reference` by score over the
// shared symbols. Correlations are absent with fewer than 4 shared symbols.
std::vector<LanguageRow> language_report(std::span<const AnnotatedText> corpus, const RankedLexicon& reference,
                                         std::uint64_t min_occurrences, double level = 0.01);

// Column-aligned plain-text table.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& out) const;
    void print_csv(std::ostream& out) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace lexirank::report
