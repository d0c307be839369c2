#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexirank/corpus.hpp"
#include "lexirank/label.hpp"
#include "lexirank/symbols.hpp"

namespace lexirank {

// Class cardinality used by the Laplace estimate.
inline constexpr int kLaplaceClasses = 3;

struct SentimentCounts {
    std::uint64_t neg = 0;
    std::uint64_t neut = 0;
    std::uint64_t pos = 0;

    std::uint64_t total() const { return neg + neut + pos; }
    std::uint64_t operator[](SentimentLabel c) const;
    void add(SentimentLabel c, std::uint64_t n = 1);

    SentimentCounts& operator+=(const SentimentCounts& o) {
        neg += o.neg;
        neut += o.neut;
        pos += o.pos;
        return *this;
    }
    friend SentimentCounts operator+(SentimentCounts a, const SentimentCounts& b) { return a += b; }
    bool operator==(const SentimentCounts&) const = default;
};

// Laplace-smoothed distribution over {-1, 0, +1} and its moments.
struct SentimentDistribution {
    double p_neg = 0.0;
    double p_neut = 0.0;
    double p_pos = 0.0;
    double score = 0.0;  // mean, p_pos - p_neg
    double sd = 0.0;
    std::optional<double> sem;  // absent when n == 0
    std::uint64_t n = 0;

    double subjectivity() const { return p_neg + p_pos; }
    double probability(SentimentLabel c) const;
};

// p_c = (N(c) + 1) / (N + 3)
SentimentDistribution laplace_distribution(const SentimentCounts& counts);

struct LexiconEntry {
    char32_t codepoint = 0;
    std::uint64_t occurrences = 0;
    SentimentCounts counts;
    SentimentDistribution distribution;
    double mean_position = 0.0;
    std::size_t rank = 0;  // 1-based
};

struct RankedLexicon {
    std::vector<LexiconEntry> entries;  // rank order
    std::uint64_t min_occurrences = 1;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    const LexiconEntry* find(char32_t cp) const;
    std::uint64_t total_occurrences() const;
};

// Exact running sum of occurrence positions. Each position is the rational
// index / denom; numerators are summed per denominator so that merging
// partial sums is exactly commutative and associative.
class PositionSum {
public:
    void add(std::uint64_t index, std::uint64_t denom);
    PositionSum& operator+=(const PositionSum& o);
    double value() const;
    bool operator==(const PositionSum&) const = default;

private:
    std::map<std::uint64_t, std::uint64_t> numerators_;  // denom -> sum of indices
};

// Accumulates per-symbol sentiment counts and positions, one count per
// occurrence. Partial accumulators over disjoint shards merge with +=.
class LexiconAccumulator {
public:
    explicit LexiconAccumulator(const RangeTable& table = active_symbol_table()) : table_(&table) {}

    void add(const AnnotatedText& record);
    void add(std::string_view utf8_text, SentimentLabel label);
    LexiconAccumulator& operator+=(const LexiconAccumulator& other);

    std::uint64_t texts_with_symbols() const { return texts_with_symbols_; }
    SymbolInventory inventory() const;

    // Drops symbols below the threshold and ranks by occurrences
    // (descending), ties by ascending codepoint.
    RankedLexicon finish(std::uint64_t min_occurrences) const;

private:
    struct Tally {
        SentimentCounts counts;
        PositionSum positions;
    };
    const RangeTable* table_;
    std::map<char32_t, Tally> tallies_;
    std::uint64_t texts_with_symbols_ = 0;
};

RankedLexicon build_lexicon(std::span<const AnnotatedText> corpus, std::uint64_t min_occurrences);

// Same result as build_lexicon, computed over `shards` contiguous slices in
// parallel and merged.
RankedLexicon build_lexicon(std::span<const AnnotatedText> corpus, std::uint64_t min_occurrences,
                            std::size_t shards);

// Sum of occurrences of ranks 1..rank. Throws DomainError when out of range.
std::uint64_t cdf(const RankedLexicon& lexicon, std::size_t rank);

// Rank R minimizing |cdf(R) - cdf(len)/2|, smaller R on ties.
std::size_t midpoint_rank(const RankedLexicon& lexicon);

struct GroupSummary {
    std::size_t entries = 0;
    std::uint64_t occurrences = 0;
    SentimentCounts pooled;
    // Occurrence-weighted moments of the member entries' scores.
    double mean = 0.0;
    double sd = 0.0;
    double sem = 0.0;  // sd / sqrt(occurrences)
};

struct PartitionStats {
    GroupSummary first;   // ranks 1..R
    GroupSummary second;  // ranks R+1..len
};

GroupSummary summarize_entries(std::span<const LexiconEntry> entries);

// Requires 1 <= rank < len.
PartitionStats partition_stats(const RankedLexicon& lexicon, std::size_t rank);

struct HistogramBin {
    double start = 0.0;
    std::size_t count = 0;
};

// Bins of `bin_width` starting at -1; the last bin absorbs +1.
std::vector<HistogramBin> score_histogram(const RankedLexicon& lexicon, double bin_width);

// Unweighted mean of entry scores.
double mean_score(const RankedLexicon& lexicon);

// Occurrence-weighted mean of entry mean positions, i.e. the mean over all
// counted occurrences.
double mean_position(const RankedLexicon& lexicon);

}  // namespace lexirank
