#include "lexirank/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "lexirank/error.hpp"
#include "lexirank/utf8.hpp"

namespace lexirank {

std::uint64_t SentimentCounts::operator[](SentimentLabel c) const {
    switch (c.value()) {
        case -1: return neg;
        case 0: return neut;
        default: return pos;
    }
}

void SentimentCounts::add(SentimentLabel c, std::uint64_t n) {
    switch (c.value()) {
        case -1: neg += n; break;
        case 0: neut += n; break;
        default: pos += n; break;
    }
}

double SentimentDistribution::probability(SentimentLabel c) const {
    switch (c.value()) {
        case -1: return p_neg;
        case 0: return p_neut;
        default: return p_pos;
    }
}

SentimentDistribution laplace_distribution(const SentimentCounts& counts) {
    SentimentDistribution d;
    d.n = counts.total();
    const double denom = static_cast<double>(d.n) + kLaplaceClasses;
    d.p_neg = (static_cast<double>(counts.neg) + 1.0) / denom;
    d.p_pos = (static_cast<double>(counts.pos) + 1.0) / denom;
    d.p_neut = (static_cast<double>(counts.neut) + 1.0) / denom;
    d.score = d.p_pos - d.p_neg;
    // sum_c p_c (c - mean)^2, expanded over c in {-1, 0, +1}
    const double var = d.p_neg * (-1.0 - d.score) * (-1.0 - d.score) + d.p_neut * d.score * d.score +
                       d.p_pos * (1.0 - d.score) * (1.0 - d.score);
    d.sd = std::sqrt(std::max(var, 0.0));
    if (d.n > 0) d.sem = d.sd / std::sqrt(static_cast<double>(d.n));
    return d;
}

const LexiconEntry* RankedLexicon::find(char32_t cp) const {
    auto it = std::find_if(entries.begin(), entries.end(), [cp](const auto& e) { return e.codepoint == cp; });
    return it == entries.end() ? nullptr : &*it;
}

std::uint64_t RankedLexicon::total_occurrences() const {
    std::uint64_t n = 0;
    for (const auto& e : entries) n += e.occurrences;
    return n;
}

void PositionSum::add(std::uint64_t index, std::uint64_t denom) { numerators_[denom] += index; }

PositionSum& PositionSum::operator+=(const PositionSum& o) {
    for (const auto& [denom, num] : o.numerators_) numerators_[denom] += num;
    return *this;
}

double PositionSum::value() const {
    double sum = 0.0;
    for (const auto& [denom, num] : numerators_) sum += static_cast<double>(num) / static_cast<double>(denom);
    return sum;
}

void LexiconAccumulator::add(const AnnotatedText& record) { add(record.text, record.label); }

void LexiconAccumulator::add(std::string_view utf8_text, SentimentLabel label) {
    const std::u32string text = utf8::decode(utf8_text);
    const std::uint64_t denom = std::max<std::uint64_t>(text.size(), 2) - 1;
    const auto occurrences = extract_occurrences(text, *table_);
    for (const auto& occ : occurrences) {
        auto& tally = tallies_[occ.codepoint];
        tally.counts.add(label);
        tally.positions.add(occ.index, denom);
    }
    const bool any = !occurrences.empty();
    if (any) ++texts_with_symbols_;
}

LexiconAccumulator& LexiconAccumulator::operator+=(const LexiconAccumulator& other) {
    for (const auto& [cp, tally] : other.tallies_) {
        auto& mine = tallies_[cp];
        mine.counts += tally.counts;
        mine.positions += tally.positions;
    }
    texts_with_symbols_ += other.texts_with_symbols_;
    return *this;
}

SymbolInventory LexiconAccumulator::inventory() const {
    SymbolInventory inv;
    for (const auto& [cp, tally] : tallies_) inv.add(cp, tally.counts.total());
    return inv;
}

RankedLexicon LexiconAccumulator::finish(std::uint64_t min_occurrences) const {
    if (min_occurrences < 1) throw DomainError("min_occurrences must be >= 1");
    RankedLexicon lexicon;
    lexicon.min_occurrences = min_occurrences;
    for (const auto& [cp, tally] : tallies_) {
        const std::uint64_t n = tally.counts.total();
        if (n < min_occurrences) continue;
        LexiconEntry e;
        e.codepoint = cp;
        e.occurrences = n;
        e.counts = tally.counts;
        e.distribution = laplace_distribution(tally.counts);
        e.mean_position = tally.positions.value() / static_cast<double>(n);
        lexicon.entries.push_back(e);
    }
    std::stable_sort(lexicon.entries.begin(), lexicon.entries.end(), [](const auto& a, const auto& b) {
        return a.occurrences != b.occurrences ? a.occurrences > b.occurrences : a.codepoint < b.codepoint;
    });
    for (std::size_t i = 0; i < lexicon.entries.size(); ++i) lexicon.entries[i].rank = i + 1;
    return lexicon;
}

RankedLexicon build_lexicon(std::span<const AnnotatedText> corpus, std::uint64_t min_occurrences) {
    return build_lexicon(corpus, min_occurrences, 1);
}

RankedLexicon build_lexicon(std::span<const AnnotatedText> corpus, std::uint64_t min_occurrences,
                            std::size_t shards) {
    if (min_occurrences < 1) throw DomainError("min_occurrences must be >= 1");
    shards = std::clamp<std::size_t>(shards, 1, std::max<std::size_t>(corpus.size(), 1));
    std::vector<LexiconAccumulator> partial(shards);
    {
        std::vector<std::jthread> workers;
        std::vector<std::exception_ptr> failures(shards);
        const std::size_t chunk = (corpus.size() + shards - 1) / shards;
        for (std::size_t s = 0; s < shards; ++s) {
            const std::size_t lo = std::min(corpus.size(), s * chunk);
            const std::size_t hi = std::min(corpus.size(), lo + chunk);
            workers.emplace_back([&, s, lo, hi] {
                try {
                    for (std::size_t i = lo; i < hi; ++i) partial[s].add(corpus[i]);
                } catch (...) {
                    failures[s] = std::current_exception();
                }
            });
        }
        workers.clear();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }
    for (std::size_t s = 1; s < shards; ++s) partial[0] += partial[s];
    return partial[0].finish(min_occurrences);
}

std::uint64_t cdf(const RankedLexicon& lexicon, std::size_t rank) {
    if (rank < 1 || rank > lexicon.size())
        throw DomainError("rank " + std::to_string(rank) + " outside 1.." + std::to_string(lexicon.size()));
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < rank; ++i) sum += lexicon.entries[i].occurrences;
    return sum;
}

std::size_t midpoint_rank(const RankedLexicon& lexicon) {
    if (lexicon.empty()) throw DomainError("midpoint rank of an empty lexicon");
    const std::uint64_t total = lexicon.total_occurrences();
    // Compare |2 cdf - total| to stay in integers.
    std::size_t best = 1;
    std::uint64_t best_gap = UINT64_MAX;
    std::uint64_t running = 0;
    for (std::size_t r = 1; r <= lexicon.size(); ++r) {
        running += lexicon.entries[r - 1].occurrences;
        const std::uint64_t twice = 2 * running;
        const std::uint64_t gap = twice > total ? twice - total : total - twice;
        if (gap < best_gap) {
            best_gap = gap;
            best = r;
        }
    }
    return best;
}

GroupSummary summarize_entries(std::span<const LexiconEntry> entries) {
    GroupSummary g;
    g.entries = entries.size();
    double weighted = 0.0;
    for (const auto& e : entries) {
        g.occurrences += e.occurrences;
        g.pooled += e.counts;
        weighted += static_cast<double>(e.occurrences) * e.distribution.score;
    }
    if (g.occurrences == 0) return g;
    const double n = static_cast<double>(g.occurrences);
    g.mean = weighted / n;
    double ss = 0.0;
    for (const auto& e : entries) {
        const double d = e.distribution.score - g.mean;
        ss += static_cast<double>(e.occurrences) * d * d;
    }
    g.sd = std::sqrt(ss / n);
    g.sem = g.sd / std::sqrt(n);
    return g;
}

PartitionStats partition_stats(const RankedLexicon& lexicon, std::size_t rank) {
    if (rank < 1 || rank >= lexicon.size())
        throw DomainError("partition rank " + std::to_string(rank) + " outside 1.." +
                          std::to_string(lexicon.size() ? lexicon.size() - 1 : 0));
    std::span<const LexiconEntry> all(lexicon.entries);
    return {summarize_entries(all.first(rank)), summarize_entries(all.subspan(rank))};
}

std::vector<HistogramBin> score_histogram(const RankedLexicon& lexicon, double bin_width) {
    if (!(bin_width > 0.0 && bin_width <= 2.0)) throw DomainError("bin width must be in (0, 2]");
    const auto bins = static_cast<std::size_t>(std::ceil(2.0 / bin_width - 1e-9));
    std::vector<HistogramBin> out(bins);
    for (std::size_t i = 0; i < bins; ++i) out[i].start = -1.0 + static_cast<double>(i) * bin_width;
    for (const auto& e : lexicon.entries) {
        const double offset = (e.distribution.score + 1.0) / bin_width;
        auto idx = static_cast<std::size_t>(std::clamp(std::floor(offset), 0.0, static_cast<double>(bins - 1)));
        // Guard against floor() landing one bin high/low from rounding.
        if (idx + 1 < bins && e.distribution.score >= out[idx + 1].start) ++idx;
        if (idx > 0 && e.distribution.score < out[idx].start) --idx;
        ++out[idx].count;
    }
    return out;
}

double mean_score(const RankedLexicon& lexicon) {
    if (lexicon.empty()) throw DomainError("mean score of an empty lexicon");
    double sum = 0.0;
    for (const auto& e : lexicon.entries) sum += e.distribution.score;
    return sum / static_cast<double>(lexicon.size());
}

double mean_position(const RankedLexicon& lexicon) {
    const std::uint64_t total = lexicon.total_occurrences();
    if (total == 0) throw DomainError("mean position of an empty lexicon");
    double sum = 0.0;
    for (const auto& e : lexicon.entries) sum += e.mean_position * static_cast<double>(e.occurrences);
    return sum / static_cast<double>(total);
}

}  // namespace lexirank
