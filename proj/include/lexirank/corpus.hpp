#pragma once

#include <algorithm>
#include <concepts>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexirank/csv.hpp"
#include "lexirank/label.hpp"
#include "lexirank/utf8.hpp"

namespace lexirank {

// One annotated short text. `text` is UTF-8 and has been validated.
struct AnnotatedText {
    std::string text_id;
    std::string language;
    std::string annotator_id;
    SentimentLabel label = SentimentLabel::neutral();
    std::string text;

    bool operator==(const AnnotatedText&) const = default;
};

using Corpus = std::vector<AnnotatedText>;

// Two labels given to the same text. Unordered: {a, b} == {b, a}.
struct AnnotationPair {
    std::string text_id;
    SentimentLabel label_a = SentimentLabel::neutral();
    SentimentLabel label_b = SentimentLabel::neutral();
    bool same_annotator = false;

    bool operator==(const AnnotationPair& o) const {
        return text_id == o.text_id && same_annotator == o.same_annotator &&
               std::minmax(label_a, label_b) == std::minmax(o.label_a, o.label_b);
    }
};

enum class PairMode { inter, self, all };

std::optional<PairMode> parse_pair_mode(std::string_view name);

inline constexpr const char* kCorpusHeader = "text_id,language,annotator_id,label,text";

// Streaming corpus reader; parse_corpus() is the eager form.
//
// Errors: malformed rows -> ParseError, label outside {-1,0,1} or empty
// required fields -> DomainError, invalid UTF-8 -> EncodingError. All
// carry the 1-based line number of the offending row.
class CorpusReader {
public:
    // Consumes and validates the header.
    explicit CorpusReader(std::istream& in);

    std::optional<AnnotatedText> next();

private:
    csv::Reader reader_;
};

Corpus parse_corpus(std::istream& in);

void write_corpus(std::ostream& out, std::span<const AnnotatedText> corpus);

// All unordered pairs of annotations of each text_id, filtered by mode.
// Texts keep their first-appearance order; within a text, pairs follow
// (i, j) index order with i < j.
std::vector<AnnotationPair> derive_pairs(std::span<const AnnotatedText> corpus, PairMode mode);

struct PresenceSplit {
    Corpus with;
    Corpus without;
};

template <typename Predicate>
concept CodepointPredicate = std::predicate<const Predicate&, char32_t>;

// Records whose text holds at least one codepoint satisfying `pred` go to
// `with`, the rest to `without`; order preserved.
template <CodepointPredicate Predicate>
PresenceSplit split_by_symbol_presence(std::span<const AnnotatedText> corpus, const Predicate& pred) {
    PresenceSplit split;
    for (const auto& record : corpus) {
        bool found = false;
        for (char32_t cp : utf8::decode(record.text)) {
            if (pred(cp)) {
                found = true;
                break;
            }
        }
        (found ? split.with : split.without).push_back(record);
    }
    return split;
}

std::map<std::string, Corpus> split_by_language(std::span<const AnnotatedText> corpus);

}  // namespace lexirank
