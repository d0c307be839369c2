#include "lexirank/corpus.hpp"

#include <charconv>
#include <unordered_map>

#include "lexirank/error.hpp"

namespace lexirank {

std::optional<PairMode> parse_pair_mode(std::string_view name) {
    if (name == "inter") return PairMode::inter;
    if (name == "self") return PairMode::self;
    if (name == "all") return PairMode::all;
    return std::nullopt;
}

namespace {

SentimentLabel parse_label(std::string_view field, std::size_t line) {
    long long value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data() + (field.starts_with('+') ? 1 : 0), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end)
        throw DomainError("label '" + std::string(field) + "' is not an integer", line);
    auto label = SentimentLabel::from_int(value);
    if (!label) throw DomainError("label " + std::string(field) + " outside {-1,0,1}", line);
    return *label;
}

std::string ascii_lower(std::string s) {
    for (char& ch : s)
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    return s;
}

}  // namespace

CorpusReader::CorpusReader(std::istream& in) : reader_(in) {
    csv::expect_header(reader_, {"text_id", "language", "annotator_id", "label", "text"});
}

std::optional<AnnotatedText> CorpusReader::next() {
    for (;;) {
        auto row = reader_.next();
        if (!row) return std::nullopt;
        auto& f = row->fields;
        if (f.size() == 1 && f[0].empty()) continue;  // blank line
        if (f.size() != 5)
            throw ParseError("expected 5 fields, found " + std::to_string(f.size()), row->line);
        for (const auto& field : f)
            if (!utf8::is_valid(field)) throw EncodingError("invalid UTF-8", row->line);
        if (f[0].empty()) throw DomainError("empty text_id", row->line);
        if (f[1].empty()) throw DomainError("empty language", row->line);
        if (f[2].empty()) throw DomainError("empty annotator_id", row->line);

        AnnotatedText record;
        record.label = parse_label(f[3], row->line);
        record.text_id = std::move(f[0]);
        record.language = ascii_lower(std::move(f[1]));
        record.annotator_id = std::move(f[2]);
        record.text = std::move(f[4]);
        return record;
    }
}

Corpus parse_corpus(std::istream& in) {
    CorpusReader reader(in);
    Corpus corpus;
    while (auto record = reader.next()) corpus.push_back(std::move(*record));
    return corpus;
}

void write_corpus(std::ostream& out, std::span<const AnnotatedText> corpus) {
    out << kCorpusHeader << '\n';
    for (const auto& r : corpus)
        csv::write_row(out, {r.text_id, r.language, r.annotator_id, std::to_string(r.label.value()), r.text});
}

std::vector<AnnotationPair> derive_pairs(std::span<const AnnotatedText> corpus, PairMode mode) {
    std::unordered_map<std::string_view, std::size_t> slot;
    std::vector<std::vector<const AnnotatedText*>> groups;
    for (const auto& record : corpus) {
        auto [it, inserted] = slot.try_emplace(record.text_id, groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(&record);
    }

    std::vector<AnnotationPair> pairs;
    for (const auto& group : groups) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                const bool same = group[i]->annotator_id == group[j]->annotator_id;
                if ((mode == PairMode::inter && same) || (mode == PairMode::self && !same)) continue;
                pairs.push_back({group[i]->text_id, group[i]->label, group[j]->label, same});
            }
        }
    }
    return pairs;
}

std::map<std::string, Corpus> split_by_language(std::span<const AnnotatedText> corpus) {
    std::map<std::string, Corpus> groups;
    for (const auto& record : corpus) groups[record.language].push_back(record);
    return groups;
}

}  // namespace lexirank
