#include <doctest.h>

#include <random>
#include <sstream>

#include "lexirank/corpus.hpp"
#include "lexirank/error.hpp"
#include "lexirank/symbols.hpp"

using namespace lexirank;

namespace {

Corpus parse(const std::string& text) {
    std::istringstream in(text);
    return parse_corpus(in);
}

AnnotatedText rec(std::string id, std::string annotator, int label, std::string text = "x", std::string lang = "en") {
    return {std::move(id), std::move(lang), std::move(annotator), *SentimentLabel::from_int(label), std::move(text)};
}

template <typename E>
std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const E& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse_corpus maps fields directly") {
    const auto corpus = parse("text_id,language,annotator_id,label,text\nt1,en,a1,1,\"great day ☀\"\n");
    REQUIRE(corpus.size() == 1);
    CHECK(corpus[0] == rec("t1", "a1", 1, "great day ☀"));
}

TEST_CASE("parse_corpus header only gives empty corpus") {
    CHECK(parse("text_id,language,annotator_id,label,text\n").empty());
    CHECK(parse("text_id,language,annotator_id,label,text").empty());
}

TEST_CASE("parse_corpus errors carry line numbers") {
    const std::string header = "text_id,language,annotator_id,label,text\n";
    CHECK(error_line<DomainError>(header + "t1,en,a1,0,ok\nt2,en,a1,2,\"x\"\n") == 3);
    CHECK(error_line<DomainError>(header + "t1,en,a1,pos,x\n") == 2);
    CHECK(error_line<ParseError>(header + "t1,en,a1,0\n") == 2);
    CHECK(error_line<ParseError>(header + "t1,en,a1,0,\"open\n") == 2);
    CHECK(error_line<ParseError>(header + "t1,en,a1,0,\"a\"b\n") == 2);
    CHECK(error_line<ParseError>(header + "t1,en,a1,0,a\"b\n") == 2);
    CHECK(error_line<EncodingError>(header + "t1,en,a1,0,ok\nt2,en,a1,0,bad\xC3\x28\n") == 3);
    CHECK(error_line<ParseError>("id,lang\n") == 1);
    CHECK(error_line<DomainError>(header + ",en,a1,0,x\n") == 2);
}

TEST_CASE("parse_corpus handles quoting, CRLF and multi-line fields") {
    const auto corpus = parse(
        "text_id,language,annotator_id,label,text\r\n"
        "t1,EN,a1,-1,\"say \"\"hi\"\", ok\"\r\n"
        "t2,sl,a2,0,\"two\nlines\"\n"
        "\n"
        "t3,sl,a2,+1,plain\n");
    REQUIRE(corpus.size() == 3);
    CHECK(corpus[0].text == "say \"hi\", ok");
    CHECK(corpus[0].language == "en");
    CHECK(corpus[0].label == SentimentLabel::negative());
    CHECK(corpus[1].text == "two\nlines");
    CHECK(corpus[2].label == SentimentLabel::positive());
}

TEST_CASE("line numbers count physical lines inside quoted fields") {
    const std::string text =
        "text_id,language,annotator_id,label,text\n"
        "t1,en,a1,0,\"a\nb\nc\"\n"
        "t2,en,a1,9,x\n";
    CHECK(error_line<DomainError>(text) == 5);
}

TEST_CASE("corpus round-trips through write_corpus") {
    std::mt19937 rng(7);
    const std::vector<std::string> pieces = {"a", ",", "\"", "\n", "☀", " ", "😀", "\r\n", "é"};
    for (int trial = 0; trial < 50; ++trial) {
        Corpus corpus;
        const int rows = static_cast<int>(rng() % 20);
        for (int i = 0; i < rows; ++i) {
            std::string text;
            for (int k = static_cast<int>(rng() % 8); k > 0; --k) text += pieces[rng() % pieces.size()];
            corpus.push_back(rec("t" + std::to_string(rng() % 5), "a" + std::to_string(rng() % 3),
                                 static_cast<int>(rng() % 3) - 1, text, rng() % 2 ? "en" : "es"));
        }
        std::ostringstream out;
        write_corpus(out, corpus);
        CHECK(parse(out.str()) == corpus);
    }
}

TEST_CASE("derive_pairs") {
    SUBCASE("single duplicate") {
        const Corpus c = {rec("t1", "a1", 1), rec("t1", "a2", 0)};
        const auto pairs = derive_pairs(c, PairMode::inter);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == AnnotationPair{"t1", SentimentLabel::neutral(), SentimentLabel::positive(), false});
    }
    SUBCASE("same annotator is excluded from inter") {
        const Corpus c = {rec("t1", "a1", 1), rec("t1", "a1", 1)};
        CHECK(derive_pairs(c, PairMode::inter).empty());
        REQUIRE(derive_pairs(c, PairMode::self).size() == 1);
        CHECK(derive_pairs(c, PairMode::self)[0].same_annotator);
    }
    SUBCASE("three annotations give C(3,2) pairs") {
        const Corpus c = {rec("t1", "a1", 1), rec("t1", "a2", 0), rec("t1", "a3", -1)};
        const auto pairs = derive_pairs(c, PairMode::inter);
        REQUIRE(pairs.size() == 3);
        CHECK(pairs[0] == AnnotationPair{"t1", SentimentLabel::positive(), SentimentLabel::neutral(), false});
        CHECK(pairs[1] == AnnotationPair{"t1", SentimentLabel::positive(), SentimentLabel::negative(), false});
        CHECK(pairs[2] == AnnotationPair{"t1", SentimentLabel::neutral(), SentimentLabel::negative(), false});
    }
    SUBCASE("singletons contribute nothing") {
        const Corpus c = {rec("t1", "a1", 1), rec("t2", "a1", 1)};
        CHECK(derive_pairs(c, PairMode::all).empty());
    }
}

TEST_CASE("derive_pairs properties on random corpora") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Corpus c;
        std::map<std::string, std::size_t> per_text;
        for (int i = static_cast<int>(rng() % 40); i > 0; --i) {
            auto r = rec("t" + std::to_string(rng() % 8), "a" + std::to_string(rng() % 3), static_cast<int>(rng() % 3) - 1);
            ++per_text[r.text_id];
            c.push_back(r);
        }
        std::shuffle(c.begin(), c.end(), rng);
        const auto inter = derive_pairs(c, PairMode::inter);
        const auto self = derive_pairs(c, PairMode::self);
        const auto all = derive_pairs(c, PairMode::all);
        CHECK(inter.size() + self.size() == all.size());
        for (const auto& p : inter) CHECK_FALSE(p.same_annotator);
        for (const auto& p : self) CHECK(p.same_annotator);
        std::size_t expected = 0;
        for (const auto& [id, k] : per_text) expected += k * (k - 1) / 2;
        CHECK(all.size() == expected);
    }
}

TEST_CASE("annotation pairs are unordered") {
    const AnnotationPair a{"t", SentimentLabel::negative(), SentimentLabel::positive(), false};
    const AnnotationPair b{"t", SentimentLabel::positive(), SentimentLabel::negative(), false};
    CHECK(a == b);
}

TEST_CASE("split_by_symbol_presence") {
    const Corpus c = {rec("1", "a", 0, "hi ☀"), rec("2", "a", 0, "hi"), rec("3", "a", 1, "☀☀")};
    const auto split = split_by_symbol_presence(c, [](char32_t cp) { return is_symbol_other(cp); });
    REQUIRE(split.with.size() == 2);
    REQUIRE(split.without.size() == 1);
    CHECK(split.with[0].text == "hi ☀");
    CHECK(split.with[1].text == "☀☀");
    CHECK(split.without[0].text == "hi");

    // partition property for an arbitrary predicate
    const auto by_h = split_by_symbol_presence(c, [](char32_t cp) { return cp == U'h'; });
    CHECK(by_h.with.size() + by_h.without.size() == c.size());
}

TEST_CASE("split_by_language") {
    const Corpus c = {rec("1", "a", 0, "x", "en"), rec("2", "a", 0, "y", "es"), rec("3", "a", 0, "z", "en")};
    const auto groups = split_by_language(c);
    REQUIRE(groups.size() == 2);
    REQUIRE(groups.at("en").size() == 2);
    CHECK(groups.at("en")[0].text == "x");
    CHECK(groups.at("en")[1].text == "z");
    CHECK(groups.at("es").size() == 1);
    CHECK(split_by_language(Corpus{}).empty());
}
