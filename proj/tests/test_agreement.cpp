#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lexirank/agreement.hpp"
#include "lexirank/error.hpp"
#include "oracles.hpp"

using namespace lexirank;

namespace {

SentimentLabel L(int v) { return *SentimentLabel::from_int(v); }

CoincidenceMatrix matrix(std::initializer_list<std::int64_t> cells) {
    CoincidenceMatrix::Cells c;
    auto it = cells.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = *it++;
    return CoincidenceMatrix::from_cells(c);
}

CoincidenceMatrix from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<AnnotationPair> ps;
    for (auto [a, b] : pairs) ps.push_back({"t", L(a), L(b), false});
    return coincidence_from_pairs(ps);
}

const CoincidenceMatrix kWithEmojis = matrix({1070, 354, 196, 354, 902, 725, 196, 725, 2572});
const CoincidenceMatrix kWithoutEmojis = matrix({15356, 7777, 3004, 7777, 23670, 10921, 3004, 10921, 21624});

}  // namespace

TEST_CASE("coincidence_from_pairs") {
    const auto same = from_pairs({{1, 1}});
    CHECK(same(L(1), L(1)) == 2);
    CHECK(same.grand_total() == 2);

    const auto opposite = from_pairs({{-1, 1}});
    CHECK(opposite(L(-1), L(1)) == 1);
    CHECK(opposite(L(1), L(-1)) == 1);
    CHECK(opposite.grand_total() == 2);
}

TEST_CASE("coincidence matrix invariants under random pair streams") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = static_cast<int>(rng() % 200); k > 0; --k)
            pairs.emplace_back(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1);
        const auto m = from_pairs(pairs);
        CHECK(m.cells() == m.cells().transpose());
        CHECK(m.grand_total() == 2 * static_cast<std::int64_t>(pairs.size()));
        CHECK(m.grand_total() % 2 == 0);
        CHECK(m.cells().rowwise().sum() == m.cells().colwise().sum().transpose());

        // shard merge is a monoid
        const std::size_t cut = pairs.empty() ? 0 : rng() % pairs.size();
        auto left = from_pairs({pairs.begin(), pairs.begin() + static_cast<long>(cut)});
        left += from_pairs({pairs.begin() + static_cast<long>(cut), pairs.end()});
        CHECK(left == m);
    }
}

TEST_CASE("from_cells validation") {
    CHECK_THROWS_AS(matrix({1, 2, 0, 0, 1, 0, 0, 0, 1}), DomainError);
    CHECK_THROWS_AS(matrix({-1, 0, 0, 0, 1, 0, 0, 0, 1}), DomainError);
}

TEST_CASE("measures on the published coincidence matrices") {
    CHECK(kWithEmojis.grand_total() == 7094);
    CHECK(kWithoutEmojis.grand_total() == 104054);
    CHECK(std::fabs(alpha_interval(kWithEmojis) - 0.597) <= 0.001);
    CHECK(std::fabs(accuracy(kWithEmojis) - 0.641) <= 0.001);
    CHECK(std::fabs(f1_neg_pos(kWithEmojis) - 0.698) <= 0.001);
    CHECK(std::fabs(alpha_interval(kWithoutEmojis) - 0.495) <= 0.001);
    CHECK(std::fabs(accuracy(kWithoutEmojis) - 0.583) <= 0.001);
    CHECK(std::fabs(f1_neg_pos(kWithoutEmojis) - 0.598) <= 0.001);
    CHECK(accuracy(kWithEmojis) == doctest::Approx((1070.0 + 902 + 2572) / 7094));
    CHECK(f1_neg_pos(kWithEmojis) == doctest::Approx((1070.0 / 1620 + 2572.0 / 3493) / 2));
}

TEST_CASE("perfect agreement") {
    const auto diag = from_pairs({{-1, -1}, {0, 0}, {1, 1}, {1, 1}});
    CHECK(alpha_interval(diag) == 1.0);
    CHECK(accuracy(diag) == 1.0);
    CHECK(f1_neg_pos(diag) == 1.0);
    const auto two_labels = from_pairs({{0, 0}, {1, 1}});
    CHECK(alpha_interval(two_labels) == 1.0);
}

TEST_CASE("degenerate matrices") {
    CHECK_THROWS_AS(alpha_interval(from_pairs({{1, 1}, {1, 1}})), DomainError);  // one label only
    CHECK_THROWS_AS(alpha_interval(from_pairs({{1, 0}})), DomainError);          // N < 4
    CHECK_THROWS_AS(accuracy(CoincidenceMatrix{}), DomainError);
    CHECK_THROWS_AS(f1_neg_pos(from_pairs({{0, 1}, {1, 1}})), DomainError);
}

TEST_CASE("alpha matches the pairable-values enumeration") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = 2 + static_cast<int>(rng() % 60); k > 0; --k)
            pairs.emplace_back(static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1);
        const auto m = from_pairs(pairs);
        const double expected = oracle::alpha_from_pairs(pairs);
        if (std::isnan(expected)) continue;
        CHECK(alpha_interval(m) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("alpha weighs extreme disagreement four times") {
    // replace one neutral/positive disagreement by a negative/positive one
    const auto mild = from_pairs({{-1, -1}, {0, 0}, {1, 1}, {0, 1}, {1, 1}, {-1, 0}});
    const auto harsh = from_pairs({{-1, -1}, {0, 0}, {1, 1}, {-1, 1}, {1, 1}, {-1, 0}});
    CHECK(alpha_interval(harsh) < alpha_interval(mild));
    CHECK(accuracy(harsh) == accuracy(mild));
}

TEST_CASE("alpha near zero for independent labels") {
    std::mt19937 rng(77);
    std::discrete_distribution<int> label({0.25, 0.35, 0.40});
    std::vector<AnnotationPair> pairs;
    for (int i = 0; i < 20000; ++i) pairs.push_back({"t", L(label(rng) - 1), L(label(rng) - 1), false});
    CHECK(std::fabs(alpha_interval(coincidence_from_pairs(pairs))) <= 0.05);
}

TEST_CASE("coincidence CSV round-trip") {
    std::ostringstream out;
    write_coincidence_csv(out, kWithEmojis);
    CHECK(out.str().rfind("label,negative,neutral,positive\nnegative,1070,354,196\n", 0) == 0);
    std::istringstream in(out.str());
    CHECK(read_coincidence_csv(in) == kWithEmojis);
    std::istringstream bad("label,negative,neutral,positive\nnegative,1,2,3\n");
    CHECK_THROWS(read_coincidence_csv(bad));
}
