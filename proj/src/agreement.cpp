#include "lexirank/agreement.hpp"

#include <cstdlib>

#include "lexirank/csv.hpp"
#include "lexirank/error.hpp"

namespace lexirank {

CoincidenceMatrix CoincidenceMatrix::from_cells(const Cells& cells) {
    if ((cells.array() < 0).any()) throw DomainError("coincidence matrix has negative cells");
    if (cells != cells.transpose()) throw DomainError("coincidence matrix is not symmetric");
    CoincidenceMatrix m;
    m.cells_ = cells;
    return m;
}

void CoincidenceMatrix::add_pair(SentimentLabel a, SentimentLabel b) {
    ++cells_(a.index(), b.index());
    ++cells_(b.index(), a.index());
}

CoincidenceMatrix& CoincidenceMatrix::operator+=(const CoincidenceMatrix& o) {
    cells_ += o.cells_;
    return *this;
}

CoincidenceMatrix coincidence_from_pairs(std::span<const AnnotationPair> pairs) {
    CoincidenceMatrix m;
    for (const auto& p : pairs) m.add_pair(p.label_a, p.label_b);
    return m;
}

namespace {

// delta^2 for the interval metric over label indices 0..2.
std::int64_t delta_squared(int i, int j) {
    const std::int64_t d = i - j;
    return d * d;
}

}  // namespace

double alpha_interval(const CoincidenceMatrix& m) {
    const std::int64_t n = m.grand_total();
    if (n < 4) throw DomainError("Alpha needs at least 4 pairable values");
    const auto totals = m.totals();
    std::int64_t observed = 0;  // N * D_o
    std::int64_t expected = 0;  // N (N - 1) * D_e
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            observed += m.cells()(i, j) * delta_squared(i, j);
            expected += totals(i) * totals(j) * delta_squared(i, j);
        }
    }
    if (expected == 0) throw DomainError("Alpha undefined: all values carry one label");
    // 1 - D_o / D_e = 1 - observed (N - 1) / expected
    return static_cast<double>(1.0L - static_cast<long double>(observed) * static_cast<long double>(n - 1) /
                                          static_cast<long double>(expected));
}

double accuracy(const CoincidenceMatrix& m) {
    const std::int64_t n = m.grand_total();
    if (n == 0) throw DomainError("accuracy of an empty coincidence matrix");
    return static_cast<double>(m.cells().trace()) / static_cast<double>(n);
}

double f1_neg_pos(const CoincidenceMatrix& m) {
    const auto neg = SentimentLabel::negative();
    const auto pos = SentimentLabel::positive();
    const std::int64_t n_neg = m.total(neg);
    const std::int64_t n_pos = m.total(pos);
    if (n_neg == 0 || n_pos == 0) throw DomainError("F1(-,+) needs both negative and positive values");
    const double f_neg = static_cast<double>(m(neg, neg)) / static_cast<double>(n_neg);
    const double f_pos = static_cast<double>(m(pos, pos)) / static_cast<double>(n_pos);
    return 0.5 * (f_neg + f_pos);
}

void write_coincidence_csv(std::ostream& out, const CoincidenceMatrix& m) {
    out << "label,negative,neutral,positive\n";
    for (auto c : kAllLabels) {
        out << label_name(c);
        for (auto c2 : kAllLabels) out << ',' << m(c, c2);
        out << '\n';
    }
}

CoincidenceMatrix read_coincidence_csv(std::istream& in) {
    csv::Reader reader(in);
    csv::expect_header(reader, {"label", "negative", "neutral", "positive"});
    CoincidenceMatrix::Cells cells;
    for (auto c : kAllLabels) {
        auto row = reader.next();
        if (!row) throw ParseError("missing row for " + std::string(label_name(c)), reader.line() + 1);
        if (row->fields.size() != 4 || row->fields[0] != label_name(c))
            throw ParseError("expected row '" + std::string(label_name(c)) + "' with 3 counts", row->line);
        for (int j = 0; j < 3; ++j) {
            const std::string& f = row->fields[static_cast<std::size_t>(j) + 1];
            char* end = nullptr;
            const long long v = std::strtoll(f.c_str(), &end, 10);
            if (f.empty() || *end != '\0') throw ParseError("bad count '" + f + "'", row->line);
            cells(c.index(), j) = v;
        }
    }
    return CoincidenceMatrix::from_cells(cells);
}

}  // namespace lexirank
