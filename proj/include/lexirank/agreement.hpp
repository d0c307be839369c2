#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>

#include <Eigen/Core>

#include "lexirank/corpus.hpp"
#include "lexirank/label.hpp"

namespace lexirank {

// Symmetric 3x3 tabulation of pairable label values; each pair is entered
// twice, once as (c, c') and once as (c', c). Rows/columns are ordered
// negative, neutral, positive.
class CoincidenceMatrix {
public:
    using Cells = Eigen::Matrix<std::int64_t, 3, 3>;

    CoincidenceMatrix() : cells_(Cells::Zero()) {}

    // Throws DomainError unless `cells` is symmetric and non-negative.
    static CoincidenceMatrix from_cells(const Cells& cells);

    void add_pair(SentimentLabel a, SentimentLabel b);
    CoincidenceMatrix& operator+=(const CoincidenceMatrix& o);

    std::int64_t operator()(SentimentLabel c, SentimentLabel c2) const { return cells_(c.index(), c2.index()); }
    std::int64_t total(SentimentLabel c) const { return cells_.row(c.index()).sum(); }
    std::int64_t grand_total() const { return cells_.sum(); }
    Eigen::Matrix<std::int64_t, 3, 1> totals() const { return cells_.rowwise().sum(); }
    const Cells& cells() const { return cells_; }

    bool operator==(const CoincidenceMatrix& o) const { return cells_ == o.cells_; }

private:
    Cells cells_;
};

CoincidenceMatrix coincidence_from_pairs(std::span<const AnnotationPair> pairs);

// Krippendorff's Alpha with the interval difference delta(c, c') = |c - c'|.
// Throws DomainError when N < 4 or the expected disagreement is zero.
double alpha_interval(const CoincidenceMatrix& m);

// Fraction of the mass on the diagonal. Throws DomainError when N = 0.
double accuracy(const CoincidenceMatrix& m);

// Mean of N(c,c)/N(c) over the negative and positive classes.
double f1_neg_pos(const CoincidenceMatrix& m);

// Audit format: header `label,negative,neutral,positive` then one row per label.
void write_coincidence_csv(std::ostream& out, const CoincidenceMatrix& m);
CoincidenceMatrix read_coincidence_csv(std::istream& in);

}  // namespace lexirank
