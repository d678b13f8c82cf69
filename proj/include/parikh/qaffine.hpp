#pragma once

#include <cstddef>
#include <vector>

#include "parikh/error.hpp"
#include "parikh/numeric.hpp"

namespace parikh {

/// x ↦ constant + coeffs·x, with rational coefficients.
struct AffineForm {
    Rational constant = 0;
    RatVector coeffs;

    std::size_t dim() const { return coeffs.size(); }
    Rational eval(const RatVector& x) const;
    /// Same form over dim + extra variables (new ones with coefficient 0).
    AffineForm padded(std::size_t extra) const;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// { x | f1(x) = ... = fp(x) = 0  and  g1(x) > 0 and ... and gq(x) > 0 }.
struct QAffineClause {
    std::vector<AffineForm> zeros;
    std::vector<AffineForm> positives;

    friend bool operator==(const QAffineClause&, const QAffineClause&) = default;
};

/// A finite union of QAffineClause sets in Q^dim.
class QAffineSet {
public:
    explicit QAffineSet(std::size_t dim) : dim_(dim) {}
    QAffineSet(std::size_t dim, std::vector<QAffineClause> clauses);

    static QAffineSet everything(std::size_t dim) { return QAffineSet(dim, {QAffineClause{}}); }
    /// The single point `p`.
    static QAffineSet point(const RatVector& p);

    std::size_t dim() const { return dim_; }
    const std::vector<QAffineClause>& clauses() const { return clauses_; }

    void add_clause(QAffineClause clause);
    bool contains(const RatVector& x) const;
    /// Q^dim x Q^extra with this set on the first `dim` coordinates.
    QAffineSet padded(std::size_t extra) const;

    friend bool operator==(const QAffineSet&, const QAffineSet&) = default;

private:
    std::size_t dim_;
    std::vector<QAffineClause> clauses_;
};

}  // namespace parikh
