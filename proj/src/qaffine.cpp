#include "parikh/qaffine.hpp"

namespace parikh {

Rational AffineForm::eval(const RatVector& x) const {
    require_dim(x.size(), coeffs.size(), "affine form evaluation");
    Rational v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) v += coeffs[i] * x[i];
    }
    return v;
}

AffineForm AffineForm::padded(std::size_t extra) const {
    AffineForm f = *this;
    f.coeffs.resize(coeffs.size() + extra, 0);
    return f;
}

QAffineSet::QAffineSet(std::size_t dim, std::vector<QAffineClause> clauses) : dim_(dim) {
    for (auto& c : clauses) add_clause(std::move(c));
}

QAffineSet QAffineSet::point(const RatVector& p) {
    QAffineClause clause;
    for (std::size_t i = 0; i < p.size(); ++i) {
        AffineForm f{-p[i], RatVector(p.size(), 0)};
        f.coeffs[i] = 1;
        clause.zeros.push_back(std::move(f));
    }
    return QAffineSet(p.size(), {std::move(clause)});
}

void QAffineSet::add_clause(QAffineClause clause) {
    for (const auto& f : clause.zeros) require_dim(f.dim(), dim_, "affine constraint");
    for (const auto& g : clause.positives) require_dim(g.dim(), dim_, "affine constraint");
    clauses_.push_back(std::move(clause));
}

bool QAffineSet::contains(const RatVector& x) const {
    require_dim(x.size(), dim_, "affine set membership");
    for (const auto& clause : clauses_) {
        bool ok = true;
        for (const auto& f : clause.zeros) {
            if (f.eval(x) != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (const auto& g : clause.positives) {
            if (g.eval(x) <= 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

QAffineSet QAffineSet::padded(std::size_t extra) const {
    QAffineSet out(dim_ + extra);
    for (const auto& clause : clauses_) {
        QAffineClause c;
        for (const auto& f : clause.zeros) c.zeros.push_back(f.padded(extra));
        for (const auto& g : clause.positives) c.positives.push_back(g.padded(extra));
        out.add_clause(std::move(c));
    }
    return out;
}

}  // namespace parikh
