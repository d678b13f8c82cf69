#include "parikh/presburger.hpp"

#include <sstream>

#include "parikh/hilbert.hpp"

namespace parikh {

namespace {

Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

void check_budget(std::size_t clauses, const Limits& limits, const char* what) {
    if (clauses > limits.formula_clauses) {
        throw ResourceLimit(std::string(what) + ": DNF grew beyond " + std::to_string(limits.formula_clauses) +
                            " clauses");
    }
}

// Positive atoms whose disjunction is equivalent to the literal.
std::vector<Atom> positive_disjuncts(const Literal& lit) {
    if (!lit.negated) return {lit.atom};
    const Atom& a = lit.atom;
    if (a.kind == Atom::Kind::Less) {
        // not (t < t')  <=>  t' < t + 1
        return {Atom::less(a.rhs, a.lhs + Integer(1))};
    }
    std::vector<Atom> out;
    for (Integer r = 1; r < a.modulus; ++r) out.push_back(Atom::cong(a.modulus, a.lhs, a.rhs + r));
    return out;
}

Term pull_term(const Term& t, const IntMatrix& m, std::size_t n, const IntVector& offset) {
    Term out = Term::constant_term(n, t.constant);
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        const Integer& c = t.coeffs[i];
        if (c == 0) continue;
        out.constant += c * offset[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] != 0) out.coeffs[j] += c * m[i][j];
        }
    }
    return out;
}

void write_term(std::ostream& os, const Term& t) {
    bool first = true;
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        const Integer& c = t.coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Integer mag = abs(c);
        if (mag != 1) os << mag.get_str() << "*";
        os << "x" << i;
        first = false;
    }
    if (first) {
        os << t.constant.get_str();
    } else if (t.constant != 0) {
        os << (t.constant < 0 ? " - " : " + ") << Integer(abs(t.constant)).get_str();
    }
}

}  // namespace

Term Term::var(std::size_t dim, std::size_t index) {
    Term t{0, IntVector(dim, 0)};
    t.coeffs.at(index) = 1;
    return t;
}

Term Term::constant_term(std::size_t dim, const Integer& value) { return Term{value, IntVector(dim, 0)}; }

Integer Term::eval(const IntVector& x) const {
    require_dim(x.size(), coeffs.size(), "term evaluation");
    Integer v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) v += coeffs[i] * x[i];
    }
    return v;
}

Term Term::operator+(const Term& other) const {
    require_dim(other.dim(), dim(), "term sum");
    Term t = *this;
    t.constant += other.constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) t.coeffs[i] += other.coeffs[i];
    return t;
}

Term Term::operator-(const Term& other) const { return *this + other.scaled(-1); }

Term Term::operator+(const Integer& c) const {
    Term t = *this;
    t.constant += c;
    return t;
}

Term Term::scaled(const Integer& factor) const {
    Term t = *this;
    t.constant *= factor;
    for (auto& c : t.coeffs) c *= factor;
    return t;
}

Atom Atom::less(Term lhs, Term rhs) {
    require_dim(rhs.dim(), lhs.dim(), "atom");
    return Atom{Kind::Less, 0, std::move(lhs), std::move(rhs)};
}

Atom Atom::cong(const Integer& modulus, Term lhs, Term rhs) {
    require_dim(rhs.dim(), lhs.dim(), "atom");
    if (modulus < 2) throw InvalidArgument("congruence modulus must be >= 2");
    return Atom{Kind::Cong, modulus, std::move(lhs), std::move(rhs)};
}

bool Atom::eval(const IntVector& x) const {
    Integer l = lhs.eval(x);
    Integer r = rhs.eval(x);
    if (kind == Kind::Less) return l < r;
    return floor_mod(l - r, modulus) == 0;
}

PresburgerFormula::PresburgerFormula(std::size_t dim, std::vector<Clause> clauses) : dim_(dim) {
    for (auto& c : clauses) add_clause(std::move(c));
}

std::size_t PresburgerFormula::literal_count() const {
    std::size_t n = 0;
    for (const auto& c : clauses_) n += c.size();
    return n;
}

void PresburgerFormula::add_clause(Clause clause) {
    for (const auto& lit : clause) {
        require_dim(lit.atom.lhs.dim(), dim_, "formula literal");
        require_dim(lit.atom.rhs.dim(), dim_, "formula literal");
        if (lit.atom.kind == Atom::Kind::Cong && lit.atom.modulus < 2) {
            throw InvalidArgument("congruence modulus must be >= 2");
        }
    }
    clauses_.push_back(std::move(clause));
}

Clause equal_clause(const Term& lhs, const Term& rhs) {
    return {Literal{Atom::less(lhs, rhs + Integer(1))}, Literal{Atom::less(rhs, lhs + Integer(1))}};
}

bool formula_eval(const PresburgerFormula& phi, const IntVector& v) {
    require_dim(v.size(), phi.dim(), "formula_eval");
    for (const auto& clause : phi.clauses()) {
        bool ok = true;
        for (const auto& lit : clause) {
            if (!lit.eval(v)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool formula_eval(const PresburgerFormula& phi, const NatVector& v) { return formula_eval(phi, v.entries()); }

PresburgerFormula formula_positive(const PresburgerFormula& phi, const Limits& limits) {
    PresburgerFormula out(phi.dim());
    for (const auto& clause : phi.clauses()) {
        std::vector<Clause> partial{Clause{}};
        for (const auto& lit : clause) {
            auto options = positive_disjuncts(lit);
            std::vector<Clause> next;
            for (const auto& p : partial) {
                for (const auto& a : options) {
                    Clause c = p;
                    c.push_back(Literal{a});
                    next.push_back(std::move(c));
                }
            }
            partial = std::move(next);
            check_budget(partial.size() + out.clauses().size(), limits, "formula_positive");
        }
        for (auto& c : partial) out.add_clause(std::move(c));
    }
    return out;
}

PresburgerFormula formula_negate(const PresburgerFormula& phi, const Limits& limits) {
    // not (C1 or ... or Cn) = and_i or_{l in Ci} not l
    PresburgerFormula acc = PresburgerFormula::verum(phi.dim());
    for (const auto& clause : phi.clauses()) {
        PresburgerFormula disj(phi.dim());
        for (const auto& lit : clause) {
            for (auto& a : positive_disjuncts(Literal{lit.atom, !lit.negated})) {
                disj.add_clause(Clause{Literal{std::move(a)}});
            }
        }
        acc = formula_and(acc, disj, limits);
    }
    return acc;
}

PresburgerFormula formula_and(const PresburgerFormula& a, const PresburgerFormula& b, const Limits& limits) {
    require_dim(b.dim(), a.dim(), "formula_and");
    check_budget(a.clauses().size() * b.clauses().size(), limits, "formula_and");
    PresburgerFormula out(a.dim());
    for (const auto& x : a.clauses()) {
        for (const auto& y : b.clauses()) {
            Clause c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.add_clause(std::move(c));
        }
    }
    return out;
}

PresburgerFormula formula_or(const PresburgerFormula& a, const PresburgerFormula& b) {
    require_dim(b.dim(), a.dim(), "formula_or");
    PresburgerFormula out = a;
    for (const auto& c : b.clauses()) out.add_clause(c);
    return out;
}

PresburgerFormula formula_pullback(const PresburgerFormula& phi, const IntMatrix& m, std::size_t n) {
    return formula_pullback(phi, m, n, IntVector(phi.dim(), 0));
}

PresburgerFormula formula_pullback(const PresburgerFormula& phi, const IntMatrix& m, std::size_t n,
                                   const IntVector& offset) {
    require_dim(m.size(), phi.dim(), "formula_pullback matrix rows");
    require_dim(offset.size(), phi.dim(), "formula_pullback offset");
    for (const auto& row : m) require_dim(row.size(), n, "formula_pullback matrix row");
    PresburgerFormula out(n);
    for (const auto& clause : phi.clauses()) {
        Clause c;
        for (const auto& lit : clause) {
            Atom a = lit.atom;
            a.lhs = pull_term(lit.atom.lhs, m, n, offset);
            a.rhs = pull_term(lit.atom.rhs, m, n, offset);
            c.push_back(Literal{std::move(a), lit.negated});
        }
        out.add_clause(std::move(c));
    }
    return out;
}

SemilinearSet formula_to_generators(const PresburgerFormula& phi, const Limits& limits) {
    const std::size_t dim = phi.dim();
    PresburgerFormula positive = formula_positive(phi, limits);
    SemilinearSet result(dim);
    for (const auto& clause : positive.clauses()) {
        if (clause.empty()) {
            result = sl_union(result, SemilinearSet::full(dim));
            continue;
        }
        // Variables: x (dim), one slack per <, two quotient variables per congruence.
        std::size_t vars = dim;
        for (const auto& lit : clause) vars += lit.atom.kind == Atom::Kind::Less ? 1 : 2;
        IntMatrix system;
        IntVector rhs;
        std::size_t next = dim;
        for (const auto& lit : clause) {
            const Atom& a = lit.atom;
            Term diff = a.lhs - a.rhs;
            IntVector row(vars, 0);
            for (std::size_t i = 0; i < dim; ++i) row[i] = diff.coeffs[i];
            if (a.kind == Atom::Kind::Less) {
                // t + 1 + s = t'
                row[next++] = 1;
                rhs.push_back(-diff.constant - 1);
            } else {
                // t - t' = m (u - u')
                row[next++] = -a.modulus;
                row[next++] = a.modulus;
                rhs.push_back(-diff.constant);
            }
            system.push_back(std::move(row));
        }
        HilbertResult hb = hilbert_basis(system, rhs, vars, limits);
        auto project = [&](const NatVector& v) {
            return NatVector(IntVector(v.entries().begin(), v.entries().begin() + static_cast<std::ptrdiff_t>(dim)));
        };
        std::vector<NatVector> periods;
        for (const auto& h : hb.homogeneous) periods.push_back(project(h));
        SemilinearSet part(dim);
        for (const auto& p : hb.particular) part.add(LinearSet(project(p), periods));
        result = sl_union(result, part);
    }
    result.dedup();
    return result;
}

std::string to_string(const PresburgerFormula& phi) {
    if (phi.clauses().empty()) return "false";
    std::ostringstream os;
    for (std::size_t c = 0; c < phi.clauses().size(); ++c) {
        if (c) os << " | ";
        const auto& clause = phi.clauses()[c];
        if (clause.empty()) {
            os << "true";
            continue;
        }
        os << "(";
        for (std::size_t i = 0; i < clause.size(); ++i) {
            if (i) os << " & ";
            const auto& lit = clause[i];
            if (lit.negated) os << "!";
            write_term(os, lit.atom.lhs);
            if (lit.atom.kind == Atom::Kind::Less) {
                os << " < ";
            } else {
                os << " =" << lit.atom.modulus.get_str() << "= ";
            }
            write_term(os, lit.atom.rhs);
        }
        os << ")";
    }
    return os.str();
}

}  // namespace parikh
