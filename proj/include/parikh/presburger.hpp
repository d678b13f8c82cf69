#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parikh/error.hpp"
#include "parikh/numeric.hpp"
#include "parikh/semilinear.hpp"

namespace parikh {

/// c0 + sum ci·xi with integer coefficients.
struct Term {
    Integer constant = 0;
    IntVector coeffs;

    static Term var(std::size_t dim, std::size_t index);
    static Term constant_term(std::size_t dim, const Integer& value);

    std::size_t dim() const { return coeffs.size(); }
    Integer eval(const IntVector& x) const;

    Term operator+(const Term& other) const;
    Term operator-(const Term& other) const;
    Term operator+(const Integer& c) const;
    Term scaled(const Integer& factor) const;

    friend bool operator==(const Term&, const Term&) = default;
};

/// `lhs < rhs`, or `lhs ≡ rhs (mod modulus)` with modulus >= 2.
struct Atom {
    enum class Kind { Less, Cong };
    Kind kind = Kind::Less;
    Integer modulus = 0;
    Term lhs;
    Term rhs;

    static Atom less(Term lhs, Term rhs);
    static Atom cong(const Integer& modulus, Term lhs, Term rhs);

    bool eval(const IntVector& x) const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

struct Literal {
    Atom atom;
    bool negated = false;

    bool eval(const IntVector& x) const { return atom.eval(x) != negated; }
    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Quantifier-free Presburger formula in disjunctive normal form over
/// variables x0..x(dim-1). No clauses means false; an empty clause is true.
class PresburgerFormula {
public:
    explicit PresburgerFormula(std::size_t dim) : dim_(dim) {}
    PresburgerFormula(std::size_t dim, std::vector<Clause> clauses);

    static PresburgerFormula falsum(std::size_t dim) { return PresburgerFormula(dim); }
    static PresburgerFormula verum(std::size_t dim) { return PresburgerFormula(dim, {Clause{}}); }
    static PresburgerFormula atom(std::size_t dim, Atom a) { return PresburgerFormula(dim, {Clause{{std::move(a)}}}); }

    std::size_t dim() const { return dim_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t literal_count() const;

    void add_clause(Clause clause);

    friend bool operator==(const PresburgerFormula&, const PresburgerFormula&) = default;

private:
    std::size_t dim_;
    std::vector<Clause> clauses_;
};

/// lhs = rhs as the conjunction lhs < rhs + 1, rhs < lhs + 1.
Clause equal_clause(const Term& lhs, const Term& rhs);

bool formula_eval(const PresburgerFormula& phi, const IntVector& v);
bool formula_eval(const PresburgerFormula& phi, const NatVector& v);

/// Negation, renormalized to DNF with positive atoms only.
PresburgerFormula formula_negate(const PresburgerFormula& phi, const Limits& limits = {});
/// Removes negated literals (may split clauses).
PresburgerFormula formula_positive(const PresburgerFormula& phi, const Limits& limits = {});
PresburgerFormula formula_and(const PresburgerFormula& a, const PresburgerFormula& b, const Limits& limits = {});
PresburgerFormula formula_or(const PresburgerFormula& a, const PresburgerFormula& b);

/// phi(M y + offset) as a formula over y in N^n. `m` is dim×n.
PresburgerFormula formula_pullback(const PresburgerFormula& phi, const IntMatrix& m, std::size_t n);
PresburgerFormula formula_pullback(const PresburgerFormula& phi, const IntMatrix& m, std::size_t n,
                                   const IntVector& offset);

/// The set of N^dim points satisfying phi, as generators.
SemilinearSet formula_to_generators(const PresburgerFormula& phi, const Limits& limits = {});

std::string to_string(const PresburgerFormula& phi);

}  // namespace parikh
