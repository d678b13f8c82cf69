#include "doctest.h"

#include "oracles.hpp"
#include "parikh/presburger.hpp"
#include "parikh/qaffine.hpp"

using namespace parikh;

namespace {

PresburgerFormula eq(std::size_t dim, std::size_t i, std::size_t j) {
    return PresburgerFormula(dim, {equal_clause(Term::var(dim, i), Term::var(dim, j))});
}

PresburgerFormula sample_formula() {
    // x0 < x1  or  (x0 ≡ 1 mod 3 and not x1 < 2)
    auto x0 = Term::var(2, 0);
    auto x1 = Term::var(2, 1);
    PresburgerFormula phi(2);
    phi.add_clause({Literal{Atom::less(x0, x1), false}});
    phi.add_clause({Literal{Atom::cong(3, x0, Term::constant_term(2, 1)), false},
                    Literal{Atom::less(x1, Term::constant_term(2, 2)), true}});
    return phi;
}

}  // namespace

TEST_CASE("atoms evaluate") {
    auto x = Term::var(2, 0) + Term::var(2, 1).scaled(2);
    CHECK(x.eval({1, 3}) == 7);
    CHECK(Atom::less(x, Term::constant_term(2, 8)).eval({1, 3}));
    CHECK_FALSE(Atom::less(x, Term::constant_term(2, 7)).eval({1, 3}));
    CHECK(Atom::cong(5, x, Term::constant_term(2, 2)).eval({1, 3}));
    CHECK(Atom::cong(5, x, Term::constant_term(2, -3)).eval({1, 3}));
    CHECK_THROWS_AS(Atom::cong(1, x, x), InvalidArgument);
}

TEST_CASE("true and false") {
    CHECK(formula_eval(PresburgerFormula::verum(2), IntVector{4, 5}));
    CHECK_FALSE(formula_eval(PresburgerFormula::falsum(2), IntVector{4, 5}));
}

TEST_CASE("negation, conjunction, disjunction agree pointwise") {
    auto phi = sample_formula();
    auto psi = eq(2, 0, 1);
    auto neg = formula_negate(phi);
    auto pos = formula_positive(phi);
    auto conj = formula_and(phi, psi);
    auto disj = formula_or(phi, psi);
    for (const auto& c : neg.clauses()) {
        for (const auto& l : c) CHECK_FALSE(l.negated);
    }
    oracle::for_each_small_vector(2, 12, [&](const NatVector& v) {
        bool p = formula_eval(phi, v);
        bool q = formula_eval(psi, v);
        CHECK(formula_eval(neg, v) == !p);
        CHECK(formula_eval(pos, v) == p);
        CHECK(formula_eval(conj, v) == (p && q));
        CHECK(formula_eval(disj, v) == (p || q));
    });
}

TEST_CASE("pullback") {
    auto phi = eq(2, 0, 1);
    IntMatrix m = {{1, 1, 0}, {0, 0, 2}};
    auto pulled = formula_pullback(phi, m, 3);
    CHECK(pulled.dim() == 3);
    CHECK(formula_eval(pulled, IntVector{1, 3, 2}));
    CHECK_FALSE(formula_eval(pulled, IntVector{1, 2, 2}));
    auto shifted = formula_pullback(phi, m, 3, {1, 0});
    CHECK(formula_eval(shifted, IntVector{1, 2, 2}));
    CHECK_THROWS_AS(formula_pullback(phi, IntMatrix{{1}}, 1), DimensionMismatch);
}

TEST_CASE("generators of a formula agree with the formula") {
    auto phi = sample_formula();
    auto s = formula_to_generators(phi);
    auto members = oracle::members_up_to(s, 10);
    oracle::for_each_small_vector(2, 10, [&](const NatVector& v) {
        CHECK(members.count(v) == (formula_eval(phi, v) ? 1u : 0u));
    });
}

TEST_CASE("generators of a negated equality") {
    auto s = formula_to_generators(formula_negate(eq(2, 0, 1)));
    CHECK(sl_member(NatVector{3, 1}, s));
    CHECK(sl_member(NatVector{0, 4}, s));
    CHECK_FALSE(sl_member(NatVector{2, 2}, s));
}

TEST_CASE("rational affine sets") {
    QAffineClause c;
    c.zeros.push_back({Rational(-1), {Rational(1), Rational(0)}});
    c.positives.push_back({Rational(0), {Rational(0), Rational(1, 2)}});
    QAffineSet s(2, {c});
    CHECK(s.contains({Rational(1), Rational(1, 3)}));
    CHECK_FALSE(s.contains({Rational(1), Rational(0)}));
    CHECK_FALSE(s.contains({Rational(2), Rational(1)}));
    CHECK(QAffineSet::point({Rational(1), Rational(0)}).contains({Rational(1), Rational(0)}));
    CHECK_FALSE(QAffineSet::point({Rational(1), Rational(0)}).contains({Rational(1), Rational(-1)}));
    CHECK(s.padded(1).contains({Rational(1), Rational(1), Rational(-7)}));
    CHECK(QAffineSet::everything(3).contains({Rational(0), Rational(5), Rational(-1)}));
}
