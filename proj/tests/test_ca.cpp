#include "doctest.h"

#include <functional>

#include "parikh/closure.hpp"
#include "parikh/corpus.hpp"

using namespace parikh;

namespace {

using Oracle = std::function<bool(const Word&)>;

Ca corpus_ca(const std::string& name) {
    auto e = corpus_build(name);
    if (auto* p = std::get_if<Pa>(&e.machine)) return pa_to_ca(*p);
    return std::get<Ca>(e.machine);
}

void agree(const Ca& m, const Oracle& oracle, std::size_t bound) {
    for_each_word(m.alphabet(), bound, [&](const Word& w) {
        CHECK_MESSAGE(membership(m, w) == oracle(w), to_utf8(w));
        return true;
    });
}

Ca generator_form(const Ca& m) {
    std::vector<AcceptanceClause> clauses;
    for (const auto& c : m.clauses()) clauses.push_back({c.finals, constraint_generators(c.constraint)});
    return Ca(m.automaton(), std::move(clauses));
}

const Alphabet ab = make_alphabet({U'a', U'b'});

}  // namespace

TEST_CASE("pa_to_ca preserves membership") {
    for (const char* name : {"equal", "equal-counts"}) {
        CAPTURE(name);
        auto e = corpus_build(name);
        const Pa& p = std::get<Pa>(e.machine);
        Ca c = pa_to_ca(p);
        for_each_word(e.alphabet, e.alphabet.size() == 2 ? 8 : 7, [&](const Word& w) {
            CHECK(membership(c, w) == membership(p, w));
            CHECK(membership(c, w) == e.oracle(w));
            return true;
        });
    }
}

TEST_CASE("pa_to_ca with generator constraint and non-uniform weights") {
    // Two parallel a-transitions with different weights.
    Nfa a(1, make_alphabet({U'a'}));
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'a', 0);
    a.set_final(0);
    Pa p(a, {{1, 0}, {0, 1}}, SemilinearSet::linear({0, 0}, {{2, 1}}));
    Ca c = pa_to_ca(p);
    CHECK(c.dim() == 1);
    for (std::size_t n = 0; n <= 9; ++n) CHECK(membership(c, Word(n, U'a')) == (n % 3 == 0));
}

TEST_CASE("membership with epsilon cycles uses the Parikh route") {
    Nfa a(2, ab);
    a.add_transition(0, U'a', 1);
    a.add_transition(1, std::nullopt, 0);
    a.add_transition(0, std::nullopt, 0);
    a.set_final(1);
    // ε-loop t2 taken exactly as often as a
    Ca m(a, PresburgerFormula(3, {equal_clause(Term::var(3, 0), Term::var(3, 2))}));
    CHECK(membership(m, U"a"));
    CHECK(membership(m, U"aaa"));
    CHECK_FALSE(membership(m, U""));
    auto run = accepting_run(m, U"aa");
    REQUIRE(run);
    CHECK(label_of(m.automaton(), run->path) == Word(U"aa"));
}

TEST_CASE("emptiness and cardinality on six CAs") {
    using K = Cardinality::Kind;
    struct Row {
        const char* name;
        bool empty;
        K kind;
    };
    for (auto row : {Row{"anbn", false, K::Infinite}, Row{"ab-star", false, K::Infinite},
                     Row{"astar-bstar", false, K::Infinite}, Row{"parity", false, K::Infinite},
                     Row{"two-words", false, K::Finite}, Row{"empty", true, K::Empty}}) {
        CAPTURE(row.name);
        Ca m = corpus_ca(row.name);
        CHECK(is_empty(m) == row.empty);
        auto c = cardinality(m);
        CHECK(c.kind == row.kind);
        CHECK(is_empty(generator_form(m)) == row.empty);
        if (!row.empty) CHECK(membership(m, *some_word(m)));
    }
    auto two = cardinality(corpus_ca("two-words"));
    REQUIRE(two.count);
    CHECK(*two.count == 2);
}

TEST_CASE("inclusion anbn in a*b* and back") {
    Ca anbn = corpus_ca("anbn");
    Ca astar = corpus_ca("astar-bstar");
    auto fwd = inclusion(anbn, astar);
    CHECK(fwd.included);
    CHECK_FALSE(fwd.witness);
    auto back = inclusion(astar, anbn);
    CHECK_FALSE(back.included);
    REQUIRE(back.witness);
    CHECK(lang::astar_bstar(*back.witness));
    CHECK_FALSE(lang::anbn(*back.witness));
}

TEST_CASE("universality") {
    CHECK(universal(universal_ca(ab)).included);
    auto r = universal(corpus_ca("parity"));
    CHECK_FALSE(r.included);
    REQUIRE(r.witness);
    CHECK_FALSE(membership(corpus_ca("parity"), *r.witness));
}

TEST_CASE("deterministic complement") {
    Ca anbn = corpus_ca("anbn");
    Ca co = complement_det(anbn);
    CHECK(co.is_deterministic());
    agree(co, [](const Word& w) { return !lang::anbn(w); }, 8);
    CHECK_THROWS_AS(complement_det(generator_form(anbn)), Unsupported);
    CHECK_THROWS_AS(complement_det(corpus_ca("equal")), InvalidArgument);
}

TEST_CASE("union, intersection, concatenation") {
    Ca anbn = corpus_ca("anbn");
    Ca parity = corpus_ca("parity");
    Ca ab_star = corpus_ca("ab-star");
    agree(combine(anbn, ab_star, CombineOp::Union), [](const Word& w) { return lang::anbn(w) || lang::ab_star(w); },
          8);
    agree(combine(anbn, parity, CombineOp::Intersection),
          [](const Word& w) { return lang::anbn(w) && lang::equal_counts(w); }, 8);
    agree(combine(anbn, ab_star, CombineOp::Concatenation),
          [](const Word& w) {
              for (std::size_t i = 0; i <= w.size(); ++i) {
                  if (lang::anbn(w.substr(0, i)) && lang::ab_star(w.substr(i))) return true;
              }
              return false;
          },
          8);
    // Generator-form operands take the other branch.
    agree(combine(generator_form(anbn), generator_form(ab_star), CombineOp::Concatenation),
          [](const Word& w) {
              for (std::size_t i = 0; i <= w.size(); ++i) {
                  if (lang::anbn(w.substr(0, i)) && lang::ab_star(w.substr(i))) return true;
              }
              return false;
          },
          6);
    agree(combine(generator_form(anbn), generator_form(parity), CombineOp::Intersection),
          [](const Word& w) { return lang::anbn(w); }, 8);
}

TEST_CASE("EQUAL as a concatenation agrees with the EQUAL PA") {
    auto pa = corpus_build("equal");
    Ca concat = corpus_ca("equal-concat");
    for_each_word(pa.alphabet, 7, [&](const Word& w) {
        CHECK(membership(concat, w) == machine_accepts(pa.machine, w));
        return true;
    });
}

TEST_CASE("morphic image") {
    Morphism h{ab, make_alphabet({U'a', U'b', U'c'}), {{U'a', U"ac"}, {U'b', U""}}};
    Ca img = apply_morphism(corpus_ca("anbn"), h);
    // h(a^n b^n) = (ac)^n
    agree(img, [](const Word& w) {
        if (w.size() % 2) return false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != (i % 2 ? U'c' : U'a')) return false;
        }
        return true;
    }, 6);
}

TEST_CASE("inverse morphic image") {
    Morphism h{make_alphabet({U'x', U'y', U'z'}), ab, {{U'x', U"a"}, {U'y', U"bb"}, {U'z', U""}}};
    Ca anbn = corpus_ca("anbn");
    Ca pre = inverse_morphism(anbn, h);
    agree(pre, [&](const Word& w) { return lang::anbn(h.apply(w)); }, 6);
    // through an automaton with ε-moves
    Ca u = combine(anbn, corpus_ca("ab-star"), CombineOp::Union);
    Ca pre_u = inverse_morphism(u, h);
    agree(pre_u, [&](const Word& w) { return lang::anbn(h.apply(w)) || lang::ab_star(h.apply(w)); }, 5);
}

TEST_CASE("commutative closure of (ab)*") {
    Pa c = commutative_closure(corpus_ca("ab-star"));
    CHECK(c.is_deterministic());
    for_each_word(ab, 10, [&](const Word& w) {
        CHECK(membership(c, w) == lang::equal_counts(w));
        return true;
    });
}

TEST_CASE("LPA determinization and characterization") {
    const Pa p = std::get<Pa>(corpus_build("equal-counts").machine);
    REQUIRE(p.is_lpa());
    Pa d = lpa_determinize(p);
    CHECK(d.is_deterministic());
    LpaForm f = lpa_characterize(p);
    for_each_word(ab, 8, [&](const Word& w) {
        CHECK(membership(d, w) == lang::equal_counts(w));
        CHECK(lpa_member(f, w) == lang::equal_counts(w));
        return true;
    });
    CHECK_THROWS_AS(lpa_determinize(std::get<Pa>(corpus_build("equal").machine)), InvalidArgument);
}

TEST_CASE("LPA blocker over a+b+") {
    const Pa p = std::get<Pa>(corpus_build("equal-counts").machine);
    Nfa e(3, ab);
    e.add_transition(0, U'a', 1);
    e.add_transition(1, U'a', 1);
    e.add_transition(1, U'b', 2);
    e.add_transition(2, U'b', 2);
    e.set_final(2);
    auto w = lpa_blocker(p, e, 6);
    REQUIRE(w);
    CHECK(*w == Word(U"aab"));
    CHECK_FALSE(lang::equal_counts(*w));
}
