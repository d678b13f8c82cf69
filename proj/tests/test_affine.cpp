#include "doctest.h"

#include "parikh/affine.hpp"
#include "parikh/corpus.hpp"

using namespace parikh;

namespace {

Apa corpus_apa(const std::string& name) { return std::get<Apa>(corpus_build(name).machine); }

void agree(const Apa& a, const Apa& b, std::size_t bound) {
    for_each_word(a.alphabet(), bound, [&](const Word& w) {
        CHECK_MESSAGE(apa_membership(a, w) == apa_membership(b, w), to_utf8(w));
        return true;
    });
}

// The run of a deterministic automaton on w.
Path follow(const Nfa& a, const Word& w) {
    Path p;
    StateId q = a.initial();
    for (Symbol s : w) {
        for (TransitionId t : a.outgoing(q)) {
            if (a.transition(t).label == s) {
                p.steps.push_back(t);
                q = a.transition(t).to;
                break;
            }
        }
    }
    REQUIRE(p.size() == w.size());
    return p;
}

}  // namespace

TEST_CASE("affine maps compose left to right") {
    AffineMap f{{{2, 0}, {1, 1}}, {1, 0}};
    AffineMap g{{{Rational(1, 2), 0}, {0, 1}}, {0, 3}};
    RatVector x{3, 5};
    CHECK(compose(f, g).apply(x) == g.apply(f.apply(x)));
    CHECK(compose(AffineMap::identity(2), f) == f);
    CHECK(AffineMap::constant({4, 5}).apply(x) == RatVector{4, 5});
    CHECK_FALSE(f.is_linear());
    CHECK(f.scaled(2).apply(x) == RatVector{14, 16});
}

TEST_CASE("PAL register traces") {
    Apa pal = corpus_apa("pal");
    auto run = apa_accepting_run(pal, U"ab#ba");
    REQUIRE(run);
    auto trace = register_trace(pal, *run);
    CHECK(trace.size() == 6);
    CHECK(trace[2] == RatVector{4, 1});
    CHECK(trace.back() == RatVector{1, 0});
    auto bad = register_trace(pal, follow(pal.automaton(), U"ab#ab"));
    CHECK(bad.back() == RatVector{1, -1});
    CHECK_FALSE(apa_membership(pal, U"ab#ab"));
    CHECK(path_map(pal, *run).apply({0, 0}) == RatVector{1, 0});
}

TEST_CASE("APA validation") {
    Nfa a(1, make_alphabet({U'a'}));
    a.add_transition(0, U'a', 0);
    a.set_final(0);
    AffineMap half{{{Rational(1, 2)}}, {0}};
    CHECK_THROWS_AS(Apa(a, 1, {half}, SemilinearSet::full(1), Domain::Naturals), InvalidArgument);
    CHECK_THROWS_AS(Apa(a, 2, {half}, SemilinearSet::full(1), Domain::Rationals), DimensionMismatch);
    Nfa e(1, make_alphabet({U'a'}));
    e.add_transition(0, std::nullopt, 0);
    CHECK_THROWS_AS(Apa(e, 1, {AffineMap::identity(1)}, SemilinearSet::full(1), Domain::Rationals), InvalidArgument);
}

TEST_CASE("linearization keeps the language") {
    for (const char* name : {"pal", "copy", "expo"}) {
        CAPTURE(name);
        Apa a = corpus_apa(name);
        Apa l = linearize(a);
        CHECK(l.dim() == a.dim() * (1 + a.automaton().transition_count()));
        CHECK(l.automaton().state_count() == a.automaton().state_count() + 1);
        for (TransitionId t = 0; t < l.automaton().transition_count(); ++t) {
            if (l.automaton().transition(t).from != l.automaton().initial()) CHECK(l.updates()[t].is_linear());
        }
        agree(a, l, 7);
    }
}

TEST_CASE("rationals to naturals on PAL") {
    Apa pal = corpus_apa("pal");
    Apa n = rationals_to_naturals(pal);
    CHECK(n.domain() == Domain::Naturals);
    agree(pal, n, 8);
    CHECK_THROWS_AS(rationals_to_naturals(corpus_apa("expo")), Unsupported);
}

TEST_CASE("rationals to naturals on COPY") { agree(corpus_apa("copy"), rationals_to_naturals(corpus_apa("copy")), 7); }

TEST_CASE("two-state normal form of PAL") {
    Apa pal = corpus_apa("pal");
    Apa two = normalize_two_state(pal);
    const std::size_t k = pal.automaton().state_count();
    CHECK(two.automaton().state_count() == 2);
    CHECK(two.dim() == k * (pal.dim() + 1));
    CHECK(two.is_deterministic());
    agree(pal, two, 8);
}

TEST_CASE("two-state normal form when the empty word is accepted") {
    // a* b with v counting a's, accepting when v even; ε accepted through the
    // constraint on an incomplete automaton
    Nfa a(2, make_alphabet({U'a', U'b'}));
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'b', 1);
    a.set_final(0);
    a.set_final(1);
    PresburgerFormula even = PresburgerFormula::atom(1, Atom::cong(2, Term::var(1, 0), Term::constant_term(1, 0)));
    Apa m(a, 1, {AffineMap{{{1}}, {1}}, AffineMap::identity(1)}, even, Domain::Naturals);
    Apa two = normalize_two_state(m);
    CHECK(two.automaton().state_count() == 2);
    agree(m, two, 8);
}

TEST_CASE("embedding a CA") {
    Ca anbn = std::get<Ca>(corpus_build("anbn").machine);
    Apa e = embed_ca(anbn);
    CHECK(e.domain() == Domain::Naturals);
    for_each_word(anbn.alphabet(), 8, [&](const Word& w) {
        CHECK(apa_membership(e, w) == membership(anbn, w));
        return true;
    });
}

TEST_CASE("register growth bound") {
    for (const Apa& a : {corpus_apa("expo"), embed_ca(std::get<Ca>(corpus_build("anbn").machine))}) {
        auto r = register_bound_check(a, 6);
        CHECK(r.holds);
        CHECK(r.paths_checked > 0);
        CHECK_FALSE(r.violation);
    }
    CHECK_THROWS_AS(register_bound_check(corpus_apa("pal"), 3), InvalidArgument);
}
