#include "doctest.h"

#include "parikh/corpus.hpp"
#include "parikh/rbcm.hpp"

using namespace parikh;

namespace {

void check_trace(const Rbcm& m, const SimulationResult& r, std::size_t word_length) {
    REQUIRE(r.trace);
    for (const auto& c : r.trace->configurations) {
        CHECK(c.head <= word_length);
        for (auto v : c.counters) CHECK(v >= 0);
        CHECK(c.counters.size() == m.counter_count());
    }
    for (auto k : r.trace->reversals) CHECK(k < m.reversal_bound());
}

void agree(const Ca& ca, std::size_t bound) {
    Rbcm m = compile_to_rbcm(ca);
    CHECK(m.is_deterministic());
    for_each_word(ca.alphabet(), bound, [&](const Word& w) {
        auto r = simulate(m, w, 1'000'000);
        REQUIRE(r.outcome != Outcome::FuelExhausted);
        CHECK_MESSAGE((r.outcome == Outcome::Accept) == membership(ca, w), to_utf8(w));
        CHECK_FALSE(r.nondeterministic_step);
        CHECK_FALSE(r.bound_violated);
        if (r.outcome == Outcome::Accept) check_trace(m, r, w.size());
        return true;
    });
}

}  // namespace

TEST_CASE("initial final state accepts the empty word") {
    Rbcm m(1, make_alphabet({U'a'}), 0);
    m.set_final(0);
    auto r = simulate(m, U"", 10);
    CHECK(r.outcome == Outcome::Accept);
    CHECK(r.trace->configurations.size() == 1);
}

TEST_CASE("fuel exhaustion is not rejection") {
    Rbcm m(2, make_alphabet({U'a'}), 1, 0, 100);
    // counts up then stays; never final
    m.add_transition({0, U'a', {ZeroTest::Any}, 0, HeadMove::Right, {1}});
    m.add_transition({0, kEndMarker, {ZeroTest::Any}, 1, HeadMove::Stay, {0}});
    auto r = simulate(m, Word(50, U'a'), 10);
    CHECK(r.outcome == Outcome::FuelExhausted);
    auto s = simulate(m, Word(5, U'a'), 100);
    CHECK(s.outcome == Outcome::Reject);
}

TEST_CASE("reversal bound cuts branches and is flagged") {
    Rbcm m(3, make_alphabet({U'a'}), 1, 0, 1);
    m.add_transition({0, U'a', {ZeroTest::Any}, 1, HeadMove::Right, {1}});
    m.add_transition({1, kEndMarker, {ZeroTest::Positive}, 2, HeadMove::Stay, {-1}});
    m.set_final(2);
    auto r = simulate(m, U"a", 100);
    CHECK(r.outcome == Outcome::Reject);
    CHECK(r.bound_violated);
    m.set_reversal_bound(2);
    CHECK(simulate(m, U"a", 100).outcome == Outcome::Accept);
}

TEST_CASE("validation") {
    Rbcm m(1, make_alphabet({U'a'}), 1);
    CHECK_THROWS_AS(m.add_transition({0, U'b', {ZeroTest::Any}, 0, HeadMove::Right, {0}}), InvalidArgument);
    CHECK_THROWS_AS(m.add_transition({0, U'a', {}, 0, HeadMove::Right, {0}}), DimensionMismatch);
    CHECK_THROWS_AS(m.add_transition({0, U'a', {ZeroTest::Any}, 0, HeadMove::Right, {2}}), InvalidArgument);
    CHECK_THROWS_AS(simulate(m, U"b", 10), InvalidArgument);
}

TEST_CASE("nsum machine") {
    Rbcm m = nsum_rbcm();
    CHECK(m.is_deterministic());
    CHECK(simulate(m, U"a♠bb#b♣cc", 1000).outcome == Outcome::Accept);
    CHECK(simulate(m, U"a♠bb#b♣ccc", 1000).outcome == Outcome::Reject);
    CHECK(simulate(m, U"aa♠bb#b♣ccc", 1000).outcome == Outcome::Accept);
    CHECK(simulate(m, U"aaa♠bb#b♣ccc", 1000).outcome == Outcome::Reject);
    CHECK(simulate(m, U"♠♣", 1000).outcome == Outcome::Accept);
}

TEST_CASE("compiled parity CA agrees up to length 10") { agree(std::get<Ca>(corpus_build("parity").machine), 10); }

TEST_CASE("compiled anbn CA agrees up to length 10") { agree(std::get<Ca>(corpus_build("anbn").machine), 10); }

TEST_CASE("compiled vacuous CA is the automaton's language") {
    agree(std::get<Ca>(corpus_build("astar-bstar").machine), 8);
}

TEST_CASE("compiled two-word CA") {
    Ca ca = std::get<Ca>(corpus_build("two-words").machine);
    agree(ca, 8);
    Rbcm m = compile_to_rbcm(ca);
    CHECK(m.reversal_bound() >= 2);
}

TEST_CASE("compile with a replacement formula") {
    Ca ca = std::get<Ca>(corpus_build("astar-bstar").machine);
    // number of a's below the number of b's
    PresburgerFormula phi = PresburgerFormula::atom(3, Atom::less(Term::var(3, 0), Term::var(3, 1) + Term::var(3, 2)));
    Rbcm m = compile_to_rbcm(ca, phi);
    CHECK(simulate(m, U"abb", 10000).outcome == Outcome::Accept);
    CHECK(simulate(m, U"aab", 10000).outcome == Outcome::Reject);
    CHECK(simulate(m, U"ba", 10000).outcome == Outcome::Reject);
}

TEST_CASE("compile rejects nondeterministic or generator input") {
    Nfa a(2, make_alphabet({U'a'}));
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'a', 1);
    a.set_final(1);
    CHECK_THROWS_AS(compile_to_rbcm(Ca(a, PresburgerFormula::verum(2))), InvalidArgument);
    Nfa d(1, make_alphabet({U'a'}));
    d.add_transition(0, U'a', 0);
    d.set_final(0);
    CHECK_THROWS_AS(compile_to_rbcm(Ca(d, SemilinearSet::full(1))), Unsupported);
}
