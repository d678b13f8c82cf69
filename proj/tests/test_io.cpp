#include "doctest.h"

#include "parikh/closure.hpp"
#include "parikh/io.hpp"

using namespace parikh;

TEST_CASE("every corpus machine round-trips") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        auto e = corpus_build(name);
        Json j = io::to_json(e.machine);
        Machine back = io::machine_from_json(io::parse(j.dump()));
        CHECK(back == e.machine);
        CHECK(io::to_json(back) == j);
    }
}

TEST_CASE("derived machines round-trip") {
    Ca anbn = std::get<Ca>(corpus_build("anbn").machine);
    Ca co = complement_det(anbn);
    CHECK(io::ca_from_json(io::to_json(co)) == co);
    Ca gen(anbn.automaton(), constraint_generators(anbn.clauses()[0].constraint));
    CHECK(io::ca_from_json(io::to_json(gen)) == gen);
    Apa n = rationals_to_naturals(std::get<Apa>(corpus_build("pal").machine));
    CHECK(io::apa_from_json(io::to_json(n)) == n);
}

TEST_CASE("numbers are decimal strings") {
    Json j = io::to_json(std::get<Apa>(corpus_build("pal").machine));
    CHECK(j["kind"] == "apa");
    CHECK(j["updates"][5]["matrix"][0][0] == "1/2");
    CHECK(j["constraint"]["form"] == "qaffine");
    Json f = io::to_json(PresburgerFormula::atom(1, Atom::cong(Integer("123456789012345678901234567890"),
                                                                Term::var(1, 0), Term::constant_term(1, 0))));
    CHECK(f["clauses"][0][0]["modulus"] == "123456789012345678901234567890");
    CHECK(io::formula_from_json(f) == io::formula_from_json(io::parse(f.dump())));
}

TEST_CASE("morphism documents") {
    Morphism h{make_alphabet({U'a', U'b'}), make_alphabet({U'x'}), {{U'a', U"xx"}, {U'b', U""}}};
    Json j = io::to_json(h);
    CHECK(io::morphism_from_json(j) == h);
    j["image"].erase("b");
    CHECK_THROWS_AS(io::morphism_from_json(j), InvalidArgument);
}

TEST_CASE("schema violations are InvalidArgument") {
    CHECK_THROWS_AS(io::parse("{"), InvalidArgument);
    CHECK_THROWS_AS(io::machine_from_json(io::parse(R"({"kind":"ca"})")), InvalidArgument);
    CHECK_THROWS_AS(io::machine_from_json(io::parse(R"({"kind":"weird"})")), InvalidArgument);
    CHECK_THROWS_AS(io::nfa_from_json(io::parse(
                        R"({"states":1,"alphabet":["ab"],"initial":0,"finals":[],"transitions":[]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::nfa_from_json(io::parse(
                        R"({"states":1,"alphabet":["a"],"initial":0,"finals":[3],"transitions":[]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::semilinear_from_json(io::parse(
                        R"({"form":"semilinear","dim":1,"linear":[{"base":["-1"],"periods":[]}]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::semilinear_from_json(io::parse(
                        R"({"form":"semilinear","dim":2,"linear":[{"base":["1"],"periods":[]}]})")),
                    DimensionMismatch);
}

TEST_CASE("an nfa document loads as a CA with constraint true") {
    Nfa a(1, make_alphabet({U'a'}));
    a.add_transition(0, U'a', 0);
    a.set_final(0);
    Machine m = io::machine_from_json(io::to_json(a));
    REQUIRE(std::holds_alternative<Ca>(m));
    CHECK(membership(std::get<Ca>(m), U"aaa"));
}
