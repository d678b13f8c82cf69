#include "parikh/io.hpp"

namespace parikh::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InvalidArgument("invalid document: " + what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) fail(std::string("expected an object holding '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field '") + name + "'");
    return *it;
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    return j;
}

std::size_t index(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) fail(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

Integer integer(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (!j.is_string()) fail("numbers are written as decimal strings");
    return parse_integer(j.get<std::string>());
}

Rational rational(const Json& j) {
    if (j.is_number_integer()) return Rational(integer(j));
    if (!j.is_string()) fail("numbers are written as decimal strings");
    return parse_rational(j.get<std::string>());
}

Json str(const Integer& v) { return to_string(v); }
Json str(const Rational& v) { return to_string(v); }

template <class V>
Json vec(const V& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(str(x));
    return out;
}

IntVector int_vector(const Json& j) {
    IntVector out;
    for (const auto& x : array(j, "vector")) out.push_back(integer(x));
    return out;
}

NatVector nat_vector(const Json& j) {
    IntVector v = int_vector(j);
    for (const auto& x : v) {
        if (x < 0) fail("vector over N has a negative entry");
    }
    return NatVector(std::move(v));
}

RatVector rat_vector(const Json& j) {
    RatVector out;
    for (const auto& x : array(j, "vector")) out.push_back(rational(x));
    return out;
}

Json symbol(Symbol s) { return to_utf8(s); }

Symbol symbol_from(const Json& j) {
    if (!j.is_string()) fail("symbols are strings");
    Word w = from_utf8(j.get<std::string>());
    if (w.size() != 1) fail("a symbol is exactly one character");
    return w[0];
}

Json state_list(const StateSet& s) {
    Json out = Json::array();
    for (StateId q = 0; q < s.size(); ++q) {
        if (s[q]) out.push_back(q);
    }
    return out;
}

StateSet state_set(const Json& j, std::size_t states) {
    StateSet out(states, false);
    for (const auto& q : array(j, "finals")) {
        std::size_t i = index(q, "state");
        if (i >= states) fail("state " + std::to_string(i) + " out of range");
        out[i] = true;
    }
    return out;
}

Json term(const Term& t) { return {{"constant", str(t.constant)}, {"coeffs", vec(t.coeffs)}}; }

Term term_from(const Json& j, std::size_t dim) {
    Term t{integer(field(j, "constant")), int_vector(field(j, "coeffs"))};
    require_dim(t.coeffs.size(), dim, "term");
    return t;
}

Json form(const AffineForm& f) { return {{"constant", str(f.constant)}, {"coeffs", vec(f.coeffs)}}; }

AffineForm form_from(const Json& j, std::size_t dim) {
    AffineForm f{rational(field(j, "constant")), rat_vector(field(j, "coeffs"))};
    require_dim(f.coeffs.size(), dim, "affine form");
    return f;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(e.what());
    }
}

}  // namespace

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

std::string kind_of(const Json& j) {
    const Json& k = field(j, "kind");
    if (!k.is_string()) fail("'kind' must be a string");
    return k.get<std::string>();
}

Json symbols_to_json(const Alphabet& a) {
    Json out = Json::array();
    for (Symbol s : a) out.push_back(symbol(s));
    return out;
}

Alphabet symbols_from_json(const Json& j) {
    std::vector<Symbol> out;
    for (const auto& s : array(j, "alphabet")) out.push_back(symbol_from(s));
    return make_alphabet(std::move(out));
}

Json to_json(const Nfa& a) {
    Json ts = Json::array();
    for (const auto& t : a.transitions()) {
        ts.push_back({{"from", t.from}, {"label", t.label ? symbol(*t.label) : Json(nullptr)}, {"to", t.to}});
    }
    return {{"kind", "nfa"},
            {"alphabet", symbols_to_json(a.alphabet())},
            {"states", a.state_count()},
            {"initial", a.initial()},
            {"finals", state_list(a.finals())},
            {"transitions", ts}};
}

Nfa nfa_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t states = index(field(j, "states"), "states");
        Nfa a(states, symbols_from_json(field(j, "alphabet")), index(field(j, "initial"), "initial"));
        for (const auto& t : array(field(j, "transitions"), "transitions")) {
            const Json& label = field(t, "label");
            std::optional<Symbol> l;
            if (!label.is_null()) l = symbol_from(label);
            a.add_transition(index(field(t, "from"), "from"), l, index(field(t, "to"), "to"));
        }
        StateSet finals = state_set(field(j, "finals"), states);
        for (StateId q = 0; q < states; ++q) a.set_final(q, finals[q]);
        return a;
    });
}

Json to_json(const SemilinearSet& s) {
    Json comps = Json::array();
    for (const auto& c : s.components()) {
        Json periods = Json::array();
        for (const auto& p : c.periods()) periods.push_back(vec(p));
        comps.push_back({{"base", vec(c.base())}, {"periods", periods}});
    }
    return {{"kind", "constraint"}, {"form", "semilinear"}, {"dim", s.dim()}, {"linear", comps}};
}

SemilinearSet semilinear_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t dim = index(field(j, "dim"), "dim");
        SemilinearSet s(dim);
        for (const auto& c : array(field(j, "linear"), "linear")) {
            NatVector base = nat_vector(field(c, "base"));
            require_dim(base.dim(), dim, "linear set base");
            std::vector<NatVector> periods;
            for (const auto& p : array(field(c, "periods"), "periods")) {
                periods.push_back(nat_vector(p));
                require_dim(periods.back().dim(), dim, "linear set period");
            }
            s.add(LinearSet(std::move(base), std::move(periods)));
        }
        return s;
    });
}

Json to_json(const PresburgerFormula& phi) {
    Json clauses = Json::array();
    for (const auto& c : phi.clauses()) {
        Json lits = Json::array();
        for (const auto& l : c) {
            Json lit{{"op", l.atom.kind == Atom::Kind::Less ? "less" : "cong"}};
            if (l.atom.kind == Atom::Kind::Cong) lit["modulus"] = str(l.atom.modulus);
            lit["negated"] = l.negated;
            lit["lhs"] = term(l.atom.lhs);
            lit["rhs"] = term(l.atom.rhs);
            lits.push_back(lit);
        }
        clauses.push_back(lits);
    }
    return {{"kind", "formula"}, {"dim", phi.dim()}, {"clauses", clauses}};
}

PresburgerFormula formula_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t dim = index(field(j, "dim"), "dim");
        PresburgerFormula phi(dim);
        for (const auto& c : array(field(j, "clauses"), "clauses")) {
            Clause clause;
            for (const auto& l : array(c, "clause")) {
                const Json& op = field(l, "op");
                Term lhs = term_from(field(l, "lhs"), dim);
                Term rhs = term_from(field(l, "rhs"), dim);
                Atom a;
                if (op == "less") {
                    a = Atom::less(lhs, rhs);
                } else if (op == "cong") {
                    a = Atom::cong(integer(field(l, "modulus")), lhs, rhs);
                } else {
                    fail("atom op must be 'less' or 'cong'");
                }
                bool negated = false;
                if (l.contains("negated")) {
                    if (!l["negated"].is_boolean()) fail("'negated' must be a boolean");
                    negated = l["negated"].get<bool>();
                }
                clause.push_back({std::move(a), negated});
            }
            phi.add_clause(std::move(clause));
        }
        return phi;
    });
}

Json to_json(const QAffineSet& s) {
    Json clauses = Json::array();
    for (const auto& c : s.clauses()) {
        Json zeros = Json::array(), positives = Json::array();
        for (const auto& f : c.zeros) zeros.push_back(form(f));
        for (const auto& f : c.positives) positives.push_back(form(f));
        clauses.push_back({{"zeros", zeros}, {"positives", positives}});
    }
    return {{"kind", "constraint"}, {"form", "qaffine"}, {"dim", s.dim()}, {"clauses", clauses}};
}

QAffineSet qaffine_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t dim = index(field(j, "dim"), "dim");
        QAffineSet s(dim);
        for (const auto& c : array(field(j, "clauses"), "clauses")) {
            QAffineClause clause;
            for (const auto& f : array(field(c, "zeros"), "zeros")) clause.zeros.push_back(form_from(f, dim));
            for (const auto& f : array(field(c, "positives"), "positives")) clause.positives.push_back(form_from(f, dim));
            s.add_clause(std::move(clause));
        }
        return s;
    });
}

namespace {

// Constraint objects inside machines: "form" picks the representation;
// a standalone "formula" document is accepted too.
std::string constraint_form(const Json& j) {
    if (j.is_object() && j.contains("form")) {
        if (!j["form"].is_string()) fail("'form' must be a string");
        return j["form"].get<std::string>();
    }
    if (j.is_object() && j.contains("kind") && j["kind"] == "formula") return "formula";
    fail("constraint needs a 'form' of semilinear, formula or qaffine");
}

Json embedded(Json doc, const char* form) {
    doc.erase("kind");
    Json out{{"form", form}};
    for (auto& [k, v] : doc.items()) {
        if (k != "form") out[k] = v;
    }
    return out;
}

}  // namespace

Json to_json(const Constraint& c) {
    if (auto* f = std::get_if<PresburgerFormula>(&c)) return embedded(to_json(*f), "formula");
    return embedded(to_json(std::get<SemilinearSet>(c)), "semilinear");
}

Json to_json(const ApaConstraint& c) {
    if (auto* q = std::get_if<QAffineSet>(&c)) return embedded(to_json(*q), "qaffine");
    if (auto* f = std::get_if<PresburgerFormula>(&c)) return embedded(to_json(*f), "formula");
    return embedded(to_json(std::get<SemilinearSet>(c)), "semilinear");
}

Constraint constraint_from_json(const Json& j) {
    std::string f = constraint_form(j);
    if (f == "semilinear") return semilinear_from_json(j);
    if (f == "formula") return formula_from_json(j);
    if (f == "qaffine") throw Unsupported("a qaffine constraint only fits an APA");
    fail("unknown constraint form '" + f + "'");
}

ApaConstraint apa_constraint_from_json(const Json& j) {
    std::string f = constraint_form(j);
    if (f == "qaffine") return qaffine_from_json(j);
    if (f == "semilinear") return semilinear_from_json(j);
    if (f == "formula") return formula_from_json(j);
    fail("unknown constraint form '" + f + "'");
}

namespace {

Json automaton_body(const Nfa& a) {
    Json j = to_json(a);
    j.erase("kind");
    return j;
}

}  // namespace

Json to_json(const Ca& m) {
    Json clauses = Json::array();
    for (const auto& c : m.clauses()) {
        clauses.push_back({{"finals", state_list(c.finals)}, {"constraint", to_json(c.constraint)}});
    }
    return {{"kind", "ca"}, {"automaton", automaton_body(m.automaton())}, {"clauses", clauses}};
}

Ca ca_from_json(const Json& j) {
    return guarded([&] {
        Nfa a = nfa_from_json(field(j, "automaton"));
        if (j.contains("constraint") && !j.contains("clauses")) return Ca(std::move(a), constraint_from_json(j["constraint"]));
        std::vector<AcceptanceClause> clauses;
        for (const auto& c : array(field(j, "clauses"), "clauses")) {
            clauses.push_back({state_set(field(c, "finals"), a.state_count()), constraint_from_json(field(c, "constraint"))});
        }
        return Ca(std::move(a), std::move(clauses));
    });
}

Json to_json(const Pa& m) {
    Json weights = Json::array();
    for (const auto& w : m.weights()) weights.push_back(vec(w));
    return {{"kind", "pa"},
            {"automaton", automaton_body(m.automaton())},
            {"weights", weights},
            {"constraint", to_json(m.constraint())}};
}

Pa pa_from_json(const Json& j) {
    return guarded([&] {
        std::vector<NatVector> weights;
        for (const auto& w : array(field(j, "weights"), "weights")) weights.push_back(nat_vector(w));
        return Pa(nfa_from_json(field(j, "automaton")), std::move(weights), constraint_from_json(field(j, "constraint")));
    });
}

Json to_json(const Apa& m) {
    Json updates = Json::array();
    for (const auto& u : m.updates()) {
        Json rows = Json::array();
        for (const auto& r : u.matrix) rows.push_back(vec(r));
        updates.push_back({{"matrix", rows}, {"offset", vec(u.offset)}});
    }
    return {{"kind", "apa"},
            {"automaton", automaton_body(m.automaton())},
            {"dim", m.dim()},
            {"domain", to_string(m.domain())},
            {"updates", updates},
            {"constraint", to_json(m.constraint())}};
}

Apa apa_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t dim = index(field(j, "dim"), "dim");
        std::vector<AffineMap> updates;
        for (const auto& u : array(field(j, "updates"), "updates")) {
            AffineMap f;
            for (const auto& r : array(field(u, "matrix"), "matrix")) {
                f.matrix.push_back(rat_vector(r));
                require_dim(f.matrix.back().size(), dim, "update matrix row");
            }
            require_dim(f.matrix.size(), dim, "update matrix");
            f.offset = rat_vector(field(u, "offset"));
            require_dim(f.offset.size(), dim, "update offset");
            updates.push_back(std::move(f));
        }
        const Json& d = field(j, "domain");
        Domain domain;
        if (d == "naturals") {
            domain = Domain::Naturals;
        } else if (d == "integers") {
            domain = Domain::Integers;
        } else if (d == "rationals") {
            domain = Domain::Rationals;
        } else {
            fail("domain must be naturals, integers or rationals");
        }
        return Apa(nfa_from_json(field(j, "automaton")), dim, std::move(updates),
                   apa_constraint_from_json(field(j, "constraint")), domain);
    });
}

Json to_json(const Rbcm& m) {
    static const char* tests[] = {"zero", "positive", "any"};
    Json ts = Json::array();
    for (const auto& t : m.transitions()) {
        Json test = Json::array();
        for (auto z : t.test) test.push_back(tests[static_cast<int>(z)]);
        ts.push_back({{"from", t.from},
                      {"letter", symbol(t.letter)},
                      {"test", test},
                      {"to", t.to},
                      {"head", t.head == HeadMove::Right ? "right" : "stay"},
                      {"increments", t.increments}});
    }
    StateSet finals(m.state_count(), false);
    for (StateId q = 0; q < m.state_count(); ++q) finals[q] = m.is_final(q);
    return {{"kind", "rbcm"},
            {"alphabet", symbols_to_json(m.alphabet())},
            {"states", m.state_count()},
            {"initial", m.initial()},
            {"finals", state_list(finals)},
            {"counters", m.counter_count()},
            {"reversal_bound", m.reversal_bound()},
            {"end_marker", symbol(m.end_marker())},
            {"transitions", ts}};
}

Rbcm rbcm_from_json(const Json& j) {
    return guarded([&] {
        const std::size_t states = index(field(j, "states"), "states");
        Symbol end = j.contains("end_marker") ? symbol_from(j["end_marker"]) : kEndMarker;
        Rbcm m(states, symbols_from_json(field(j, "alphabet")), index(field(j, "counters"), "counters"),
               index(field(j, "initial"), "initial"), index(field(j, "reversal_bound"), "reversal_bound"), end);
        for (const auto& t : array(field(j, "transitions"), "transitions")) {
            RbcmTransition tr;
            tr.from = index(field(t, "from"), "from");
            tr.letter = symbol_from(field(t, "letter"));
            tr.to = index(field(t, "to"), "to");
            const Json& head = field(t, "head");
            if (head == "right") {
                tr.head = HeadMove::Right;
            } else if (head == "stay") {
                tr.head = HeadMove::Stay;
            } else {
                fail("head must be 'right' or 'stay'");
            }
            for (const auto& z : array(field(t, "test"), "test")) {
                if (z == "zero") {
                    tr.test.push_back(ZeroTest::Zero);
                } else if (z == "positive") {
                    tr.test.push_back(ZeroTest::Positive);
                } else if (z == "any") {
                    tr.test.push_back(ZeroTest::Any);
                } else {
                    fail("zero tests are 'zero', 'positive' or 'any'");
                }
            }
            for (const auto& v : array(field(t, "increments"), "increments")) {
                if (!v.is_number_integer()) fail("increments are -1, 0 or 1");
                tr.increments.push_back(v.get<int>());
            }
            m.add_transition(std::move(tr));
        }
        StateSet finals = state_set(field(j, "finals"), states);
        for (StateId q = 0; q < states; ++q) m.set_final(q, finals[q]);
        return m;
    });
}

Json to_json(const Machine& m) { return std::visit([](const auto& x) { return to_json(x); }, m); }

Machine machine_from_json(const Json& j) {
    const std::string kind = kind_of(j);
    if (kind == "ca") return ca_from_json(j);
    if (kind == "pa") return pa_from_json(j);
    if (kind == "apa") return apa_from_json(j);
    if (kind == "rbcm") return rbcm_from_json(j);
    if (kind == "nfa") {
        Nfa a = nfa_from_json(j);
        const std::size_t n = a.transition_count();
        return Ca(std::move(a), constraint_full(n));
    }
    fail("expected a machine document, got kind '" + kind + "'");
}

Json to_json(const Morphism& h) {
    Json image = Json::object();
    for (const auto& [a, w] : h.image) image[to_utf8(a)] = to_utf8(w);
    return {{"kind", "morphism"},
            {"source", symbols_to_json(h.source)},
            {"target", symbols_to_json(h.target)},
            {"image", image}};
}

Morphism morphism_from_json(const Json& j) {
    return guarded([&] {
        Morphism h{symbols_from_json(field(j, "source")), symbols_from_json(field(j, "target")), {}};
        const Json& image = field(j, "image");
        if (!image.is_object()) fail("'image' must map symbols to words");
        for (const auto& [k, v] : image.items()) {
            if (!v.is_string()) fail("images are strings");
            h.image[symbol_from(Json(k))] = from_utf8(v.get<std::string>());
        }
        h.validate();
        return h;
    });
}

Json to_json(const Path& p) { return p.steps; }

}  // namespace parikh::io
