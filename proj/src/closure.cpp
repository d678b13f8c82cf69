#include "parikh/closure.hpp"

#include <algorithm>
#include <map>

#include "parikh/parikh_image.hpp"

namespace parikh {

namespace {

StateSet shifted(const StateSet& finals, std::size_t offset, std::size_t total) {
    StateSet out(total, false);
    for (std::size_t q = 0; q < finals.size(); ++q) out[offset + q] = finals[q];
    return out;
}

void copy_transitions(const Nfa& from, Nfa& to, std::size_t offset) {
    for (const auto& t : from.transitions()) to.add_transition(t.from + offset, t.label, t.to + offset);
}

Ca union_of(const Ca& x, const Ca& y, const Limits& limits) {
    const Nfa& a = x.automaton();
    const Nfa& b = y.automaton();
    const std::size_t qa = a.state_count();
    const std::size_t states = 1 + qa + b.state_count();
    Nfa out(states, a.alphabet(), 0);
    copy_transitions(a, out, 1);
    copy_transitions(b, out, 1 + qa);
    out.add_transition(0, std::nullopt, 1 + a.initial());
    out.add_transition(0, std::nullopt, 1 + qa + b.initial());
    const std::size_t n = out.transition_count();
    std::vector<AcceptanceClause> clauses;
    for (const auto& c : x.clauses()) {
        clauses.push_back({shifted(c.finals, 1, states), constraint_embed(c.constraint, 0, n, limits)});
    }
    for (const auto& c : y.clauses()) {
        clauses.push_back(
            {shifted(c.finals, 1 + qa, states), constraint_embed(c.constraint, a.transition_count(), n, limits)});
    }
    return Ca(std::move(out), std::move(clauses));
}

IntMatrix back_matrix(const std::vector<std::optional<TransitionId>>& back, std::size_t rows) {
    IntMatrix m(rows, IntVector(back.size(), 0));
    for (std::size_t j = 0; j < back.size(); ++j) {
        if (back[j]) m[*back[j]][j] = 1;
    }
    return m;
}

Ca intersection_of(const Ca& x, const Ca& y, const Limits& limits) {
    auto prod = product(x.automaton(), y.automaton());
    const std::size_t n = prod.automaton.transition_count();
    const std::size_t states = prod.pairs.size();
    IntMatrix left = back_matrix(prod.left, x.dim());
    IntMatrix right = back_matrix(prod.right, y.dim());
    std::vector<AcceptanceClause> clauses;
    for (const auto& cx : x.clauses()) {
        auto lx = constraint_preimage(cx.constraint, left, n, limits);
        for (const auto& cy : y.clauses()) {
            StateSet finals(states, false);
            for (StateId s = 0; s < states; ++s) {
                finals[s] = cx.finals[prod.pairs[s].first] && cy.finals[prod.pairs[s].second];
            }
            auto ly = constraint_preimage(cy.constraint, right, n, limits);
            clauses.push_back({std::move(finals), constraint_and(lx, ly, limits)});
        }
    }
    return Ca(std::move(prod.automaton), std::move(clauses));
}

// Transitions: [x][one ε-bridge per final state of x][y].
Ca concatenation_of(const Ca& x, const Ca& y, const Limits& limits) {
    const Nfa& a = x.automaton();
    const Nfa& b = y.automaton();
    const std::size_t qa = a.state_count();
    const std::size_t states = qa + b.state_count();
    Nfa out(states, a.alphabet(), a.initial());
    copy_transitions(a, out, 0);
    std::vector<StateId> bridge_from;
    for (StateId f = 0; f < qa; ++f) {
        bool final = std::any_of(x.clauses().begin(), x.clauses().end(),
                                 [&](const AcceptanceClause& c) { return c.finals[f]; });
        if (!final) continue;
        out.add_transition(f, std::nullopt, qa + b.initial());
        bridge_from.push_back(f);
    }
    copy_transitions(b, out, qa);
    const std::size_t ta = a.transition_count();
    const std::size_t nb = bridge_from.size();
    const std::size_t n = out.transition_count();

    std::vector<AcceptanceClause> clauses;
    for (const auto& cx : x.clauses()) {
        for (const auto& cy : y.clauses()) {
            StateSet finals = shifted(cy.finals, qa, states);
            if (is_formula(cx.constraint) && is_formula(cy.constraint)) {
                Clause unused;
                for (std::size_t k = 0; k < nb; ++k) {
                    if (cx.finals[bridge_from[k]]) continue;
                    unused.push_back(
                        Literal{Atom::less(Term::var(n, ta + k), Term::constant_term(n, 1)), false});
                }
                auto phi = std::get<PresburgerFormula>(constraint_and(constraint_embed(cx.constraint, 0, n, limits),
                                                                      constraint_embed(cy.constraint, ta + nb, n, limits),
                                                                      limits));
                phi = formula_and(phi, PresburgerFormula(n, {unused}), limits);
                clauses.push_back({std::move(finals), std::move(phi)});
            } else {
                SemilinearSet bridges(nb);
                for (std::size_t k = 0; k < nb; ++k) {
                    if (cx.finals[bridge_from[k]]) bridges.add(LinearSet(NatVector::unit(nb, k), {}));
                }
                auto gen = sl_concat(sl_concat(constraint_generators(cx.constraint, limits), bridges),
                                     constraint_generators(cy.constraint, limits));
                clauses.push_back({std::move(finals), std::move(gen)});
            }
        }
    }
    return Ca(std::move(out), std::move(clauses));
}

// Paths of an ε-free automaton from q spelling w.
void paths_spelling(const Nfa& a, StateId q, const Word& w, std::size_t pos, Path& current,
                    std::vector<std::pair<Path, StateId>>& out, std::size_t& nodes, const Limits& limits) {
    if (pos == w.size()) {
        out.emplace_back(current, q);
        return;
    }
    for (TransitionId t : a.outgoing(q)) {
        if (a.transition(t).label != w[pos]) continue;
        if (++nodes > limits.enumeration_nodes) throw ResourceLimit("inverse_morphism: path budget exhausted");
        current.steps.push_back(t);
        paths_spelling(a, a.transition(t).to, w, pos + 1, current, out, nodes, limits);
        current.steps.pop_back();
    }
}

}  // namespace

Ca complement_det(const Ca& m, const Limits& limits) {
    if (!m.is_deterministic()) throw InvalidArgument("complement_det: automaton is not deterministic");
    if (!m.has_formula_constraints()) throw Unsupported("complement_det: constraints must be formulas");
    Nfa a = complete_with_sink(m.automaton());
    const std::size_t n = a.transition_count();
    const std::size_t old_states = m.automaton().state_count();
    std::vector<PresburgerFormula> negated;
    for (const auto& c : m.clauses()) {
        auto phi = std::get<PresburgerFormula>(constraint_embed(c.constraint, 0, n, limits));
        negated.push_back(formula_negate(phi, limits));
    }
    std::map<std::vector<std::size_t>, StateSet> classes;
    for (StateId q = 0; q < a.state_count(); ++q) {
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < m.clauses().size(); ++i) {
            if (q < old_states && m.clauses()[i].finals[q]) in.push_back(i);
        }
        auto [it, inserted] = classes.try_emplace(in, StateSet(a.state_count(), false));
        it->second[q] = true;
    }
    std::vector<AcceptanceClause> clauses;
    for (auto& [in, finals] : classes) {
        auto phi = PresburgerFormula::verum(n);
        for (std::size_t i : in) phi = formula_and(phi, negated[i], limits);
        if (phi.clauses().empty()) continue;
        clauses.push_back({std::move(finals), std::move(phi)});
    }
    for (StateId q = 0; q < a.state_count(); ++q) a.set_final(q, false);
    for (const auto& c : clauses) {
        for (StateId q = 0; q < a.state_count(); ++q) {
            if (c.finals[q]) a.set_final(q);
        }
    }
    return Ca(std::move(a), std::move(clauses));
}

InclusionResult inclusion(const Ca& m1, const Ca& m2, const Limits& limits) {
    if (m1.alphabet() != m2.alphabet()) throw InvalidArgument("inclusion: alphabets differ");
    auto diff = combine(m1, complement_det(m2, limits), CombineOp::Intersection, limits);
    auto w = some_word(diff, limits);
    return {!w.has_value(), w};
}

InclusionResult universal(const Ca& m, const Limits& limits) {
    return inclusion(universal_ca(m.alphabet()), m, limits);
}

Ca combine(const Ca& m1, const Ca& m2, CombineOp op, const Limits& limits) {
    if (m1.alphabet() != m2.alphabet()) throw InvalidArgument("combine: alphabets differ");
    switch (op) {
        case CombineOp::Union:
            return union_of(m1, m2, limits);
        case CombineOp::Intersection:
            return intersection_of(m1, m2, limits);
        case CombineOp::Concatenation:
            return concatenation_of(m1, m2, limits);
    }
    throw InvalidArgument("combine: unknown operation");
}

Ca apply_morphism(const Ca& m, const Morphism& h, const Limits& limits) {
    h.validate();
    const Nfa& a = m.automaton();
    for (Symbol s : a.alphabet()) {
        if (!alphabet_contains(h.source, s)) throw InvalidArgument("apply_morphism: symbol outside the morphism source");
    }
    Nfa out(a.state_count(), h.target, a.initial());
    std::vector<TransitionId> first;
    for (const auto& t : a.transitions()) {
        Word image = t.label ? h.image.at(*t.label) : Word{};
        if (image.size() <= 1) {
            std::optional<Symbol> label;
            if (!image.empty()) label = image[0];
            first.push_back(out.add_transition(t.from, label, t.to));
            continue;
        }
        StateId at = t.from;
        for (std::size_t i = 0; i < image.size(); ++i) {
            StateId next = i + 1 == image.size() ? t.to : out.add_state();
            TransitionId id = out.add_transition(at, image[i], next);
            if (i == 0) first.push_back(id);
            at = next;
        }
    }
    const std::size_t n = out.transition_count();
    IntMatrix pick(a.transition_count(), IntVector(n, 0));
    for (TransitionId t = 0; t < a.transition_count(); ++t) pick[t][first[t]] = 1;
    std::vector<AcceptanceClause> clauses;
    for (const auto& c : m.clauses()) {
        clauses.push_back({shifted(c.finals, 0, out.state_count()), constraint_preimage(c.constraint, pick, n, limits)});
    }
    for (StateId q = 0; q < a.state_count(); ++q) out.set_final(q, a.is_final(q));
    return Ca(std::move(out), std::move(clauses));
}

Ca inverse_morphism(const Ca& m, const Morphism& h, const Limits& limits) {
    h.validate();
    const Nfa& a = m.automaton();
    for (const auto& [s, w] : h.image) {
        for (Symbol x : w) {
            if (!alphabet_contains(a.alphabet(), x)) throw InvalidArgument("inverse_morphism: image outside the alphabet");
        }
    }
    const std::size_t q = a.state_count();
    Nfa out(q, h.source, a.initial());
    // Column j: the counts of the original transitions taken by new transition j.
    std::vector<NatVector> columns;
    std::size_t nodes = 0;

    if (!a.has_epsilon()) {
        for (StateId p = 0; p < q; ++p) {
            for (Symbol c : h.source) {
                std::vector<std::pair<Path, StateId>> found;
                Path current;
                paths_spelling(a, p, h.image.at(c), 0, current, found, nodes, limits);
                for (const auto& [path, to] : found) {
                    out.add_transition(p, c, to);
                    columns.push_back(parikh_of(a, path));
                }
            }
        }
    } else {
        // Reading c moves into a copy of the automaton indexed by the
        // position in h(c); ε-moves there replay the original transitions.
        for (const auto& t : a.transitions()) {
            if (!t.is_epsilon()) continue;
            out.add_transition(t.from, std::nullopt, t.to);
        }
        for (TransitionId t = 0; t < a.transition_count(); ++t) {
            if (a.transition(t).is_epsilon()) columns.push_back(NatVector::unit(a.transition_count(), t));
        }
        const NatVector none(a.transition_count());
        for (Symbol c : h.source) {
            const Word& image = h.image.at(c);
            std::vector<std::vector<StateId>> layer(image.size() + 1, std::vector<StateId>(q));
            for (auto& l : layer) {
                for (auto& s : l) s = out.add_state();
            }
            for (StateId p = 0; p < q; ++p) {
                out.add_transition(p, c, layer[0][p]);
                columns.push_back(none);
                out.add_transition(layer[image.size()][p], std::nullopt, p);
                columns.push_back(none);
            }
            for (std::size_t j = 0; j <= image.size(); ++j) {
                for (TransitionId t = 0; t < a.transition_count(); ++t) {
                    const auto& tr = a.transition(t);
                    if (tr.is_epsilon()) {
                        out.add_transition(layer[j][tr.from], std::nullopt, layer[j][tr.to]);
                    } else if (j < image.size() && *tr.label == image[j]) {
                        out.add_transition(layer[j][tr.from], std::nullopt, layer[j + 1][tr.to]);
                    } else {
                        continue;
                    }
                    columns.push_back(NatVector::unit(a.transition_count(), t));
                }
            }
        }
    }

    const std::size_t n = out.transition_count();
    IntMatrix w(a.transition_count(), IntVector(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < a.transition_count(); ++i) w[i][j] = columns[j][i];
    }
    std::vector<AcceptanceClause> clauses;
    for (const auto& c : m.clauses()) {
        clauses.push_back({shifted(c.finals, 0, out.state_count()), constraint_preimage(c.constraint, w, n, limits)});
    }
    for (StateId p = 0; p < q; ++p) out.set_final(p, a.is_final(p));
    return Ca(std::move(out), std::move(clauses));
}

Pa commutative_closure(const Ca& m, const Limits& limits) {
    const Alphabet& sigma = m.alphabet();
    Nfa a(1, sigma);
    std::vector<NatVector> weights;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        a.add_transition(0, sigma[i], 0);
        weights.push_back(NatVector::unit(sigma.size(), i));
    }
    a.set_final(0);
    return Pa(std::move(a), std::move(weights), letter_image(m, limits));
}

namespace {

std::map<Symbol, NatVector> letter_weights(const Pa& p) {
    if (!p.is_lpa()) throw InvalidArgument("not an LPA: one letter carries different vectors");
    std::map<Symbol, NatVector> v;
    for (Symbol s : p.alphabet()) v.emplace(s, NatVector::zero(p.dim()));
    for (TransitionId t = 0; t < p.automaton().transition_count(); ++t) {
        v[*p.automaton().transition(t).label] = p.weights()[t];
    }
    return v;
}

}  // namespace

Pa lpa_determinize(const Pa& p, const Limits&) {
    auto v = letter_weights(p);
    Nfa d = determinize_complete(p.automaton());
    std::vector<NatVector> weights;
    for (const auto& t : d.transitions()) weights.push_back(v.at(*t.label));
    return Pa(std::move(d), std::move(weights), p.constraint());
}

LpaForm lpa_characterize(const Pa& p, const Limits& limits) {
    auto v = letter_weights(p);
    const Alphabet& sigma = p.alphabet();
    IntMatrix m(p.dim(), IntVector(sigma.size(), 0));
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        for (std::size_t i = 0; i < p.dim(); ++i) m[i][j] = v.at(sigma[j])[i];
    }
    return {p.automaton(), constraint_preimage(p.constraint(), m, sigma.size(), limits)};
}

bool lpa_member(const LpaForm& f, const Word& w) {
    if (!accepts(f.regular, w)) return false;
    auto counts = letter_counts(f.regular.alphabet(), w);
    return constraint_contains(f.letter_constraint, NatVector(IntVector(counts.begin(), counts.end())));
}

std::optional<Word> lpa_blocker(const Pa& p, const Nfa& e, std::size_t bound, const Limits& limits) {
    auto form = lpa_characterize(p, limits);
    const Alphabet& sigma = p.alphabet();
    for (Symbol s : e.alphabet()) {
        if (!alphabet_contains(sigma, s)) throw InvalidArgument("lpa_blocker: E uses a symbol outside the LPA alphabet");
    }
    IntMatrix letters(sigma.size(), IntVector(form.regular.transition_count(), 0));
    for (TransitionId t = 0; t < form.regular.transition_count(); ++t) {
        letters[symbol_index(sigma, *form.regular.transition(t).label)][t] = 1;
    }
    auto regular_letters = sl_linear_image(parikh_image(form.regular, limits), letters);

    std::optional<Word> found;
    for_each_word(e.alphabet(), bound, [&](const Word& w) {
        if (!accepts(e, w)) return true;
        auto counts = letter_counts(sigma, w);
        NatVector v(IntVector(counts.begin(), counts.end()));
        // c(w) meets L(P) iff some permutation of w is in R and Φ(w) in C'.
        bool meets = constraint_contains(form.letter_constraint, v) && sl_member(v, regular_letters);
        if (meets) return true;
        found = w;
        return false;
    });
    return found;
}

}  // namespace parikh
