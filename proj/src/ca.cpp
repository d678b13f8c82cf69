#include "parikh/ca.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "parikh/parikh_image.hpp"

namespace parikh {

namespace {

void check_clause(const Nfa& a, const AcceptanceClause& c) {
    require_dim(c.finals.size(), a.state_count(), "acceptance clause finals");
    require_dim(constraint_dim(c.constraint), a.transition_count(), "acceptance clause constraint");
}

bool has_epsilon_cycle(const Nfa& a) {
    // 0 unvisited, 1 on stack, 2 done
    std::vector<int> mark(a.state_count(), 0);
    auto dfs = [&](auto&& self, StateId q) -> bool {
        mark[q] = 1;
        for (TransitionId t : a.outgoing(q)) {
            const auto& tr = a.transition(t);
            if (!tr.is_epsilon()) continue;
            if (mark[tr.to] == 1) return true;
            if (mark[tr.to] == 0 && self(self, tr.to)) return true;
        }
        mark[q] = 2;
        return false;
    };
    for (StateId q = 0; q < a.state_count(); ++q) {
        if (mark[q] == 0 && dfs(dfs, q)) return true;
    }
    return false;
}

void check_word(const Alphabet& sigma, const Word& w) {
    for (Symbol s : w) {
        if (!alphabet_contains(sigma, s)) throw InvalidArgument("symbol '" + to_utf8(s) + "' is not in the alphabet");
    }
}

// Run search without ε-cycles: every run on w has bounded length.
std::optional<AcceptingRun> search_runs(const Ca& m, const Word& w, const Limits& limits) {
    const Nfa& a = m.automaton();
    std::set<std::tuple<StateId, std::size_t, NatVector>> seen;
    NatVector counts(a.transition_count());
    std::vector<TransitionId> stack;
    std::size_t nodes = 0;
    std::optional<AcceptingRun> found;

    auto dfs = [&](auto&& self, StateId q, std::size_t pos) -> bool {
        if (!seen.insert({q, pos, counts}).second) return false;
        if (++nodes > limits.enumeration_nodes) throw ResourceLimit("membership: node budget exhausted");
        if (pos == w.size()) {
            for (std::size_t i = 0; i < m.clauses().size(); ++i) {
                const auto& c = m.clauses()[i];
                if (c.finals[q] && constraint_contains(c.constraint, counts)) {
                    found = AcceptingRun{Path{stack}, i};
                    return true;
                }
            }
        }
        for (TransitionId t : a.outgoing(q)) {
            const auto& tr = a.transition(t);
            std::size_t next = pos;
            if (tr.label) {
                if (pos == w.size() || *tr.label != w[pos]) continue;
                ++next;
            }
            counts.add_at(t, 1);
            stack.push_back(t);
            bool ok = self(self, tr.to, next);
            stack.pop_back();
            counts.add_at(t, -1);
            if (ok) return true;
        }
        return false;
    };
    dfs(dfs, a.initial(), 0);
    return found;
}

IntMatrix back_map_matrix(const std::vector<std::optional<TransitionId>>& back, std::size_t rows) {
    IntMatrix m(rows, IntVector(back.size(), 0));
    for (std::size_t j = 0; j < back.size(); ++j) {
        if (back[j]) m[*back[j]][j] = 1;
    }
    return m;
}

// Φ(Run) ∩ C for one clause, over transition counts.
SemilinearSet clause_counts(const Ca& m, const AcceptanceClause& c, const Limits& limits) {
    auto image = parikh_image(m.automaton(), c.finals, limits);
    if (image.is_empty()) return image;
    return sl_intersect(image, constraint_generators(c.constraint, limits), limits);
}

IntMatrix letter_matrix(const Nfa& a) {
    IntMatrix m(a.alphabet().size(), IntVector(a.transition_count(), 0));
    for (TransitionId t = 0; t < a.transition_count(); ++t) {
        const auto& tr = a.transition(t);
        if (tr.label) m[symbol_index(a.alphabet(), *tr.label)][t] = 1;
    }
    return m;
}

}  // namespace

Ca::Ca(Nfa automaton, Constraint constraint) : automaton_(std::move(automaton)) {
    clauses_.push_back({automaton_.finals(), std::move(constraint)});
    check_clause(automaton_, clauses_.back());
}

Ca::Ca(Nfa automaton, std::vector<AcceptanceClause> clauses)
    : automaton_(std::move(automaton)), clauses_(std::move(clauses)) {
    for (const auto& c : clauses_) check_clause(automaton_, c);
}

bool Ca::has_formula_constraints() const {
    return std::all_of(clauses_.begin(), clauses_.end(),
                       [](const AcceptanceClause& c) { return is_formula(c.constraint); });
}

Pa::Pa(Nfa automaton, std::vector<NatVector> weights, Constraint constraint)
    : automaton_(std::move(automaton)), weights_(std::move(weights)), constraint_(std::move(constraint)) {
    if (automaton_.has_epsilon()) throw InvalidArgument("a PA reads one letter per transition");
    require_dim(weights_.size(), automaton_.transition_count(), "PA weights");
    for (const auto& w : weights_) require_dim(w.dim(), dim(), "PA weight");
}

bool Pa::is_deterministic() const {
    for (StateId q = 0; q < automaton_.state_count(); ++q) {
        std::map<Symbol, std::pair<StateId, NatVector>> seen;
        for (TransitionId t : automaton_.outgoing(q)) {
            const auto& tr = automaton_.transition(t);
            auto [it, inserted] = seen.try_emplace(*tr.label, tr.to, weights_[t]);
            if (!inserted && (it->second.first != tr.to || it->second.second != weights_[t])) return false;
        }
    }
    return true;
}

bool Pa::is_lpa() const {
    std::map<Symbol, NatVector> seen;
    for (TransitionId t = 0; t < automaton_.transition_count(); ++t) {
        auto [it, inserted] = seen.try_emplace(*automaton_.transition(t).label, weights_[t]);
        if (!inserted && it->second != weights_[t]) return false;
    }
    return true;
}

void Morphism::validate() const {
    for (Symbol s : source) {
        auto it = image.find(s);
        if (it == image.end()) throw InvalidArgument("morphism has no image for '" + to_utf8(s) + "'");
        check_word(target, it->second);
    }
    for (const auto& [s, w] : image) {
        if (!alphabet_contains(source, s)) throw InvalidArgument("morphism maps foreign symbol '" + to_utf8(s) + "'");
    }
}

Word Morphism::apply(const Word& w) const {
    Word out;
    for (Symbol s : w) {
        auto it = image.find(s);
        if (it == image.end()) throw InvalidArgument("morphism has no image for '" + to_utf8(s) + "'");
        out += it->second;
    }
    return out;
}

Ca pa_to_ca(const Pa& p, const Limits& limits) {
    const Nfa& a = p.automaton();
    const std::size_t d = p.dim();
    std::map<std::tuple<StateId, Symbol, StateId>, TransitionId> groups;
    Nfa out(a.state_count(), a.alphabet(), a.initial());
    std::vector<TransitionId> group_of(a.transition_count());
    std::vector<std::vector<TransitionId>> members;
    for (TransitionId t = 0; t < a.transition_count(); ++t) {
        const auto& tr = a.transition(t);
        auto [it, inserted] = groups.try_emplace({tr.from, *tr.label, tr.to}, out.transition_count());
        if (inserted) {
            out.add_transition(tr.from, tr.label, tr.to);
            members.emplace_back();
        }
        group_of[t] = it->second;
        members[it->second].push_back(t);
    }
    for (StateId q = 0; q < a.state_count(); ++q) out.set_final(q, a.is_final(q));

    const std::size_t g = out.transition_count();
    bool uniform = true;
    for (const auto& ms : members) {
        for (TransitionId t : ms) uniform = uniform && p.weights()[t] == p.weights()[ms.front()];
    }
    if (uniform) {
        IntMatrix w(d, IntVector(g, 0));
        for (std::size_t j = 0; j < g; ++j) {
            for (std::size_t i = 0; i < d; ++i) w[i][j] = p.weights()[members[j].front()][i];
        }
        return Ca(std::move(out), constraint_preimage(p.constraint(), w, g, limits));
    }
    // Differing weights on one (p, a, q): counts over the original
    // transitions, then summed per group.
    const std::size_t n = a.transition_count();
    IntMatrix w(d, IntVector(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) w[i][j] = p.weights()[j][i];
    }
    auto per_transition = sl_preimage(constraint_generators(p.constraint(), limits), w, n, limits);
    IntMatrix grouping(g, IntVector(n, 0));
    for (std::size_t j = 0; j < n; ++j) grouping[group_of[j]][j] = 1;
    return Ca(std::move(out), sl_linear_image(per_transition, grouping));
}

std::optional<AcceptingRun> accepting_run(const Ca& m, const Word& w, const Limits& limits) {
    check_word(m.alphabet(), w);
    const Nfa& a = m.automaton();
    if (!has_epsilon_cycle(a)) return search_runs(m, w, limits);

    auto line = line_automaton(a.alphabet(), w);
    auto prod = product(a, line);
    IntMatrix back = back_map_matrix(prod.left, a.transition_count());
    const std::size_t n = prod.automaton.transition_count();
    for (std::size_t i = 0; i < m.clauses().size(); ++i) {
        const auto& c = m.clauses()[i];
        StateSet finals(prod.pairs.size(), false);
        for (StateId s = 0; s < prod.pairs.size(); ++s) {
            finals[s] = c.finals[prod.pairs[s].first] && prod.pairs[s].second == w.size();
        }
        auto image = parikh_image(prod.automaton, finals, limits);
        if (image.is_empty()) continue;
        auto lifted = constraint_generators(constraint_preimage(c.constraint, back, n, limits), limits);
        auto both = sl_intersect(image, lifted, limits);
        auto v = sl_some_member(both);
        if (!v) continue;
        auto path = realize_counts(prod.automaton, finals, *v, limits);
        if (!path) throw Error("membership: a member of the Parikh image has no run");
        Path mapped;
        for (TransitionId t : path->steps) mapped.steps.push_back(*prod.left[t]);
        return AcceptingRun{std::move(mapped), i};
    }
    return std::nullopt;
}

bool membership(const Ca& m, const Word& w, const Limits& limits) { return accepting_run(m, w, limits).has_value(); }

bool membership(const Pa& p, const Word& w, const Limits& limits) { return membership(pa_to_ca(p, limits), w, limits); }

bool is_empty(const Ca& m, const Limits& limits) {
    for (const auto& c : m.clauses()) {
        if (!clause_counts(m, c, limits).is_empty()) return false;
    }
    return true;
}

SemilinearSet letter_image(const Ca& m, const Limits& limits) {
    IntMatrix letters = letter_matrix(m.automaton());
    SemilinearSet out(m.alphabet().size());
    for (const auto& c : m.clauses()) out = sl_union(out, sl_linear_image(clause_counts(m, c, limits), letters));
    out.dedup();
    return out;
}

Cardinality cardinality(const Ca& m, const Limits& limits) {
    // Finitely many words iff finitely many letter-count vectors.
    auto letters = letter_image(m, limits);
    auto kind = sl_cardinality(letters);
    if (kind.kind != Cardinality::Kind::Finite) return kind;

    std::set<NatVector> vectors;
    std::size_t longest = 0;
    for (const auto& l : letters.components()) {
        vectors.insert(l.base());
        longest = std::max(longest, static_cast<std::size_t>(l.base().norm1().get_ui()));
    }
    const std::size_t k = m.alphabet().size();
    Integer words = 0;
    Integer power = 1;
    for (std::size_t len = 0; len <= longest; ++len) {
        words += power;
        power *= static_cast<unsigned long>(k);
    }
    if (words > Integer(static_cast<unsigned long>(limits.enumeration_nodes))) return Cardinality::finite(std::nullopt);
    Integer count = 0;
    for_each_word(m.alphabet(), longest, [&](const Word& w) {
        auto lc = letter_counts(m.alphabet(), w);
        NatVector v(IntVector(lc.begin(), lc.end()));
        if (vectors.count(v) && membership(m, w, limits)) ++count;
        return true;
    });
    return Cardinality::finite(count);
}

std::optional<Word> some_word(const Ca& m, const Limits& limits) {
    for (const auto& c : m.clauses()) {
        auto v = sl_some_member(clause_counts(m, c, limits));
        if (!v) continue;
        auto path = realize_counts(m.automaton(), c.finals, *v, limits);
        if (!path) throw Error("some_word: a member of the Parikh image has no run");
        return label_of(m.automaton(), *path);
    }
    return std::nullopt;
}

Ca universal_ca(const Alphabet& alphabet) {
    Nfa a(1, alphabet);
    for (Symbol s : a.alphabet()) a.add_transition(0, s, 0);
    a.set_final(0);
    const std::size_t n = a.transition_count();
    return Ca(std::move(a), constraint_full(n));
}

}  // namespace parikh
