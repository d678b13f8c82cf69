#include "parikh/nfa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace parikh {

Nfa::Nfa(std::size_t states, Alphabet alphabet, StateId initial)
    : alphabet_(make_alphabet(std::move(alphabet))), initial_(initial), finals_(states, false), out_(states) {
    if (states == 0) throw InvalidArgument("automaton needs at least one state");
    if (initial >= states) throw InvalidArgument("initial state out of range");
}

StateId Nfa::add_state() {
    out_.emplace_back();
    finals_.push_back(false);
    return out_.size() - 1;
}

TransitionId Nfa::add_transition(StateId from, std::optional<Symbol> label, StateId to) {
    if (from >= state_count() || to >= state_count()) throw InvalidArgument("transition endpoint out of range");
    if (label && !alphabet_contains(alphabet_, *label)) {
        throw InvalidArgument("transition label '" + to_utf8(*label) + "' is not in the alphabet");
    }
    transitions_.push_back({from, label, to});
    out_[from].push_back(transitions_.size() - 1);
    return transitions_.size() - 1;
}

void Nfa::set_final(StateId q, bool final) { finals_.at(q) = final; }

void Nfa::set_initial(StateId q) {
    if (q >= state_count()) throw InvalidArgument("initial state out of range");
    initial_ = q;
}

std::vector<StateId> Nfa::final_states() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < finals_.size(); ++q) {
        if (finals_[q]) out.push_back(q);
    }
    return out;
}

bool Nfa::has_epsilon() const {
    return std::any_of(transitions_.begin(), transitions_.end(), [](const Transition& t) { return t.is_epsilon(); });
}

bool Nfa::is_deterministic() const {
    for (StateId q = 0; q < state_count(); ++q) {
        std::set<Symbol> seen;
        for (TransitionId t : out_[q]) {
            const auto& tr = transitions_[t];
            if (tr.is_epsilon() || !seen.insert(*tr.label).second) return false;
        }
    }
    return true;
}

bool Nfa::is_complete() const {
    for (StateId q = 0; q < state_count(); ++q) {
        std::set<Symbol> seen;
        for (TransitionId t : out_[q]) {
            if (transitions_[t].label) seen.insert(*transitions_[t].label);
        }
        if (seen.size() != alphabet_.size()) return false;
    }
    return true;
}

Path Path::operator+(const Path& other) const {
    Path p = *this;
    p.steps.insert(p.steps.end(), other.steps.begin(), other.steps.end());
    return p;
}

bool is_valid_path(const Nfa& a, const Path& p) {
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] >= a.transition_count()) return false;
        if (i > 0 && a.transition(p.steps[i - 1]).to != a.transition(p.steps[i]).from) return false;
    }
    return true;
}

Word label_of(const Nfa& a, const Path& p) {
    if (!is_valid_path(a, p)) throw InvalidArgument("label_of: not a path of the automaton");
    Word w;
    for (TransitionId t : p.steps) {
        if (const auto& l = a.transition(t).label) w.push_back(*l);
    }
    return w;
}

bool is_accepting(const Nfa& a, const Path& p, const StateSet& finals) {
    if (!is_valid_path(a, p)) return false;
    if (p.empty()) return finals.at(a.initial());
    return a.transition(p.steps.front()).from == a.initial() && finals.at(a.transition(p.steps.back()).to);
}

bool is_accepting(const Nfa& a, const Path& p) { return is_accepting(a, p, a.finals()); }

NatVector parikh_of(const Nfa& a, const Path& p) {
    NatVector v(a.transition_count());
    for (TransitionId t : p.steps) v.add_at(t, 1);
    return v;
}

std::vector<StateId> states_of(const Nfa& a, const Path& p, StateId start) {
    std::vector<StateId> out{start};
    for (TransitionId t : p.steps) out.push_back(a.transition(t).to);
    return out;
}

namespace {

void epsilon_close(const Nfa& a, std::vector<bool>& set) {
    std::vector<StateId> stack;
    for (StateId q = 0; q < set.size(); ++q) {
        if (set[q]) stack.push_back(q);
    }
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (TransitionId t : a.outgoing(q)) {
            const auto& tr = a.transition(t);
            if (tr.is_epsilon() && !set[tr.to]) {
                set[tr.to] = true;
                stack.push_back(tr.to);
            }
        }
    }
}

}  // namespace

bool accepts(const Nfa& a, const StateSet& finals, const Word& w) {
    std::vector<bool> current(a.state_count(), false);
    current[a.initial()] = true;
    epsilon_close(a, current);
    for (Symbol s : w) {
        std::vector<bool> next(a.state_count(), false);
        for (StateId q = 0; q < current.size(); ++q) {
            if (!current[q]) continue;
            for (TransitionId t : a.outgoing(q)) {
                const auto& tr = a.transition(t);
                if (tr.label && *tr.label == s) next[tr.to] = true;
            }
        }
        epsilon_close(a, next);
        current = std::move(next);
    }
    for (StateId q = 0; q < current.size(); ++q) {
        if (current[q] && finals.at(q)) return true;
    }
    return false;
}

bool accepts(const Nfa& a, const Word& w) { return accepts(a, a.finals(), w); }

Product product(const Nfa& a, const Nfa& b, const StateSet& left_finals, const StateSet& right_finals) {
    if (a.alphabet() != b.alphabet()) throw InvalidArgument("product: alphabets differ");
    std::map<std::pair<StateId, StateId>, StateId> index;
    Product out{Nfa(1, a.alphabet()), {}, {}, {}};
    auto intern = [&](StateId p, StateId q) {
        auto [it, inserted] = index.try_emplace({p, q}, out.pairs.size());
        if (inserted) {
            if (!out.pairs.empty()) out.automaton.add_state();
            out.pairs.emplace_back(p, q);
        }
        return it->second;
    };
    intern(a.initial(), b.initial());
    for (std::size_t k = 0; k < out.pairs.size(); ++k) {
        auto [p, q] = out.pairs[k];
        for (TransitionId ta : a.outgoing(p)) {
            const auto& tra = a.transition(ta);
            if (tra.is_epsilon()) {
                StateId to = intern(tra.to, q);
                out.automaton.add_transition(k, std::nullopt, to);
                out.left.emplace_back(ta);
                out.right.emplace_back(std::nullopt);
                continue;
            }
            for (TransitionId tb : b.outgoing(q)) {
                const auto& trb = b.transition(tb);
                if (trb.label != tra.label) continue;
                StateId to = intern(tra.to, trb.to);
                out.automaton.add_transition(k, tra.label, to);
                out.left.emplace_back(ta);
                out.right.emplace_back(tb);
            }
        }
        for (TransitionId tb : b.outgoing(q)) {
            const auto& trb = b.transition(tb);
            if (!trb.is_epsilon()) continue;
            StateId to = intern(p, trb.to);
            out.automaton.add_transition(k, std::nullopt, to);
            out.left.emplace_back(std::nullopt);
            out.right.emplace_back(tb);
        }
    }
    for (StateId k = 0; k < out.pairs.size(); ++k) {
        out.automaton.set_final(k, left_finals.at(out.pairs[k].first) && right_finals.at(out.pairs[k].second));
    }
    return out;
}

Product product(const Nfa& a, const Nfa& b) { return product(a, b, a.finals(), b.finals()); }

Nfa determinize_complete(const Nfa& a) {
    if (a.has_epsilon()) throw InvalidArgument("determinize_complete: automaton has ε-transitions");
    const auto& sigma = a.alphabet();
    using Subset = std::vector<StateId>;
    std::map<Subset, std::size_t> index;
    std::vector<Subset> subsets;
    std::vector<std::vector<std::size_t>> delta;
    auto intern = [&](Subset s) {
        auto [it, inserted] = index.try_emplace(s, subsets.size());
        if (inserted) subsets.push_back(std::move(s));
        return it->second;
    };
    intern({a.initial()});
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        std::vector<std::size_t> row;
        for (Symbol s : sigma) {
            std::set<StateId> next;
            for (StateId q : subsets[k]) {
                for (TransitionId t : a.outgoing(q)) {
                    if (a.transition(t).label == s) next.insert(a.transition(t).to);
                }
            }
            row.push_back(intern(Subset(next.begin(), next.end())));
        }
        delta.push_back(std::move(row));
    }

    const std::size_t n = subsets.size();
    std::vector<bool> final(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        final[k] = std::any_of(subsets[k].begin(), subsets[k].end(), [&](StateId q) { return a.is_final(q); });
    }
    // Live subsets reach a final subset.
    std::vector<bool> live = final;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (live[k]) continue;
            for (std::size_t to : delta[k]) {
                if (live[to]) {
                    live[k] = true;
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::size_t> renumber(n, 0);
    std::size_t count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (live[k]) renumber[k] = count++;
    }
    const bool need_sink = std::find(live.begin(), live.end(), false) != live.end() || count == 0;
    const std::size_t sink = count;
    Nfa out(count + (need_sink ? 1 : 0), sigma, live[0] ? renumber[0] : sink);
    for (std::size_t k = 0; k < n; ++k) {
        if (!live[k]) continue;
        out.set_final(renumber[k], final[k]);
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            std::size_t to = delta[k][i];
            out.add_transition(renumber[k], sigma[i], live[to] ? renumber[to] : sink);
        }
    }
    if (need_sink) {
        for (Symbol s : sigma) out.add_transition(sink, s, sink);
    }
    return out;
}

Nfa complete_with_sink(const Nfa& a) {
    Nfa out = a;
    std::optional<StateId> sink;
    for (StateId q = 0; q < a.state_count(); ++q) {
        for (Symbol s : a.alphabet()) {
            bool has = std::any_of(a.outgoing(q).begin(), a.outgoing(q).end(),
                                   [&](TransitionId t) { return a.transition(t).label == s; });
            if (has) continue;
            if (!sink) sink = out.add_state();
            out.add_transition(q, s, *sink);
        }
    }
    if (sink) {
        for (Symbol s : a.alphabet()) out.add_transition(*sink, s, *sink);
    }
    return out;
}

std::vector<Path> elementary_cycles(const Nfa& a, const Limits& limits) {
    std::vector<Path> cycles;
    std::vector<bool> on_path(a.state_count(), false);
    std::vector<TransitionId> stack;
    std::size_t nodes = 0;

    auto explore = [&](auto&& self, StateId anchor, StateId q) -> void {
        for (TransitionId t : a.outgoing(q)) {
            if (++nodes > limits.enumeration_nodes) throw ResourceLimit("elementary_cycles: node budget exhausted");
            StateId to = a.transition(t).to;
            stack.push_back(t);
            if (to == anchor) {
                cycles.push_back(Path{stack});
            } else if (!on_path[to]) {
                on_path[to] = true;
                self(self, anchor, to);
                on_path[to] = false;
            }
            stack.pop_back();
        }
    };
    for (StateId s = 0; s < a.state_count(); ++s) {
        on_path[s] = true;
        explore(explore, s, s);
        on_path[s] = false;
    }
    return cycles;
}

std::optional<Path> realize_counts(const Nfa& a, const StateSet& finals, const NatVector& counts,
                                   const Limits& limits) {
    require_dim(counts.dim(), a.transition_count(), "realize_counts");
    IntVector remaining = counts.entries();
    Integer left = counts.norm1();
    std::set<std::pair<StateId, IntVector>> failed;
    std::vector<TransitionId> stack;
    std::size_t nodes = 0;

    auto search = [&](auto&& self, StateId q) -> bool {
        if (left == 0) return finals.at(q);
        if (failed.count({q, remaining})) return false;
        if (++nodes > limits.enumeration_nodes) throw ResourceLimit("realize_counts: node budget exhausted");
        for (TransitionId t : a.outgoing(q)) {
            if (remaining[t] == 0) continue;
            remaining[t] -= 1;
            left -= 1;
            stack.push_back(t);
            if (self(self, a.transition(t).to)) return true;
            stack.pop_back();
            remaining[t] += 1;
            left += 1;
        }
        failed.insert({q, remaining});
        return false;
    };
    if (search(search, a.initial())) return Path{stack};
    return std::nullopt;
}

Nfa line_automaton(const Alphabet& alphabet, const Word& w) {
    Nfa line(w.size() + 1, alphabet, 0);
    for (std::size_t i = 0; i < w.size(); ++i) line.add_transition(i, w[i], i + 1);
    line.set_final(w.size());
    return line;
}

StateSet reachable_states(const Nfa& a) {
    StateSet seen(a.state_count(), false);
    std::vector<StateId> stack{a.initial()};
    seen[a.initial()] = true;
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (TransitionId t : a.outgoing(q)) {
            StateId to = a.transition(t).to;
            if (!seen[to]) {
                seen[to] = true;
                stack.push_back(to);
            }
        }
    }
    return seen;
}

}  // namespace parikh
