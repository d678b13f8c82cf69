#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "parikh/constraint.hpp"
#include "parikh/nfa.hpp"
#include "parikh/semilinear.hpp"

namespace parikh {

/// A run accepted by this clause ends in `finals` and has its transition
/// counts in `constraint`.
struct AcceptanceClause {
    StateSet finals;
    Constraint constraint;

    friend bool operator==(const AcceptanceClause&, const AcceptanceClause&) = default;
};

/// Constrained automaton: L = { μ(π) | π accepting run, Φ(π) in C }.
///
/// Several clauses accept a word when one of them accepts some run of it.
/// A one-clause Ca is the usual (A, C); the list keeps deterministic
/// complement deterministic.
class Ca {
public:
    /// One clause with the automaton's own final states.
    Ca(Nfa automaton, Constraint constraint);
    Ca(Nfa automaton, std::vector<AcceptanceClause> clauses);

    const Nfa& automaton() const { return automaton_; }
    const std::vector<AcceptanceClause>& clauses() const { return clauses_; }
    /// Dimension of every constraint: the number of transitions.
    std::size_t dim() const { return automaton_.transition_count(); }
    const Alphabet& alphabet() const { return automaton_.alphabet(); }
    bool is_deterministic() const { return automaton_.is_deterministic(); }
    bool has_formula_constraints() const;

    friend bool operator==(const Ca&, const Ca&) = default;

private:
    Nfa automaton_;
    std::vector<AcceptanceClause> clauses_;
};

/// Parikh automaton: transition t carries weights[t] in N^dim and a run is
/// accepted when the sum of its weights lies in the constraint.
class Pa {
public:
    Pa(Nfa automaton, std::vector<NatVector> weights, Constraint constraint);

    const Nfa& automaton() const { return automaton_; }
    const std::vector<NatVector>& weights() const { return weights_; }
    const Constraint& constraint() const { return constraint_; }
    std::size_t dim() const { return constraint_dim(constraint_); }
    const Alphabet& alphabet() const { return automaton_.alphabet(); }

    /// At most one (target, weight) per (state, letter).
    bool is_deterministic() const;
    /// Transitions reading the same letter carry the same weight.
    bool is_lpa() const;

    friend bool operator==(const Pa&, const Pa&) = default;

private:
    Nfa automaton_;
    std::vector<NatVector> weights_;
    Constraint constraint_;
};

struct Morphism {
    Alphabet source;
    Alphabet target;
    std::map<Symbol, Word> image;

    /// Throws InvalidArgument unless total on `source` with images over `target`.
    void validate() const;
    Word apply(const Word& w) const;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Transitions with equal (p, a, q) become one; deterministic PA give
/// deterministic CA. The constraint is C pulled back through the weight
/// matrix (formula substitution, or a Hilbert preimage).
Ca pa_to_ca(const Pa& p, const Limits& limits = {});

/// An accepting run labeled `w` with counts accepted by some clause.
struct AcceptingRun {
    Path path;
    std::size_t clause;
};

std::optional<AcceptingRun> accepting_run(const Ca& m, const Word& w, const Limits& limits = {});
bool membership(const Ca& m, const Word& w, const Limits& limits = {});
bool membership(const Pa& p, const Word& w, const Limits& limits = {});

bool is_empty(const Ca& m, const Limits& limits = {});
/// Empty, finitely many words (with the count when it is cheap to
/// enumerate), or infinitely many.
Cardinality cardinality(const Ca& m, const Limits& limits = {});

/// Some accepted word, or none when the language is empty.
std::optional<Word> some_word(const Ca& m, const Limits& limits = {});

/// The letter-count image { Φ(w) | w in L(M) } over the alphabet order.
SemilinearSet letter_image(const Ca& m, const Limits& limits = {});

/// Σ* as a one-state CA with constraint true.
Ca universal_ca(const Alphabet& alphabet);

}  // namespace parikh
