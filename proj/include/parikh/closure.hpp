#pragma once

#include <optional>

#include "parikh/ca.hpp"

namespace parikh {

/// Deterministic complement. Requires a deterministic automaton and formula
/// constraints (Unsupported otherwise); completes the automaton with a sink.
/// The result has the same automaton and one clause per class of states
/// with the same set of clauses they are final in.
Ca complement_det(const Ca& m, const Limits& limits = {});

struct InclusionResult {
    bool included;
    /// A word of L(M1) \ L(M2) when not included.
    std::optional<Word> witness;
};

/// L(m1) ⊆ L(m2) for a deterministic m2 with formula constraints.
InclusionResult inclusion(const Ca& m1, const Ca& m2, const Limits& limits = {});
/// L(m) = Σ*, via inclusion of the one-state CA for Σ*.
InclusionResult universal(const Ca& m, const Limits& limits = {});

enum class CombineOp { Union, Intersection, Concatenation };

Ca combine(const Ca& m1, const Ca& m2, CombineOp op, const Limits& limits = {});

Ca apply_morphism(const Ca& m, const Morphism& h, const Limits& limits = {});
Ca inverse_morphism(const Ca& m, const Morphism& h, const Limits& limits = {});

/// One-state deterministic PA for c(L(M)) with loops (a_i, e_i).
Pa commutative_closure(const Ca& m, const Limits& limits = {});

/// Deterministic LPA for the same language. Throws InvalidArgument if `p`
/// is not an LPA.
Pa lpa_determinize(const Pa& p, const Limits& limits = {});

/// L(P) = { w in L(regular) | Φ(w) in letter_constraint }.
struct LpaForm {
    Nfa regular;
    Constraint letter_constraint;  ///< over letter counts, alphabet order
};

LpaForm lpa_characterize(const Pa& p, const Limits& limits = {});
bool lpa_member(const LpaForm& f, const Word& w);

/// The first word of L(e) in length-lexicographic order, of length at most
/// `bound`, whose commutative class misses L(P). Absence is not a proof.
std::optional<Word> lpa_blocker(const Pa& p, const Nfa& e, std::size_t bound, const Limits& limits = {});

}  // namespace parikh
