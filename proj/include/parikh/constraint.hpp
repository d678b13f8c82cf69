#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "parikh/error.hpp"
#include "parikh/numeric.hpp"
#include "parikh/presburger.hpp"
#include "parikh/semilinear.hpp"

namespace parikh {

/// The set C of a PA or CA, given by generators or by a formula.
/// Emptiness and finiteness accept both; complement needs the formula form.
using Constraint = std::variant<SemilinearSet, PresburgerFormula>;

std::size_t constraint_dim(const Constraint& c);
bool is_formula(const Constraint& c);
bool constraint_contains(const Constraint& c, const NatVector& v);
SemilinearSet constraint_generators(const Constraint& c, const Limits& limits = {});
/// N^dim, as the formula `true`.
Constraint constraint_full(std::size_t dim);

/// { y in N^n | M y in C }, keeping the form of C.
Constraint constraint_preimage(const Constraint& c, const IntMatrix& m, std::size_t n, const Limits& limits = {});
/// C on coordinates offset..offset+dim-1 of N^total, the others free.
Constraint constraint_embed(const Constraint& c, std::size_t offset, std::size_t total, const Limits& limits = {});
/// Formula when both are formulas, generators otherwise.
Constraint constraint_and(const Constraint& a, const Constraint& b, const Limits& limits = {});

std::string to_string(const Constraint& c);

}  // namespace parikh
