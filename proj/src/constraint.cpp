#include "parikh/constraint.hpp"

#include <sstream>

namespace parikh {

std::size_t constraint_dim(const Constraint& c) {
    return std::visit([](const auto& x) { return x.dim(); }, c);
}

bool is_formula(const Constraint& c) { return std::holds_alternative<PresburgerFormula>(c); }

bool constraint_contains(const Constraint& c, const NatVector& v) {
    require_dim(v.dim(), constraint_dim(c), "constraint membership");
    if (is_formula(c)) return formula_eval(std::get<PresburgerFormula>(c), v);
    return sl_member(v, std::get<SemilinearSet>(c));
}

SemilinearSet constraint_generators(const Constraint& c, const Limits& limits) {
    if (is_formula(c)) return formula_to_generators(std::get<PresburgerFormula>(c), limits);
    return std::get<SemilinearSet>(c);
}

Constraint constraint_full(std::size_t dim) { return PresburgerFormula::verum(dim); }

Constraint constraint_preimage(const Constraint& c, const IntMatrix& m, std::size_t n, const Limits& limits) {
    if (is_formula(c)) return formula_pullback(std::get<PresburgerFormula>(c), m, n);
    return sl_preimage(std::get<SemilinearSet>(c), m, n, limits);
}

Constraint constraint_embed(const Constraint& c, std::size_t offset, std::size_t total, const Limits& limits) {
    const std::size_t dim = constraint_dim(c);
    if (offset + dim > total) throw DimensionMismatch("constraint_embed: target dimension too small");
    IntMatrix m(dim, IntVector(total, 0));
    for (std::size_t i = 0; i < dim; ++i) m[i][offset + i] = 1;
    return constraint_preimage(c, m, total, limits);
}

Constraint constraint_and(const Constraint& a, const Constraint& b, const Limits& limits) {
    require_dim(constraint_dim(b), constraint_dim(a), "constraint_and");
    if (is_formula(a) && is_formula(b)) {
        return formula_and(std::get<PresburgerFormula>(a), std::get<PresburgerFormula>(b), limits);
    }
    return sl_intersect(constraint_generators(a, limits), constraint_generators(b, limits), limits);
}

std::string to_string(const Constraint& c) {
    if (is_formula(c)) return to_string(std::get<PresburgerFormula>(c));
    std::ostringstream out;
    const auto& s = std::get<SemilinearSet>(c);
    if (s.is_empty()) return "{}";
    bool first = true;
    for (const auto& l : s.components()) {
        if (!first) out << " u ";
        first = false;
        out << "Lin(" << to_string(l.base()) << ", {";
        for (std::size_t i = 0; i < l.periods().size(); ++i) {
            if (i) out << ", ";
            out << to_string(l.periods()[i]);
        }
        out << "})";
    }
    return out.str();
}

}  // namespace parikh
