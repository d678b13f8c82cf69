#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parikh/error.hpp"
#include "parikh/numeric.hpp"

namespace parikh {

/// { base + k1·p1 + ... + kn·pn | ki in N }.
/// Zero periods are dropped and periods are kept sorted and unique.
class LinearSet {
public:
    LinearSet(NatVector base, std::vector<NatVector> periods);

    std::size_t dim() const { return base_.dim(); }
    const NatVector& base() const { return base_; }
    const std::vector<NatVector>& periods() const { return periods_; }

    bool contains(const NatVector& v) const;

    friend bool operator==(const LinearSet&, const LinearSet&) = default;
    friend auto operator<=>(const LinearSet&, const LinearSet&) = default;

private:
    NatVector base_;
    std::vector<NatVector> periods_;
};

/// Finite union of linear sets of a common dimension. No canonical form:
/// two equal sets may have different component lists.
class SemilinearSet {
public:
    explicit SemilinearSet(std::size_t dim) : dim_(dim) {}
    SemilinearSet(std::size_t dim, std::vector<LinearSet> components);

    static SemilinearSet empty(std::size_t dim) { return SemilinearSet(dim); }
    /// All of N^dim.
    static SemilinearSet full(std::size_t dim);
    static SemilinearSet singleton(const NatVector& v);
    static SemilinearSet linear(NatVector base, std::vector<NatVector> periods);

    std::size_t dim() const { return dim_; }
    const std::vector<LinearSet>& components() const { return components_; }
    bool is_empty() const { return components_.empty(); }

    void add(LinearSet component);
    /// Drops exact duplicate components.
    void dedup();

    friend bool operator==(const SemilinearSet&, const SemilinearSet&) = default;

private:
    std::size_t dim_;
    std::vector<LinearSet> components_;
};

struct Cardinality {
    enum class Kind { Empty, Finite, Infinite };
    Kind kind;
    /// Exact member count when `kind == Finite` and the count is known.
    std::optional<Integer> count;

    static Cardinality empty() { return {Kind::Empty, Integer(0)}; }
    static Cardinality infinite() { return {Kind::Infinite, std::nullopt}; }
    static Cardinality finite(std::optional<Integer> n) { return {Kind::Finite, std::move(n)}; }
};

const char* to_string(Cardinality::Kind kind);

bool sl_member(const NatVector& v, const SemilinearSet& s);
SemilinearSet sl_union(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet sl_intersect(const SemilinearSet& a, const SemilinearSet& b, const Limits& limits = {});
/// { M v | v in S } for a nonnegative e×d matrix M.
SemilinearSet sl_linear_image(const SemilinearSet& s, const IntMatrix& m);
/// { v in N^n | M v in S } for a nonnegative d×n matrix M with `n` columns.
SemilinearSet sl_preimage(const SemilinearSet& s, const IntMatrix& m, std::size_t n, const Limits& limits = {});
/// C.D: concatenations of a member of C with a member of D.
SemilinearSet sl_concat(const SemilinearSet& c, const SemilinearSet& d);
Cardinality sl_cardinality(const SemilinearSet& s);

/// Some member of a nonempty set (the base of its first component).
std::optional<NatVector> sl_some_member(const SemilinearSet& s);

}  // namespace parikh
