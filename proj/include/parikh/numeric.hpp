#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "parikh/error.hpp"

namespace parikh {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
/// Row-major.
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// A point of N^d. Entries are arbitrary precision and never negative.
class NatVector {
public:
    NatVector() = default;
    explicit NatVector(std::size_t dim) : entries_(dim, 0) {}
    explicit NatVector(IntVector entries);
    NatVector(std::initializer_list<long> entries);

    static NatVector zero(std::size_t dim) { return NatVector(dim); }
    static NatVector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    const IntVector& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;
    /// Componentwise <=.
    bool leq(const NatVector& other) const;
    Integer norm1() const;

    NatVector operator+(const NatVector& other) const;
    NatVector scaled(const Integer& factor) const;
    /// Concatenation: (this, other).
    NatVector concat(const NatVector& other) const;

    void add_at(std::size_t i, const Integer& amount);

    friend bool operator==(const NatVector&, const NatVector&) = default;
    friend std::strong_ordering operator<=>(const NatVector& a, const NatVector& b);

private:
    IntVector entries_;
};

IntVector to_int(const NatVector& v);
RatVector to_rat(const IntVector& v);
IntVector mat_vec(const IntMatrix& m, const IntVector& v);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
IntMatrix identity_int(std::size_t dim);
RatMatrix identity_rat(std::size_t dim);
RatMatrix zero_rat(std::size_t rows, std::size_t cols);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
/// Columns of `m` as vectors; `m` must have `rows` rows.
std::size_t columns(const IntMatrix& m);

std::string to_string(const NatVector& v);
std::string to_string(const IntVector& v);

}  // namespace parikh
