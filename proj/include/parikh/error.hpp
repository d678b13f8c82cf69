#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parikh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed input: invalid path, foreign symbol, broken invariant of a value.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The operation exists but not for this representation
/// (e.g. complement of a generator-form constraint).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A configured search budget was exhausted. Signals an instance that is
/// too large, never a wrong answer.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Node budgets for the searches the decision procedures rely on.
struct Limits {
    std::size_t hilbert_nodes = 4'000'000;
    std::size_t enumeration_nodes = 4'000'000;
    std::size_t formula_clauses = 200'000;
    /// Multiplier on the (|Q|+1)² base-run length bound of the Parikh image.
    std::size_t base_run_factor = 1;

    static Limits uniform(std::size_t budget) {
        Limits l;
        l.hilbert_nodes = budget;
        l.enumeration_nodes = budget;
        l.formula_clauses = budget;
        return l;
    }
};

inline void require_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(want) +
                                ", got " + std::to_string(got));
    }
}

}  // namespace parikh
