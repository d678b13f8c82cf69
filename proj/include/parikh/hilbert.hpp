#pragma once

#include <cstddef>
#include <vector>

#include "parikh/error.hpp"
#include "parikh/numeric.hpp"

namespace parikh {

/// Minimal solutions of A x = b over N^n.
///
/// `homogeneous` is the Hilbert basis of A x = 0 (minimal nonzero solutions),
/// `particular` the minimal solutions of A x = b. The full solution set is
/// the union over p in `particular` of p + N·homogeneous.
struct HilbertResult {
    std::vector<NatVector> particular;
    std::vector<NatVector> homogeneous;
};

/// Contejean–Devie completion on the system homogenized by one extra
/// variable y with column -b, restricted to y <= 1: y = 0 yields the
/// Hilbert basis, y = 1 the particular solutions.
///
/// `a` has one row per equation and `vars` columns; `b` has one entry per row.
/// Throws ResourceLimit once more than `limits.hilbert_nodes` candidates are
/// expanded.
HilbertResult hilbert_basis(const IntMatrix& a, const IntVector& b, std::size_t vars,
                            const Limits& limits = {});

}  // namespace parikh
