#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wfomc/cells.hpp"
#include "wfomc/polynomial.hpp"
#include "wfomc/problem.hpp"

namespace wfomc {

/// Numeric (w, w-bar) per predicate, in vocabulary order.
RingWeights<Rational> numeric_weights(const Problem& p);

/// Weights in the polynomial ring: each predicate mentioned by a constraint gets
/// w = X_P, w-bar = 1, so the exponent of X_P in a monomial counts its true ground
/// atoms. Other predicates keep their numeric weights as constants.
struct SymbolicWeights {
    RingWeights<Polynomial> weights;
    /// Indeterminate index per predicate (nullopt when unconstrained).
    std::vector<std::optional<std::size_t>> indeterminate;
    /// Predicate of each indeterminate.
    std::vector<std::size_t> predicate_of;
};

SymbolicWeights attach_indeterminates(const Problem& p);

/// Sums, over monomials whose exponents satisfy every constraint, the coefficient
/// times prod_P w(P)^mu_P * w-bar(P)^(n^arity - mu_P). Throws std::invalid_argument
/// if a constraint mentions a predicate without an indeterminate.
Rational filter_and_substitute(const Polynomial& poly, const std::vector<CardinalityConstraint>& constraints,
                               const Problem& p, const SymbolicWeights& symbols, std::uint32_t n);

}  // namespace wfomc
