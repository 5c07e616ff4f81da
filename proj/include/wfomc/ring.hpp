#pragma once

#include <concepts>

#include "wfomc/numeric.hpp"
#include "wfomc/polynomial.hpp"

namespace wfomc {

/// A commutative ring the counting algorithms can run over: exact rationals for
/// plain weighted counts, polynomials when predicate cardinalities are tracked.
template <class R>
concept RingElement = requires(R a, const R& b, std::uint64_t e) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { pow(b, e) } -> std::convertible_to<R>;
    R(Rational(1));
};

template <RingElement R>
R ring_from(const Rational& q) {
    return R(q);
}

template <RingElement R>
R ring_from(const Integer& z) {
    return R(Rational(z));
}

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace wfomc
