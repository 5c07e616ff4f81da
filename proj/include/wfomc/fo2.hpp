#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wfomc/cells.hpp"
#include "wfomc/numeric.hpp"
#include "wfomc/ring.hpp"

namespace wfomc {

/// Number of domain elements realizing each 1-type.
using CardinalityVector = std::vector<std::uint32_t>;

inline std::uint64_t total(std::span<const std::uint32_t> k) {
    std::uint64_t s = 0;
    for (auto x : k) s += x;
    return s;
}

/// Visits every vector of `parts` non-negative integers summing to `n`, in
/// lexicographic order.
void for_each_composition(std::uint32_t n, std::size_t parts, const std::function<void(const CardinalityVector&)>& visit);

/// Visits every vector p with 0 <= p <= bound component-wise, in lexicographic order.
void for_each_in_box(const CardinalityVector& bound, const std::function<void(const CardinalityVector&)>& visit);

/// Expands a vector over `types` (a subset of 1-type indices) to all u 1-types.
CardinalityVector expand(const CardinalityVector& compact, std::span<const std::size_t> types, std::size_t u);

/// Weighted count of models of forall x y. phi with 1-type cardinalities k:
///   multinomial(k) * prod_i w_i^k_i * prod_{i<=j} r_ij^k(i,j)
/// where k(i,i) = k_i(k_i-1)/2 and k(i,j) = k_i k_j. 1-types violating phi(x,x)
/// contribute zero.
template <RingElement R>
R wfomc_fo2_k(const CellTable<R>& cells, std::span<const std::uint32_t> k) {
    const std::size_t u = cells.u();
    for (std::size_t i = 0; i < u; ++i) {
        if (k[i] > 0 && !cells.valid[i]) return R(Rational(0));
    }
    R result = ring_from<R>(multinomial(k));
    for (std::size_t i = 0; i < u; ++i) {
        if (k[i] == 0) continue;
        result = result * pow(cells.w[i], k[i]);
        const std::uint64_t ki = k[i];
        if (ki >= 2) result = result * pow(cells.rij(i, i), ki * (ki - 1) / 2);
        for (std::size_t j = i + 1; j < u; ++j) {
            if (k[j] == 0) continue;
            result = result * pow(cells.rij(i, j), ki * k[j]);
        }
    }
    return result;
}

/// Sum of wfomc_fo2_k over all k with |k| = n. When `per_k` is given it receives
/// every non-zero summand, keyed by the full-length cardinality vector.
template <RingElement R>
R wfomc_fo2(const CellTable<R>& cells, std::uint32_t n,
            std::vector<std::pair<CardinalityVector, R>>* per_k = nullptr) {
    const auto types = cells.valid_types();
    R sum(Rational(0));
    if (n == 0) {
        R one(Rational(1));
        if (per_k) per_k->emplace_back(CardinalityVector(cells.u(), 0), one);
        return one;
    }
    if (types.empty()) return sum;
    for_each_composition(n, types.size(), [&](const CardinalityVector& compact) {
        CardinalityVector k = expand(compact, types, cells.u());
        R term = wfomc_fo2_k(cells, k);
        if (per_k && !is_zero(term)) per_k->emplace_back(std::move(k), term);
        sum = sum + term;
    });
    return sum;
}

}  // namespace wfomc
