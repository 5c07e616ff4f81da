#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfomc/fo2.hpp"
#include "wfomc/numeric.hpp"
#include "wfomc/problem.hpp"

namespace wfomc {

struct CountResult {
    Rational count;
    /// Non-zero contributions per 1-type cardinality vector of the normalized
    /// vocabulary, in lexicographic order of the compact enumeration.
    std::optional<std::vector<std::pair<CardinalityVector, Rational>>> per_k;
};

/// Lifted WFOMC: normalize, build cells, run the FO2 closed form or the DAG
/// program, then apply cardinality constraints.
CountResult count(const Problem& problem, std::uint32_t n, bool want_per_k = false);

/// "i=c,j=d" over the non-zero entries of k; i and j are 1-type bitmasks.
std::string per_k_key(const CardinalityVector& k);

}  // namespace wfomc
