#pragma once

#include <random>
#include <string>

#include "wfomc/engine.hpp"
#include "wfomc/oracle.hpp"
#include "wfomc/parser.hpp"

namespace wfomc::testing {

inline Rational oracle(const std::string& text, std::uint32_t n) { return oracle_wfomc(parse(text), n); }
inline Rational lifted(const std::string& text, std::uint32_t n) { return count(parse(text), n).count; }

/// A uniformly random world over the problem's vocabulary.
inline GroundWorld random_world(const Problem& p, std::uint32_t n, std::mt19937_64& rng) {
    GroundWorld w(p.vocabulary, n);
    for (std::size_t i = 0; i < w.atom_count(); ++i) w.set_bit(i, rng() & 1U);
    return w;
}

}  // namespace wfomc::testing
