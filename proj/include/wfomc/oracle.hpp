#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wfomc/numeric.hpp"
#include "wfomc/problem.hpp"

namespace wfomc {

/// Thrown when a grounding would exceed the oracle's atom cap.
class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOracleAtomCap = 24;
inline constexpr std::size_t kMaxOracleAtomCap = 28;

/// A complete truth assignment to the ground atoms of a vocabulary over [n].
class GroundWorld {
public:
    GroundWorld(const Vocabulary& vocabulary, std::uint32_t n);

    [[nodiscard]] std::uint32_t domain_size() const { return n_; }
    [[nodiscard]] std::size_t atom_count() const { return atoms_; }
    /// Bit position of P(a) or R(a, b).
    [[nodiscard]] std::size_t atom_index(std::size_t predicate, std::uint32_t a, std::uint32_t b = 0) const;

    [[nodiscard]] bool holds(std::size_t predicate, std::uint32_t a, std::uint32_t b = 0) const {
        return (bits_ >> atom_index(predicate, a, b)) & 1U;
    }
    void set(std::size_t predicate, std::uint32_t a, std::uint32_t b, bool value);
    void set_bit(std::size_t index, bool value) {
        if (value) {
            bits_ |= std::uint64_t{1} << index;
        } else {
            bits_ &= ~(std::uint64_t{1} << index);
        }
    }
    [[nodiscard]] std::uint64_t bits() const { return bits_; }

    /// Number of true ground atoms of `predicate`.
    [[nodiscard]] std::uint64_t cardinality(std::size_t predicate) const;

    /// Symmetric weight: prod over true atoms of w, over false atoms of w-bar.
    [[nodiscard]] Rational weight(const Problem& p) const;

    /// The induced sub-world on `elements` (renumbered 0..|elements|-1 in order).
    [[nodiscard]] GroundWorld restrict_to(const std::vector<std::uint32_t>& elements) const;

    /// The world with element e renamed to perm[e].
    [[nodiscard]] GroundWorld permuted(const std::vector<std::uint32_t>& perm) const;

    /// Edges of a binary predicate as (from, to) pairs.
    [[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(std::size_t predicate) const;

private:
    const Vocabulary* vocabulary_;
    std::uint32_t n_;
    std::vector<std::size_t> offset_;
    std::size_t atoms_ = 0;
    std::uint64_t bits_ = 0;
};

/// True iff the digraph on [n] (self-loops included) has no directed cycle,
/// decided by repeatedly removing zero-indegree nodes.
bool is_acyclic(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges, std::uint32_t n);

/// Evaluates the (closed) sentence directly on the world; counting quantifiers
/// count witnesses.
bool evaluate_sentence(const Problem& p, const GroundWorld& world);

/// Sentence, acyclicity, source/sink and cardinality constraints.
bool satisfies(const Problem& p, const GroundWorld& world);

/// Calls `visit` for every model of p over [n].
void for_each_model(const Problem& p, std::uint32_t n, const std::function<void(const GroundWorld&)>& visit,
                    std::size_t atom_cap = kDefaultOracleAtomCap);

/// Sum of weights over all models of p over [n], by enumerating every world.
Rational oracle_wfomc(const Problem& p, std::uint32_t n, std::size_t atom_cap = kDefaultOracleAtomCap);

/// Ground atoms of p over [n].
std::size_t ground_atom_count(const Problem& p, std::uint32_t n);

}  // namespace wfomc
