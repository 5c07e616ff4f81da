#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wfomc/formula.hpp"
#include "wfomc/problem.hpp"
#include "wfomc/ring.hpp"

namespace wfomc {

/// Maximally consistent assignment to the single-variable atoms U(x), R(x,x).
/// Bit t of `index` is the truth value of the t-th such atom in vocabulary order.
struct OneType {
    std::uint32_t index = 0;
};

/// Maximally consistent assignment to the mixed atoms R(x,y), R(y,x).
/// Bits 2r and 2r+1 hold R(x,y) and R(y,x) for the r-th binary predicate.
struct TwoTable {
    std::uint32_t index = 0;
};

/// Where each predicate's atoms live in 1-type and 2-table bitmasks.
class AtomLayout {
public:
    explicit AtomLayout(const Vocabulary& vocabulary);

    [[nodiscard]] std::size_t single_atom_count() const { return single_.size(); }
    [[nodiscard]] std::size_t mixed_atom_count() const { return mixed_.size(); }
    /// Predicate of the t-th single-variable atom.
    [[nodiscard]] std::size_t single_predicate(std::size_t t) const { return single_[t]; }
    /// Predicate of the t-th mixed atom.
    [[nodiscard]] std::size_t mixed_predicate(std::size_t t) const { return mixed_[t]; }
    /// Bit of P(x) (unary) or R(x,x) (binary) in a 1-type.
    [[nodiscard]] std::uint32_t single_bit(std::size_t predicate) const { return single_bit_[predicate]; }
    /// Bit of R(x,y) in a 2-table; R(y,x) is the next bit.
    [[nodiscard]] std::uint32_t forward_bit(std::size_t predicate) const { return forward_bit_[predicate]; }
    [[nodiscard]] std::uint32_t arity(std::size_t predicate) const { return arity_[predicate]; }

private:
    std::vector<std::size_t> single_;
    std::vector<std::size_t> mixed_;
    std::vector<std::uint32_t> single_bit_;
    std::vector<std::uint32_t> forward_bit_;
    std::vector<std::uint32_t> arity_;
};

std::vector<OneType> enumerate_one_types(const Vocabulary& vocabulary);
std::vector<TwoTable> enumerate_two_tables(const Vocabulary& vocabulary);

/// Decides ijl |= phi(x,x) & phi(x,y) & phi(y,x) & phi(y,y), the element realizing
/// x having 1-type i and the one realizing y having 1-type j. With
/// `forbid_reverse_edge` = R the 2-table must also make R(y,x) false.
/// Throws std::invalid_argument if the matrix is not quantifier-free.
bool two_type_consistent(const AtomLayout& layout, OneType i, OneType j, TwoTable l, const Formula& matrix,
                         std::optional<std::size_t> forbid_reverse_edge = std::nullopt);

/// phi(x,x) under 1-type i.
bool one_type_valid(const AtomLayout& layout, OneType i, const Formula& matrix);

/// Which 2-tables each ordered pair of 1-types may realize. Weight-independent.
struct Consistency {
    std::size_t u = 0;
    std::size_t b = 0;
    std::vector<bool> valid;                    // per 1-type
    std::vector<std::vector<std::uint32_t>> tables;      // [i*u+j] consistent 2-tables
    std::vector<std::vector<std::uint32_t>> dag_tables;  // subset with R(y,x) false
};

Consistency compute_consistency(const AtomLayout& layout, const Formula& matrix,
                                std::optional<std::size_t> dag_relation);

/// Per-predicate (w, w-bar) lifted into the ring the counts are computed in.
template <RingElement R>
using RingWeights = std::vector<std::pair<R, R>>;

/// 1-types, 2-tables and their weight parameters for a universally quantified
/// FO2 matrix:
///   w_i = prod over single-variable atoms, v_l = prod over mixed atoms,
///   r_ij = sum_l n_ijl v_l.
template <RingElement R>
struct CellTable {
    std::vector<OneType> one_types;
    std::vector<TwoTable> two_tables;
    std::vector<R> w;
    std::vector<R> v;
    std::vector<R> r;                     // u*u, plain consistency
    std::optional<std::vector<R>> r_dag;  // u*u, additionally R(y,x) false
    std::vector<bool> valid;

    [[nodiscard]] std::size_t u() const { return one_types.size(); }
    [[nodiscard]] const R& rij(std::size_t i, std::size_t j) const { return r[i * u() + j]; }
    [[nodiscard]] const R& rij_dag(std::size_t i, std::size_t j) const { return r_dag->at(i * u() + j); }
    /// Indices of 1-types with valid[i].
    [[nodiscard]] std::vector<std::size_t> valid_types() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < valid.size(); ++i) {
            if (valid[i]) out.push_back(i);
        }
        return out;
    }
};

template <RingElement R>
CellTable<R> build_cell_table(const Vocabulary& vocabulary, const Formula& matrix, const RingWeights<R>& weights,
                              std::optional<std::size_t> dag_relation = std::nullopt) {
    const AtomLayout layout(vocabulary);
    const Consistency cons = compute_consistency(layout, matrix, dag_relation);
    CellTable<R> t;
    t.one_types = enumerate_one_types(vocabulary);
    t.two_tables = enumerate_two_tables(vocabulary);
    t.valid = cons.valid;

    const auto atom_weight = [&](std::size_t pred, bool truth) -> const R& {
        return truth ? weights.at(pred).first : weights.at(pred).second;
    };
    for (const auto& one : t.one_types) {
        R prod(Rational(1));
        for (std::size_t a = 0; a < layout.single_atom_count(); ++a) {
            prod = prod * atom_weight(layout.single_predicate(a), (one.index >> a) & 1U);
        }
        t.w.push_back(std::move(prod));
    }
    for (const auto& two : t.two_tables) {
        R prod(Rational(1));
        for (std::size_t a = 0; a < layout.mixed_atom_count(); ++a) {
            prod = prod * atom_weight(layout.mixed_predicate(a), (two.index >> a) & 1U);
        }
        t.v.push_back(std::move(prod));
    }
    const auto sum_over = [&](const std::vector<std::uint32_t>& tables) {
        R sum(Rational(0));
        for (std::uint32_t l : tables) sum = sum + t.v[l];
        return sum;
    };
    t.r.reserve(cons.u * cons.u);
    for (const auto& tables : cons.tables) t.r.push_back(sum_over(tables));
    if (dag_relation) {
        std::vector<R> rd;
        rd.reserve(cons.u * cons.u);
        for (const auto& tables : cons.dag_tables) rd.push_back(sum_over(tables));
        t.r_dag = std::move(rd);
    }
    return t;
}

}  // namespace wfomc
