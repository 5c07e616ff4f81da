#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "wfomc/cells.hpp"
#include "wfomc/fo2.hpp"
#include "wfomc/numeric.hpp"

namespace wfomc {

/// a_0 .. a_max_n, the number of labeled DAGs on n nodes, from
///   a_n = sum_{l=0}^{n-1} (-1)^{n-l+1} C(n,l) 2^{l(n-l)} a_l,  a_0 = 1.
std::vector<Integer> dag_sequence(std::uint32_t max_n);
Integer count_dags(std::uint32_t n);

/// phi conjoined with ~R(x,x) (the relation is acyclic, so loops never occur).
Formula with_loop_free(const Formula& matrix, std::size_t relation);
/// phi conjoined with ~R(x,y): the sentence for a set of zero-indegree elements.
Formula with_no_edges(const Formula& matrix, std::size_t relation);

/// Cell data for counting forall x y. phi & Acyclic(R).
template <RingElement R>
struct DagProblem {
    std::size_t relation = 0;
    CellTable<R> cells;        // phi & ~R(x,x); carries r_dag (R(y,x) false)
    CellTable<R> cells_prime;  // phi & ~R(x,y)
    std::vector<std::size_t> types;  // 1-types that can occur (valid in `cells`)

    [[nodiscard]] const R& r_dag(std::size_t a, std::size_t b) const {
        return cells.rij_dag(types[a], types[b]);
    }
};

template <RingElement R>
DagProblem<R> make_dag_problem(const Vocabulary& vocabulary, const Formula& matrix, std::size_t relation,
                               const RingWeights<R>& weights) {
    DagProblem<R> dp;
    dp.relation = relation;
    dp.cells = build_cell_table(vocabulary, with_loop_free(matrix, relation), weights, relation);
    dp.cells_prime = build_cell_table(vocabulary, with_no_edges(matrix, relation), weights);
    dp.types = dp.cells.valid_types();
    return dp;
}

enum class SummationForm { ByZeroIndegreeCount, ByRemainderSize };

/// Inclusion-exclusion over the set of zero-indegree elements, tabulated over
/// 1-type cardinality vectors. Vectors handled here are compact: one entry per
/// element of DagProblem::types.
template <RingElement R>
class DagSolver {
public:
    explicit DagSolver(DagProblem<R> problem) : dp_(std::move(problem)) {
        table_.emplace(CardinalityVector(dp_.types.size(), 0), R(Rational(1)));
    }

    [[nodiscard]] const DagProblem<R>& problem() const { return dp_; }
    [[nodiscard]] std::size_t dimension() const { return dp_.types.size(); }
    [[nodiscard]] const std::map<CardinalityVector, R>& table() const { return table_; }

    /// Weighted count of models with 1-type cardinalities k in which a fixed set of
    /// m elements has zero R-indegree: sum over k = k' + k'', |k'| = m of
    ///   prod_{a,b} r_dag[a][b]^{k'_a k''_b} * wfomc(phi & ~R, k') * A[k''].
    R slice(std::uint32_t m, const CardinalityVector& k) {
        R sum(Rational(0));
        for_each_in_box(k, [&](const CardinalityVector& k1) {
            if (total(k1) != m) return;
            sum = sum + split_term(k, k1);
        });
        return sum;
    }

    /// A[k]: the weighted model count with 1-type cardinalities k. Fills the table
    /// for every p <= k in lexicographic order.
    R wfomc_dag_k(const CardinalityVector& k, SummationForm form = SummationForm::ByZeroIndegreeCount) {
        for_each_in_box(k, [&](const CardinalityVector& p) {
            if (!table_.count(p)) table_.emplace(p, compute(p, form));
        });
        return table_.at(k);
    }

    /// Sum of A[k] over |k| = n. `per_k` receives non-zero entries keyed by
    /// full-length 1-type vectors.
    R wfomc_dag(std::uint32_t n, std::vector<std::pair<CardinalityVector, R>>* per_k = nullptr) {
        const std::size_t d = dimension();
        const std::size_t u = dp_.cells.u();
        if (n == 0) {
            R one(Rational(1));
            if (per_k) per_k->emplace_back(CardinalityVector(u, 0), one);
            return one;
        }
        R sum(Rational(0));
        if (d == 0) return sum;
        // level by level: every p'' < p needed by p has a smaller total
        for (std::uint32_t level = 1; level <= n; ++level) {
            for_each_composition(level, d, [&](const CardinalityVector& p) {
                if (!table_.count(p)) table_.emplace(p, compute(p, SummationForm::ByZeroIndegreeCount));
            });
        }
        for_each_composition(n, d, [&](const CardinalityVector& k) {
            const R& value = table_.at(k);
            if (per_k && !is_zero(value)) per_k->emplace_back(expand(k, dp_.types, u), value);
            sum = sum + value;
        });
        return sum;
    }

private:
    R compute(const CardinalityVector& p, SummationForm form) {
        const std::uint64_t size = total(p);
        std::vector<R> slices(size + 1, R(Rational(0)));
        // one pass over the box, bucketed by |k'|
        for_each_in_box(p, [&](const CardinalityVector& k1) {
            const std::uint64_t m = total(k1);
            if (m == 0) return;
            slices[m] = slices[m] + split_term(p, k1);
        });
        R result(Rational(0));
        if (form == SummationForm::ByZeroIndegreeCount) {
            for (std::uint64_t m = 1; m <= size; ++m) {
                R term = ring_from<R>(binomial(size, m)) * slices[m];
                if (m % 2 == 1) {
                    result = result + term;
                } else {
                    result = result - term;
                }
            }
        } else {
            for (std::uint64_t l = 0; l < size; ++l) {
                R term = ring_from<R>(binomial(size, l)) * slices[size - l];
                if ((size - l + 1) % 2 == 0) {
                    result = result + term;
                } else {
                    result = result - term;
                }
            }
        }
        return result;
    }

    R split_term(const CardinalityVector& k, const CardinalityVector& k1) {
        const std::size_t d = dimension();
        CardinalityVector k2(d);
        for (std::size_t a = 0; a < d; ++a) k2[a] = k[a] - k1[a];
        auto it = table_.find(k2);
        if (it == table_.end()) throw std::logic_error("DAG table entry requested before it was computed");
        R term = fo2_prime(k1) * it->second;
        for (std::size_t a = 0; a < d && !is_zero(term); ++a) {
            if (k1[a] == 0) continue;
            for (std::size_t b = 0; b < d; ++b) {
                if (k2[b] == 0) continue;
                term = term * power(a, b, std::uint64_t{k1[a]} * k2[b]);
            }
        }
        return term;
    }

    const R& fo2_prime(const CardinalityVector& k1) {
        auto it = fo2_prime_.find(k1);
        if (it != fo2_prime_.end()) return it->second;
        R value = wfomc_fo2_k(dp_.cells_prime, expand(k1, dp_.types, dp_.cells_prime.u()));
        return fo2_prime_.emplace(k1, std::move(value)).first->second;
    }

    const R& power(std::size_t a, std::size_t b, std::uint64_t e) {
        const std::uint64_t key = ((a * dimension() + b) << 40U) | e;
        auto it = powers_.find(key);
        if (it != powers_.end()) return it->second;
        return powers_.emplace(key, pow(dp_.r_dag(a, b), e)).first->second;
    }

    DagProblem<R> dp_;
    std::map<CardinalityVector, R> table_;
    std::map<CardinalityVector, R> fo2_prime_;
    std::unordered_map<std::uint64_t, R> powers_;
};

}  // namespace wfomc
