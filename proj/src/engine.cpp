#include "wfomc/engine.hpp"

#include "wfomc/cardinality.hpp"
#include "wfomc/cells.hpp"
#include "wfomc/dag.hpp"
#include "wfomc/normalize.hpp"
#include "wfomc/oracle.hpp"
#include "wfomc/polynomial.hpp"

namespace wfomc {

namespace {

template <RingElement R>
R run(const Problem& q, const Formula& matrix, const RingWeights<R>& weights, std::uint32_t n,
      std::vector<std::pair<CardinalityVector, R>>* per_k) {
    if (q.dag) {
        DagSolver<R> solver(make_dag_problem(q.vocabulary, matrix, q.dag->relation, weights));
        return solver.wfomc_dag(n, per_k);
    }
    return wfomc_fo2(build_cell_table(q.vocabulary, matrix, weights), n, per_k);
}

}  // namespace

std::string per_k_key(const CardinalityVector& k) {
    std::string out;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(i) + '=' + std::to_string(k[i]);
    }
    return out;
}

CountResult count(const Problem& problem, std::uint32_t n, bool want_per_k) {
    CountResult result;
    if (n == 0) {
        // The reductions assume a non-empty domain; the empty world is checked directly.
        result.count = oracle_wfomc(problem, 0);
        if (want_per_k) {
            result.per_k.emplace();
            if (result.count != 0) result.per_k->emplace_back(CardinalityVector{}, result.count);
        }
        return result;
    }
    const Problem q = normalize(problem);
    const Formula matrix = universal_matrix(q.sentence);

    if (q.constraints.empty()) {
        std::vector<std::pair<CardinalityVector, Rational>> per_k;
        result.count = run<Rational>(q, matrix, numeric_weights(q), n, want_per_k ? &per_k : nullptr);
        if (want_per_k) result.per_k = std::move(per_k);
        return result;
    }

    const SymbolicWeights symbols = attach_indeterminates(q);
    std::vector<std::pair<CardinalityVector, Polynomial>> per_k;
    const Polynomial poly = run<Polynomial>(q, matrix, symbols.weights, n, want_per_k ? &per_k : nullptr);
    result.count = filter_and_substitute(poly, q.constraints, q, symbols, n);
    if (want_per_k) {
        result.per_k.emplace();
        for (const auto& [k, value] : per_k) {
            Rational c = filter_and_substitute(value, q.constraints, q, symbols, n);
            if (c != 0) result.per_k->emplace_back(k, std::move(c));
        }
    }
    return result;
}

}  // namespace wfomc
