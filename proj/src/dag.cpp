#include "wfomc/dag.hpp"

namespace wfomc {

std::vector<Integer> dag_sequence(std::uint32_t max_n) {
    std::vector<Integer> a(max_n + 1);
    a[0] = 1;
    for (std::uint32_t i = 1; i <= max_n; ++i) {
        Integer sum = 0;
        for (std::uint32_t l = 0; l < i; ++l) {
            Integer term = binomial(i, l) * pow(Integer(2), std::uint64_t{l} * (i - l)) * a[l];
            // sign (-1)^{i-l+1}
            if ((i - l + 1) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        a[i] = sum;
    }
    return a;
}

Integer count_dags(std::uint32_t n) { return dag_sequence(n).back(); }

Formula with_loop_free(const Formula& matrix, std::size_t relation) {
    return fol::conj({matrix, fol::negate(fol::atom(relation, {Var::X, Var::X}))});
}

Formula with_no_edges(const Formula& matrix, std::size_t relation) {
    return fol::conj({matrix, fol::negate(fol::atom(relation, {Var::X, Var::Y}))});
}

}  // namespace wfomc
