#include "wfomc/cardinality.hpp"

#include <stdexcept>

namespace wfomc {

RingWeights<Rational> numeric_weights(const Problem& p) {
    RingWeights<Rational> out;
    out.reserve(p.vocabulary.size());
    for (std::size_t i = 0; i < p.vocabulary.size(); ++i) {
        const Weight w = p.weight_of(i);
        out.emplace_back(w.positive, w.negative);
    }
    return out;
}

SymbolicWeights attach_indeterminates(const Problem& p) {
    SymbolicWeights s;
    s.indeterminate.assign(p.vocabulary.size(), std::nullopt);
    for (const auto& c : p.constraints) {
        for (std::size_t pred : c.terms) {
            if (pred >= p.vocabulary.size()) throw std::invalid_argument("constraint references unknown predicate");
            if (!s.indeterminate[pred]) {
                s.indeterminate[pred] = s.predicate_of.size();
                s.predicate_of.push_back(pred);
            }
        }
    }
    for (std::size_t i = 0; i < p.vocabulary.size(); ++i) {
        if (s.indeterminate[i]) {
            s.weights.emplace_back(Polynomial::variable(*s.indeterminate[i]), Polynomial(1));
        } else {
            const Weight w = p.weight_of(i);
            s.weights.emplace_back(Polynomial(w.positive), Polynomial(w.negative));
        }
    }
    return s;
}

Rational filter_and_substitute(const Polynomial& poly, const std::vector<CardinalityConstraint>& constraints,
                               const Problem& p, const SymbolicWeights& symbols, std::uint32_t n) {
    for (const auto& c : constraints) {
        for (std::size_t pred : c.terms) {
            if (pred >= symbols.indeterminate.size() || !symbols.indeterminate[pred]) {
                throw std::invalid_argument("constraint on " + p.vocabulary[pred].name + " has no indeterminate");
            }
        }
    }
    Rational total = 0;
    for (const auto& [mono, coeff] : poly.terms()) {
        const auto mu = [&](std::size_t pred) -> std::uint64_t {
            const std::size_t x = *symbols.indeterminate[pred];
            return x < mono.size() ? mono[x] : 0;
        };
        bool ok = true;
        for (const auto& c : constraints) {
            std::uint64_t sum = 0;
            for (std::size_t pred : c.terms) sum += mu(pred);
            if (!c.satisfied_by(sum)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Rational term = coeff;
        for (std::size_t pred : symbols.predicate_of) {
            const Weight w = p.weight_of(pred);
            const std::uint64_t atoms = p.vocabulary[pred].arity == 1 ? n : std::uint64_t{n} * n;
            const std::uint64_t m = mu(pred);
            if (m > atoms) throw std::logic_error("monomial exponent exceeds ground atom count");
            term *= pow(w.positive, m) * pow(w.negative, atoms - m);
        }
        total += term;
    }
    return total;
}

}  // namespace wfomc
