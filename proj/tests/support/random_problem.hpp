#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace wfomc::testing {

/// Knobs for the random problem generator. Problems use at most one unary
/// predicate U and one binary predicate R so ground worlds stay enumerable.
struct GeneratorOptions {
    bool quantifiers = false;   // existential, nested and counting quantifiers
    double dag_probability = 0.4;
    double constraint_probability = 0.4;
};

class ProblemGenerator {
public:
    explicit ProblemGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Source text of a random problem in the input language.
    std::string problem(const GeneratorOptions& options = {});

    /// A random quantifier-free formula over x and y (in input syntax).
    std::string matrix(int depth = 3);
    /// A random quantifier-free formula whose only variable is x.
    std::string unary_matrix(int depth = 2);
    /// "forall x forall y (...)" with a random matrix.
    std::string universal_sentence() { return "forall x forall y (" + matrix() + ")"; }

    std::mt19937_64& rng() { return rng_; }

private:
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::string weight();
    std::string atom(bool unary_only);
    std::string formula(int depth, bool unary_only);
    std::string quantified_conjunct();

    std::mt19937_64 rng_;
    bool has_u_ = true;
    bool has_r_ = true;
};

}  // namespace wfomc::testing
