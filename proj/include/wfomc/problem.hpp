#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfomc/formula.hpp"
#include "wfomc/numeric.hpp"

namespace wfomc {

struct Predicate {
    std::string name;
    std::uint32_t arity = 1;
};

class Vocabulary {
public:
    /// Throws std::invalid_argument on a duplicate name or an arity outside {1, 2}.
    std::size_t add(std::string name, std::uint32_t arity);

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    [[nodiscard]] const Predicate& operator[](std::size_t index) const { return predicates_.at(index); }
    [[nodiscard]] std::size_t size() const { return predicates_.size(); }
    [[nodiscard]] auto begin() const { return predicates_.begin(); }
    [[nodiscard]] auto end() const { return predicates_.end(); }

    /// First name of the form `<prefix><i>` not yet taken.
    [[nodiscard]] std::string fresh_name(std::string_view prefix) const;

private:
    std::vector<Predicate> predicates_;
};

/// Symmetric weights: `positive` per true ground atom, `negative` per false one.
struct Weight {
    Rational positive = 1;
    Rational negative = 1;
    friend bool operator==(const Weight&, const Weight&) = default;
};

class WeightTable {
public:
    void set(const std::string& predicate, Weight weight) { weights_[predicate] = std::move(weight); }
    /// (1, 1) for predicates without an explicit entry.
    [[nodiscard]] Weight get(const std::string& predicate) const;
    [[nodiscard]] const std::map<std::string, Weight>& entries() const { return weights_; }

private:
    std::map<std::string, Weight> weights_;
};

struct DagAxiom {
    std::size_t relation = 0;
    std::optional<std::size_t> source;
    std::optional<std::size_t> sink;
};

/// sum_{P in terms} |P|  <cmp>  bound
struct CardinalityConstraint {
    std::vector<std::size_t> terms;
    Comparator cmp = Comparator::Eq;
    std::uint64_t bound = 0;

    [[nodiscard]] bool satisfied_by(std::uint64_t total) const { return compare(total, cmp, bound); }
};

struct Problem {
    Vocabulary vocabulary;
    WeightTable weights;
    Formula sentence = fol::top();
    std::optional<DagAxiom> dag;
    std::vector<CardinalityConstraint> constraints;

    [[nodiscard]] Weight weight_of(std::size_t predicate) const {
        return weights.get(vocabulary[predicate].name);
    }

    std::size_t add_fresh_predicate(std::string_view prefix, std::uint32_t arity, Weight weight);

    /// Conjoins `f` to the sentence.
    void conjoin(Formula f);
};

/// Renders the problem back in the input language.
std::string to_string(const Problem& problem);

}  // namespace wfomc
