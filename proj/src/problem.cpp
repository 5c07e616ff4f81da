#include "wfomc/problem.hpp"

#include <sstream>
#include <stdexcept>

namespace wfomc {

std::size_t Vocabulary::add(std::string name, std::uint32_t arity) {
    if (arity < 1 || arity > 2) {
        throw std::invalid_argument("predicate " + name + " has arity " + std::to_string(arity) +
                                    "; only 1 and 2 are supported");
    }
    if (find(name)) throw std::invalid_argument("predicate " + name + " declared twice");
    predicates_.push_back({std::move(name), arity});
    return predicates_.size() - 1;
}

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
    for (std::size_t i = 0; i < predicates_.size(); ++i) {
        if (predicates_[i].name == name) return i;
    }
    return std::nullopt;
}

std::string Vocabulary::fresh_name(std::string_view prefix) const {
    for (std::size_t i = 0;; ++i) {
        std::string candidate = std::string(prefix) + std::to_string(i);
        if (!find(candidate)) return candidate;
    }
}

Weight WeightTable::get(const std::string& predicate) const {
    auto it = weights_.find(predicate);
    return it == weights_.end() ? Weight{} : it->second;
}

std::size_t Problem::add_fresh_predicate(std::string_view prefix, std::uint32_t arity, Weight weight) {
    std::string name = vocabulary.fresh_name(prefix);
    weights.set(name, std::move(weight));
    return vocabulary.add(std::move(name), arity);
}

void Problem::conjoin(Formula f) {
    sentence = sentence->kind == NodeKind::True ? std::move(f) : fol::conj({sentence, std::move(f)});
}

std::string to_string(const Problem& problem) {
    std::ostringstream out;
    for (const auto& p : problem.vocabulary) {
        out << "predicate " << p.name << "/" << p.arity;
        const Weight w = problem.weights.get(p.name);
        if (w != Weight{}) out << " weight " << to_string(w.positive) << " " << to_string(w.negative);
        out << "\n";
    }
    if (problem.dag) {
        const auto& v = problem.vocabulary;
        out << "axiom acyclic(" << v[problem.dag->relation].name;
        if (problem.dag->source || problem.dag->sink) {
            out << ", " << (problem.dag->source ? v[*problem.dag->source].name : "_");
            out << ", " << (problem.dag->sink ? v[*problem.dag->sink].name : "_");
        }
        out << ")\n";
    }
    out << "sentence " << to_string(problem.sentence, problem.vocabulary) << "\n";
    for (const auto& c : problem.constraints) {
        out << "constraint ";
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            if (i > 0) out << " + ";
            out << "|" << problem.vocabulary[c.terms[i]].name << "|";
        }
        out << " " << to_string(c.cmp) << " " << c.bound << "\n";
    }
    return out.str();
}

}  // namespace wfomc
