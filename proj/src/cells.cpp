#include "wfomc/cells.hpp"

#include <stdexcept>
#include <string>

namespace wfomc {

AtomLayout::AtomLayout(const Vocabulary& vocabulary) {
    const std::uint32_t none = ~0U;
    single_bit_.assign(vocabulary.size(), none);
    forward_bit_.assign(vocabulary.size(), none);
    for (std::size_t p = 0; p < vocabulary.size(); ++p) {
        arity_.push_back(vocabulary[p].arity);
        single_bit_[p] = static_cast<std::uint32_t>(single_.size());
        single_.push_back(p);
        if (vocabulary[p].arity == 2) {
            forward_bit_[p] = static_cast<std::uint32_t>(mixed_.size());
            mixed_.push_back(p);
            mixed_.push_back(p);
        }
    }
    if (single_.size() > 24 || mixed_.size() > 24) {
        throw std::invalid_argument("vocabulary too large for explicit 1-type/2-table enumeration");
    }
}

std::vector<OneType> enumerate_one_types(const Vocabulary& vocabulary) {
    const AtomLayout layout(vocabulary);
    std::vector<OneType> out(std::size_t{1} << layout.single_atom_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<std::uint32_t>(i);
    return out;
}

std::vector<TwoTable> enumerate_two_tables(const Vocabulary& vocabulary) {
    const AtomLayout layout(vocabulary);
    std::vector<TwoTable> out(std::size_t{1} << layout.mixed_atom_count());
    for (std::size_t l = 0; l < out.size(); ++l) out[l].index = static_cast<std::uint32_t>(l);
    return out;
}

namespace {

/// Two elements: 0 realizes x's 1-type, 1 realizes y's.
struct PairAssignment {
    const AtomLayout& layout;
    std::uint32_t type[2];
    std::uint32_t table;

    bool atom(const FormulaNode& a, const Var env[2]) const {
        const std::size_t p = a.predicate;
        const unsigned e0 = static_cast<unsigned>(env[static_cast<unsigned>(a.terms[0])]);
        if (a.terms.size() == 1) return (type[e0] >> layout.single_bit(p)) & 1U;
        const unsigned e1 = static_cast<unsigned>(env[static_cast<unsigned>(a.terms[1])]);
        if (e0 == e1) return (type[e0] >> layout.single_bit(p)) & 1U;
        const std::uint32_t b = layout.forward_bit(p) + (e0 == 0 ? 0U : 1U);
        return (table >> b) & 1U;
    }

    bool eval(const Formula& f, const Var env[2]) const {
        switch (f->kind) {
            case NodeKind::True: return true;
            case NodeKind::False: return false;
            case NodeKind::Atom: return atom(*f, env);
            case NodeKind::Not: return !eval(f->children[0], env);
            case NodeKind::And:
                for (const auto& c : f->children) {
                    if (!eval(c, env)) return false;
                }
                return true;
            case NodeKind::Or:
                for (const auto& c : f->children) {
                    if (eval(c, env)) return true;
                }
                return false;
            case NodeKind::Implies: return !eval(f->children[0], env) || eval(f->children[1], env);
            case NodeKind::Iff: return eval(f->children[0], env) == eval(f->children[1], env);
            default: throw std::invalid_argument("matrix must be quantifier-free");
        }
    }
};

// env maps a variable slot to element 0 or 1 (reusing Var as the element tag).
constexpr Var kXX[2] = {Var::X, Var::X};
constexpr Var kXY[2] = {Var::X, Var::Y};
constexpr Var kYX[2] = {Var::Y, Var::X};
constexpr Var kYY[2] = {Var::Y, Var::Y};

void require_quantifier_free(const Formula& matrix) {
    if (!is_quantifier_free(matrix)) throw std::invalid_argument("matrix must be quantifier-free");
}

}  // namespace

bool one_type_valid(const AtomLayout& layout, OneType i, const Formula& matrix) {
    require_quantifier_free(matrix);
    const PairAssignment a{layout, {i.index, i.index}, 0};
    return a.eval(matrix, kXX);
}

bool two_type_consistent(const AtomLayout& layout, OneType i, OneType j, TwoTable l, const Formula& matrix,
                         std::optional<std::size_t> forbid_reverse_edge) {
    require_quantifier_free(matrix);
    const PairAssignment a{layout, {i.index, j.index}, l.index};
    if (forbid_reverse_edge && ((l.index >> (layout.forward_bit(*forbid_reverse_edge) + 1)) & 1U)) return false;
    return a.eval(matrix, kXX) && a.eval(matrix, kXY) && a.eval(matrix, kYX) && a.eval(matrix, kYY);
}

Consistency compute_consistency(const AtomLayout& layout, const Formula& matrix,
                                std::optional<std::size_t> dag_relation) {
    require_quantifier_free(matrix);
    Consistency c;
    c.u = std::size_t{1} << layout.single_atom_count();
    c.b = std::size_t{1} << layout.mixed_atom_count();
    // u^2 * b propositional evaluations; beyond this the grounding is hopeless anyway
    constexpr std::size_t kMaxLog2Work = 30;
    if (2 * layout.single_atom_count() + layout.mixed_atom_count() > kMaxLog2Work) {
        throw std::length_error("too many cells: " + std::to_string(c.u) + " 1-types and " + std::to_string(c.b) +
                                " 2-tables");
    }
    c.valid.resize(c.u);
    for (std::size_t i = 0; i < c.u; ++i) {
        const PairAssignment a{layout, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)}, 0};
        c.valid[i] = a.eval(matrix, kXX);
    }
    std::uint32_t reverse_bit = 0;
    if (dag_relation) {
        if (layout.arity(*dag_relation) != 2) throw std::invalid_argument("acyclic relation must be binary");
        reverse_bit = layout.forward_bit(*dag_relation) + 1;
    }
    c.tables.resize(c.u * c.u);
    if (dag_relation) c.dag_tables.resize(c.u * c.u);
    for (std::size_t i = 0; i < c.u; ++i) {
        for (std::size_t j = 0; j < c.u; ++j) {
            if (!c.valid[i] || !c.valid[j]) continue;
            for (std::size_t l = 0; l < c.b; ++l) {
                const PairAssignment a{layout,
                                       {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                                       static_cast<std::uint32_t>(l)};
                if (!a.eval(matrix, kXY) || !a.eval(matrix, kYX)) continue;
                c.tables[i * c.u + j].push_back(static_cast<std::uint32_t>(l));
                if (dag_relation && !((l >> reverse_bit) & 1U)) {
                    c.dag_tables[i * c.u + j].push_back(static_cast<std::uint32_t>(l));
                }
            }
        }
    }
    return c;
}

}  // namespace wfomc
