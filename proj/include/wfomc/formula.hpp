#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wfomc {

class Vocabulary;

/// The two variable slots of the fragment.
enum class Var : std::uint8_t { X = 0, Y = 1 };

constexpr Var other(Var v) { return v == Var::X ? Var::Y : Var::X; }
constexpr std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(v)); }

enum class Comparator : std::uint8_t { Eq, Le, Ge };

bool compare(std::uint64_t value, Comparator cmp, std::uint64_t bound);
const char* to_string(Comparator cmp);

enum class NodeKind : std::uint8_t {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,
    Exists,
    CountingExists,
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

/// Immutable formula tree node. Which fields are meaningful depends on `kind`.
struct FormulaNode {
    NodeKind kind = NodeKind::True;
    std::size_t predicate = 0;       // Atom: index into the vocabulary
    std::vector<Var> terms;          // Atom
    Var var = Var::X;                // quantifiers
    Comparator cmp = Comparator::Eq; // CountingExists
    std::uint64_t bound = 0;         // CountingExists
    std::vector<Formula> children;
};

namespace fol {

Formula top();
Formula bottom();
Formula atom(std::size_t predicate, std::vector<Var> terms);
Formula negate(Formula f);
/// n-ary conjunction; nested conjunctions are flattened, empty gives top().
Formula conj(std::vector<Formula> parts);
Formula disj(std::vector<Formula> parts);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula forall(Var v, Formula body);
Formula exists(Var v, Formula body);
Formula counting(Comparator cmp, std::uint64_t bound, Var v, Formula body);

}  // namespace fol

/// Bitmask (bit(Var)) of free variables.
std::uint8_t free_vars(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool contains_kind(const Formula& f, NodeKind kind);
bool structurally_equal(const Formula& a, const Formula& b);

/// Swaps x and y everywhere (bound and free).
Formula swap_vars(const Formula& f);

/// Renders in the input grammar.
std::string to_string(const Formula& f, const Vocabulary& vocabulary);

}  // namespace wfomc
