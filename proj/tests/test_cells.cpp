#include <doctest.h>

#include "random_problem.hpp"
#include "test_util.hpp"
#include "wfomc/cardinality.hpp"
#include "wfomc/cells.hpp"
#include "wfomc/dag.hpp"
#include "wfomc/normalize.hpp"

using namespace wfomc;

namespace {

Vocabulary vocab(std::initializer_list<std::pair<const char*, std::uint32_t>> preds) {
    Vocabulary v;
    for (const auto& [name, arity] : preds) v.add(name, arity);
    return v;
}

CellTable<Rational> cells_of(const Problem& p, std::optional<std::size_t> dag = std::nullopt) {
    return build_cell_table(p.vocabulary, universal_matrix(p.sentence), numeric_weights(p), dag);
}

}  // namespace

TEST_CASE("1-type and 2-table enumeration sizes") {
    CHECK(enumerate_one_types(vocab({{"U", 1}, {"R", 2}})).size() == 4);
    CHECK(enumerate_one_types(vocab({{"R", 2}})).size() == 2);
    CHECK(enumerate_one_types(Vocabulary{}).size() == 1);
    CHECK(enumerate_two_tables(vocab({{"R", 2}})).size() == 4);
    CHECK(enumerate_two_tables(vocab({{"U", 1}})).size() == 1);
    CHECK(enumerate_two_tables(vocab({{"R", 2}, {"S", 2}})).size() == 16);
    CHECK(enumerate_one_types(vocab({{"A", 1}, {"B", 1}, {"R", 2}, {"S", 2}})).size() == 16);
    const auto types = enumerate_one_types(vocab({{"U", 1}, {"R", 2}}));
    for (std::size_t i = 0; i < types.size(); ++i) CHECK(types[i].index == i);
}

TEST_CASE("two_type_consistent examples") {
    const Vocabulary v = vocab({{"R", 2}});
    const AtomLayout layout(v);
    const Formula rxy = fol::atom(0, {Var::X, Var::Y});
    const Formula ryx = fol::atom(0, {Var::Y, Var::X});
    const TwoTable forward{1U << layout.forward_bit(0)};
    const TwoTable backward{1U << (layout.forward_bit(0) + 1)};
    CHECK(!two_type_consistent(layout, {0}, {0}, forward, fol::negate(rxy)));
    for (std::uint32_t l = 0; l < 4; ++l) {
        const bool reverse = (l >> (layout.forward_bit(0) + 1)) & 1U;
        CHECK(two_type_consistent(layout, {0}, {1}, {l}, fol::top(), 0U) == !reverse);
        CHECK(two_type_consistent(layout, {1}, {1}, {l}, fol::top()));
    }
    CHECK(!two_type_consistent(layout, {0}, {0}, forward, fol::implies(rxy, ryx)));
    CHECK(!two_type_consistent(layout, {0}, {0}, backward, fol::implies(rxy, ryx)));
    CHECK(two_type_consistent(layout, {0}, {0}, {3}, fol::implies(rxy, ryx)));
    CHECK_THROWS_AS(two_type_consistent(layout, {0}, {0}, {0}, fol::exists(Var::Y, rxy)), std::invalid_argument);
}

TEST_CASE("cell table for R with a trivial matrix") {
    const Problem p = parse("predicate R/2\nsentence forall x forall y true");
    const auto c = cells_of(p);
    CHECK(c.u() == 2);
    CHECK(c.two_tables.size() == 4);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(c.w[i] == 1);
        for (std::size_t j = 0; j < 2; ++j) CHECK(c.rij(i, j) == 4);
    }
}

TEST_CASE("cell table with the loop-free conjunct and reverse-edge restriction") {
    const Problem p = parse("predicate R/2\nsentence forall x forall y true");
    const auto c = build_cell_table(p.vocabulary, with_loop_free(fol::top(), 0), numeric_weights(p), 0U);
    const std::uint32_t loop = 1U << AtomLayout(p.vocabulary).single_bit(0);
    for (std::size_t i = 0; i < c.u(); ++i) CHECK(c.valid[i] == ((i & loop) == 0));
    const std::size_t t = c.valid_types().at(0);
    CHECK(c.rij_dag(t, t) == 2);
    CHECK(c.rij(t, t) == 4);
}

TEST_CASE("1-type validity uses phi(x,x)") {
    const Problem p = parse("predicate U/1\nsentence forall x forall y (U(x) | U(y))");
    const auto c = cells_of(p);
    const std::uint32_t u = 1U << AtomLayout(p.vocabulary).single_bit(0);
    for (std::size_t i = 0; i < c.u(); ++i) CHECK(c.valid[i] == ((i & u) != 0));
}

TEST_CASE("weight parameters are products over atoms") {
    const Problem p = parse("predicate U/1 weight 2 3\npredicate R/2 weight 5 7\nsentence forall x forall y true");
    const auto c = cells_of(p);
    const AtomLayout layout(p.vocabulary);
    for (std::size_t i = 0; i < c.u(); ++i) {
        const bool u = (i >> layout.single_bit(0)) & 1U;
        const bool loop = (i >> layout.single_bit(1)) & 1U;
        CHECK(c.w[i] == Rational(u ? 2 : 3) * Rational(loop ? 5 : 7));
    }
    for (std::size_t l = 0; l < c.two_tables.size(); ++l) {
        const bool f = (l >> layout.forward_bit(1)) & 1U;
        const bool b = (l >> (layout.forward_bit(1) + 1)) & 1U;
        CHECK(c.v[l] == Rational(f ? 5 : 7) * Rational(b ? 5 : 7));
    }
    CHECK(c.rij(0, 0) == 144);
}

TEST_CASE("cell invariants on random matrices") {
    testing::ProblemGenerator gen(3);
    for (int i = 0; i < 150; ++i) {
        testing::GeneratorOptions options;
        options.constraint_probability = 0;
        const Problem p = parse(gen.problem(options));
        const auto c = cells_of(p, p.dag ? std::optional<std::size_t>(p.dag->relation) : std::nullopt);
        const AtomLayout layout(p.vocabulary);
        CHECK(c.u() == (std::size_t{1} << layout.single_atom_count()));
        CHECK(c.two_tables.size() == (std::size_t{1} << layout.mixed_atom_count()));
        // unit weights: r_ij is the number of consistent 2-tables
        Problem unit = p;
        unit.weights = WeightTable{};
        const auto cu = cells_of(unit, p.dag ? std::optional<std::size_t>(p.dag->relation) : std::nullopt);
        const Formula m = universal_matrix(p.sentence);
        for (std::size_t a = 0; a < c.u(); ++a) {
            for (std::size_t b = 0; b < c.u(); ++b) {
                CHECK(c.rij(a, b) == c.rij(b, a));
                if (!c.valid[a] || !c.valid[b]) continue;
                std::uint32_t consistent = 0;
                for (const auto& l : c.two_tables) {
                    consistent += two_type_consistent(layout, c.one_types[a], c.one_types[b], l, m) ? 1 : 0;
                }
                CHECK(cu.rij(a, b) == consistent);
                if (p.dag) CHECK(cu.rij_dag(a, b) <= cu.rij(a, b));
            }
        }
    }
}
