#include <doctest.h>

#include <set>

#include "random_problem.hpp"
#include "test_util.hpp"
#include "wfomc/normalize.hpp"

using namespace wfomc;
using testing::oracle;

namespace {

bool nnf_shaped(const Formula& f) {
    switch (f->kind) {
        case NodeKind::Implies:
        case NodeKind::Iff: return false;
        case NodeKind::Not: return f->children[0]->kind == NodeKind::Atom;
        default:
            for (const auto& c : f->children) {
                if (!nnf_shaped(c)) return false;
            }
            return true;
    }
}

std::string parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse maps the surface syntax") {
    Problem p = parse("predicate R/2\nsentence forall x forall y (~R(x,y))");
    REQUIRE(p.vocabulary.size() == 1);
    CHECK(p.vocabulary[0].arity == 2);
    CHECK(structurally_equal(
        p.sentence, fol::forall(Var::X, fol::forall(Var::Y, fol::negate(fol::atom(0, {Var::X, Var::Y}))))));

    p = parse("predicate R/2\naxiom acyclic(R)\nsentence true");
    REQUIRE(p.dag);
    CHECK(p.dag->relation == 0);
    CHECK(!p.dag->source);
    CHECK(!p.dag->sink);

    p = parse("predicate R/2\npredicate T/1\naxiom acyclic(R, _, T)\nsentence true\nconstraint |R| + |T| >= 2");
    CHECK(!p.dag->source);
    CHECK(p.dag->sink == 1U);
    REQUIRE(p.constraints.size() == 1);
    CHECK(p.constraints[0].terms == std::vector<std::size_t>{0, 1});
    CHECK(p.constraints[0].cmp == Comparator::Ge);
    CHECK(p.constraints[0].bound == 2);

    p = parse("# weights\npredicate S/1 weight 1 -1/2  # trailing\nsentence forall a. S(a)");
    CHECK(p.weight_of(0) == Weight{1, Rational(-1, 2)});
}

TEST_CASE("parse errors carry positions") {
    CHECK(parse_error("sentence forall x U(x)").find("undeclared predicate 'U'") != std::string::npos);
    CHECK(parse_error("sentence forall x U(x)").rfind("1:", 0) == 0);
    CHECK(parse_error("predicate R/2\nsentence forall x R(x)").find("arity") != std::string::npos);
    CHECK(parse_error("predicate R/2\nsentence forall x forall y forall z R(x,z)").find("more than two variables") !=
          std::string::npos);
    CHECK(parse_error("predicate R/2\nsentence exists[=1] x R(x,y)").find("free variable") != std::string::npos);
    CHECK(parse_error("predicate R/2\nsentence forall x exists[=1] y R(x,y)").find("exactly one free variable") !=
          std::string::npos);
    CHECK(parse_error("predicate $s/1\nsentence true").find("2:") == std::string::npos);
    CHECK(!parse_error("predicate $s/1\nsentence true").empty());
    CHECK(parse_error("predicate U/1\nsentence U(x)").find("free variable 'x'") != std::string::npos);
    CHECK(parse_error("predicate U/1\nsentence true\nsentence true").find("more than one sentence") !=
          std::string::npos);
    CHECK(parse_error("predicate U/1\nsentence (forall x U(x)").rfind("2:", 0) == 0);
    CHECK(parse_error("predicate U/3\nsentence true").find("arity") != std::string::npos);
    CHECK(parse_error("predicate U/1\naxiom acyclic(U)\nsentence true").find("binary") != std::string::npos);
    CHECK(!parse_error("predicate U/1\npredicate U/1\nsentence true").empty());
    CHECK(!parse_error("predicate U/1").empty());
}

TEST_CASE("quantifier scope: dotted runs right, undotted binds like negation") {
    const Problem a = parse("predicate U/1\npredicate V/1\nsentence exists x U(x) & exists x V(x)");
    REQUIRE(a.sentence->kind == NodeKind::And);
    CHECK(a.sentence->children.size() == 2);
    const Problem b = parse("predicate U/1\npredicate V/1\nsentence exists x. U(x) & V(x)");
    CHECK(b.sentence->kind == NodeKind::Exists);
    CHECK(!parse_error("predicate U/1\npredicate V/1\nsentence exists x U(x) & V(x)").empty());
}

TEST_CASE("rendered problems parse back to the same problem") {
    testing::ProblemGenerator gen(31);
    for (int i = 0; i < 60; ++i) {
        testing::GeneratorOptions options;
        options.quantifiers = i % 2 == 1;
        const Problem p = parse(gen.problem(options));
        const Problem q = parse(to_string(p));
        CHECK(structurally_equal(p.sentence, q.sentence));
        CHECK(to_string(p) == to_string(q));
    }
}

TEST_CASE("to_nnf examples") {
    const Problem p = parse("predicate R/2\npredicate A/1\npredicate B/1\nsentence true");
    const Formula rxy = fol::atom(0, {Var::X, Var::Y});
    const Formula a = fol::atom(1, {Var::X});
    const Formula b = fol::atom(2, {Var::X});
    CHECK(structurally_equal(to_nnf(fol::negate(fol::exists(Var::Y, rxy))), fol::forall(Var::Y, fol::negate(rxy))));
    CHECK(structurally_equal(to_nnf(fol::negate(fol::conj({a, fol::negate(b)}))), fol::disj({fol::negate(a), b})));
    const Formula done = fol::forall(Var::X, fol::forall(Var::Y, fol::disj({fol::negate(rxy), a})));
    CHECK(structurally_equal(to_nnf(done), done));
    // negated counting quantifiers flip their comparator
    const Formula le = to_nnf(fol::negate(fol::counting(Comparator::Ge, 2, Var::X, a)));
    REQUIRE(le->kind == NodeKind::CountingExists);
    CHECK(le->cmp == Comparator::Le);
    CHECK(le->bound == 1);
    CHECK(to_nnf(fol::negate(fol::counting(Comparator::Ge, 0, Var::X, a)))->kind == NodeKind::False);
}

TEST_CASE("to_nnf is shape-correct, idempotent and equivalent on random worlds") {
    testing::ProblemGenerator gen(5);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        testing::GeneratorOptions options;
        options.quantifiers = true;
        Problem p = parse(gen.problem(options));
        const Formula once = to_nnf(p.sentence);
        CHECK(nnf_shaped(once));
        CHECK(structurally_equal(to_nnf(once), once));
        Problem q = p;
        q.sentence = once;
        for (std::uint32_t n = 1; n <= 3; ++n) {
            const GroundWorld w = testing::random_world(p, n, rng);
            CHECK(evaluate_sentence(p, w) == evaluate_sentence(q, w));
        }
    }
}

TEST_CASE("skolemize: forall x exists y R(x,y)") {
    const std::string text = "predicate R/2\nsentence forall x exists y R(x,y)";
    Problem nnf = parse(text);
    nnf.sentence = to_nnf(nnf.sentence);
    const Problem p = skolemize(nnf);
    CHECK(is_universal_fo2(p.sentence));
    REQUIRE(p.vocabulary.size() == 2);
    CHECK(p.vocabulary[1].name == "$skolem0");
    CHECK(p.weight_of(1) == Weight{1, -1});
    CHECK(oracle_wfomc(p, 2) == 9);
    CHECK(oracle(text, 2) == 9);
    CHECK(testing::lifted(text, 2) == 9);
    for (std::uint32_t n = 1; n <= 4; ++n) CHECK(testing::lifted(text, n) == pow(Rational(pow(Integer(2), n) - 1), n));
}

TEST_CASE("skolemize: sentence-level existential") {
    const std::string text = "predicate U/1\nsentence exists x U(x)";
    CHECK(oracle(text, 2) == 3);
    CHECK(testing::lifted(text, 2) == 3);
    const Problem p = normalize(parse(text));
    CHECK(is_universal_fo2(p.sentence));
    REQUIRE(p.constraints.size() == 1);
    for (std::uint32_t n = 1; n <= 3; ++n) CHECK(oracle_wfomc(p, n) == oracle(text, n));
}

TEST_CASE("skolemize leaves universal sentences alone") {
    const Problem p = parse("predicate R/2\nsentence forall x forall y (R(x,y) -> R(y,x))");
    const Problem q = skolemize(p);
    CHECK(q.vocabulary.size() == 1);
    CHECK(structurally_equal(p.sentence, q.sentence));
}

TEST_CASE("skolemize adds one skolem predicate per top-level existential") {
    const Problem p = normalize(
        parse("predicate R/2\npredicate U/1\nsentence (forall x exists y R(x,y)) & (forall y exists x (R(x,y) | U(x)))"));
    std::size_t skolems = 0;
    for (const auto& pred : p.vocabulary) skolems += pred.name.rfind("$skolem", 0) == 0 ? 1 : 0;
    CHECK(skolems == 2);
    CHECK(p.vocabulary.size() == 4);
}

TEST_CASE("lower_counting") {
    Problem p = parse(
        "predicate R/2\npredicate Src/1\npredicate Snk/1\naxiom acyclic(R, Src, Snk)\nsentence exists[=2] x Src(x)");
    p.sentence = to_nnf(p.sentence);
    const Problem q = lower_counting(p);
    REQUIRE(q.constraints.size() == 1);
    CHECK(q.constraints[0].cmp == Comparator::Eq);
    CHECK(q.constraints[0].bound == 2);
    CHECK(q.vocabulary[q.constraints[0].terms[0]].name == "$count0");
    CHECK(!contains_kind(q.sentence, NodeKind::CountingExists));

    CHECK(oracle("predicate U/1\nsentence exists[>=1] x U(x)", 2) == 3);
    CHECK(testing::lifted("predicate U/1\nsentence exists[>=1] x U(x)", 2) == 3);

    const Problem plain = parse("predicate U/1\nsentence forall x U(x)");
    CHECK(structurally_equal(lower_counting(plain).sentence, plain.sentence));
    CHECK(lower_counting(plain).vocabulary.size() == 1);

    Problem nested = parse("predicate R/2\nsentence true");
    nested.sentence = fol::forall(Var::X, fol::disj({fol::counting(Comparator::Eq, 1, Var::Y, fol::atom(0, {Var::Y, Var::Y})),
                                                     fol::atom(0, {Var::X, Var::X})}));
    CHECK_THROWS_AS(lower_counting(nested), UnsupportedFormula);
}

TEST_CASE("lower_source_sink") {
    const Problem p = parse("predicate R/2\npredicate S/1\npredicate T/1\naxiom acyclic(R, S, T)\nsentence true");
    const Problem q = lower_source_sink(p);
    REQUIRE(q.dag);
    CHECK(!q.dag->source);
    CHECK(!q.dag->sink);
    CHECK(q.sentence->kind == NodeKind::And);
    CHECK(q.sentence->children.size() == 2);
    const Problem r = parse("predicate R/2\naxiom acyclic(R)\nsentence true");
    CHECK(structurally_equal(lower_source_sink(r).sentence, r.sentence));
    CHECK(oracle("predicate R/2\npredicate Src/1\naxiom acyclic(R, Src, _)\nsentence exists[=1] x Src(x)", 2) == 2);
    for (std::uint32_t n = 1; n <= 3; ++n) CHECK(oracle_wfomc(q, n) == oracle_wfomc(p, n));
}

TEST_CASE("fresh names never collide") {
    Problem p = parse("predicate R/2\npredicate U/1\nsentence (forall x exists y R(x,y)) & (exists x U(x)) & "
                      "(exists[<=1] x (exists y R(y,x))) & (forall x (U(x) -> exists y (R(x,y) & U(y))))");
    const Problem q = normalize(p);
    std::set<std::string> names;
    for (const auto& pred : q.vocabulary) CHECK(names.insert(pred.name).second);
    for (std::size_t i = p.vocabulary.size(); i < q.vocabulary.size(); ++i) {
        CHECK(q.vocabulary[i].name.front() == '$');
        CHECK(q.vocabulary[i].arity == 1);
    }
    CHECK(p.vocabulary.fresh_name("$skolem") == "$skolem0");
}

TEST_CASE("normalization preserves counts") {
    testing::ProblemGenerator gen(101);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        testing::GeneratorOptions options;
        options.quantifiers = true;
        const std::string text = gen.problem(options);
        const Problem p = parse(text);
        const Problem q = normalize(p);
        CHECK(is_universal_fo2(q.sentence));
        for (std::uint32_t n = 1; n <= 3; ++n) {
            if (ground_atom_count(q, n) > kMaxOracleAtomCap) continue;
            INFO(text, " n=", n);
            CHECK(oracle_wfomc(q, n, kMaxOracleAtomCap) == oracle_wfomc(p, n));
            ++compared;
        }
    }
    CHECK(compared >= 150);
}

TEST_CASE("normalization is modular") {
    testing::ProblemGenerator gen(202);
    int compared = 0;
    for (int i = 0; i < 40; ++i) {
        testing::GeneratorOptions options;
        options.quantifiers = true;
        const Problem p = parse(gen.problem(options));
        // the generator declares U before R, so the predicate indices agree with p
        const Formula lambda = parse(std::string(p.vocabulary.find("U") ? "predicate U/1\n" : "") +
                                     (p.vocabulary.find("R") ? "predicate R/2\n" : "") + "sentence " +
                                     gen.universal_sentence())
                                   .sentence;
        Problem joint = p;
        joint.conjoin(lambda);
        Problem after = normalize(p);
        after.conjoin(lambda);
        const Problem before = normalize(joint);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            if (ground_atom_count(after, n) > kMaxOracleAtomCap || ground_atom_count(before, n) > kMaxOracleAtomCap) {
                continue;
            }
            const Rational truth = oracle_wfomc(joint, n);
            CHECK(oracle_wfomc(before, n, kMaxOracleAtomCap) == truth);
            CHECK(oracle_wfomc(after, n, kMaxOracleAtomCap) == truth);
            CHECK(count(joint, n).count == truth);
            ++compared;
        }
    }
    CHECK(compared >= 90);
}
