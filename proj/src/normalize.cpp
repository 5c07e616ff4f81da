#include "wfomc/normalize.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace wfomc {

namespace {

Formula nnf(const Formula& f, bool negated) {
    using fol::conj;
    using fol::disj;
    switch (f->kind) {
        case NodeKind::True: return negated ? fol::bottom() : fol::top();
        case NodeKind::False: return negated ? fol::top() : fol::bottom();
        case NodeKind::Atom: return negated ? fol::negate(f) : f;
        case NodeKind::Not: return nnf(f->children[0], !negated);
        case NodeKind::And:
        case NodeKind::Or: {
            const bool conjunctive = (f->kind == NodeKind::And) != negated;
            std::vector<Formula> parts;
            for (const auto& c : f->children) {
                Formula g = nnf(c, negated);
                if (g->kind == (conjunctive ? NodeKind::True : NodeKind::False)) continue;
                if (g->kind == (conjunctive ? NodeKind::False : NodeKind::True)) return g;
                parts.push_back(std::move(g));
            }
            return conjunctive ? conj(std::move(parts)) : disj(std::move(parts));
        }
        case NodeKind::Implies: {
            const auto& a = f->children[0];
            const auto& b = f->children[1];
            return nnf(disj({fol::negate(a), b}), negated);
        }
        case NodeKind::Iff: {
            const auto& a = f->children[0];
            const auto& b = f->children[1];
            if (negated) {
                return nnf(disj({conj({a, fol::negate(b)}), conj({fol::negate(a), b})}), false);
            }
            return nnf(conj({disj({fol::negate(a), b}), disj({a, fol::negate(b)})}), false);
        }
        case NodeKind::Forall:
        case NodeKind::Exists: {
            const bool universal = (f->kind == NodeKind::Forall) != negated;
            Formula body = nnf(f->children[0], negated);
            return universal ? fol::forall(f->var, std::move(body)) : fol::exists(f->var, std::move(body));
        }
        case NodeKind::CountingExists: {
            Formula body = nnf(f->children[0], false);
            if (!negated) return fol::counting(f->cmp, f->bound, f->var, std::move(body));
            const std::uint64_t k = f->bound;
            switch (f->cmp) {
                case Comparator::Ge:
                    if (k == 0) return fol::bottom();
                    return fol::counting(Comparator::Le, k - 1, f->var, std::move(body));
                case Comparator::Le: return fol::counting(Comparator::Ge, k + 1, f->var, std::move(body));
                case Comparator::Eq:
                    if (k == 0) return fol::counting(Comparator::Ge, 1, f->var, std::move(body));
                    return disj({fol::counting(Comparator::Le, k - 1, f->var, body),
                                 fol::counting(Comparator::Ge, k + 1, f->var, body)});
            }
        }
    }
    return f;
}

/// Top-level conjuncts, with leading universal quantifiers distributed over
/// conjunctions and dropped from closed parts (valid on non-empty domains).
void split_conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f->kind == NodeKind::True) return;
    if (f->kind == NodeKind::And) {
        for (const auto& c : f->children) split_conjuncts(c, out);
        return;
    }
    if (f->kind == NodeKind::Forall) {
        std::vector<Formula> parts;
        split_conjuncts(f->children[0], parts);
        for (auto& part : parts) {
            if (free_vars(part) & bit(f->var)) {
                out.push_back(fol::forall(f->var, std::move(part)));
            } else {
                out.push_back(std::move(part));
            }
        }
        return;
    }
    out.push_back(f);
}

struct Quantifier {
    NodeKind kind;
    Var var;
};

/// A formula rewritten as a quantifier prefix (at most two, and two only when closed)
/// over a quantifier-free matrix.
struct Lifted {
    std::vector<Quantifier> prefix;
    Formula matrix;
};

class Skolemizer {
public:
    explicit Skolemizer(Problem& p) : p_(p) {}

    void top_level(const Formula& f) {
        Lifted r = reduce(f);
        const auto& q = r.prefix;
        if (q.empty() || (q[0].kind == NodeKind::Forall && (q.size() == 1 || q[1].kind == NodeKind::Forall))) {
            add_matrix(r.matrix);
        } else if (q.size() == 1) {
            require_some(q[0].var, r.matrix);
        } else if (q[0].kind == NodeKind::Forall) {
            // forall v exists o. beta  ~>  forall v o. S(v) | ~beta, S weighted (1, -1)
            const std::size_t s = p_.add_fresh_predicate("$skolem", 1, {1, -1});
            add_matrix(fol::disj({fol::atom(s, {q[0].var}), to_nnf(fol::negate(r.matrix))}));
        } else {
            Formula z = define_unary({{q[1]}, r.matrix});
            require_some(q[0].var, z);
        }
    }

    Formula result() const {
        return fol::forall(Var::X, fol::forall(Var::Y, fol::conj(matrices_)));
    }

private:
    std::uint8_t fv(const Formula& f) const {
        if (f->kind == NodeKind::Atom) return nullary_.count(f->predicate) ? 0 : free_vars(f);
        std::uint8_t mask = 0;
        for (const auto& c : f->children) mask |= fv(c);
        if (f->kind == NodeKind::Forall || f->kind == NodeKind::Exists) mask &= static_cast<std::uint8_t>(~bit(f->var));
        return mask;
    }

    std::uint8_t fv(const Lifted& l) const {
        std::uint8_t mask = fv(l.matrix);
        for (const auto& q : l.prefix) mask &= static_cast<std::uint8_t>(~bit(q.var));
        return mask;
    }

    void add_matrix(Formula f) {
        if (f->kind == NodeKind::True) return;
        matrices_.push_back(std::move(f));
    }

    Lifted reduce(const Formula& f) {
        switch (f->kind) {
            case NodeKind::True:
            case NodeKind::False:
            case NodeKind::Atom:
            case NodeKind::Not: return {{}, f};
            case NodeKind::Forall:
            case NodeKind::Exists: {
                Lifted r = reduce(f->children[0]);
                if (r.prefix.empty()) return {{{f->kind, f->var}}, r.matrix};
                // The body is already quantified; if it no longer mentions f->var the
                // outer quantifier is vacuous.
                if (!(fv(r) & bit(f->var))) return r;
                // body = Q o. beta with only f->var free
                r.prefix.insert(r.prefix.begin(), {f->kind, f->var});
                return r;
            }
            case NodeKind::And:
            case NodeKind::Or: return reduce_connective(f);
            case NodeKind::CountingExists:
                throw UnsupportedFormula("counting quantifier left for skolemization; run lower_counting first");
            case NodeKind::Implies:
            case NodeKind::Iff: throw UnsupportedFormula("skolemization expects negation normal form");
        }
        return {{}, f};
    }

    Lifted reduce_connective(const Formula& f) {
        const bool conjunction = f->kind == NodeKind::And;
        // conjunction: any number of foralls merge, at most one exists; dually for disjunction
        const NodeKind merging = conjunction ? NodeKind::Forall : NodeKind::Exists;
        const NodeKind single = conjunction ? NodeKind::Exists : NodeKind::Forall;

        std::vector<Formula> parts;
        std::vector<Lifted> one;
        std::vector<Lifted> two;
        for (const auto& c : f->children) {
            Lifted r = reduce(c);
            if (r.prefix.empty()) {
                parts.push_back(r.matrix);
            } else if (r.prefix.size() == 1) {
                one.push_back(std::move(r));
            } else {
                two.push_back(std::move(r));
            }
        }
        std::uint8_t qf_free = 0;
        for (const auto& part : parts) qf_free |= fv(part);

        std::optional<Quantifier> best;
        std::vector<std::size_t> best_pulled;
        for (NodeKind kind : {merging, single}) {
            for (Var t : {Var::X, Var::Y}) {
                if (qf_free & bit(t)) continue;
                std::vector<std::size_t> pulled;
                bool feasible = true;
                for (std::size_t i = 0; i < one.size(); ++i) {
                    const bool closed = fv(one[i]) == 0;
                    const bool fits = one[i].prefix[0].kind == kind && (closed || one[i].prefix[0].var == t);
                    if (fits && (kind == merging || pulled.empty())) {
                        pulled.push_back(i);
                    } else if (!closed && other(one[i].prefix[0].var) == t) {
                        feasible = false;  // its defining atom would be captured
                    }
                }
                if (feasible && pulled.size() > best_pulled.size()) {
                    best = Quantifier{kind, t};
                    best_pulled = std::move(pulled);
                }
            }
        }

        const Var nullary_var = best ? other(best->var) : Var::X;
        for (auto& l : two) parts.push_back(define_nullary(l, nullary_var));
        std::vector<bool> is_pulled(one.size(), false);
        for (std::size_t i : best_pulled) is_pulled[i] = true;
        for (std::size_t i = 0; i < one.size(); ++i) {
            if (is_pulled[i]) {
                Formula m = one[i].matrix;
                if (one[i].prefix[0].var != best->var) m = swap_vars(m);
                parts.push_back(std::move(m));
            } else if (fv(one[i]) == 0) {
                parts.push_back(define_nullary(one[i], nullary_var));
            } else {
                parts.push_back(define_unary(one[i]));
            }
        }
        Formula matrix = conjunction ? fol::conj(std::move(parts)) : fol::disj(std::move(parts));
        if (!best) return {{}, matrix};
        return {{*best}, matrix};
    }

    /// Z(o) <-> Q v. beta(o, v); returns Z(o).
    Formula define_unary(const Lifted& l) {
        const Quantifier q = l.prefix.at(0);
        const Var o = other(q.var);
        const std::size_t z = p_.add_fresh_predicate("$aux", 1, {1, 1});
        const std::size_t s = p_.add_fresh_predicate("$skolem", 1, {1, -1});
        Formula zo = fol::atom(z, {o});
        Formula so = fol::atom(s, {o});
        const Formula& beta = l.matrix;
        if (q.kind == NodeKind::Forall) {
            add_matrix(fol::disj({fol::negate(zo), beta}));
            add_matrix(fol::disj({so, fol::conj({fol::negate(zo), beta})}));
        } else {
            Formula not_beta = to_nnf(fol::negate(beta));
            add_matrix(fol::disj({zo, not_beta}));
            add_matrix(fol::disj({so, fol::conj({zo, not_beta})}));
        }
        return zo;
    }

    /// Z <-> (closed formula); Z is a unary predicate forced to be constant.
    Formula define_nullary(const Lifted& closed, Var use) {
        if (closed.prefix.empty()) return closed.matrix;
        Lifted l = closed;
        if (l.prefix.size() == 2) {
            Formula inner = define_unary({{l.prefix[1]}, l.matrix});
            l = {{l.prefix[0]}, inner};
        }
        const Quantifier q = l.prefix[0];
        const std::size_t z = p_.add_fresh_predicate("$aux", 1, {1, 1});
        nullary_.insert(z);
        add_matrix(to_nnf(fol::iff(fol::atom(z, {Var::X}), fol::atom(z, {Var::Y}))));
        Formula zv = fol::atom(z, {q.var});
        Formula not_beta = to_nnf(fol::negate(l.matrix));
        if (q.kind == NodeKind::Forall) {
            add_matrix(fol::disj({fol::negate(zv), l.matrix}));
            require_some(q.var, fol::disj({zv, not_beta}));
        } else {
            add_matrix(fol::disj({zv, not_beta}));
            require_some(q.var, fol::disj({fol::negate(zv), l.matrix}));
        }
        return fol::atom(z, {use});
    }

    /// exists v. beta(v)  as  |P| >= 1 with P(v) <-> beta(v).
    void require_some(Var v, const Formula& beta) {
        if (beta->kind == NodeKind::Atom && beta->terms.size() == 1 && !nullary_.count(beta->predicate)) {
            p_.constraints.push_back({{beta->predicate}, Comparator::Ge, 1});
            return;
        }
        const std::size_t pr = p_.add_fresh_predicate("$aux", 1, {1, 1});
        Formula pv = fol::atom(pr, {v});
        add_matrix(fol::disj({fol::negate(pv), beta}));
        add_matrix(fol::disj({pv, to_nnf(fol::negate(beta))}));
        p_.constraints.push_back({{pr}, Comparator::Ge, 1});
    }

    Problem& p_;
    std::set<std::size_t> nullary_;
    std::vector<Formula> matrices_;
};

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

bool is_universal_fo2(const Formula& sentence) {
    if (sentence->kind != NodeKind::Forall) return false;
    const Formula& inner = sentence->children[0];
    return inner->kind == NodeKind::Forall && inner->var != sentence->var && is_quantifier_free(inner->children[0]);
}

Formula universal_matrix(const Formula& sentence) {
    if (!is_universal_fo2(sentence)) throw std::invalid_argument("sentence is not forall x. forall y. <quantifier-free>");
    return sentence->children[0]->children[0];
}

Problem lower_source_sink(Problem p) {
    if (!p.dag || (!p.dag->source && !p.dag->sink)) return p;
    const std::size_t r = p.dag->relation;
    const auto check_unary = [&](std::size_t pred) {
        if (p.vocabulary[pred].arity != 1) {
            throw std::invalid_argument("source/sink predicate " + p.vocabulary[pred].name + " must be unary");
        }
    };
    using fol::atom;
    if (p.dag->source) {
        check_unary(*p.dag->source);
        p.conjoin(fol::forall(Var::X, fol::iff(atom(*p.dag->source, {Var::X}),
                                                fol::negate(fol::exists(Var::Y, atom(r, {Var::Y, Var::X}))))));
    }
    if (p.dag->sink) {
        check_unary(*p.dag->sink);
        p.conjoin(fol::forall(Var::X, fol::iff(atom(*p.dag->sink, {Var::X}),
                                                fol::negate(fol::exists(Var::Y, atom(r, {Var::X, Var::Y}))))));
    }
    p.dag->source.reset();
    p.dag->sink.reset();
    return p;
}

Problem lower_counting(Problem p) {
    if (!contains_kind(p.sentence, NodeKind::CountingExists)) return p;
    std::vector<Formula> conjuncts;
    split_conjuncts(p.sentence, conjuncts);
    std::vector<Formula> kept;
    for (const auto& c : conjuncts) {
        if (c->kind != NodeKind::CountingExists) {
            if (contains_kind(c, NodeKind::CountingExists)) {
                throw UnsupportedFormula("counting quantifiers are only supported as top-level conjuncts");
            }
            kept.push_back(c);
            continue;
        }
        const Formula& body = c->children[0];
        // a body may lose its variable to constant folding; P is then all-or-nothing
        if (free_vars(body) & ~bit(c->var)) {
            throw UnsupportedFormula("counting quantifier body must have only the quantified variable free");
        }
        if (contains_kind(body, NodeKind::CountingExists)) {
            throw UnsupportedFormula("nested counting quantifiers are not supported");
        }
        const std::size_t pr = p.add_fresh_predicate("$count", 1, {1, 1});
        p.constraints.push_back({{pr}, c->cmp, c->bound});
        kept.push_back(to_nnf(fol::forall(c->var, fol::iff(fol::atom(pr, {c->var}), body))));
    }
    p.sentence = fol::conj(std::move(kept));
    return p;
}

Problem skolemize(Problem p) {
    if (is_universal_fo2(p.sentence)) return p;
    if (contains_kind(p.sentence, NodeKind::CountingExists)) {
        throw UnsupportedFormula("counting quantifier left for skolemization; run lower_counting first");
    }
    std::vector<Formula> conjuncts;
    split_conjuncts(p.sentence, conjuncts);
    Skolemizer s(p);
    for (const auto& c : conjuncts) s.top_level(c);
    p.sentence = s.result();
    return p;
}

Problem normalize(Problem p) {
    p = lower_source_sink(std::move(p));
    p.sentence = to_nnf(p.sentence);
    p = lower_counting(std::move(p));
    return skolemize(std::move(p));
}

}  // namespace wfomc
