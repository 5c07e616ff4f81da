#include "wfomc/formula.hpp"

#include <sstream>

#include "wfomc/problem.hpp"

namespace wfomc {

bool compare(std::uint64_t value, Comparator cmp, std::uint64_t bound) {
    switch (cmp) {
        case Comparator::Eq: return value == bound;
        case Comparator::Le: return value <= bound;
        case Comparator::Ge: return value >= bound;
    }
    return false;
}

const char* to_string(Comparator cmp) {
    switch (cmp) {
        case Comparator::Eq: return "=";
        case Comparator::Le: return "<=";
        case Comparator::Ge: return ">=";
    }
    return "?";
}

namespace fol {

namespace {

Formula make(FormulaNode node) { return std::make_shared<const FormulaNode>(std::move(node)); }

Formula nary(NodeKind kind, std::vector<Formula> parts) {
    std::vector<Formula> flat;
    for (auto& p : parts) {
        if (p->kind == kind) {
            flat.insert(flat.end(), p->children.begin(), p->children.end());
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) return kind == NodeKind::And ? top() : bottom();
    if (flat.size() == 1) return flat.front();
    FormulaNode node;
    node.kind = kind;
    node.children = std::move(flat);
    return make(std::move(node));
}

Formula quantifier(NodeKind kind, Var v, Formula body) {
    FormulaNode node;
    node.kind = kind;
    node.var = v;
    node.children = {std::move(body)};
    return make(std::move(node));
}

}  // namespace

Formula top() {
    static const Formula t = make(FormulaNode{.kind = NodeKind::True, .terms = {}, .children = {}});
    return t;
}

Formula bottom() {
    static const Formula f = make(FormulaNode{.kind = NodeKind::False, .terms = {}, .children = {}});
    return f;
}

Formula atom(std::size_t predicate, std::vector<Var> terms) {
    FormulaNode node;
    node.kind = NodeKind::Atom;
    node.predicate = predicate;
    node.terms = std::move(terms);
    return make(std::move(node));
}

Formula negate(Formula f) {
    FormulaNode node;
    node.kind = NodeKind::Not;
    node.children = {std::move(f)};
    return make(std::move(node));
}

Formula conj(std::vector<Formula> parts) { return nary(NodeKind::And, std::move(parts)); }
Formula disj(std::vector<Formula> parts) { return nary(NodeKind::Or, std::move(parts)); }

Formula implies(Formula a, Formula b) {
    FormulaNode node;
    node.kind = NodeKind::Implies;
    node.children = {std::move(a), std::move(b)};
    return make(std::move(node));
}

Formula iff(Formula a, Formula b) {
    FormulaNode node;
    node.kind = NodeKind::Iff;
    node.children = {std::move(a), std::move(b)};
    return make(std::move(node));
}

Formula forall(Var v, Formula body) { return quantifier(NodeKind::Forall, v, std::move(body)); }
Formula exists(Var v, Formula body) { return quantifier(NodeKind::Exists, v, std::move(body)); }

Formula counting(Comparator cmp, std::uint64_t bound, Var v, Formula body) {
    FormulaNode node;
    node.kind = NodeKind::CountingExists;
    node.var = v;
    node.cmp = cmp;
    node.bound = bound;
    node.children = {std::move(body)};
    return make(std::move(node));
}

}  // namespace fol

std::uint8_t free_vars(const Formula& f) {
    switch (f->kind) {
        case NodeKind::True:
        case NodeKind::False: return 0;
        case NodeKind::Atom: {
            std::uint8_t mask = 0;
            for (Var t : f->terms) mask |= bit(t);
            return mask;
        }
        case NodeKind::Forall:
        case NodeKind::Exists:
        case NodeKind::CountingExists:
            return static_cast<std::uint8_t>(free_vars(f->children[0]) & ~bit(f->var));
        default: {
            std::uint8_t mask = 0;
            for (const auto& c : f->children) mask |= free_vars(c);
            return mask;
        }
    }
}

bool contains_kind(const Formula& f, NodeKind kind) {
    if (f->kind == kind) return true;
    for (const auto& c : f->children) {
        if (contains_kind(c, kind)) return true;
    }
    return false;
}

bool is_quantifier_free(const Formula& f) {
    return !contains_kind(f, NodeKind::Forall) && !contains_kind(f, NodeKind::Exists) &&
           !contains_kind(f, NodeKind::CountingExists);
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->children.size() != b->children.size()) return false;
    switch (a->kind) {
        case NodeKind::Atom:
            if (a->predicate != b->predicate || a->terms != b->terms) return false;
            break;
        case NodeKind::Forall:
        case NodeKind::Exists:
            if (a->var != b->var) return false;
            break;
        case NodeKind::CountingExists:
            if (a->var != b->var || a->cmp != b->cmp || a->bound != b->bound) return false;
            break;
        default: break;
    }
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (!structurally_equal(a->children[i], b->children[i])) return false;
    }
    return true;
}

Formula swap_vars(const Formula& f) {
    FormulaNode node = *f;
    for (Var& t : node.terms) t = other(t);
    if (f->kind == NodeKind::Forall || f->kind == NodeKind::Exists || f->kind == NodeKind::CountingExists) {
        node.var = other(node.var);
    }
    for (auto& c : node.children) c = swap_vars(c);
    return std::make_shared<const FormulaNode>(std::move(node));
}

namespace {

int precedence(NodeKind kind) {
    switch (kind) {
        case NodeKind::Iff: return 1;
        case NodeKind::Implies: return 2;
        case NodeKind::Or: return 3;
        case NodeKind::And: return 4;
        case NodeKind::Not: return 5;
        case NodeKind::Forall:
        case NodeKind::Exists:
        case NodeKind::CountingExists: return 0;
        default: return 6;
    }
}

const char* var_name(Var v) { return v == Var::X ? "x" : "y"; }

void print(std::ostream& out, const Formula& f, const Vocabulary& voc, int context) {
    const int prec = precedence(f->kind);
    const bool parens = prec < context;
    if (parens) out << "(";
    switch (f->kind) {
        case NodeKind::True: out << "true"; break;
        case NodeKind::False: out << "false"; break;
        case NodeKind::Atom: {
            out << voc[f->predicate].name << "(";
            for (std::size_t i = 0; i < f->terms.size(); ++i) out << (i ? "," : "") << var_name(f->terms[i]);
            out << ")";
            break;
        }
        case NodeKind::Not:
            out << "~";
            print(out, f->children[0], voc, 5);
            break;
        case NodeKind::And:
        case NodeKind::Or: {
            const char* op = f->kind == NodeKind::And ? " & " : " | ";
            for (std::size_t i = 0; i < f->children.size(); ++i) {
                if (i) out << op;
                print(out, f->children[i], voc, prec + 1);
            }
            break;
        }
        case NodeKind::Implies:
            // right associative
            print(out, f->children[0], voc, prec + 1);
            out << " -> ";
            print(out, f->children[1], voc, prec);
            break;
        case NodeKind::Iff:
            print(out, f->children[0], voc, prec + 1);
            out << " <-> ";
            print(out, f->children[1], voc, prec + 1);
            break;
        case NodeKind::Forall:
        case NodeKind::Exists:
        case NodeKind::CountingExists:
            if (f->kind == NodeKind::Forall) {
                out << "forall ";
            } else if (f->kind == NodeKind::Exists) {
                out << "exists ";
            } else {
                out << "exists[" << to_string(f->cmp) << f->bound << "] ";
            }
            out << var_name(f->var) << ". ";
            print(out, f->children[0], voc, 0);
            break;
    }
    if (parens) out << ")";
}

}  // namespace

std::string to_string(const Formula& f, const Vocabulary& vocabulary) {
    std::ostringstream out;
    print(out, f, vocabulary, 0);
    return out.str();
}

}  // namespace wfomc
