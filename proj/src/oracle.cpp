#include "wfomc/oracle.hpp"

#include <map>

namespace wfomc {

GroundWorld::GroundWorld(const Vocabulary& vocabulary, std::uint32_t n) : vocabulary_(&vocabulary), n_(n) {
    for (const auto& pred : vocabulary) {
        offset_.push_back(atoms_);
        atoms_ += pred.arity == 1 ? n : std::size_t{n} * n;
    }
    if (atoms_ > 64) throw OracleCapExceeded("world has more than 64 ground atoms");
}

std::size_t GroundWorld::atom_index(std::size_t predicate, std::uint32_t a, std::uint32_t b) const {
    return offset_[predicate] + ((*vocabulary_)[predicate].arity == 1 ? a : std::size_t{a} * n_ + b);
}

void GroundWorld::set(std::size_t predicate, std::uint32_t a, std::uint32_t b, bool value) {
    set_bit(atom_index(predicate, a, b), value);
}

std::uint64_t GroundWorld::cardinality(std::size_t predicate) const {
    const std::size_t count = (*vocabulary_)[predicate].arity == 1 ? n_ : std::size_t{n_} * n_;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < count; ++i) c += (bits_ >> (offset_[predicate] + i)) & 1U;
    return c;
}

Rational GroundWorld::weight(const Problem& p) const {
    Rational w = 1;
    for (std::size_t pred = 0; pred < p.vocabulary.size(); ++pred) {
        const std::uint64_t atoms = p.vocabulary[pred].arity == 1 ? n_ : std::uint64_t{n_} * n_;
        const std::uint64_t t = cardinality(pred);
        const Weight pw = p.weight_of(pred);
        w *= pow(pw.positive, t) * pow(pw.negative, atoms - t);
    }
    return w;
}

GroundWorld GroundWorld::restrict_to(const std::vector<std::uint32_t>& elements) const {
    GroundWorld out(*vocabulary_, static_cast<std::uint32_t>(elements.size()));
    const auto m = static_cast<std::uint32_t>(elements.size());
    for (std::size_t pred = 0; pred < vocabulary_->size(); ++pred) {
        for (std::uint32_t a = 0; a < m; ++a) {
            if ((*vocabulary_)[pred].arity == 1) {
                out.set(pred, a, 0, holds(pred, elements[a]));
                continue;
            }
            for (std::uint32_t b = 0; b < m; ++b) out.set(pred, a, b, holds(pred, elements[a], elements[b]));
        }
    }
    return out;
}

GroundWorld GroundWorld::permuted(const std::vector<std::uint32_t>& perm) const {
    GroundWorld out(*vocabulary_, n_);
    for (std::size_t pred = 0; pred < vocabulary_->size(); ++pred) {
        for (std::uint32_t a = 0; a < n_; ++a) {
            if ((*vocabulary_)[pred].arity == 1) {
                out.set(pred, perm[a], 0, holds(pred, a));
                continue;
            }
            for (std::uint32_t b = 0; b < n_; ++b) out.set(pred, perm[a], perm[b], holds(pred, a, b));
        }
    }
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> GroundWorld::edges(std::size_t predicate) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < n_; ++a) {
        for (std::uint32_t b = 0; b < n_; ++b) {
            if (holds(predicate, a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

bool is_acyclic(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges, std::uint32_t n) {
    std::vector<std::uint32_t> indegree(n, 0);
    std::vector<std::vector<std::uint32_t>> out(n);
    for (auto [a, b] : edges) {
        out[a].push_back(b);
        ++indegree[b];
    }
    std::vector<std::uint32_t> ready;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::uint32_t removed = 0;
    while (!ready.empty()) {
        const std::uint32_t v = ready.back();
        ready.pop_back();
        ++removed;
        for (std::uint32_t w : out[v]) {
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    return removed == n;
}

namespace {

bool eval(const Formula& f, const GroundWorld& w, std::uint32_t env[2]) {
    switch (f->kind) {
        case NodeKind::True: return true;
        case NodeKind::False: return false;
        case NodeKind::Atom: {
            const std::uint32_t a = env[static_cast<unsigned>(f->terms[0])];
            const std::uint32_t b = f->terms.size() > 1 ? env[static_cast<unsigned>(f->terms[1])] : 0;
            return w.holds(f->predicate, a, b);
        }
        case NodeKind::Not: return !eval(f->children[0], w, env);
        case NodeKind::And:
            for (const auto& c : f->children) {
                if (!eval(c, w, env)) return false;
            }
            return true;
        case NodeKind::Or:
            for (const auto& c : f->children) {
                if (eval(c, w, env)) return true;
            }
            return false;
        case NodeKind::Implies: return !eval(f->children[0], w, env) || eval(f->children[1], w, env);
        case NodeKind::Iff: return eval(f->children[0], w, env) == eval(f->children[1], w, env);
        case NodeKind::Forall:
        case NodeKind::Exists:
        case NodeKind::CountingExists: {
            const unsigned slot = static_cast<unsigned>(f->var);
            const std::uint32_t saved = env[slot];
            std::uint64_t witnesses = 0;
            bool result = f->kind == NodeKind::Forall;
            for (std::uint32_t e = 0; e < w.domain_size(); ++e) {
                env[slot] = e;
                const bool holds = eval(f->children[0], w, env);
                if (f->kind == NodeKind::Forall && !holds) {
                    result = false;
                    break;
                }
                if (f->kind == NodeKind::Exists && holds) {
                    result = true;
                    break;
                }
                witnesses += holds ? 1 : 0;
            }
            env[slot] = saved;
            if (f->kind == NodeKind::CountingExists) return compare(witnesses, f->cmp, f->bound);
            return result;
        }
    }
    return false;
}

bool source_sink_ok(const Problem& p, const GroundWorld& w) {
    if (!p.dag) return true;
    for (std::uint32_t c = 0; c < w.domain_size(); ++c) {
        bool has_in = false;
        bool has_out = false;
        for (std::uint32_t d = 0; d < w.domain_size(); ++d) {
            has_in = has_in || w.holds(p.dag->relation, d, c);
            has_out = has_out || w.holds(p.dag->relation, c, d);
        }
        if (p.dag->source && w.holds(*p.dag->source, c) == has_in) return false;
        if (p.dag->sink && w.holds(*p.dag->sink, c) == has_out) return false;
    }
    return true;
}

bool constraints_ok(const Problem& p, const GroundWorld& w) {
    for (const auto& c : p.constraints) {
        std::uint64_t sum = 0;
        for (std::size_t pred : c.terms) sum += w.cardinality(pred);
        if (!c.satisfied_by(sum)) return false;
    }
    return true;
}

/// Depth-first enumeration. The acyclic relation's atoms come first so partial
/// assignments with a cycle are cut early; source/sink atoms follow and are forced.
class Enumerator {
public:
    Enumerator(const Problem& p, std::uint32_t n, const std::function<void(const GroundWorld&)>& visit)
        : p_(p), n_(n), world_(p.vocabulary, n), visit_(visit) {
        std::vector<bool> placed(p.vocabulary.size(), false);
        auto place = [&](std::size_t pred) {
            if (placed[pred]) return;
            placed[pred] = true;
            const bool binary = p.vocabulary[pred].arity == 2;
            for (std::uint32_t a = 0; a < n; ++a) {
                if (!binary) {
                    order_.push_back({pred, a, 0});
                    continue;
                }
                for (std::uint32_t b = 0; b < n; ++b) order_.push_back({pred, a, b});
            }
        };
        if (p.dag) {
            place(p.dag->relation);
            relation_atoms_ = order_.size();
            if (p.dag->source) place(*p.dag->source);
            if (p.dag->sink) place(*p.dag->sink);
        }
        for (std::size_t pred = 0; pred < p.vocabulary.size(); ++pred) place(pred);
        reach_.assign(n, 0);
        for (std::uint32_t v = 0; v < n; ++v) reach_[v] = std::uint64_t{1} << v;
    }

    void run() { step(0); }

private:
    struct Slot {
        std::size_t pred;
        std::uint32_t a;
        std::uint32_t b;
    };

    void step(std::size_t at) {
        if (at == order_.size()) {
            if (evaluate_sentence(p_, world_) && constraints_ok(p_, world_)) visit_(world_);
            return;
        }
        const Slot s = order_[at];
        const std::size_t bit = world_.atom_index(s.pred, s.a, s.b);
        if (p_.dag && at < relation_atoms_) {
            world_.set_bit(bit, false);
            step(at + 1);
            // adding a -> b closes a cycle iff a is reachable from b
            if ((reach_[s.b] >> s.a) & 1U) return;
            const std::vector<std::uint64_t> saved = reach_;
            for (std::uint32_t v = 0; v < n_; ++v) {
                if ((reach_[v] >> s.a) & 1U) reach_[v] |= reach_[s.b];
            }
            world_.set_bit(bit, true);
            step(at + 1);
            world_.set_bit(bit, false);
            reach_ = saved;
            return;
        }
        if (p_.dag && ((p_.dag->source && s.pred == *p_.dag->source) || (p_.dag->sink && s.pred == *p_.dag->sink))) {
            const bool is_source = p_.dag->source && s.pred == *p_.dag->source;
            bool has = false;
            for (std::uint32_t d = 0; d < n_; ++d) {
                has = has || (is_source ? world_.holds(p_.dag->relation, d, s.a)
                                        : world_.holds(p_.dag->relation, s.a, d));
            }
            world_.set_bit(bit, !has);
            step(at + 1);
            world_.set_bit(bit, false);
            return;
        }
        world_.set_bit(bit, false);
        step(at + 1);
        world_.set_bit(bit, true);
        step(at + 1);
        world_.set_bit(bit, false);
    }

    const Problem& p_;
    std::uint32_t n_;
    GroundWorld world_;
    const std::function<void(const GroundWorld&)>& visit_;
    std::vector<Slot> order_;
    std::size_t relation_atoms_ = 0;
    std::vector<std::uint64_t> reach_;  // reach_[v]: nodes reachable from v (v included)
};

}  // namespace

bool evaluate_sentence(const Problem& p, const GroundWorld& world) {
    std::uint32_t env[2] = {0, 0};
    return eval(p.sentence, world, env);
}

bool satisfies(const Problem& p, const GroundWorld& world) {
    if (!evaluate_sentence(p, world) || !constraints_ok(p, world)) return false;
    if (p.dag && !is_acyclic(world.edges(p.dag->relation), world.domain_size())) return false;
    return source_sink_ok(p, world);
}

std::size_t ground_atom_count(const Problem& p, std::uint32_t n) {
    std::size_t atoms = 0;
    for (const auto& pred : p.vocabulary) atoms += pred.arity == 1 ? n : std::size_t{n} * n;
    return atoms;
}

void for_each_model(const Problem& p, std::uint32_t n, const std::function<void(const GroundWorld&)>& visit,
                    std::size_t atom_cap) {
    if (atom_cap > kMaxOracleAtomCap) throw std::invalid_argument("oracle atom cap cannot exceed 28");
    const std::size_t atoms = ground_atom_count(p, n);
    if (atoms > atom_cap) {
        throw OracleCapExceeded("grounding has " + std::to_string(atoms) + " atoms; the oracle cap is " +
                                std::to_string(atom_cap));
    }
    Enumerator(p, n, visit).run();
}

Rational oracle_wfomc(const Problem& p, std::uint32_t n, std::size_t atom_cap) {
    // Group models by per-predicate cardinalities; each group shares one weight.
    std::map<std::vector<std::uint64_t>, std::uint64_t> groups;
    std::vector<std::uint64_t> key(p.vocabulary.size());
    for_each_model(
        p, n,
        [&](const GroundWorld& w) {
            for (std::size_t pred = 0; pred < key.size(); ++pred) key[pred] = w.cardinality(pred);
            ++groups[key];
        },
        atom_cap);
    Rational total = 0;
    for (const auto& [counts, multiplicity] : groups) {
        Rational w = 1;
        for (std::size_t pred = 0; pred < counts.size(); ++pred) {
            const std::uint64_t atoms = p.vocabulary[pred].arity == 1 ? n : std::uint64_t{n} * n;
            const Weight pw = p.weight_of(pred);
            w *= pow(pw.positive, counts[pred]) * pow(pw.negative, atoms - counts[pred]);
        }
        total += w * Rational(Integer(static_cast<unsigned long>(multiplicity)));
    }
    return total;
}

}  // namespace wfomc
