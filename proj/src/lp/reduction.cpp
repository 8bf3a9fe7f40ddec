#include "lp/reduction.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "lp/dense.hpp"
#include "lp/graph.hpp"

namespace lp {

using detail::DenseProgram;
using detail::DenseRule;
using detail::Mask;

OpSet::OpSet(unsigned bits) : bits_(bits) {
    if (contains(ReductionOp::NR) && contains(ReductionOp::LNR))
        throw std::invalid_argument("NR and LNR are mutually exclusive");
    if (contains(ReductionOp::S) && contains(ReductionOp::LS))
        throw std::invalid_argument("S and LS are mutually exclusive");
}

OpSet OpSet::wfs() {
    return OpSet(bit(ReductionOp::PR) | bit(ReductionOp::NR) |
                 bit(ReductionOp::S) | bit(ReductionOp::F) |
                 bit(ReductionOp::L));
}

OpSet OpSet::mh() {
    return OpSet(bit(ReductionOp::PR) | bit(ReductionOp::LNR) |
                 bit(ReductionOp::S) | bit(ReductionOp::F) |
                 bit(ReductionOp::L));
}

OpSet OpSet::mh_ls() {
    return OpSet(bit(ReductionOp::PR) | bit(ReductionOp::LNR) |
                 bit(ReductionOp::LS) | bit(ReductionOp::F) |
                 bit(ReductionOp::L));
}

std::string OpSet::name() const {
    if (*this == wfs()) return "wfs";
    if (*this == mh()) return "mh";
    if (*this == mh_ls()) return "mhls";
    return "custom";
}

namespace {

Program replace_rule(const Program& p, std::size_t idx, const Rule& repl) {
    Program out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.add_rule(i == idx ? repl : p[i]);
    return out;
}

Program drop_rule(const Program& p, std::size_t idx) {
    Program out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (i != idx) out.add_rule(p[i]);
    return out;
}

Rule without_literal(const Rule& r, const Literal& l) {
    std::vector<Literal> body;
    for (const Literal& b : r.body())
        if (!(b == l)) body.push_back(b);
    return Rule(r.head(), std::move(body));
}

// Greatest atom set A such that every rule whose head is in A has a positive
// body atom in A.
AtomSet greatest_loop_set(const Program& p) {
    AtomSet a = atoms(p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : p.rules()) {
            if (!a.contains(r.head())) continue;
            if (set_intersection(r.positive_body(), a).empty()) {
                a.erase(r.head());
                changed = true;
            }
        }
    }
    return a;
}

}  // namespace

std::optional<Program> op_positive_reduction(const Program& p) {
    AtomSet hs = heads(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Literal& l : p[i].body())
            if (l.negated && !hs.contains(l.atom))
                return replace_rule(p, i, without_literal(p[i], l));
    return std::nullopt;
}

std::optional<Program> op_negative_reduction(const Program& p) {
    AtomSet fs = fact_atoms(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Literal& l : p[i].body())
            if (l.negated && fs.contains(l.atom)) return drop_rule(p, i);
    return std::nullopt;
}

std::optional<Program> op_layered_negative_reduction(const Program& p) {
    AtomSet fs = fact_atoms(p);
    RuleGraph g(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Literal& l : p[i].body())
            if (l.negated && fs.contains(l.atom) &&
                !g.in_loop_through(p, static_cast<int>(i), l))
                return drop_rule(p, i);
    return std::nullopt;
}

std::optional<Program> op_success(const Program& p) {
    AtomSet fs = fact_atoms(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Literal& l : p[i].body())
            if (!l.negated && fs.contains(l.atom))
                return replace_rule(p, i, without_literal(p[i], l));
    return std::nullopt;
}

std::optional<Program> op_layered_success(const Program& p) {
    AtomSet fs = fact_atoms(p);
    RuleGraph g(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Literal& l : p[i].body())
            if (!l.negated && fs.contains(l.atom) &&
                !g.in_loop_through(p, static_cast<int>(i), l))
                return replace_rule(p, i, without_literal(p[i], l));
    return std::nullopt;
}

std::optional<Program> op_failure(const Program& p) {
    AtomSet hs = heads(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Literal& l : p[i].body())
            if (!l.negated && !hs.contains(l.atom)) return drop_rule(p, i);
    return std::nullopt;
}

std::optional<Program> op_loop_detection(const Program& p) {
    AtomSet a = greatest_loop_set(p);
    Program out;
    bool changed = false;
    for (const Rule& r : p.rules()) {
        if (set_intersection(r.positive_body(), a).empty())
            out.add_rule(r);
        else
            changed = true;
    }
    if (!changed) return std::nullopt;
    return out;
}

std::vector<Program> reduction_successors(const Program& p, const OpSet& ops) {
    std::vector<Program> out;
    AtomSet hs = heads(p);
    AtomSet fs = fact_atoms(p);
    const bool needs_graph = ops.contains(ReductionOp::LNR) ||
                             ops.contains(ReductionOp::LS);
    std::optional<RuleGraph> g;
    if (needs_graph) g.emplace(p);

    for (std::size_t i = 0; i < p.size(); ++i) {
        for (const Literal& l : p[i].body()) {
            if (l.negated) {
                if (ops.contains(ReductionOp::PR) && !hs.contains(l.atom))
                    out.push_back(replace_rule(p, i, without_literal(p[i], l)));
                if (fs.contains(l.atom)) {
                    if (ops.contains(ReductionOp::NR))
                        out.push_back(drop_rule(p, i));
                    if (ops.contains(ReductionOp::LNR) &&
                        !g->in_loop_through(p, static_cast<int>(i), l))
                        out.push_back(drop_rule(p, i));
                }
            } else {
                if (ops.contains(ReductionOp::F) && !hs.contains(l.atom))
                    out.push_back(drop_rule(p, i));
                if (fs.contains(l.atom)) {
                    if (ops.contains(ReductionOp::S))
                        out.push_back(
                            replace_rule(p, i, without_literal(p[i], l)));
                    if (ops.contains(ReductionOp::LS) &&
                        !g->in_loop_through(p, static_cast<int>(i), l))
                        out.push_back(
                            replace_rule(p, i, without_literal(p[i], l)));
                }
            }
        }
    }
    if (ops.contains(ReductionOp::L)) {
        if (auto q = op_loop_detection(p)) out.push_back(*q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense remainder engine.

namespace {

Mask dense_heads(const std::vector<DenseRule>& rules) {
    Mask m = 0;
    for (const DenseRule& r : rules) m |= Mask{1} << r.head;
    return m;
}

Mask dense_facts(const std::vector<DenseRule>& rules) {
    Mask m = 0;
    for (const DenseRule& r : rules)
        if (r.pos == 0 && r.neg == 0) m |= Mask{1} << r.head;
    return m;
}

void dense_dedup(std::vector<DenseRule>& rules) {
    std::set<DenseRule> seen;
    std::vector<DenseRule> out;
    out.reserve(rules.size());
    for (const DenseRule& r : rules)
        if (seen.insert(r).second) out.push_back(r);
    rules.swap(out);
}

struct DenseSccs {
    std::vector<int> comp;
    std::vector<bool> cyclic;
    std::vector<std::vector<int>> members;
};

DenseSccs dense_sccs(const std::vector<DenseRule>& rules) {
    const int n = static_cast<int>(rules.size());
    std::vector<std::vector<int>> succ(n);
    for (int r = 0; r < n; ++r) {
        Mask head_bit = Mask{1} << rules[r].head;
        for (int s = 0; s < n; ++s)
            if ((rules[s].pos | rules[s].neg) & head_bit) succ[r].push_back(s);
    }
    // Tiny iterative Tarjan over the rule indices.
    DenseSccs out;
    out.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, ncomp = 0;
    struct Frame {
        int v;
        std::size_t e;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.e < succ[f.v].size()) {
                int w = succ[f.v][f.e++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        out.comp[w] = ncomp;
                        if (w == f.v) break;
                    }
                    ++ncomp;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] =
                        std::min(low[frames.back().v], low[v]);
            }
        }
    }
    out.members.assign(ncomp, {});
    out.cyclic.assign(ncomp, false);
    for (int v = 0; v < n; ++v) out.members[out.comp[v]].push_back(v);
    for (int v = 0; v < n; ++v) {
        if (out.members[out.comp[v]].size() > 1) {
            out.cyclic[out.comp[v]] = true;
        } else {
            Mask head_bit = Mask{1} << rules[v].head;
            if ((rules[v].pos | rules[v].neg) & head_bit)
                out.cyclic[out.comp[v]] = true;
        }
    }
    return out;
}

bool dense_in_loop_through(const std::vector<DenseRule>& rules,
                           const DenseSccs& sccs, int r, int atom) {
    int c = sccs.comp[r];
    if (!sccs.cyclic[c]) return false;
    for (int s : sccs.members[c])
        if (rules[s].head == atom) return true;
    return false;
}

bool step_loop_detection(std::vector<DenseRule>& rules, Mask universe) {
    Mask a = universe;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const DenseRule& r : rules) {
            Mask head_bit = Mask{1} << r.head;
            if ((a & head_bit) && (r.pos & a) == 0) {
                a &= ~head_bit;
                shrunk = true;
            }
        }
    }
    std::size_t before = rules.size();
    std::erase_if(rules, [&](const DenseRule& r) { return (r.pos & a) != 0; });
    return rules.size() != before;
}

bool step_failure(std::vector<DenseRule>& rules) {
    Mask hs = dense_heads(rules);
    std::size_t before = rules.size();
    std::erase_if(rules, [&](const DenseRule& r) { return (r.pos & ~hs) != 0; });
    return rules.size() != before;
}

bool step_success(std::vector<DenseRule>& rules) {
    Mask fs = dense_facts(rules);
    bool changed = false;
    for (DenseRule& r : rules) {
        if (r.pos & fs) {
            r.pos &= ~fs;
            changed = true;
        }
    }
    if (changed) dense_dedup(rules);
    return changed;
}

bool step_layered_success(std::vector<DenseRule>& rules) {
    Mask fs = dense_facts(rules);
    if (!fs) return false;
    DenseSccs sccs = dense_sccs(rules);
    for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
        Mask cand = rules[i].pos & fs;
        while (cand) {
            int b = std::countr_zero(cand);
            cand &= cand - 1;
            if (!dense_in_loop_through(rules, sccs, i, b)) {
                rules[i].pos &= ~(Mask{1} << b);
                dense_dedup(rules);
                return true;
            }
        }
    }
    return false;
}

bool step_negative_reduction(std::vector<DenseRule>& rules) {
    Mask fs = dense_facts(rules);
    std::size_t before = rules.size();
    std::erase_if(rules, [&](const DenseRule& r) { return (r.neg & fs) != 0; });
    return rules.size() != before;
}

bool step_layered_negative_reduction(std::vector<DenseRule>& rules) {
    Mask fs = dense_facts(rules);
    if (!fs) return false;
    DenseSccs sccs = dense_sccs(rules);
    for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
        Mask cand = rules[i].neg & fs;
        while (cand) {
            int b = std::countr_zero(cand);
            cand &= cand - 1;
            if (!dense_in_loop_through(rules, sccs, i, b)) {
                rules.erase(rules.begin() + i);
                return true;
            }
        }
    }
    return false;
}

bool step_positive_reduction(std::vector<DenseRule>& rules) {
    Mask hs = dense_heads(rules);
    bool changed = false;
    for (DenseRule& r : rules) {
        if (r.neg & ~hs) {
            r.neg &= hs;
            changed = true;
        }
    }
    if (changed) dense_dedup(rules);
    return changed;
}

}  // namespace

namespace detail {

void remainder_in_place(DenseProgram& d, const OpSet& ops) {
    for (;;) {
        if (ops.contains(ReductionOp::L) &&
            step_loop_detection(d.rules, d.universe()))
            continue;
        if (ops.contains(ReductionOp::F) && step_failure(d.rules)) continue;
        if (ops.contains(ReductionOp::S) && step_success(d.rules)) continue;
        if (ops.contains(ReductionOp::LS) && step_layered_success(d.rules))
            continue;
        if (ops.contains(ReductionOp::NR) && step_negative_reduction(d.rules))
            continue;
        if (ops.contains(ReductionOp::LNR) &&
            step_layered_negative_reduction(d.rules))
            continue;
        if (ops.contains(ReductionOp::PR) && step_positive_reduction(d.rules))
            continue;
        break;
    }
}

DenseWfm wfm_via_remainder(const DenseProgram& d) {
    DenseProgram r = d;
    remainder_in_place(r, OpSet::wfs());
    DenseWfm w;
    w.t = dense_facts(r.rules);
    w.f = d.universe() & ~dense_heads(r.rules);
    w.u = d.universe() & ~w.t & ~w.f;
    return w;
}

void add_fact_rules(DenseProgram& d, Mask facts) {
    for (int i = 0; i < d.n_atoms; ++i) {
        if (!(facts & (Mask{1} << i))) continue;
        DenseRule f{i, 0, 0};
        if (std::find(d.rules.begin(), d.rules.end(), f) == d.rules.end())
            d.rules.push_back(f);
    }
}

}  // namespace detail

Program remainder(const Program& p, const OpSet& ops) {
    DenseProgram d = detail::to_dense(p);
    detail::remainder_in_place(d, ops);
    return detail::from_dense(d);
}

Interpretation3V wfm_from_remainder(const Program& p) {
    DenseProgram d = detail::to_dense(p);
    detail::DenseWfm w = detail::wfm_via_remainder(d);
    return Interpretation3V(detail::mask_to_set(d, w.t),
                            detail::mask_to_set(d, w.f),
                            detail::mask_to_set(d, w.u));
}

Interpretation3V wfm_alternating(const Program& p) {
    DenseProgram d = detail::to_dense(p);
    detail::DenseWfm w = detail::wfm_alternating(d);
    return Interpretation3V(detail::mask_to_set(d, w.t),
                            detail::mask_to_set(d, w.f),
                            detail::mask_to_set(d, w.u));
}

}  // namespace lp
