#include "lp/semantics.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "lp/dense.hpp"

namespace lp {

using detail::DenseProgram;
using detail::Mask;

const std::vector<SemanticsId>& all_semantics() {
    static const std::vector<SemanticsId> ids = {
        SemanticsId::SM,      SemanticsId::MH,          SemanticsId::MH_LS,
        SemanticsId::MH_LOOP, SemanticsId::MH_SUST,     SemanticsId::MH_SUST_MIN,
        SemanticsId::MH_REG,  SemanticsId::NAVY,        SemanticsId::BLUE,
        SemanticsId::CYAN,    SemanticsId::GREEN,       SemanticsId::PICKY,
    };
    return ids;
}

std::string semantics_name(SemanticsId id) {
    switch (id) {
        case SemanticsId::SM: return "sm";
        case SemanticsId::MH: return "mh";
        case SemanticsId::MH_LS: return "mh-ls";
        case SemanticsId::MH_LOOP: return "mh-loop";
        case SemanticsId::MH_SUST: return "mh-sustainable";
        case SemanticsId::MH_SUST_MIN: return "mh-sustainable-min";
        case SemanticsId::MH_REG: return "mh-regular";
        case SemanticsId::NAVY: return "navy";
        case SemanticsId::BLUE: return "blue";
        case SemanticsId::CYAN: return "cyan";
        case SemanticsId::GREEN: return "green";
        case SemanticsId::PICKY: return "picky";
    }
    return "?";
}

std::optional<SemanticsId> parse_semantics(std::string_view name) {
    for (SemanticsId id : all_semantics())
        if (semantics_name(id) == name) return id;
    // Forgiving aliases without the dash.
    if (name == "mhls") return SemanticsId::MH_LS;
    if (name == "mhloop") return SemanticsId::MH_LOOP;
    if (name == "mhsustainable") return SemanticsId::MH_SUST;
    if (name == "mhsustainablemin") return SemanticsId::MH_SUST_MIN;
    if (name == "mhregular") return SemanticsId::MH_REG;
    return std::nullopt;
}

OpSet op_set_for(SemanticsId id) {
    switch (id) {
        case SemanticsId::MH:
        case SemanticsId::MH_LOOP:
        case SemanticsId::MH_SUST:
        case SemanticsId::MH_SUST_MIN:
        case SemanticsId::MH_REG:
            return OpSet::mh();
        case SemanticsId::MH_LS:
            return OpSet::mh_ls();
        default:
            return OpSet::wfs();
    }
}

bool is_asm_h(SemanticsId id) {
    switch (id) {
        case SemanticsId::SM:
        case SemanticsId::MH:
        case SemanticsId::MH_LS:
        case SemanticsId::MH_LOOP:
        case SemanticsId::MH_SUST:
        case SemanticsId::MH_SUST_MIN:
        case SemanticsId::MH_REG:
            return true;
        default:
            return false;
    }
}

bool is_asm_m(SemanticsId id) {
    switch (id) {
        case SemanticsId::SM:
        case SemanticsId::MH_SUST_MIN:
        case SemanticsId::NAVY:
        case SemanticsId::BLUE:
        case SemanticsId::CYAN:
        case SemanticsId::GREEN:
            return true;
        default:
            return false;
    }
}

bool is_asm_family(SemanticsId id) { return is_asm_h(id) || is_asm_m(id); }

bool is_affix_semantics(SemanticsId id) {
    switch (id) {
        case SemanticsId::MH:
        case SemanticsId::MH_LS:
        case SemanticsId::MH_LOOP:
        case SemanticsId::MH_SUST:
        case SemanticsId::MH_SUST_MIN:
        case SemanticsId::MH_REG:
            return true;
        default:
            return false;
    }
}

bool AffixModel::operator<(const AffixModel& o) const {
    if (positive != o.positive) return positive < o.positive;
    if (affix.has_value() != o.affix.has_value()) return !affix.has_value();
    if (affix && o.affix) return *affix < *o.affix;
    return false;
}

void ModelSet::insert(AffixModel m) {
    auto it = std::lower_bound(models_.begin(), models_.end(), m);
    if (it == models_.end() || !(*it == m)) models_.insert(it, std::move(m));
}

bool ModelSet::contains(const AffixModel& m) const {
    return std::binary_search(models_.begin(), models_.end(), m);
}

bool ModelSet::contains_positive(const AtomSet& pos) const {
    for (const AffixModel& m : models_)
        if (m.positive == pos) return true;
    return false;
}

bool ModelSet::contains_model(const AffixModel& m, bool affix_based) const {
    if (!affix_based) return contains_positive(m.positive);
    for (const AffixModel& x : models_)
        if (x.positive == m.positive && x.affix == m.affix) return true;
    return false;
}

std::vector<AtomSet> ModelSet::positives() const {
    std::vector<AtomSet> out;
    out.reserve(models_.size());
    for (const AffixModel& m : models_) out.push_back(m.positive);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<AtomSet> semantic_kernel(const ModelSet& ms) {
    if (ms.empty()) return std::nullopt;
    AtomSet k = ms.begin()->positive;
    for (const AffixModel& m : ms) k = set_intersection(k, m.positive);
    return k;
}

Engine::Engine(int max_atoms) : max_atoms_(max_atoms) {
    if (max_atoms_ < 1 || max_atoms_ > detail::kMaxDenseAtoms - 1)
        throw std::invalid_argument("enumeration cap out of range");
}

const ModelSet& Engine::models(const Program& p, SemanticsId sem) {
    std::string key = semantics_name(sem) + "|" + p.canonical_key();
    auto it = model_cache_.find(key);
    if (it != model_cache_.end()) return it->second;
    ModelSet ms = compute_models(*this, p, sem);
    return model_cache_.emplace(std::move(key), std::move(ms)).first->second;
}

const Layering& Engine::layers(const Program& p) {
    std::string key = p.canonical_key();
    auto it = layer_cache_.find(key);
    if (it != layer_cache_.end()) return it->second;
    return layer_cache_.emplace(std::move(key), layering(p)).first->second;
}

namespace {

void check_cap(const Engine& e, std::size_t n, const char* what) {
    if (static_cast<int>(n) > e.max_atoms())
        throw CapExceeded(std::string(what) + " enumeration over " +
                          std::to_string(n) + " atoms exceeds the cap of " +
                          std::to_string(e.max_atoms()));
}

}  // namespace

Program gl_reduct(const Program& p, const AtomSet& m) {
    Program out;
    for (const Rule& r : p.rules()) {
        bool dropped = false;
        std::vector<Literal> body;
        for (const Literal& l : r.body()) {
            if (l.negated) {
                if (m.contains(l.atom)) {
                    dropped = true;
                    break;
                }
            } else {
                body.push_back(l);
            }
        }
        if (!dropped) out.add_rule(Rule(r.head(), std::move(body)));
    }
    return out;
}

AtomSet least_model(const Program& p) {
    for (const Rule& r : p.rules())
        for (const Literal& l : r.body())
            if (l.negated)
                throw std::invalid_argument(
                    "least_model requires a default-negation-free program");
    DenseProgram d = detail::to_dense(p);
    return detail::mask_to_set(d, detail::reduct_least_model(d, 0));
}

ModelSet stable_models(Engine& e, const Program& p) {
    check_cap(e, p.herbrand().size(), "stable model");
    DenseProgram d = detail::to_dense(p);
    ModelSet out;
    const Mask end = d.universe();
    for (Mask m = 0;; ++m) {
        if (detail::reduct_least_model(d, m) == m)
            out.insert(AffixModel{detail::mask_to_set(d, m), std::nullopt});
        if (m == end) break;
    }
    return out;
}

namespace {

// Atoms lying on a directed cycle of the atom dependency graph of p
// (head depends on each body atom).
AtomSet atoms_on_cycles(const Program& p) {
    const std::vector<Atom>& table = p.herbrand().items();
    const int n = static_cast<int>(table.size());
    auto idx = [&](Atom a) {
        return static_cast<int>(
            std::lower_bound(table.begin(), table.end(), a) - table.begin());
    };
    std::vector<std::vector<int>> succ(n);
    for (const Rule& r : p.rules()) {
        int h = idx(r.head());
        AtomSet ba = r.body_atoms();
        for (Atom a : ba) succ[h].push_back(idx(a));
    }
    // reach[i][j] via simple BFS per vertex; programs are tiny.
    AtomSet out;
    for (int v = 0; v < n; ++v) {
        std::vector<bool> seen(n, false);
        std::vector<int> queue(succ[v].begin(), succ[v].end());
        for (int w : succ[v]) seen[w] = true;
        bool cyc = false;
        while (!queue.empty() && !cyc) {
            int w = queue.back();
            queue.pop_back();
            if (w == v) cyc = true;
            for (int x : succ[w])
                if (!seen[x]) {
                    seen[x] = true;
                    queue.push_back(x);
                }
        }
        if (cyc || seen[v]) out.insert(table[v]);
    }
    return out;
}

}  // namespace

AtomSet hyps(const Program& p, SemanticsId sem) {
    Program r = remainder(p, op_set_for(sem));
    AtomSet negged;
    for (const Rule& rule : r.rules())
        for (const Literal& l : rule.body())
            if (l.negated) negged.insert(l.atom);
    if (sem != SemanticsId::MH_LOOP) return negged;
    return set_intersection(negged, atoms_on_cycles(r));
}

std::vector<AffixModel> affix_candidates(Engine& e, const Program& p,
                                         const AtomSet& hyps) {
    std::vector<AffixModel> out;
    DenseProgram base = detail::to_dense(p);
    if (hyps.empty()) {
        detail::DenseWfm w = detail::wfm_via_remainder(base);
        if (w.u == 0)
            out.push_back(
                AffixModel{detail::mask_to_set(base, w.t), AtomSet{}});
        return out;
    }
    check_cap(e, hyps.size(), "hypotheses");
    std::vector<int> bits;
    for (Atom a : hyps)
        bits.push_back(std::countr_zero(detail::set_to_mask(base, AtomSet{a})));
    const Mask limit = (Mask{1} << hyps.size()) - 1;
    for (Mask sel = 1; sel <= limit; ++sel) {
        Mask facts = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (sel & (Mask{1} << i)) facts |= Mask{1} << bits[i];
        DenseProgram d = base;
        detail::add_fact_rules(d, facts);
        detail::DenseWfm w = detail::wfm_via_remainder(d);
        if (w.u == 0)
            out.push_back(AffixModel{detail::mask_to_set(base, w.t),
                                     detail::mask_to_set(base, facts)});
    }
    return out;
}

namespace {

// Keeps candidates whose affix is subset-minimal among all candidates.
std::vector<AffixModel> minimal_affixes(std::vector<AffixModel> cands) {
    std::vector<AffixModel> out;
    for (const AffixModel& c : cands) {
        bool minimal = true;
        for (const AffixModel& o : cands)
            if (o.affix->proper_subset_of(*c.affix)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

bool affix_sustainable(const Program& p, const AffixModel& c) {
    const AtomSet& h = *c.affix;
    if (h.size() <= 1) return true;
    for (Atom x : h) {
        AtomSet rest = h;
        rest.erase(x);
        Interpretation3V w = wfm_from_remainder(add_facts(p, rest));
        if (!w.undef_set().contains(x)) return false;
    }
    return true;
}

std::vector<AffixModel> minimal_positives(std::vector<AffixModel> cands) {
    std::vector<AffixModel> out;
    for (const AffixModel& c : cands) {
        bool minimal = true;
        for (const AffixModel& o : cands)
            if (o.positive.proper_subset_of(c.positive)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

}  // namespace

ModelSet mh_family_models(Engine& e, const Program& p, SemanticsId sem) {
    std::vector<AffixModel> cands =
        minimal_affixes(affix_candidates(e, p, hyps(p, sem)));

    if (sem == SemanticsId::MH_SUST || sem == SemanticsId::MH_SUST_MIN) {
        std::vector<AffixModel> kept;
        for (const AffixModel& c : cands)
            if (affix_sustainable(p, c)) kept.push_back(c);
        if (sem == SemanticsId::MH_SUST_MIN) kept = minimal_positives(kept);
        cands = std::move(kept);
    } else if (sem == SemanticsId::MH_REG) {
        std::vector<AffixModel> kept;
        for (const AffixModel& c : cands)
            if (is_regular(e, p, SemanticsId::MH, c.positive))
                kept.push_back(c);
        cands = std::move(kept);
    }

    ModelSet out;
    for (AffixModel& c : cands) out.insert(std::move(c));
    return out;
}

ModelSet classical_models(Engine& e, const Program& p) {
    check_cap(e, p.herbrand().size(), "classical model");
    DenseProgram d = detail::to_dense(p);
    ModelSet out;
    const Mask end = d.universe();
    for (Mask m = 0;; ++m) {
        if (detail::is_classical_model(d, m))
            out.insert(AffixModel{detail::mask_to_set(d, m), std::nullopt});
        if (m == end) break;
    }
    return out;
}

namespace {

// Subset-minimal classical models of the WFS remainder of p, as positive
// parts over H_P (erased atoms are false).
std::vector<AtomSet> remainder_minimal_models(Engine& e, const Program& p) {
    Program r = remainder(p, OpSet::wfs());
    check_cap(e, r.herbrand().size(), "minimal model");
    DenseProgram d = detail::to_dense(r);
    std::vector<Mask> models;
    const Mask end = d.universe();
    for (Mask m = 0;; ++m) {
        if (detail::is_classical_model(d, m)) models.push_back(m);
        if (m == end) break;
    }
    std::vector<AtomSet> out;
    for (Mask m : models) {
        bool minimal = true;
        for (Mask o : models)
            if (o != m && (o & ~m) == 0) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(detail::mask_to_set(d, m));
    }
    return out;
}

AtomSet unsupported_in(const Program& p, const AtomSet& positive) {
    AtomSet out;
    for (Atom b : positive) {
        bool supported = false;
        for (const Rule& r : p.rules()) {
            if (r.head() != b) continue;
            bool body_true = true;
            for (const Literal& l : r.body()) {
                bool holds = l.negated ? !positive.contains(l.atom)
                                       : positive.contains(l.atom);
                if (!holds) {
                    body_true = false;
                    break;
                }
            }
            if (body_true) {
                supported = true;
                break;
            }
        }
        if (!supported) out.insert(b);
    }
    return out;
}

}  // namespace

ModelSet navy_models(Engine& e, const Program& p) {
    ModelSet out;
    for (AtomSet& m : remainder_minimal_models(e, p))
        out.insert(AffixModel{std::move(m), std::nullopt});
    return out;
}

AtomSet unsupported_atoms(const Program& p, const Interpretation3V& m) {
    if (!m.is_total())
        throw std::invalid_argument("unsupported_atoms requires a total model");
    return unsupported_in(p, m.true_set());
}

ModelSet green_models(Engine& e, const Program& p) {
    Program r = remainder(p, OpSet::wfs());
    std::vector<AtomSet> cands = remainder_minimal_models(e, p);
    std::vector<AtomSet> unsup;
    unsup.reserve(cands.size());
    for (const AtomSet& m : cands) unsup.push_back(unsupported_in(r, m));
    ModelSet out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < cands.size(); ++j)
            if (unsup[j].proper_subset_of(unsup[i])) {
                minimal = false;
                break;
            }
        if (minimal) out.insert(AffixModel{cands[i], std::nullopt});
    }
    return out;
}

namespace {

AtomSet navy_kernel(Engine& e, const Program& p) {
    // Navy is never empty: every rule set has classical models.
    return *semantic_kernel(e.models(p, SemanticsId::NAVY));
}

AtomSet regular_navy_kernel(Engine& e, const Program& p) {
    AtomSet k;
    bool first = true;
    for (const AffixModel& m : e.models(p, SemanticsId::NAVY)) {
        if (!is_regular(e, p, SemanticsId::NAVY, m.positive)) continue;
        k = first ? m.positive : set_intersection(k, m.positive);
        first = false;
    }
    // No regular model: the kernel contributes nothing.
    return first ? AtomSet{} : k;
}

}  // namespace

ModelSet blue_models(Engine& e, const Program& p) {
    Program current = p;
    std::set<std::string> seen;
    for (;;) {
        if (!seen.insert(current.canonical_key()).second)
            throw std::logic_error("blue kernel iteration did not converge");
        AtomSet k = navy_kernel(e, current);
        Program pk = add_facts(current, k);
        AtomSet k2 = navy_kernel(e, pk);
        if (k == k2) return e.models(pk, SemanticsId::NAVY);
        current = add_facts(current, k2);
    }
}

ModelSet cyan_models(Engine& e, const Program& p) {
    Program current = p;
    std::set<std::string> seen;
    for (;;) {
        if (!seen.insert(current.canonical_key()).second)
            throw std::logic_error("cyan kernel iteration did not converge");
        AtomSet k = regular_navy_kernel(e, current);
        Program pk = add_facts(current, k);
        AtomSet k2 = regular_navy_kernel(e, pk);
        if (k == k2) {
            ModelSet out;
            for (const AffixModel& m : e.models(pk, SemanticsId::NAVY))
                if (is_regular(e, pk, SemanticsId::NAVY, m.positive))
                    out.insert(m);
            return out;
        }
        current = add_facts(current, k2);
    }
}

ModelSet picky_models(Engine& e, const Program& p) {
    const ModelSet& sm = e.models(p, SemanticsId::SM);
    if (sm.empty()) return {};
    AtomSet ker = *semantic_kernel(sm);
    check_cap(e, ker.size(), "kernel subset");
    const std::vector<Atom>& ks = ker.items();
    const Mask limit = ks.empty() ? 0 : (Mask{1} << ks.size()) - 1;
    for (Mask sel = 0;; ++sel) {
        AtomSet s;
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (sel & (Mask{1} << i)) s.insert(ks[i]);
        const ModelSet& sm2 = e.models(add_facts(p, s), SemanticsId::SM);
        if (sm2.empty() || *semantic_kernel(sm2) != ker) return {};
        if (sel == limit) break;
    }
    return sm;
}

ModelSet compute_models(Engine& e, const Program& p, SemanticsId sem) {
    switch (sem) {
        case SemanticsId::SM: return stable_models(e, p);
        case SemanticsId::MH:
        case SemanticsId::MH_LS:
        case SemanticsId::MH_LOOP:
        case SemanticsId::MH_SUST:
        case SemanticsId::MH_SUST_MIN:
        case SemanticsId::MH_REG:
            return mh_family_models(e, p, sem);
        case SemanticsId::NAVY: return navy_models(e, p);
        case SemanticsId::BLUE: return blue_models(e, p);
        case SemanticsId::CYAN: return cyan_models(e, p);
        case SemanticsId::GREEN: return green_models(e, p);
        case SemanticsId::PICKY: return picky_models(e, p);
    }
    throw std::invalid_argument("unknown semantics id");
}

bool is_regular_at(Engine& e, const Program& p, SemanticsId base_sem,
                   const AtomSet& positive, int t) {
    auto [seg, rest] = segment_split(p, t);
    (void)rest;
    AtomSet j = set_intersection(positive, heads(seg));
    for (const AffixModel& m : e.models(seg, base_sem))
        if (m.positive == j) return true;
    return false;
}

bool is_regular(Engine& e, const Program& p, SemanticsId base_sem,
                const AtomSet& positive) {
    for (int t : e.layers(p).segment_levels)
        if (!is_regular_at(e, p, base_sem, positive, t)) return false;
    return true;
}

}  // namespace lp
