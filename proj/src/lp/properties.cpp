#include "lp/properties.hpp"

#include <algorithm>

#include "lp/graph.hpp"

namespace lp {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds-on-instance";
        case Verdict::Fails: return "fails-on-instance";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::ConfirmedFailed: return "confirmed-failed";
        case Tri::NotFalsified: return "not-falsified";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::vector<AtomSet> all_subsets(const AtomSet& s) {
    const auto& items = s.items();
    std::vector<AtomSet> out;
    out.reserve(std::size_t{1} << items.size());
    for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << items.size());
         ++sel) {
        AtomSet sub;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (sel & (std::uint32_t{1} << i)) sub.insert(items[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

void fail(DirectionReport& r, Witness w) {
    r.verdict = Verdict::Fails;
    r.witnesses.push_back(std::move(w));
}

}  // namespace

CmCutReport check_cm_cut(Engine& e, const Program& p, SemanticsId sem) {
    CmCutReport rep;
    const ModelSet& ms = e.models(p, sem);
    if (ms.empty()) {
        rep.applicable = false;
        rep.classical_cm.verdict = rep.classical_cut.verdict =
            rep.refined_cm.verdict = rep.refined_cut.verdict =
                Verdict::Inapplicable;
        return rep;
    }
    AtomSet ker = *semantic_kernel(ms);
    if (static_cast<int>(ker.size()) > e.max_atoms())
        throw CapExceeded("kernel subset enumeration exceeds the cap");
    const bool affix_based = is_affix_semantics(sem);

    for (const AtomSet& s : all_subsets(ker)) {
        const ModelSet& ms2 = e.models(add_facts(p, s), sem);
        if (ms2.empty()) {
            // Kernel comparisons are not defined for this S; the refined cut
            // test still fails because every model of P is lost.
            Witness w{"kernel-undefined", s, std::nullopt, std::nullopt, {},
                      "SEM(P u S) is empty"};
            rep.classical_cm.witnesses.push_back(w);
            rep.classical_cut.witnesses.push_back(w);
            fail(rep.refined_cut,
                 Witness{"refined-cut", s, std::nullopt, std::nullopt,
                         {*ms.begin()},
                         "model of P missing from the empty SEM(P u S)"});
            continue;
        }
        AtomSet ker2 = *semantic_kernel(ms2);
        AtomSet lost = set_difference(ker, ker2);
        if (!lost.empty())
            fail(rep.classical_cm,
                 Witness{"classical-cm", s, std::nullopt, std::nullopt, {},
                         "kernel atoms lost: " + lost.to_string()});
        AtomSet gained = set_difference(ker2, ker);
        if (!gained.empty())
            fail(rep.classical_cut,
                 Witness{"classical-cut", s, std::nullopt, std::nullopt, {},
                         "kernel atoms gained: " + gained.to_string()});
        for (const AffixModel& m : ms2)
            if (!ms.contains_model(m, affix_based))
                fail(rep.refined_cm,
                     Witness{"refined-cm", s, std::nullopt, std::nullopt, {m},
                             "model of P u S that is not a model of P"});
        for (const AffixModel& m : ms)
            if (!ms2.contains_model(m, affix_based))
                fail(rep.refined_cut,
                     Witness{"refined-cut", s, std::nullopt, std::nullopt, {m},
                             "model of P that is not a model of P u S"});
    }
    return rep;
}

RelevanceReport check_relevance(Engine& e, const Program& p, SemanticsId sem) {
    RelevanceReport rep;
    std::optional<AtomSet> ker = semantic_kernel(e.models(p, sem));
    for (Atom a : p.herbrand()) {
        Program rel = relevant_subprogram(p, a);
        std::optional<AtomSet> ker_rel = semantic_kernel(e.models(rel, sem));
        const bool in_ker = ker && ker->contains(a);
        const bool in_ker_rel = ker_rel && ker_rel->contains(a);
        if (in_ker) {
            if (!ker_rel)
                fail(rep.gl, Witness{"gl-kernel-undefined", std::nullopt,
                                     std::nullopt, a, {},
                                     "SEM(Rel_P(a)) is empty"});
            else if (!in_ker_rel)
                fail(rep.gl,
                     Witness{"gl", std::nullopt, std::nullopt, a, {},
                             "a in ker(P) = " + ker->to_string() +
                                 " but not in ker(Rel_P(a)) = " +
                                 ker_rel->to_string()});
        }
        if (in_ker_rel) {
            if (!ker)
                fail(rep.lg, Witness{"lg-kernel-undefined", std::nullopt,
                                     std::nullopt, a, {},
                                     "SEM(P) is empty"});
            else if (!in_ker)
                fail(rep.lg,
                     Witness{"lg", std::nullopt, std::nullopt, a, {},
                             "a in ker(Rel_P(a)) = " + ker_rel->to_string() +
                                 " but not in ker(P) = " + ker->to_string()});
        }
    }
    // Local-to-global relevance also fails on every irregular model.
    PropertyReport irr = check_irregularity(e, p, sem);
    for (Witness& w : irr.witnesses) {
        w.kind = "irregular-model";
        w.note = "irregular model implies local-to-global failure";
        fail(rep.lg, std::move(w));
    }
    return rep;
}

PropertyReport check_defectivity(Engine& e, const Program& p,
                                 SemanticsId sem) {
    PropertyReport rep;
    rep.property = "defectivity";
    const ModelSet& ms = e.models(p, sem);
    if (ms.empty()) {
        rep.note = "SEM(P) is empty; defectivity requires models of P";
        return rep;
    }
    for (int t : e.layers(p).segment_levels) {
        auto [seg, rest] = segment_split(p, t);
        for (const AffixModel& m : e.models(seg, sem)) {
            if (!e.models(add_facts(rest, m.positive), sem).empty()) continue;
            rep.verdict = Verdict::Fails;
            rep.witnesses.push_back(Witness{
                "defect", m.positive, t, std::nullopt, {m},
                "SEM(P^{>T} u M+) is empty"});
        }
    }
    return rep;
}

PropertyReport check_excessiveness(Engine& e, const Program& p,
                                   SemanticsId sem) {
    PropertyReport rep;
    rep.property = "excessiveness";
    const ModelSet& ms = e.models(p, sem);
    for (int t : e.layers(p).segment_levels) {
        auto [seg, rest] = segment_split(p, t);
        const ModelSet& ms_seg = e.models(seg, sem);
        AtomSet seg_heads = heads(seg);
        for (const AffixModel& n : ms) {
            AtomSet j = set_intersection(n.positive, seg_heads);
            bool witnessed = false;
            for (const AffixModel& m : ms_seg) {
                if (witnessed || m.positive != j) continue;
                bool escaped = false;  // condition 2
                for (const AffixModel& mstar : ms_seg) {
                    const ModelSet& beyond =
                        e.models(add_facts(rest, mstar.positive), sem);
                    if (beyond.contains_positive(n.positive)) {
                        escaped = true;
                        break;
                    }
                }
                if (escaped) continue;
                const ModelSet& beyond =
                    e.models(add_facts(rest, m.positive), sem);
                for (const AffixModel& nstar : ms) {  // condition 3
                    if (!beyond.contains_positive(nstar.positive)) continue;
                    rep.verdict = Verdict::Fails;
                    rep.witnesses.push_back(Witness{
                        "excess", m.positive, t, std::nullopt,
                        {m, n, nstar},
                        "N is unreachable from every segment model while N* "
                        "remains reachable"});
                    witnessed = true;
                    break;
                }
            }
        }
    }
    return rep;
}

PropertyReport check_irregularity(Engine& e, const Program& p,
                                  SemanticsId sem) {
    PropertyReport rep;
    rep.property = "irregularity";
    const ModelSet& ms = e.models(p, sem);
    for (int t : e.layers(p).segment_levels) {
        auto [seg, rest] = segment_split(p, t);
        (void)rest;
        const ModelSet& ms_seg = e.models(seg, sem);
        AtomSet seg_heads = heads(seg);
        for (const AffixModel& n : ms) {
            AtomSet j = set_intersection(n.positive, seg_heads);
            bool matched = false;
            for (const AffixModel& m : ms_seg)
                if (m.positive == j) {
                    matched = true;
                    break;
                }
            if (!matched) {
                rep.verdict = Verdict::Fails;
                rep.witnesses.push_back(Witness{
                    "irregular", j, t, std::nullopt, {n},
                    "no segment model matches N+ restricted to the segment "
                    "heads"});
            }
        }
    }
    return rep;
}

namespace {

void note_witness(TypeVector& tv, const std::string& flag,
                  const std::string& program, const std::string& detail) {
    tv.notes.push_back(flag + ": " + program + ": " + detail);
}

}  // namespace

TypeVector classify(Engine& e,
                    const std::vector<std::pair<std::string, Program>>& corpus,
                    SemanticsId sem) {
    if (!is_asm_family(sem))
        throw std::invalid_argument(
            "classify requires an ASM^h or ASM^m semantics");
    TypeVector tv;
    bool cmcut_ever_applicable = false;
    for (const auto& [name, p] : corpus) {
        if (e.models(p, sem).empty()) {
            // No models falsifies existence outright; the defectivity
            // equivalence then settles gl-relevance and cautious monotony.
            tv.exists = tv.gl = tv.cm = Tri::ConfirmedFailed;
            note_witness(tv, "exists/gl/cm", name,
                         "SEM(P) is empty (existence equivalence)");
        }

        PropertyReport d = check_defectivity(e, p, sem);
        if (d.verdict == Verdict::Fails) {
            tv.exists = tv.gl = tv.cm = Tri::ConfirmedFailed;
            const Witness& w = d.witnesses.front();
            note_witness(tv, "exists/gl/cm", name,
                         "defective at T=" + std::to_string(*w.segment) +
                             ", M+=" + w.added_facts->to_string());
        }

        PropertyReport x = check_excessiveness(e, p, sem);
        if (x.verdict == Verdict::Fails) {
            tv.cut = Tri::ConfirmedFailed;
            const Witness& w = x.witnesses.front();
            note_witness(tv, "cut", name,
                         "excessive at T=" + std::to_string(*w.segment) +
                             ", N+=" + w.models[1].positive.to_string());
        }

        PropertyReport i = check_irregularity(e, p, sem);
        if (i.verdict == Verdict::Fails) {
            tv.lg = Tri::ConfirmedFailed;
            const Witness& w = i.witnesses.front();
            note_witness(tv, "lg", name,
                         "irregular model N+=" +
                             w.models[0].positive.to_string() +
                             " at T=" + std::to_string(*w.segment));
        }

        CmCutReport c = check_cm_cut(e, p, sem);
        if (c.applicable) {
            cmcut_ever_applicable = true;
            if (c.refined_cm.verdict == Verdict::Fails) {
                tv.cm = Tri::ConfirmedFailed;
                const Witness& w = c.refined_cm.witnesses.front();
                note_witness(tv, "cm", name,
                             "refined cm fails for S=" +
                                 w.added_facts->to_string());
            }
            if (c.refined_cut.verdict == Verdict::Fails) {
                tv.cut = Tri::ConfirmedFailed;
                const Witness& w = c.refined_cut.witnesses.front();
                note_witness(tv, "cut", name,
                             "refined cut fails for S=" +
                                 w.added_facts->to_string());
            }
        }
    }
    if (!cmcut_ever_applicable) {
        if (tv.cm == Tri::NotFalsified) tv.cm = Tri::Unknown;
        if (tv.cut == Tri::NotFalsified) tv.cut = Tri::Unknown;
    }

    const bool e0 = tv.exists == Tri::ConfirmedFailed;
    const bool e1 = tv.exists == Tri::NotFalsified;
    const bool gl0 = tv.gl == Tri::ConfirmedFailed;
    const bool gl1 = tv.gl == Tri::NotFalsified;
    const bool cm1 = tv.cm == Tri::NotFalsified;
    tv.table1_consistent = !((e0 && gl1) || (e1 && gl0) || (e0 && cm1));
    return tv;
}

namespace {

Atom fresh_atom(const AtomSet& used, std::string base) {
    Atom a = Atom::intern(base);
    while (used.contains(a)) {
        base += "x";
        a = Atom::intern(base);
    }
    return a;
}

}  // namespace

Program make_defectivity_host(const Program& q) {
    AtomSet used = q.herbrand();
    Atom w1 = fresh_atom(used, "w1");
    Atom w2 = fresh_atom(used, "w2");
    Atom v = fresh_atom(used, "v");
    Program host;
    host.add_rule(Rule(w1, {Literal{w2, true}}));
    host.add_rule(Rule(w2, {Literal{w1, true}}));
    host.add_rule(Rule(v, {Literal{w1, false}}));
    for (const Rule& r : q.rules()) {
        std::vector<Literal> body = r.body();
        body.push_back(Literal{w2, false});
        body.push_back(Literal{v, true});
        host.add_rule(Rule(r.head(), std::move(body)));
    }
    return host;
}

Program prop1_witness_transform(Engine& e, const Program& p) {
    if (e.models(p, SemanticsId::SM).empty()) {
        Program host = make_defectivity_host(p);
        CmCutReport rep = check_cm_cut(e, host, SemanticsId::SM);
        if (!rep.applicable || rep.refined_cm.verdict != Verdict::Fails)
            throw std::logic_error(
                "host embedding failed to produce a cautious-monotony "
                "failure");
        return host;
    }
    PropertyReport d = check_defectivity(e, p, SemanticsId::SM);
    if (d.verdict == Verdict::Fails) {
        const Witness& w = d.witnesses.front();
        auto [seg, rest] = segment_split(p, *w.segment);
        (void)seg;
        Program q = add_facts(rest, *w.added_facts);
        if (!e.models(q, SemanticsId::SM).empty())
            throw std::logic_error(
                "extracted segment extension unexpectedly has stable models");
        return q;
    }
    throw std::invalid_argument(
        "input witnesses nothing: stable models exist and no defective "
        "segment was found");
}

}  // namespace lp
