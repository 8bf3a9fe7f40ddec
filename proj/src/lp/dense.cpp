#include "lp/dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace lp::detail {

DenseProgram to_dense(const Program& p) {
    return to_dense(p, p.herbrand().items());
}

DenseProgram to_dense(const Program& p, const std::vector<Atom>& table) {
    if (static_cast<int>(table.size()) > kMaxDenseAtoms)
        throw std::invalid_argument("program exceeds dense atom limit");
    DenseProgram d;
    d.atom_of = table;
    d.n_atoms = static_cast<int>(table.size());
    auto index_of = [&](Atom a) {
        auto it = std::lower_bound(table.begin(), table.end(), a);
        if (it == table.end() || *it != a)
            throw std::invalid_argument("atom missing from dense table");
        return static_cast<int>(it - table.begin());
    };
    for (const Rule& r : p.rules()) {
        DenseRule dr;
        dr.head = index_of(r.head());
        for (const Literal& l : r.body()) {
            Mask bit = Mask{1} << index_of(l.atom);
            if (l.negated)
                dr.neg |= bit;
            else
                dr.pos |= bit;
        }
        d.rules.push_back(dr);
    }
    return d;
}

Program from_dense(const DenseProgram& d) {
    Program p;
    for (const DenseRule& r : d.rules) {
        std::vector<Literal> body;
        for (int i = 0; i < d.n_atoms; ++i) {
            Mask bit = Mask{1} << i;
            if (r.pos & bit) body.push_back(Literal{d.atom_of[i], false});
            if (r.neg & bit) body.push_back(Literal{d.atom_of[i], true});
        }
        p.add_rule(Rule(d.atom_of[r.head], std::move(body)));
    }
    return p;
}

AtomSet mask_to_set(const DenseProgram& d, Mask m) {
    AtomSet s;
    for (int i = 0; i < d.n_atoms; ++i)
        if (m & (Mask{1} << i)) s.insert(d.atom_of[i]);
    return s;
}

Mask set_to_mask(const DenseProgram& d, const AtomSet& s) {
    Mask m = 0;
    for (Atom a : s) {
        auto it = std::lower_bound(d.atom_of.begin(), d.atom_of.end(), a);
        if (it == d.atom_of.end() || *it != a)
            throw std::invalid_argument("atom missing from dense table");
        m |= Mask{1} << (it - d.atom_of.begin());
    }
    return m;
}

Mask reduct_least_model(const DenseProgram& d, Mask m) {
    Mask lm = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DenseRule& r : d.rules) {
            if (r.neg & m) continue;  // rule deleted by the reduct
            Mask head_bit = Mask{1} << r.head;
            if ((lm & head_bit) == 0 && (r.pos & ~lm) == 0) {
                lm |= head_bit;
                changed = true;
            }
        }
    }
    return lm;
}

DenseWfm wfm_alternating(const DenseProgram& d) {
    Mask t = 0;
    Mask u = reduct_least_model(d, 0);
    for (;;) {
        Mask t2 = reduct_least_model(d, u);
        Mask u2 = reduct_least_model(d, t2);
        if (t2 == t && u2 == u) break;
        t = t2;
        u = u2;
    }
    DenseWfm w;
    w.t = t;
    w.u = u & ~t;
    w.f = d.universe() & ~u;
    return w;
}

bool is_classical_model(const DenseProgram& d, Mask m) {
    for (const DenseRule& r : d.rules) {
        if ((r.pos & ~m) == 0 && (r.neg & m) == 0 &&
            (m & (Mask{1} << r.head)) == 0)
            return false;
    }
    return true;
}

}  // namespace lp::detail
