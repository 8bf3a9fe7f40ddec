// Internal bitmask program form. Atoms of one program are indexed into a
// 32-bit mask; all fixpoint loops (remainder, reducts, classical evaluation)
// run on masks and convert back to value types at the boundary.
#ifndef LP_DENSE_HPP
#define LP_DENSE_HPP

#include <cstdint>
#include <vector>

#include "lp/core.hpp"

namespace lp::detail {

using Mask = std::uint32_t;

constexpr int kMaxDenseAtoms = 31;

struct DenseRule {
    int head = 0;
    Mask pos = 0;
    Mask neg = 0;

    bool operator==(const DenseRule& o) const {
        return head == o.head && pos == o.pos && neg == o.neg;
    }
    bool operator<(const DenseRule& o) const {
        if (head != o.head) return head < o.head;
        if (pos != o.pos) return pos < o.pos;
        return neg < o.neg;
    }
};

struct DenseProgram {
    std::vector<Atom> atom_of;  // index -> atom, sorted by name
    std::vector<DenseRule> rules;
    int n_atoms = 0;

    Mask universe() const {
        return n_atoms == 0 ? 0 : ((Mask{1} << n_atoms) - 1);
    }
};

DenseProgram to_dense(const Program& p);
// Dense form of p over a fixed atom table (p's atoms must all appear in it).
DenseProgram to_dense(const Program& p, const std::vector<Atom>& table);
Program from_dense(const DenseProgram& d);
AtomSet mask_to_set(const DenseProgram& d, Mask m);
Mask set_to_mask(const DenseProgram& d, const AtomSet& s);

struct DenseWfm {
    Mask t = 0;
    Mask f = 0;
    Mask u = 0;
};

// Well-founded model via the alternating least/greatest fixpoint.
DenseWfm wfm_alternating(const DenseProgram& d);

// Least model of the reduct of d with respect to assumption mask m.
Mask reduct_least_model(const DenseProgram& d, Mask m);

// True iff m is a classical model (rules read as implications, default
// literals read classically).
bool is_classical_model(const DenseProgram& d, Mask m);

}  // namespace lp::detail

#endif
