// The reduction operations PR/NR/LNR/S/LS/F/L, configurable remainder
// engines, and the well-founded model computed by two independent routes.
#ifndef LP_REDUCTION_HPP
#define LP_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "lp/core.hpp"

namespace lp {

enum class ReductionOp { PR, NR, LNR, S, LS, F, L };

// A set of reduction operations. NR/LNR and S/LS are mutually exclusive.
class OpSet {
public:
    static OpSet wfs();    // {PR, NR, S, F, L}
    static OpSet mh();     // {PR, LNR, S, F, L}
    static OpSet mh_ls();  // {PR, LNR, LS, F, L}

    bool contains(ReductionOp op) const { return bits_ & bit(op); }
    std::string name() const;

    bool operator==(const OpSet& o) const { return bits_ == o.bits_; }

private:
    explicit OpSet(unsigned bits);
    static unsigned bit(ReductionOp op) {
        return 1u << static_cast<unsigned>(op);
    }
    unsigned bits_;
};

// Single-step operations. Each applies the operation once, at the first
// applicable site in rule order, or reports no change.
std::optional<Program> op_positive_reduction(const Program& p);
std::optional<Program> op_negative_reduction(const Program& p);
std::optional<Program> op_layered_negative_reduction(const Program& p);
std::optional<Program> op_success(const Program& p);
std::optional<Program> op_layered_success(const Program& p);
std::optional<Program> op_failure(const Program& p);
std::optional<Program> op_loop_detection(const Program& p);

// Every program reachable from p by one application of one operation in ops,
// at any site. Used by the confluence tests.
std::vector<Program> reduction_successors(const Program& p, const OpSet& ops);

// Fixpoint of the operation set, computed in a fixed deterministic order.
Program remainder(const Program& p, const OpSet& ops);

// WFM via the WFS remainder: true = facts of the remainder, false = atoms
// without a remaining rule, undefined = the rest.
Interpretation3V wfm_from_remainder(const Program& p);

// WFM via the standard alternating fixpoint; independent of the remainder
// route and cross-checked against it in the tests.
Interpretation3V wfm_alternating(const Program& p);

}  // namespace lp

#include "lp/dense.hpp"

namespace lp::detail {

void remainder_in_place(DenseProgram& d, const OpSet& ops);
// WFM partition derived from the dense WFS remainder.
DenseWfm wfm_via_remainder(const DenseProgram& d);
void add_fact_rules(DenseProgram& d, Mask facts);

}  // namespace lp::detail

#endif
