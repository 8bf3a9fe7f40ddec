// Complete rule graph, rule layering, T-segments and relevant subprograms.
#ifndef LP_GRAPH_HPP
#define LP_GRAPH_HPP

#include <utility>
#include <vector>

#include "lp/core.hpp"

namespace lp {

// Directed graph over the rule indices of a program. An arc (r, s) means
// Head(r) occurs among the atoms of Body(s), so s consumes what r produces.
class RuleGraph {
public:
    explicit RuleGraph(const Program& p);

    std::size_t vertex_count() const { return succ_.size(); }
    const std::vector<int>& successors(int r) const { return succ_[r]; }

    // True iff there is a directed path of length >= 1 from r to s.
    bool has_path(int r, int s) const { return reach_[r][s]; }

    int scc_of(int r) const { return scc_id_[r]; }
    const std::vector<std::vector<int>>& sccs() const { return scc_members_; }
    // An SCC forms a loop iff it has an internal cycle (size >= 2, or a
    // self-arc).
    bool scc_cyclic(int scc) const { return scc_cyclic_[scc]; }
    bool rule_in_loop(int r) const { return scc_cyclic_[scc_id_[r]]; }

    // Rule r is in loop through body literal l iff some rule of r's loop has
    // head l.atom.
    bool in_loop_through(const Program& p, int r, const Literal& l) const;

private:
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<char>> reach_;
    std::vector<int> scc_id_;
    std::vector<std::vector<int>> scc_members_;
    std::vector<bool> scc_cyclic_;
};

RuleGraph build_crg(const Program& p);

// s depends on r: a directed path of length >= 1 from r to s exists.
bool depends_on(const RuleGraph& g, int s, int r);

struct Layering {
    std::vector<int> layer;           // rule index -> layer, starting at 1
    std::vector<int> segment_levels;  // sorted layer values T with
                                      // Atoms(P^{<=T}) disjoint from
                                      // Heads(P^{>T})
    int max_layer = 0;
};

Layering layering(const Program& p);

bool is_segment_level(const Layering& l, int t);

// Splits into (P^{<=T}, P^{>T}). Throws std::invalid_argument when t is not
// a segment level.
std::pair<Program, Program> segment_split(const Program& p, int t);

// All rules some head-a rule equals or depends on.
Program relevant_subprogram(const Program& p, Atom a);

}  // namespace lp

#endif
