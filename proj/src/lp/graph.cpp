#include "lp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lp {

namespace {

// Iterative Tarjan SCC.
struct Tarjan {
    const std::vector<std::vector<int>>& succ;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int counter = 0;
    int ncomp = 0;

    explicit Tarjan(const std::vector<std::vector<int>>& s)
        : succ(s),
          index(s.size(), -1),
          low(s.size(), 0),
          comp(s.size(), -1),
          on_stack(s.size(), false) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t edge;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < succ[f.v].size()) {
                int w = succ[f.v][f.edge++];
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
                        comp[w] = ncomp;
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
};

}  // namespace

RuleGraph::RuleGraph(const Program& p) {
    const std::size_t n = p.size();
    succ_.assign(n, {});
    for (std::size_t r = 0; r < n; ++r) {
        Atom h = p[r].head();
        for (std::size_t s = 0; s < n; ++s)
            if (p[s].body_atoms().contains(h))
                succ_[r].push_back(static_cast<int>(s));
    }

    Tarjan tj(succ_);
    for (std::size_t v = 0; v < n; ++v)
        if (tj.index[v] == -1) tj.run(static_cast<int>(v));
    scc_id_ = tj.comp;
    scc_members_.assign(tj.ncomp, {});
    for (std::size_t v = 0; v < n; ++v)
        scc_members_[scc_id_[v]].push_back(static_cast<int>(v));
    scc_cyclic_.assign(tj.ncomp, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (scc_members_[scc_id_[v]].size() > 1) {
            scc_cyclic_[scc_id_[v]] = true;
        } else {
            for (int w : succ_[v])
                if (w == static_cast<int>(v)) scc_cyclic_[scc_id_[v]] = true;
        }
    }

    // Transitive reachability by BFS from each vertex (paths of length >= 1).
    reach_.assign(n, std::vector<char>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<int> queue(succ_[v].begin(), succ_[v].end());
        for (int w : succ_[v]) reach_[v][w] = 1;
        while (!queue.empty()) {
            int w = queue.back();
            queue.pop_back();
            for (int x : succ_[w]) {
                if (!reach_[v][x]) {
                    reach_[v][x] = 1;
                    queue.push_back(x);
                }
            }
        }
    }
}

bool RuleGraph::in_loop_through(const Program& p, int r,
                                const Literal& l) const {
    int c = scc_id_[r];
    if (!scc_cyclic_[c]) return false;
    for (int s : scc_members_[c])
        if (p[s].head() == l.atom) return true;
    return false;
}

RuleGraph build_crg(const Program& p) { return RuleGraph(p); }

bool depends_on(const RuleGraph& g, int s, int r) { return g.has_path(r, s); }

Layering layering(const Program& p) {
    Layering out;
    const std::size_t n = p.size();
    out.layer.assign(n, 0);
    if (n == 0) return out;

    RuleGraph g(p);
    const auto& sccs = g.sccs();
    const std::size_t ncomp = sccs.size();

    // Condensation predecessors.
    std::vector<std::vector<int>> preds(ncomp);
    for (std::size_t v = 0; v < n; ++v)
        for (int w : g.successors(static_cast<int>(v))) {
            int cv = g.scc_of(static_cast<int>(v));
            int cw = g.scc_of(w);
            if (cv != cw) preds[cw].push_back(cv);
        }

    // Longest path from sources; Tarjan numbers components in reverse
    // topological order, so iterate from the last component down.
    std::vector<int> comp_layer(ncomp, 0);
    for (int c = static_cast<int>(ncomp) - 1; c >= 0; --c) {
        int lv = 1;
        for (int pc : preds[c]) lv = std::max(lv, comp_layer[pc] + 1);
        comp_layer[c] = lv;
    }
    for (std::size_t v = 0; v < n; ++v) {
        out.layer[v] = comp_layer[g.scc_of(static_cast<int>(v))];
        out.max_layer = std::max(out.max_layer, out.layer[v]);
    }

    for (int t = 1; t <= out.max_layer; ++t) {
        bool is_value = false;
        AtomSet below, heads_above;
        for (std::size_t v = 0; v < n; ++v) {
            if (out.layer[v] == t) is_value = true;
            if (out.layer[v] <= t)
                below = set_union(below, p[v].atoms());
            else
                heads_above.insert(p[v].head());
        }
        if (is_value && set_intersection(below, heads_above).empty())
            out.segment_levels.push_back(t);
    }
    return out;
}

bool is_segment_level(const Layering& l, int t) {
    return std::binary_search(l.segment_levels.begin(), l.segment_levels.end(),
                              t);
}

std::pair<Program, Program> segment_split(const Program& p, int t) {
    Layering l = layering(p);
    if (!is_segment_level(l, t))
        throw std::invalid_argument("layer " + std::to_string(t) +
                                    " is not a segment of the program");
    Program low, high;
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (l.layer[v] <= t)
            low.add_rule(p[v]);
        else
            high.add_rule(p[v]);
    }
    return {low, high};
}

Program relevant_subprogram(const Program& p, Atom a) {
    RuleGraph g(p);
    const std::size_t n = p.size();
    std::vector<bool> keep(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (p[s].head() != a) continue;
        keep[s] = true;
        for (std::size_t r = 0; r < n; ++r)
            if (g.has_path(static_cast<int>(r), static_cast<int>(s)))
                keep[r] = true;
    }
    Program out;
    for (std::size_t r = 0; r < n; ++r)
        if (keep[r]) out.add_rule(p[r]);
    return out;
}

}  // namespace lp
