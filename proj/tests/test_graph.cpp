#include <doctest.h>

#include "lp/corpus.hpp"
#include "lp/generate.hpp"
#include "lp/graph.hpp"

using namespace lp;

namespace {

Atom at(const char* n) { return Atom::intern(n); }

Program demo_program() {
    return corpus_entry("reduction_demo")->program();
}

Program example1() {
    return corpus_entry("defective_choice")->program();
}

// Valid layering: loops level together, strict dependencies increase.
bool layering_valid(const Program& p, const std::vector<int>& layer) {
    RuleGraph g(p);
    for (std::size_t r = 0; r < p.size(); ++r)
        for (std::size_t s = 0; s < p.size(); ++s) {
            bool rs = g.has_path(static_cast<int>(s), static_cast<int>(r));
            bool sr = g.has_path(static_cast<int>(r), static_cast<int>(s));
            if (rs && sr && layer[r] != layer[s]) return false;
            if (rs && !sr && layer[r] <= layer[s]) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("complete rule graph arcs") {
    Program single = parse_program("a.");
    RuleGraph g(single);
    CHECK(g.vertex_count() == 1);
    CHECK(g.successors(0).empty());
    CHECK_FALSE(depends_on(g, 0, 0));  // paths need length >= 1

    Program choice = parse_program("a :- not b.\nb :- not a.");
    RuleGraph gc(choice);
    CHECK(depends_on(gc, 1, 0));
    CHECK(depends_on(gc, 0, 1));
    CHECK(gc.scc_of(0) == gc.scc_of(1));

    Program self = parse_program("c :- not c.");
    RuleGraph gs(self);
    CHECK(depends_on(gs, 0, 0));
    CHECK(gs.rule_in_loop(0));
}

TEST_CASE("rule graph of the reduction demo") {
    Program b = demo_program();
    RuleGraph g(b);
    // Rule order: a:-not f | e:-d | a:-not b | d:-e | b:-not a | c:-a | d:-f
    CHECK(g.scc_of(1) == g.scc_of(3));  // e :- d / d :- e
    CHECK(g.scc_of(2) == g.scc_of(4));  // a :- not b / b :- not a
    CHECK(g.scc_of(0) != g.scc_of(2));
    CHECK(g.scc_of(5) != g.scc_of(0));
    CHECK(g.sccs().size() == 5);
    // (c :- a) depends on (a :- not f).
    CHECK(depends_on(g, 5, 0));
}

TEST_CASE("depends_on is transitive") {
    for (std::uint64_t seed = 40; seed < 60; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.atom_count = 4;
        cfg.rule_count = 7;
        Program p = generate_program(cfg);
        RuleGraph g(p);
        const int n = static_cast<int>(p.size());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (g.has_path(x, y) && g.has_path(y, z))
                        CHECK(g.has_path(x, z));
    }
}

TEST_CASE("layering of small programs") {
    Program choice = parse_program("a :- not b.\nb :- not a.");
    Layering l = layering(choice);
    CHECK(l.layer == std::vector<int>{1, 1});
    CHECK(l.segment_levels == std::vector<int>{1});

    Layering l1 = layering(example1());
    CHECK(l1.layer[0] == 1);
    CHECK(l1.layer[1] == 1);
    CHECK(l1.segment_levels.front() == 1);
    auto [seg, rest] = segment_split(example1(), 1);
    CHECK(seg == choice);
    CHECK(rest == parse_program("c :- a.\nc :- not c."));

    CHECK(layering(Program{}).segment_levels.empty());
}

TEST_CASE("layer one of the reduction demo is not a segment") {
    CHECK_THROWS_AS(segment_split(demo_program(), 1), std::invalid_argument);
    Layering l = layering(demo_program());
    CHECK_FALSE(is_segment_level(l, 1));
    CHECK(is_segment_level(l, l.max_layer));
    auto [all, none] = segment_split(demo_program(), l.max_layer);
    CHECK(all == demo_program());
    CHECK(none.empty());
}

TEST_CASE("ladder program has four segment levels") {
    Program h1 = corpus_entry("excessive_ladder")->program();
    Layering l = layering(h1);
    CHECK(l.segment_levels == std::vector<int>{1, 2, 3, 4});
    CHECK(l.max_layer == 4);
}

TEST_CASE("layering is pointwise minimal") {
    for (const CorpusEntry& ce : corpus()) {
        Program p = ce.program();
        Layering l = layering(p);
        REQUIRE(layering_valid(p, l.layer));
        for (std::size_t r = 0; r < p.size(); ++r) {
            if (l.layer[r] == 1) continue;
            std::vector<int> perturbed = l.layer;
            perturbed[r] -= 1;
            CHECK_FALSE(layering_valid(p, perturbed));
        }
    }
}

TEST_CASE("segment condition holds for every reported level") {
    for (const CorpusEntry& ce : corpus()) {
        Program p = ce.program();
        for (int t : layering(p).segment_levels) {
            auto [low, high] = segment_split(p, t);
            CHECK(set_intersection(atoms(low), heads(high)).empty());
            CHECK(program_union(low, high) == p);
            CHECK(low.size() + high.size() == p.size());
        }
    }
}

TEST_CASE("relevant subprograms") {
    Program single = parse_program("a.");
    CHECK(relevant_subprogram(single, at("a")) == single);

    Program ex1 = example1();
    CHECK(relevant_subprogram(ex1, at("a")) ==
          parse_program("a :- not b.\nb :- not a."));
    CHECK(relevant_subprogram(ex1, at("c")) == ex1);
}

TEST_CASE("relevant subprogram is closed under dependencies") {
    for (const CorpusEntry& ce : corpus()) {
        Program p = ce.program();
        RuleGraph g(p);
        for (Atom a : p.herbrand()) {
            Program rel = relevant_subprogram(p, a);
            for (const Rule& r : rel) {
                // Find r's index in p, then check all its ancestors are kept.
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (!(p[i] == r)) continue;
                    for (std::size_t s = 0; s < p.size(); ++s)
                        if (g.has_path(static_cast<int>(s),
                                       static_cast<int>(i)))
                            CHECK(rel.contains(p[s]));
                }
            }
        }
    }
}
