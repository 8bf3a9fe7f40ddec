#include <doctest.h>

#include "lp/corpus.hpp"
#include "lp/generate.hpp"
#include "lp/reduction.hpp"

using namespace lp;

namespace {

Atom at(const char* n) { return Atom::intern(n); }

Program demo_program() { return corpus_entry("reduction_demo")->program(); }

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % n); }
};

Program random_order_remainder(const Program& p, const OpSet& ops, Rng& rng) {
    Program q = p;
    for (;;) {
        std::vector<Program> succ = reduction_successors(q, ops);
        if (succ.empty()) return q;
        q = succ[rng.below(static_cast<int>(succ.size()))];
    }
}

AtomSet negated_atoms(const Program& p) {
    AtomSet out;
    for (const Rule& r : p)
        for (const Literal& l : r.body())
            if (l.negated) out.insert(l.atom);
    return out;
}

}  // namespace

TEST_CASE("positive reduction") {
    CHECK(*op_positive_reduction(parse_program("a :- not f.")) ==
          parse_program("a."));
    CHECK_FALSE(op_positive_reduction(parse_program("a :- not a.")));
}

TEST_CASE("negative reduction") {
    CHECK(*op_negative_reduction(parse_program("a.\nb :- not a.")) ==
          parse_program("a."));
    CHECK_FALSE(op_negative_reduction(parse_program("b :- not a.")));
    CHECK(*op_negative_reduction(
              parse_program("a.\na :- not b.\nb :- not a.")) ==
          parse_program("a.\na :- not b."));
}

TEST_CASE("layered negative reduction keeps loops alive") {
    // The rule b :- not a is in loop through not a, so it survives.
    Program p = parse_program("a.\na :- not b.\nb :- not a.");
    CHECK_FALSE(op_layered_negative_reduction(p));
    CHECK(*op_layered_negative_reduction(parse_program("a.\nc :- not a.")) ==
          parse_program("a."));
    // Upper part of the ladder program with the lower facts joined: no rule
    // with head u is in a loop with the guarded p rule, so it is deleted.
    Program upper = parse_program(
        "p :- not p, not u.\nq :- not q, not p.\na.\nu.");
    Program reduced = *op_layered_negative_reduction(upper);
    CHECK(reduced ==
          parse_program("q :- not q, not p.\na.\nu."));
    CHECK_FALSE(
        remainder(upper, OpSet::mh()).contains(upper[0]));
}

TEST_CASE("success") {
    CHECK(*op_success(parse_program("a.\nc :- a.")) == parse_program("a.\nc."));
    CHECK_FALSE(op_success(parse_program("c :- a.")));
    CHECK(*op_success(parse_program("a.\nk :- a, d.")) ==
          parse_program("a.\nk :- d."));
}

TEST_CASE("layered success skips positive loops") {
    CHECK(*op_layered_success(parse_program("a.\nc :- a.")) ==
          parse_program("a.\nc."));
    CHECK_FALSE(op_layered_success(parse_program("a.\na :- c.\nc :- a.")));
}

TEST_CASE("failure") {
    CHECK(op_failure(parse_program("d :- f."))->empty());
    CHECK_FALSE(op_failure(parse_program("d :- e.\ne :- d.")));
    // All positive body atoms of the nine-rule program are heads.
    CHECK_FALSE(op_failure(corpus_entry("masked_noncumulative")->program()));
}

TEST_CASE("loop detection") {
    CHECK(op_loop_detection(parse_program("d :- e.\ne :- d."))->empty());
    CHECK_FALSE(op_loop_detection(parse_program("a :- not b.\nb :- not a.")));
    CHECK_FALSE(
        op_loop_detection(parse_program("p :- q.\nq :- p.\np :- not r.")));
}

TEST_CASE("remainder of the reduction demo") {
    CHECK(remainder(demo_program(), OpSet::wfs()) == parse_program("a.\nc."));
    CHECK(remainder(demo_program(), OpSet::mh()) ==
          parse_program("a.\nc.\na :- not b.\nb :- not a."));
    CHECK(remainder(Program{}, OpSet::wfs()).empty());
    CHECK(remainder(Program{}, OpSet::mh_ls()).empty());
}

TEST_CASE("positive reduction cascade") {
    CHECK(remainder(parse_program("a :- not b.\nb :- not c."), OpSet::wfs()) ==
          parse_program("b."));
}

TEST_CASE("well-founded model from the remainder") {
    Interpretation3V w = wfm_from_remainder(demo_program());
    CHECK(w.true_set() == AtomSet{at("a"), at("c")});
    CHECK(w.false_set() == AtomSet{at("b"), at("d"), at("e"), at("f")});
    CHECK(w.undef_set().empty());

    Interpretation3V odd = wfm_from_remainder(parse_program("a :- not a."));
    CHECK(odd.undef_set() == AtomSet{at("a")});

    Interpretation3V total =
        wfm_from_remainder(add_facts(demo_program(), AtomSet{at("b")}));
    CHECK(total.is_total());
    CHECK(total.true_set() == AtomSet{at("a"), at("b"), at("c")});

    CHECK(wfm_from_remainder(parse_program("a.")).true_set() ==
          AtomSet{at("a")});
}

TEST_CASE("the two well-founded model routes agree") {
    for (const CorpusEntry& ce : corpus()) {
        Program p = ce.program();
        CHECK(wfm_from_remainder(p) == wfm_alternating(p));
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = 5000 + seed;
        cfg.atom_count = 2 + seed % 7;
        cfg.rule_count = 3 + seed % 10;
        Program p = generate_program(cfg);
        Interpretation3V a = wfm_from_remainder(p);
        Interpretation3V b = wfm_alternating(p);
        REQUIRE(a == b);
        // The three parts partition the Herbrand base.
        CHECK(a.universe() == p.herbrand());
    }
}

TEST_CASE("reduction is confluent") {
    Rng rng{123};
    auto check_confluent = [&](const Program& p) {
        for (OpSet ops : {OpSet::wfs(), OpSet::mh(), OpSet::mh_ls()}) {
            Program expected = remainder(p, ops);
            for (int round = 0; round < 3; ++round)
                REQUIRE(random_order_remainder(p, ops, rng) == expected);
        }
    };
    for (const CorpusEntry& ce : corpus()) check_confluent(ce.program());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = 6000 + seed;
        cfg.atom_count = 2 + seed % 6;
        cfg.rule_count = 3 + seed % 9;
        check_confluent(generate_program(cfg));
    }
}

TEST_CASE("remainder is idempotent and the layered system erases less") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = 7000 + seed;
        cfg.atom_count = 2 + seed % 7;
        cfg.rule_count = 3 + seed % 10;
        Program p = generate_program(cfg);
        for (OpSet ops : {OpSet::wfs(), OpSet::mh(), OpSet::mh_ls()}) {
            Program r = remainder(p, ops);
            CHECK(remainder(r, ops) == r);
        }
        Program wfs_rem = remainder(p, OpSet::wfs());
        Program mh_rem = remainder(p, OpSet::mh());
        CHECK(wfs_rem.size() <= mh_rem.size());
        CHECK(negated_atoms(wfs_rem).subset_of(negated_atoms(mh_rem)));
    }
}

TEST_CASE("operation sets reject conflicting members") {
    CHECK(OpSet::wfs().contains(ReductionOp::NR));
    CHECK(OpSet::mh().contains(ReductionOp::LNR));
    CHECK(OpSet::mh_ls().contains(ReductionOp::LS));
    CHECK(OpSet::wfs().name() == "wfs");
    CHECK(OpSet::mh().name() == "mh");
    CHECK(OpSet::mh_ls().name() == "mhls");
}
