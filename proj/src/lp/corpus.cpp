#include "lp/corpus.hpp"

namespace lp {

// Expectations are filled in from verified engine output; see the corpus
// golden test, which replays each one.
const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"defective_choice",
         "Two-way choice under a self-blocking constraint rule; the stable "
         "model semantics is defective on its first segment.",
         "a :- not b.\n"
         "b :- not a.\n"
         "c :- a.\n"
         "c :- not c.\n",
         R"([
           {"op":"models","semantics":"sm","expect":[{"true":["a","c"]}]},
           {"op":"segments","expect":[1,3]},
           {"op":"models","semantics":"green","expect":[{"true":["a","c"]}]}
         ])"},
        {"reduction_demo",
         "Seven-rule program on which every reduction operation fires; its "
         "remainder and layered remainder differ on the negative loop.",
         "a :- not f.\n"
         "e :- d.\n"
         "a :- not b.\n"
         "d :- e.\n"
         "b :- not a.\n"
         "c :- a.\n"
         "d :- f.\n",
         R"([
           {"op":"remainder","system":"wfs","expect":["a.","c."]},
           {"op":"remainder","system":"mh",
            "expect":["a.","a :- not b.","b :- not a.","c."]},
           {"op":"wfm","expect":{"true":["a","c"],"false":["b","d","e","f"],
                                 "undef":[]}},
           {"op":"hyps","semantics":"mh","expect":["a","b"]},
           {"op":"models","semantics":"mh",
            "expect":[{"true":["a","b","c"],"affix":["b"]},
                      {"true":["a","c"],"affix":["a"]}]},
           {"op":"models","semantics":"sm","expect":[{"true":["a","c"]}]}
         ])"},
        {"masked_noncumulative",
         "One-layer program whose kernel is stable under kernel additions "
         "although its stable model set grows; kernel comparisons alone "
         "cannot expose the cumulativity failure.",
         "a :- not b, not s.\n"
         "b :- not a, not c.\n"
         "c :- not b, not k.\n"
         "d :- b.\n"
         "d :- not d.\n"
         "d :- a.\n"
         "c :- k.\n"
         "k :- a, d.\n"
         "s :- not a, d.\n",
         R"([
           {"op":"models","semantics":"sm",
            "expect":[{"true":["a","c","d","k"]},{"true":["b","d","s"]}]},
           {"op":"kernel","semantics":"sm","expect":["d"]},
           {"op":"models","semantics":"picky",
            "expect":[{"true":["a","c","d","k"]},{"true":["b","d","s"]}]}
         ])"},
        {"mh_noncumulative",
         "One-layer program separating the refined cumulativity tests from "
         "the kernel-based ones for the minimal-hypotheses family.",
         "u :- b.\n"
         "u :- c.\n"
         "t :- a.\n"
         "t :- h.\n"
         "a :- not b.\n"
         "b :- not c.\n"
         "c :- h, u.\n"
         "h :- not h, not t.\n",
         R"([
           {"op":"models","semantics":"mh",
            "expect":[{"true":["a","c","t","u"],"affix":["c"]},
                      {"true":["b","c","h","t","u"],"affix":["b","h"]},
                      {"true":["b","t","u"],"affix":["t"]}]},
           {"op":"kernel","semantics":"mh","expect":["t","u"]},
           {"op":"models","semantics":"sm","expect":[]}
         ])"},
        {"excessive_ladder",
         "Choice feeding a shared atom above two guarded loops; several "
         "semantics accept a model no segment model can reproduce, so they "
         "are excessive here.",
         "a :- not b.\n"
         "b :- not a.\n"
         "u :- a.\n"
         "u :- b.\n"
         "p :- not p, not u.\n"
         "q :- not q, not p.\n",
         R"([
           {"op":"segments","expect":[1,2,3,4]},
           {"op":"models","semantics":"mh",
            "expect":[{"true":["a","u","p"],"affix":["a","p"]},
                      {"true":["a","u","q"],"affix":["a","q"]},
                      {"true":["b","u","p"],"affix":["b","p"]},
                      {"true":["b","u","q"],"affix":["b","q"]}]}
         ])"},
        {"irregular_pair",
         "Choice guarding two odd loops; the model setting both choice atoms "
         "true projects onto no model of the choice segment, so the "
         "accepting semantics are irregular here.",
         "a :- not b.\n"
         "b :- not a.\n"
         "p :- not p, not a.\n"
         "q :- not q, not b.\n",
         R"([
           {"op":"hyps","semantics":"mh","expect":["a","b","p","q"]},
           {"op":"models","semantics":"mh",
            "expect":[{"true":["a","b"],"affix":["a","b"]},
                      {"true":["a","q"],"affix":["a","q"]},
                      {"true":["b","p"],"affix":["b","p"]}]},
           {"op":"models","semantics":"cyan",
            "expect":[{"true":["a","q"]},{"true":["b","p"]}]}
         ])"},
        {"unsustainable_cycle",
         "Odd cycle of mutually guarded loops; every minimal hypotheses pair "
         "contains a member falsified by the other, so the sustainable "
         "semantics has no model.",
         "x :- not x, not y.\n"
         "y :- not y, not z.\n"
         "z :- not z, not x.\n",
         R"([
           {"op":"models","semantics":"sm","expect":[]},
           {"op":"models","semantics":"mh",
            "expect":[{"true":["x","y"],"affix":["x","y"]},
                      {"true":["x","z"],"affix":["x","z"]},
                      {"true":["y","z"],"affix":["y","z"]}]},
           {"op":"models","semantics":"mh-sustainable","expect":[]}
         ])"},
        {"unsustainable_defect",
         "The unsustainable cycle embedded above a two-way choice with a "
         "shield atom tied to the first branch; the sustainable semantics "
         "keeps that branch but cannot extend the second, making it "
         "defective.",
         "w1 :- not w2.\n"
         "w2 :- not w1.\n"
         "v :- w1.\n"
         "w1 :- v.\n"
         "x :- w2, not v, not x, not y.\n"
         "y :- w2, not v, not y, not z.\n"
         "z :- w2, not v, not z, not x.\n",
         R"([
           {"op":"models","semantics":"mh-sustainable",
            "expect":[{"true":["v","w1"],"affix":["v"]},
                      {"true":["v","w1"],"affix":["w1"]}]},
           {"op":"models","semantics":"sm","expect":[{"true":["v","w1"]}]}
         ])"},
        {"sustain_irregular",
         "Two anchor loops over a guarded pair that can only be assumed "
         "jointly; the joint assumption is minimal for the whole program but "
         "not for the middle segment, yielding an irregular sustainable "
         "model.",
         "c1 :- not c1.\n"
         "c2 :- not c2.\n"
         "kd :- c1, not e.\n"
         "ke :- c2, not d.\n"
         "d :- e, not d, not kd.\n"
         "e :- d, not e, not ke.\n"
         "d :- c1, not c1.\n"
         "e :- c1, not c1.\n"
         "td :- not td, not d.\n"
         "te :- not te, not e.\n",
         R"([
           {"op":"models","semantics":"mh-sustainable",
            "expect":[{"true":["c1","c2","d","e"],"affix":["c1","c2","d","e"]},
                      {"true":["c1","c2","kd","ke","td","te"],
                       "affix":["c1","c2","td","te"]}]}
         ])"},
        {"sustain_min_cut",
         "The refined-cumulativity program extended with a monitor atom on "
         "one answer; positive-part minimization then drops a model after a "
         "kernel atom is added, breaking cut for the minimized semantics.",
         "u :- b.\n"
         "u :- c.\n"
         "t :- a.\n"
         "t :- h.\n"
         "a :- not b.\n"
         "b :- not c.\n"
         "c :- h, u.\n"
         "h :- not h, not t.\n"
         "z :- not c.\n",
         R"([
           {"op":"models","semantics":"mh-sustainable-min",
            "expect":[{"true":["a","c","t","u"],"affix":["c"]},
                      {"true":["b","c","h","t","u"],"affix":["b","h"]},
                      {"true":["b","t","u","z"],"affix":["t"]}]}
         ])"},
    };
    return entries;
}

std::optional<CorpusEntry> corpus_entry(std::string_view name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace lp
