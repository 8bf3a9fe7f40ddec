// Decidable per-program property checkers: cautious monotony and cut
// (classical and refined), relevance, defectivity, excessiveness,
// irregularity, plus the twelve-type classifier.
#ifndef LP_PROPERTIES_HPP
#define LP_PROPERTIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lp/core.hpp"
#include "lp/semantics.hpp"

namespace lp {

enum class Verdict { Holds, Fails, Inapplicable };
std::string verdict_name(Verdict v);

// One piece of evidence. Every fails verdict carries at least one witness
// sufficient to re-derive the failure.
struct Witness {
    std::string kind;
    std::optional<AtomSet> added_facts;  // the set S joined to the program
    std::optional<int> segment;          // segment level T
    std::optional<Atom> atom;            // relevance atom
    std::vector<AffixModel> models;      // offending or certifying models
    std::string note;
};

struct DirectionReport {
    Verdict verdict = Verdict::Holds;
    std::vector<Witness> witnesses;
};

struct CmCutReport {
    bool applicable = true;  // false when SEM(P) is empty
    DirectionReport classical_cm;
    DirectionReport classical_cut;
    DirectionReport refined_cm;
    DirectionReport refined_cut;
};

struct RelevanceReport {
    DirectionReport gl;
    DirectionReport lg;
};

struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::Holds;
    std::vector<Witness> witnesses;
    std::string note;
};

// Enumerates every S within the semantic kernel and compares both kernels
// (classical definitions) and model sets (refined definitions).
CmCutReport check_cm_cut(Engine& e, const Program& p, SemanticsId sem);

// Kernel agreement between P and Rel_P(a) per atom; the local-to-global
// direction also fails on every irregular model.
RelevanceReport check_relevance(Engine& e, const Program& p, SemanticsId sem);

PropertyReport check_defectivity(Engine& e, const Program& p, SemanticsId sem);
PropertyReport check_excessiveness(Engine& e, const Program& p,
                                   SemanticsId sem);
PropertyReport check_irregularity(Engine& e, const Program& p,
                                  SemanticsId sem);

enum class Tri { ConfirmedFailed, NotFalsified, Unknown };
std::string tri_name(Tri t);

struct TypeVector {
    Tri exists = Tri::NotFalsified;
    Tri gl = Tri::NotFalsified;
    Tri lg = Tri::NotFalsified;
    Tri cm = Tri::NotFalsified;
    Tri cut = Tri::NotFalsified;
    bool table1_consistent = true;
    std::vector<std::string> notes;  // one line per stored witness
};

// Runs the checkers over the corpus. A flag is confirmed failed only by the
// decidable certificates: an empty model set or a defectivity witness
// (existence, and through the defectivity equivalence also global-to-local
// relevance and cautious monotony), irregularity (local-to-global
// relevance), excessiveness (cut), and the refined model-set tests
// (cautious monotony and cut).
TypeVector classify(Engine& e,
                    const std::vector<std::pair<std::string, Program>>& corpus,
                    SemanticsId sem);

// Embeds q above a two-way choice with a savior atom so that the choice's
// second branch requires a model of q. If SEM(q) is empty the host is
// defective for SEM.
Program make_defectivity_host(const Program& q);

// Converts an SM existence-failure witness into a cautious-monotony-failure
// witness (via the host embedding) and a defective program into an
// existence-failure witness (by extracting the failing segment extension).
Program prop1_witness_transform(Engine& e, const Program& p);

}  // namespace lp

#endif
