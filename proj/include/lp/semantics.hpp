// Model-producing machinery: stable models, affix enumeration, the MH
// family, Navy/Blue/Cyan/Green, Picky, and the classical-model oracles.
#ifndef LP_SEMANTICS_HPP
#define LP_SEMANTICS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lp/core.hpp"
#include "lp/graph.hpp"
#include "lp/reduction.hpp"

namespace lp {

enum class SemanticsId {
    SM,
    MH,
    MH_LS,
    MH_LOOP,
    MH_SUST,
    MH_SUST_MIN,
    MH_REG,
    NAVY,
    BLUE,
    CYAN,
    GREEN,
    PICKY,
};

const std::vector<SemanticsId>& all_semantics();
std::string semantics_name(SemanticsId id);
std::optional<SemanticsId> parse_semantics(std::string_view name);

OpSet op_set_for(SemanticsId id);
bool is_asm_h(SemanticsId id);
bool is_asm_m(SemanticsId id);
bool is_asm_family(SemanticsId id);  // ASM^h or ASM^m
// Semantics whose models carry hypotheses sets.
bool is_affix_semantics(SemanticsId id);

// A total model given by its positive part, optionally with the hypotheses
// set that produced it.
struct AffixModel {
    AtomSet positive;
    std::optional<AtomSet> affix;

    bool operator==(const AffixModel& o) const {
        return positive == o.positive && affix == o.affix;
    }
    bool operator<(const AffixModel& o) const;
};

// Canonically sorted duplicate-free model collection.
class ModelSet {
public:
    ModelSet() = default;

    void insert(AffixModel m);
    bool empty() const { return models_.empty(); }
    std::size_t size() const { return models_.size(); }
    auto begin() const { return models_.begin(); }
    auto end() const { return models_.end(); }
    const std::vector<AffixModel>& models() const { return models_; }

    bool contains(const AffixModel& m) const;
    bool contains_positive(const AtomSet& pos) const;
    // Model identity for refined comparisons: positive part plus affix for
    // affix-based semantics, positive part alone otherwise.
    bool contains_model(const AffixModel& m, bool affix_based) const;

    std::vector<AtomSet> positives() const;

    bool operator==(const ModelSet& o) const { return models_ == o.models_; }

private:
    std::vector<AffixModel> models_;
};

// Intersection of positive parts; undefined (nullopt) on an empty model set.
std::optional<AtomSet> semantic_kernel(const ModelSet& ms);

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Shared computation context: enumeration cap plus memoized model sets and
// layerings. All operations are pure; the engine only caches. The cache is
// not synchronized, so concurrent callers should each hold their own engine.
class Engine {
public:
    explicit Engine(int max_atoms = 22);

    int max_atoms() const { return max_atoms_; }

    const ModelSet& models(const Program& p, SemanticsId sem);
    const Layering& layers(const Program& p);

private:
    int max_atoms_;
    std::unordered_map<std::string, ModelSet> model_cache_;
    std::unordered_map<std::string, Layering> layer_cache_;
};

// Gelfond-Lifschitz reduct of p with respect to assumption set m.
Program gl_reduct(const Program& p, const AtomSet& m);

// Least model of a default-negation-free program.
AtomSet least_model(const Program& p);

// All stable models by exhaustive reduct enumeration.
ModelSet stable_models(Engine& e, const Program& p);

// Assumable hypotheses of p under the semantics' reduction system.
AtomSet hyps(const Program& p, SemanticsId sem);

// All (H, WFM(P u H)) with H a subset of hyps and the WFM total. H ranges
// over nonempty subsets, or just the empty set when hyps is empty.
std::vector<AffixModel> affix_candidates(Engine& e, const Program& p,
                                         const AtomSet& hyps);

ModelSet mh_family_models(Engine& e, const Program& p, SemanticsId sem);

// All total classical models of p (rules as implications).
ModelSet classical_models(Engine& e, const Program& p);

ModelSet navy_models(Engine& e, const Program& p);
ModelSet blue_models(Engine& e, const Program& p);
ModelSet cyan_models(Engine& e, const Program& p);
ModelSet green_models(Engine& e, const Program& p);
ModelSet picky_models(Engine& e, const Program& p);

// Atoms of m's positive part with no rule in p whose body is true under m.
AtomSet unsupported_atoms(const Program& p, const Interpretation3V& m);

ModelSet compute_models(Engine& e, const Program& p, SemanticsId sem);

// Regularity of a model's positive part against base_sem's segment models.
bool is_regular_at(Engine& e, const Program& p, SemanticsId base_sem,
                   const AtomSet& positive, int t);
bool is_regular(Engine& e, const Program& p, SemanticsId base_sem,
                const AtomSet& positive);

}  // namespace lp

#endif
