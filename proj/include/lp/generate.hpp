// Seeded random program generator for the property suites.
#ifndef LP_GENERATE_HPP
#define LP_GENERATE_HPP

#include <cstdint>

#include "lp/core.hpp"

namespace lp {

struct GeneratorConfig {
    int atom_count = 4;
    int rule_count = 6;
    int max_body = 3;
    double negation_probability = 0.5;
    std::uint64_t seed = 0;
};

// Deterministic per config: the same seed yields byte-identical text.
Program generate_program(const GeneratorConfig& cfg);

}  // namespace lp

#endif
