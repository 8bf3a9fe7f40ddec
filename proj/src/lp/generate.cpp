#include "lp/generate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lp {

namespace {

// splitmix64; fixed algorithm so seeds are portable across platforms.
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

    bool chance(double p) {
        return (next() >> 11) * 0x1.0p-53 < p;
    }
};

std::string atom_name(int i) {
    std::string base(1, static_cast<char>('a' + i % 26));
    if (i >= 26) base += std::to_string(i / 26);
    return base;
}

}  // namespace

Program generate_program(const GeneratorConfig& cfg) {
    if (cfg.atom_count < 1 || cfg.rule_count < 0 || cfg.max_body < 0)
        throw std::invalid_argument("invalid generator configuration");
    Rng rng{cfg.seed * 0x9e3779b97f4a7c15ULL + 0x42ULL};
    std::vector<Atom> atoms;
    for (int i = 0; i < cfg.atom_count; ++i)
        atoms.push_back(Atom::intern(atom_name(i)));

    Program p;
    for (int r = 0; r < cfg.rule_count; ++r) {
        Atom head = atoms[rng.below(cfg.atom_count)];
        int body_len = cfg.max_body == 0 ? 0 : rng.below(cfg.max_body + 1);
        std::vector<Literal> body;
        for (int i = 0; i < body_len; ++i)
            body.push_back(Literal{atoms[rng.below(cfg.atom_count)],
                                   rng.chance(cfg.negation_probability)});
        p.add_rule(Rule(head, std::move(body)));
    }
    return p;
}

}  // namespace lp
