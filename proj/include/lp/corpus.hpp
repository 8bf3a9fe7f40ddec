// Embedded program corpus: the worked counter-example programs exercised by
// the golden tests, the classifier, and the CLI corpus command.
#ifndef LP_CORPUS_HPP
#define LP_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lp/core.hpp"

namespace lp {

struct CorpusEntry {
    std::string name;
    std::string description;
    std::string text;               // program source
    std::string expectations_json;  // JSON array of {op, ..., expect}

    Program program() const { return parse_program(text); }
};

const std::vector<CorpusEntry>& corpus();
std::optional<CorpusEntry> corpus_entry(std::string_view name);

}  // namespace lp

#endif
