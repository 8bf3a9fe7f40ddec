#include "lp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lp/corpus.hpp"
#include "lp/generate.hpp"
#include "lp/graph.hpp"
#include "lp/properties.hpp"
#include "lp/reduction.hpp"
#include "lp/semantics.hpp"

namespace lp::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json atoms_json(const AtomSet& s) {
    json arr = json::array();
    for (Atom a : s) arr.push_back(a.name());
    return arr;
}

json model_json(const AffixModel& m) {
    json j;
    j["true"] = atoms_json(m.positive);
    if (m.affix) j["affix"] = atoms_json(*m.affix);
    return j;
}

json models_json(const ModelSet& ms) {
    json arr = json::array();
    for (const AffixModel& m : ms) arr.push_back(model_json(m));
    return arr;
}

json witness_json(const Witness& w) {
    json j;
    j["kind"] = w.kind;
    if (w.added_facts) j["s"] = atoms_json(*w.added_facts);
    if (w.segment) j["t"] = *w.segment;
    if (w.atom) j["atom"] = w.atom->name();
    if (!w.models.empty()) {
        json arr = json::array();
        for (const AffixModel& m : w.models) arr.push_back(model_json(m));
        j["models"] = arr;
    }
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

json direction_json(const DirectionReport& d) {
    json j;
    j["verdict"] = verdict_name(d.verdict);
    json arr = json::array();
    for (const Witness& w : d.witnesses) arr.push_back(witness_json(w));
    j["witnesses"] = arr;
    return j;
}

json property_json(const PropertyReport& r) {
    json j;
    j["property"] = r.property;
    j["verdict"] = verdict_name(r.verdict);
    json arr = json::array();
    for (const Witness& w : r.witnesses) arr.push_back(witness_json(w));
    j["witnesses"] = arr;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

SemanticsId semantics_or_throw(const std::string& name) {
    auto id = parse_semantics(name);
    if (!id) throw CLI::ValidationError("unknown semantics id: " + name);
    return *id;
}

struct Options {
    int max_atoms = 22;
    std::string file;
    std::string semantics = "sm";
    std::string system = "wfs";
    std::string property;
    std::string atom;
    std::string corpus_dir;
    std::string entry_name;
    std::string write_dir;
    bool as_json = false;
    GeneratorConfig gen;
};

int cmd_parse(const Options& o, std::ostream& out) {
    out << render_program(parse_program(read_input(o.file)));
    return 0;
}

int cmd_remainder(const Options& o, std::ostream& out) {
    OpSet ops = o.system == "wfs"    ? OpSet::wfs()
                : o.system == "mh"   ? OpSet::mh()
                : o.system == "mhls" ? OpSet::mh_ls()
                                     : throw CLI::ValidationError(
                                           "unknown system: " + o.system);
    out << render_program(remainder(parse_program(read_input(o.file)), ops));
    return 0;
}

int cmd_wfm(const Options& o, std::ostream& out) {
    Interpretation3V w = wfm_from_remainder(parse_program(read_input(o.file)));
    json j;
    j["true"] = atoms_json(w.true_set());
    j["false"] = atoms_json(w.false_set());
    j["undef"] = atoms_json(w.undef_set());
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_layers(const Options& o, std::ostream& out) {
    Program p = parse_program(read_input(o.file));
    Layering l = layering(p);
    json per_rule = json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        per_rule[p[i].to_string()] = l.layer[i];
    json j;
    j["layers"] = per_rule;
    j["segments"] = l.segment_levels;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_relevant(const Options& o, std::ostream& out) {
    Program p = parse_program(read_input(o.file));
    Atom a = Atom::intern(o.atom);
    if (!p.herbrand().contains(a))
        throw CLI::ValidationError("atom not in the program: " + o.atom);
    out << render_program(relevant_subprogram(p, a));
    return 0;
}

int cmd_models(const Options& o, std::ostream& out) {
    Engine e(o.max_atoms);
    SemanticsId sem = semantics_or_throw(o.semantics);
    Program p = parse_program(read_input(o.file));
    const ModelSet& ms = e.models(p, sem);
    if (o.as_json) {
        json j;
        j["semantics"] = semantics_name(sem);
        j["models"] = models_json(ms);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (ms.empty()) {
        out << "no models\n";
        return 0;
    }
    for (const AffixModel& m : ms) {
        out << m.positive.to_string();
        if (m.affix) out << "  affix " << m.affix->to_string();
        out << "\n";
    }
    return 0;
}

int cmd_kernel(const Options& o, std::ostream& out) {
    Engine e(o.max_atoms);
    SemanticsId sem = semantics_or_throw(o.semantics);
    Program p = parse_program(read_input(o.file));
    std::optional<AtomSet> k = semantic_kernel(e.models(p, sem));
    json j;
    j["semantics"] = semantics_name(sem);
    j["defined"] = k.has_value();
    j["kernel"] = k ? atoms_json(*k) : json();
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    Engine e(o.max_atoms);
    SemanticsId sem = semantics_or_throw(o.semantics);
    Program p = parse_program(read_input(o.file));
    json j;
    j["property"] = o.property;
    j["semantics"] = semantics_name(sem);
    if (o.property == "cm" || o.property == "cut" ||
        o.property == "cumulativity") {
        CmCutReport r = check_cm_cut(e, p, sem);
        j["applicable"] = r.applicable;
        if (o.property != "cut") {
            j["classical_cm"] = direction_json(r.classical_cm);
            j["refined_cm"] = direction_json(r.refined_cm);
        }
        if (o.property != "cm") {
            j["classical_cut"] = direction_json(r.classical_cut);
            j["refined_cut"] = direction_json(r.refined_cut);
        }
    } else if (o.property == "relevance") {
        RelevanceReport r = check_relevance(e, p, sem);
        j["gl"] = direction_json(r.gl);
        j["lg"] = direction_json(r.lg);
    } else if (o.property == "defectivity") {
        j.update(property_json(check_defectivity(e, p, sem)));
    } else if (o.property == "excessiveness") {
        j.update(property_json(check_excessiveness(e, p, sem)));
    } else if (o.property == "irregularity") {
        j.update(property_json(check_irregularity(e, p, sem)));
    } else {
        throw CLI::ValidationError("unknown property: " + o.property);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    Engine e(o.max_atoms);
    SemanticsId sem = semantics_or_throw(o.semantics);
    std::vector<std::pair<std::string, Program>> programs;
    if (o.corpus_dir.empty()) {
        for (const CorpusEntry& ce : corpus())
            programs.emplace_back(ce.name, ce.program());
    } else {
        std::vector<std::filesystem::path> files;
        for (const auto& entry :
             std::filesystem::directory_iterator(o.corpus_dir))
            if (entry.path().extension() == ".lp")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            programs.emplace_back(f.stem().string(),
                                  parse_program(read_input(f.string())));
    }
    TypeVector tv = classify(e, programs, sem);
    json j;
    j["semantics"] = semantics_name(sem);
    j["exists"] = tri_name(tv.exists);
    j["gl"] = tri_name(tv.gl);
    j["lg"] = tri_name(tv.lg);
    j["cm"] = tri_name(tv.cm);
    j["cut"] = tri_name(tv.cut);
    j["table1_consistent"] = tv.table1_consistent;
    j["witnesses"] = tv.notes;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_corpus(const Options& o, std::ostream& out) {
    if (!o.write_dir.empty()) {
        std::filesystem::create_directories(o.write_dir);
        for (const CorpusEntry& ce : corpus()) {
            std::ofstream f(std::filesystem::path(o.write_dir) /
                            (ce.name + ".lp"));
            f << ce.text;
        }
        out << "wrote " << corpus().size() << " programs to " << o.write_dir
            << "\n";
        return 0;
    }
    if (o.entry_name.empty()) {
        for (const CorpusEntry& ce : corpus())
            out << ce.name << ": " << ce.description << "\n";
        return 0;
    }
    auto ce = corpus_entry(o.entry_name);
    if (!ce)
        throw CLI::ValidationError("unknown corpus entry: " + o.entry_name);
    out << ce->text;
    return 0;
}

int cmd_generate(const Options& o, std::ostream& out) {
    out << render_program(generate_program(o.gen));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"lpsemlab: semantics laboratory for ground normal logic "
                 "programs"};
    app.name("lpsem");
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-atoms", o.max_atoms,
                   "enumeration cap (default 22 atoms / hypotheses)");

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", o.file, "program file, or - for stdin")
            ->required();
    };
    auto add_sem = [&](CLI::App* cmd) {
        cmd->add_option("--semantics", o.semantics, "semantics id")
            ->required();
    };

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse and reprint");
    add_file(parse_cmd);

    CLI::App* rem = app.add_subcommand("remainder", "reduce to the fixpoint");
    rem->add_option("--system", o.system, "wfs|mh|mhls")->required();
    add_file(rem);

    CLI::App* wfm = app.add_subcommand("wfm", "well-founded model");
    add_file(wfm);

    CLI::App* layers_cmd = app.add_subcommand("layers", "rule layering");
    add_file(layers_cmd);

    CLI::App* rel = app.add_subcommand("relevant", "relevant subprogram");
    rel->add_option("atom", o.atom, "atom")->required();
    add_file(rel);

    CLI::App* models_cmd = app.add_subcommand("models", "compute models");
    add_sem(models_cmd);
    models_cmd->add_flag("--json", o.as_json, "emit JSON");
    add_file(models_cmd);

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "semantic kernel");
    add_sem(kernel_cmd);
    add_file(kernel_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "property checker");
    check_cmd
        ->add_option("property", o.property,
                     "cm|cut|cumulativity|relevance|defectivity|"
                     "excessiveness|irregularity")
        ->required();
    add_sem(check_cmd);
    add_file(check_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "five-property type vector");
    add_sem(classify_cmd);
    classify_cmd->add_option("--corpus", o.corpus_dir,
                             "directory of .lp files (default: embedded "
                             "corpus)");

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "list or dump the embedded corpus");
    corpus_cmd->add_option("name", o.entry_name, "entry to print");
    corpus_cmd->add_option("--write", o.write_dir,
                           "write all entries to a directory");

    CLI::App* gen = app.add_subcommand("generate", "random program");
    gen->add_option("--seed", o.gen.seed, "seed");
    gen->add_option("--atoms", o.gen.atom_count, "atom count");
    gen->add_option("--rules", o.gen.rule_count, "rule count");
    gen->add_option("--max-body", o.gen.max_body, "max body length");
    gen->add_option("--neg-prob", o.gen.negation_probability,
                    "default-negation probability");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            // --help goes to stdout and exits successfully.
            out << app.help();
            return 0;
        }
        err << "error: " << ex.what() << "\n";
        return 1;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(o, out);
        if (rem->parsed()) return cmd_remainder(o, out);
        if (wfm->parsed()) return cmd_wfm(o, out);
        if (layers_cmd->parsed()) return cmd_layers(o, out);
        if (rel->parsed()) return cmd_relevant(o, out);
        if (models_cmd->parsed()) return cmd_models(o, out);
        if (kernel_cmd->parsed()) return cmd_kernel(o, out);
        if (check_cmd->parsed()) return cmd_check(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (corpus_cmd->parsed()) return cmd_corpus(o, out);
        if (gen->parsed()) return cmd_generate(o, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace lp::cli
