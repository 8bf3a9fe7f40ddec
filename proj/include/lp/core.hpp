// Core program representation: atoms, literals, rules, programs and
// three-valued interpretations, plus the concrete text syntax.
#ifndef LP_CORE_HPP
#define LP_CORE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lp {

// Interned atom symbol. Equality is pointer equality on the interned string,
// ordering is lexicographic on the symbol so that every sorted container and
// every emitted list is alphabetical.
class Atom {
public:
    Atom() : sym_(nullptr) {}
    static Atom intern(std::string_view name);

    const std::string& name() const { return *sym_; }
    bool valid() const { return sym_ != nullptr; }

    bool operator==(const Atom& o) const { return sym_ == o.sym_; }
    bool operator!=(const Atom& o) const { return sym_ != o.sym_; }
    bool operator<(const Atom& o) const {
        return sym_ != o.sym_ && *sym_ < *o.sym_;
    }
    bool operator<=(const Atom& o) const { return !(o < *this); }
    bool operator>(const Atom& o) const { return o < *this; }
    bool operator>=(const Atom& o) const { return !(*this < o); }

    const std::string* key() const { return sym_; }

private:
    const std::string* sym_;
};

// Sorted duplicate-free atom collection with value semantics.
class AtomSet {
public:
    AtomSet() = default;
    AtomSet(std::initializer_list<Atom> xs);
    explicit AtomSet(std::vector<Atom> xs);

    bool contains(Atom a) const;
    void insert(Atom a);
    void erase(Atom a);
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Atom>& items() const { return items_; }

    bool subset_of(const AtomSet& o) const;
    bool proper_subset_of(const AtomSet& o) const {
        return size() < o.size() && subset_of(o);
    }

    bool operator==(const AtomSet& o) const { return items_ == o.items_; }
    bool operator!=(const AtomSet& o) const { return items_ != o.items_; }
    // Lexicographic on the sorted element list; used for canonical model order.
    bool operator<(const AtomSet& o) const;

    std::string to_string() const;

private:
    std::vector<Atom> items_;
};

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_intersection(const AtomSet& a, const AtomSet& b);
AtomSet set_difference(const AtomSet& a, const AtomSet& b);

struct Literal {
    Atom atom;
    bool negated = false;  // true encodes the default literal "not atom"

    bool operator==(const Literal& o) const {
        return atom == o.atom && negated == o.negated;
    }
    // Positive literals first, then by atom name: the canonical body order.
    bool operator<(const Literal& o) const {
        if (negated != o.negated) return !negated;
        return atom < o.atom;
    }
};

// A normal rule "head <- body". The body is kept canonically sorted and
// duplicate-free, so structurally equal rules compare equal.
class Rule {
public:
    Rule(Atom head, std::vector<Literal> body);

    Atom head() const { return head_; }
    const std::vector<Literal>& body() const { return body_; }
    bool is_fact() const { return body_.empty(); }

    AtomSet positive_body() const;
    AtomSet negative_body() const;
    AtomSet body_atoms() const;
    AtomSet atoms() const;

    bool operator==(const Rule& o) const {
        return head_ == o.head_ && body_ == o.body_;
    }
    bool operator<(const Rule& o) const;

    std::string to_string() const;  // rendered with the trailing '.'

private:
    Atom head_;
    std::vector<Literal> body_;
};

// A finite ground normal logic program: an ordered duplicate-free rule list.
// Rule order is insertion order; programs compare as rule sets.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    auto begin() const { return rules_.begin(); }
    auto end() const { return rules_.end(); }
    const Rule& operator[](std::size_t i) const { return rules_[i]; }

    bool contains(const Rule& r) const;
    // Set insertion: duplicates are silently merged.
    void add_rule(const Rule& r);

    // Herbrand base: every atom occurring in the program, sorted.
    const AtomSet& herbrand() const { return herbrand_; }

    // Set equality, independent of rule order.
    bool operator==(const Program& o) const;
    bool operator!=(const Program& o) const { return !(*this == o); }

    // Canonical key (sorted rule renderings); stable across rule order.
    std::string canonical_key() const;

private:
    std::vector<Rule> rules_;
    AtomSet herbrand_;
};

// Three-valued interpretation: a partition of a declared universe.
class Interpretation3V {
public:
    Interpretation3V(AtomSet t, AtomSet f, AtomSet u);

    const AtomSet& true_set() const { return true_; }
    const AtomSet& false_set() const { return false_; }
    const AtomSet& undef_set() const { return undef_; }
    AtomSet universe() const;
    bool is_total() const { return undef_.empty(); }

    bool operator==(const Interpretation3V& o) const {
        return true_ == o.true_ && false_ == o.false_ && undef_ == o.undef_;
    }

private:
    AtomSet true_, false_, undef_;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int l, int c);
};

// Parses the ASP-like text format (rules "h :- b, not c.", facts "a.",
// comments "% ..."). Uppercase-initial tokens are rejected as variables.
Program parse_program(std::string_view text);
std::string render_program(const Program& p);

// Set-level accessors.
AtomSet atoms(const Rule& r);
AtomSet atoms(const Program& p);
AtomSet heads(const Program& p);
Program facts(const Program& p);
AtomSet fact_atoms(const Program& p);
AtomSet body_atoms(const Rule& r);

// P with the atoms of s added as facts (set semantics).
Program add_facts(const Program& p, const AtomSet& s);
// Rule-set union, preserving p's order and then q's new rules.
Program program_union(const Program& p, const Program& q);

}  // namespace lp

template <>
struct std::hash<lp::Atom> {
    std::size_t operator()(const lp::Atom& a) const {
        return std::hash<const std::string*>()(a.key());
    }
};

#endif
