#include "lp/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lp {

namespace {

// Process-wide interner. Append-only; pointers stay valid forever.
struct Interner {
    std::mutex mu;
    std::deque<std::string> storage;
    std::unordered_map<std::string_view, const std::string*> index;

    const std::string* intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        storage.emplace_back(name);
        const std::string* p = &storage.back();
        index.emplace(std::string_view(*p), p);
        return p;
    }
};

Interner& interner() {
    static Interner in;
    return in;
}

}  // namespace

Atom Atom::intern(std::string_view name) {
    Atom a;
    a.sym_ = interner().intern(name);
    return a;
}

AtomSet::AtomSet(std::initializer_list<Atom> xs) : items_(xs) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

AtomSet::AtomSet(std::vector<Atom> xs) : items_(std::move(xs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool AtomSet::contains(Atom a) const {
    return std::binary_search(items_.begin(), items_.end(), a);
}

void AtomSet::insert(Atom a) {
    auto it = std::lower_bound(items_.begin(), items_.end(), a);
    if (it == items_.end() || *it != a) items_.insert(it, a);
}

void AtomSet::erase(Atom a) {
    auto it = std::lower_bound(items_.begin(), items_.end(), a);
    if (it != items_.end() && *it == a) items_.erase(it);
}

bool AtomSet::subset_of(const AtomSet& o) const {
    return std::includes(o.items_.begin(), o.items_.end(), items_.begin(),
                         items_.end());
}

bool AtomSet::operator<(const AtomSet& o) const {
    return std::lexicographical_compare(items_.begin(), items_.end(),
                                        o.items_.begin(), o.items_.end());
}

std::string AtomSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ", ";
        out += items_[i].name();
    }
    out += "}";
    return out;
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    AtomSet r;
    for (Atom x : out) r.insert(x);
    return r;
}

AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    AtomSet r;
    for (Atom x : out) r.insert(x);
    return r;
}

AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    AtomSet r;
    for (Atom x : out) r.insert(x);
    return r;
}

Rule::Rule(Atom head, std::vector<Literal> body)
    : head_(head), body_(std::move(body)) {
    std::sort(body_.begin(), body_.end());
    body_.erase(std::unique(body_.begin(), body_.end()), body_.end());
}

AtomSet Rule::positive_body() const {
    AtomSet s;
    for (const Literal& l : body_)
        if (!l.negated) s.insert(l.atom);
    return s;
}

AtomSet Rule::negative_body() const {
    AtomSet s;
    for (const Literal& l : body_)
        if (l.negated) s.insert(l.atom);
    return s;
}

AtomSet Rule::body_atoms() const {
    AtomSet s;
    for (const Literal& l : body_) s.insert(l.atom);
    return s;
}

AtomSet Rule::atoms() const {
    AtomSet s = body_atoms();
    s.insert(head_);
    return s;
}

bool Rule::operator<(const Rule& o) const {
    if (head_ != o.head_) return head_ < o.head_;
    return std::lexicographical_compare(body_.begin(), body_.end(),
                                        o.body_.begin(), o.body_.end());
}

std::string Rule::to_string() const {
    std::string out = head_.name();
    if (!body_.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < body_.size(); ++i) {
            if (i) out += ", ";
            if (body_[i].negated) out += "not ";
            out += body_[i].atom.name();
        }
    }
    out += ".";
    return out;
}

Program::Program(std::vector<Rule> rules) {
    for (const Rule& r : rules) add_rule(r);
}

bool Program::contains(const Rule& r) const {
    return std::find(rules_.begin(), rules_.end(), r) != rules_.end();
}

void Program::add_rule(const Rule& r) {
    if (contains(r)) return;
    rules_.push_back(r);
    herbrand_.insert(r.head());
    for (const Literal& l : r.body()) herbrand_.insert(l.atom);
}

bool Program::operator==(const Program& o) const {
    if (rules_.size() != o.rules_.size()) return false;
    for (const Rule& r : rules_)
        if (!o.contains(r)) return false;
    return true;
}

std::string Program::canonical_key() const {
    std::vector<std::string> lines;
    lines.reserve(rules_.size());
    for (const Rule& r : rules_) lines.push_back(r.to_string());
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

Interpretation3V::Interpretation3V(AtomSet t, AtomSet f, AtomSet u)
    : true_(std::move(t)), false_(std::move(f)), undef_(std::move(u)) {
    if (!set_intersection(true_, false_).empty() ||
        !set_intersection(true_, undef_).empty() ||
        !set_intersection(false_, undef_).empty())
        throw std::invalid_argument("interpretation parts overlap");
}

AtomSet Interpretation3V::universe() const {
    return set_union(set_union(true_, false_), undef_);
}

ParseError::ParseError(std::string msg, int l, int c)
    : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " +
                         std::to_string(c)),
      line(l),
      column(c) {}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '%') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col);
    }

    std::string ident() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = peek();
        if (std::isupper(static_cast<unsigned char>(c)))
            fail("non-ground program: variable token");
        if (!std::islower(static_cast<unsigned char>(c)))
            fail("expected atom");
        std::string out;
        while (pos < text.size()) {
            char d = text[pos];
            if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                out += d;
                advance();
            } else {
                break;
            }
        }
        return out;
    }

    bool try_consume(std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) != tok) return false;
        for (std::size_t i = 0; i < tok.size(); ++i) advance();
        return true;
    }

    void consume(std::string_view tok, const std::string& what) {
        if (!try_consume(tok)) fail("expected '" + std::string(what) + "'");
    }
};

}  // namespace

Program parse_program(std::string_view text) {
    Lexer lx{text};
    Program p;
    while (!lx.eof()) {
        std::string head = lx.ident();
        if (head == "not") lx.fail("'not' is reserved");
        std::vector<Literal> body;
        if (lx.try_consume(":-")) {
            for (;;) {
                lx.skip_ws();
                bool neg = false;
                std::string tok = lx.ident();
                if (tok == "not") {
                    neg = true;
                    tok = lx.ident();
                    if (tok == "not") lx.fail("'not' is reserved");
                }
                body.push_back(Literal{Atom::intern(tok), neg});
                if (!lx.try_consume(",")) break;
            }
        }
        lx.consume(".", ".");
        p.add_rule(Rule(Atom::intern(head), std::move(body)));
    }
    return p;
}

std::string render_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

AtomSet atoms(const Rule& r) { return r.atoms(); }

AtomSet atoms(const Program& p) { return p.herbrand(); }

AtomSet heads(const Program& p) {
    AtomSet s;
    for (const Rule& r : p.rules()) s.insert(r.head());
    return s;
}

Program facts(const Program& p) {
    Program q;
    for (const Rule& r : p.rules())
        if (r.is_fact()) q.add_rule(r);
    return q;
}

AtomSet fact_atoms(const Program& p) {
    AtomSet s;
    for (const Rule& r : p.rules())
        if (r.is_fact()) s.insert(r.head());
    return s;
}

AtomSet body_atoms(const Rule& r) { return r.body_atoms(); }

Program add_facts(const Program& p, const AtomSet& s) {
    Program q = p;
    for (Atom a : s) q.add_rule(Rule(a, {}));
    return q;
}

Program program_union(const Program& p, const Program& q) {
    Program out = p;
    for (const Rule& r : q.rules()) out.add_rule(r);
    return out;
}

}  // namespace lp
