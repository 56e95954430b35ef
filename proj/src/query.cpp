#include "ltqp/query.hpp"

#include <algorithm>
#include <unordered_map>

#include "scanner.hpp"

namespace ltqp {

bool PredicatePath::contains(std::string_view iri) const {
    return std::find(alternatives.begin(), alternatives.end(), iri) != alternatives.end();
}

std::vector<std::string> TriplePattern::variables() const {
    std::vector<std::string> out;
    auto add = [&](const std::string& name) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    };
    if (auto* v = std::get_if<Variable>(&subject)) add(v->name);
    if (auto* v = std::get_if<Variable>(&predicate)) add(v->name);
    if (auto* v = std::get_if<Variable>(&object)) add(v->name);
    return out;
}

bool TriplePattern::is_type_pattern() const {
    auto* path = std::get_if<PredicatePath>(&predicate);
    return path && path->alternatives.size() == 1 && path->alternatives[0] == ns::rdf_type;
}

std::set<std::string> Bgp::variables() const {
    std::set<std::string> out;
    for (const auto& p : patterns) {
        for (auto& v : p.variables()) out.insert(std::move(v));
    }
    return out;
}

bool is_blank_variable(std::string_view name) {
    return name.starts_with(kBlankVariablePrefix);
}

namespace {

class QueryParser {
public:
    explicit QueryParser(std::string_view text) : in_(text) {}

    Query run() {
        prologue();
        if (!in_.accept_keyword("SELECT")) in_.fail("expected SELECT");
        if (in_.accept_keyword("DISTINCT")) query_.distinct = true;

        bool star = false;
        in_.skip_ws();
        if (in_.accept('*')) {
            star = true;
        } else {
            while (true) {
                in_.skip_ws();
                if (in_.peek() != '?' && in_.peek() != '$') break;
                query_.projection.push_back(variable().name);
            }
            if (query_.projection.empty()) in_.fail("expected projection variables");
        }
        in_.accept_keyword("WHERE");
        in_.expect('{');
        group();
        in_.expect('}');
        if (in_.accept_keyword("LIMIT")) {
            in_.skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(in_.peek()))) in_.fail("expected LIMIT count");
            auto [lex, decimal] = in_.read_number();
            if (decimal) in_.fail("LIMIT must be an integer");
            query_.limit = std::stoull(lex);
        }
        in_.skip_ws();
        if (!in_.eof()) in_.fail("unexpected trailing input");

        auto vars = query_.bgp.variables();
        if (star) {
            for (const auto& p : query_.bgp.patterns) {
                for (const auto& v : p.variables()) {
                    if (!is_blank_variable(v) &&
                        std::find(query_.projection.begin(), query_.projection.end(), v) ==
                            query_.projection.end())
                        query_.projection.push_back(v);
                }
            }
        }
        for (const auto& v : query_.projection) {
            if (!vars.contains(v))
                throw QueryError("projected variable ?" + v + " does not occur in the pattern");
        }
        return std::move(query_);
    }

private:
    void prologue() {
        while (true) {
            if (in_.accept_keyword("PREFIX")) {
                in_.skip_ws();
                std::string name;
                while (!in_.eof() && in_.peek() != ':') {
                    char c = in_.peek();
                    if (!detail::Scanner::is_name_char(c) && c != '.') in_.fail("bad prefix name");
                    name.push_back(in_.get());
                }
                if (in_.eof()) in_.fail("expected ':' in PREFIX");
                in_.get();
                prefixes_[name] = resolve(in_.read_iriref());
            } else if (in_.accept_keyword("BASE")) {
                base_ = in_.read_iriref();
                if (!is_absolute_iri(base_)) in_.fail("BASE must be absolute");
            } else {
                return;
            }
        }
    }

    void group() {
        while (true) {
            in_.skip_ws();
            if (in_.peek() == '}' || in_.eof()) return;
            triples_same_subject();
            if (!in_.accept('.')) return;
        }
    }

    void triples_same_subject() {
        in_.skip_ws();
        if (in_.peek() == '[') {
            NodeSlot subject = blank_property_list();
            in_.skip_ws();
            if (in_.peek() != '.' && in_.peek() != '}') property_list(subject);
            return;
        }
        NodeSlot subject = node(false);
        property_list(subject);
    }

    void property_list(const NodeSlot& subject) {
        while (true) {
            PredicateSlot predicate = verb();
            do {
                NodeSlot object = node(true);
                query_.bgp.patterns.push_back(TriplePattern{subject, predicate, std::move(object)});
            } while (in_.accept(','));
            bool more = false;
            while (in_.accept(';')) more = true;
            if (!more) return;
            in_.skip_ws();
            char c = in_.peek();
            if (c == '.' || c == '}' || c == ']') return;
        }
    }

    PredicateSlot verb() {
        in_.skip_ws();
        if (in_.peek() == '?' || in_.peek() == '$') return variable();
        PredicatePath path;
        do {
            in_.skip_ws();
            if (in_.peek() == 'a' && !detail::Scanner::is_name_char(in_.peek(1)) &&
                in_.peek(1) != ':') {
                in_.get();
                path.alternatives.emplace_back(ns::rdf_type);
            } else {
                path.alternatives.push_back(iri());
            }
        } while (in_.accept('|'));
        return path;
    }

    NodeSlot node(bool object_position) {
        in_.skip_ws();
        char c = in_.peek();
        if (c == '?' || c == '$') return variable();
        if (c == '[') {
            if (!object_position) in_.fail("unexpected '['");
            return blank_property_list();
        }
        if (c == '_' && in_.peek(1) == ':') {
            in_.get();
            in_.get();
            std::string label = in_.read_name();
            if (label.empty()) in_.fail("empty blank node label");
            return Variable{std::string(kBlankVariablePrefix) + "_" + label};
        }
        if (c == '"' || c == '\'' || in_.at_number()) {
            if (!object_position) in_.fail("literal in subject position");
            return literal();
        }
        if (object_position) {
            if (in_.accept_keyword("true")) return Term::literal("true", std::string(ns::xsd_boolean));
            if (in_.accept_keyword("false")) return Term::literal("false", std::string(ns::xsd_boolean));
        }
        return Term::iri(iri());
    }

    Term literal() {
        in_.skip_ws();
        if (in_.at_number()) {
            auto [lex, decimal] = in_.read_number();
            return Term::literal(std::move(lex),
                                 std::string(decimal ? ns::xsd_decimal : ns::xsd_integer));
        }
        std::string lex = in_.read_string();
        if (in_.peek() == '@') {
            in_.get();
            return Term::lang_literal(std::move(lex), in_.read_langtag());
        }
        if (in_.peek() == '^' && in_.peek(1) == '^') {
            in_.get();
            in_.get();
            return Term::literal(std::move(lex), iri());
        }
        return Term::literal(std::move(lex));
    }

    NodeSlot blank_property_list() {
        in_.expect('[');
        Variable v{std::string(kBlankVariablePrefix) + std::to_string(anon_counter_++)};
        in_.skip_ws();
        if (in_.peek() != ']') property_list(v);
        in_.expect(']');
        return v;
    }

    Variable variable() {
        in_.get();  // '?' or '$'
        std::string name = in_.read_name();
        if (name.empty()) in_.fail("empty variable name");
        return Variable{std::move(name)};
    }

    std::string iri() {
        in_.skip_ws();
        if (in_.peek() == '<') return resolve(in_.read_iriref());
        if (!in_.at_pname()) in_.fail("expected IRI, prefixed name or variable");
        auto [prefix, local] = in_.read_pname();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) in_.fail("unknown prefix '" + prefix + ":'");
        return it->second + local;
    }

    std::string resolve(const std::string& ref) {
        if (is_absolute_iri(ref)) return ref;
        if (base_.empty()) in_.fail("relative IRI <" + ref + "> without BASE");
        return resolve_iri(base_, ref);
    }

    detail::Scanner in_;
    std::string base_;
    std::unordered_map<std::string, std::string> prefixes_;
    Query query_;
    std::size_t anon_counter_ = 0;
};

bool bind(SolutionMapping& mu, const NodeSlot& slot, const Term& term) {
    if (auto* v = std::get_if<Variable>(&slot)) {
        auto [it, inserted] = mu.try_emplace(v->name, term);
        return inserted || it->second == term;
    }
    return std::get<Term>(slot) == term;
}

std::string slot_text(const NodeSlot& slot) {
    if (auto* v = std::get_if<Variable>(&slot)) {
        if (is_blank_variable(v->name)) {
            std::string_view rest = std::string_view(v->name).substr(kBlankVariablePrefix.size());
            // labelled `.b_x` prints as `_:x`; anonymous `.b3` as `_:b3`
            if (rest.starts_with('_')) return "_:" + std::string(rest.substr(1));
            return "_:b" + std::string(rest);
        }
        return "?" + v->name;
    }
    return to_ntriples(std::get<Term>(slot));
}

std::string predicate_text(const PredicateSlot& slot) {
    if (auto* v = std::get_if<Variable>(&slot)) return "?" + v->name;
    std::string out;
    for (const auto& alt : std::get<PredicatePath>(slot).alternatives) {
        if (!out.empty()) out += "|";
        out += "<" + alt + ">";
    }
    return out;
}

std::string subject_key(const NodeSlot& slot) {
    if (auto* v = std::get_if<Variable>(&slot)) return "?" + v->name;
    return to_ntriples(std::get<Term>(slot));
}

}  // namespace

Query parse_query(std::string_view text) {
    return QueryParser(text).run();
}

std::string serialize_query(const Query& query) {
    std::string out = "SELECT ";
    if (query.distinct) out += "DISTINCT ";
    for (const auto& v : query.projection) out += "?" + v + " ";
    out += "WHERE {\n";
    for (const auto& p : query.bgp.patterns) out += "  " + to_string(p) + "\n";
    out += "}";
    if (query.limit) out += " LIMIT " + std::to_string(*query.limit);
    out += "\n";
    return out;
}

std::string to_string(const TriplePattern& p) {
    return slot_text(p.subject) + " " + predicate_text(p.predicate) + " " + slot_text(p.object) + " .";
}

std::optional<SolutionMapping> match_pattern(const Triple& triple, const TriplePattern& pattern) {
    SolutionMapping mu;
    if (!bind(mu, pattern.subject, triple.subject)) return std::nullopt;
    if (auto* v = std::get_if<Variable>(&pattern.predicate)) {
        auto [it, inserted] = mu.try_emplace(v->name, triple.predicate);
        if (!inserted && it->second != triple.predicate) return std::nullopt;
    } else {
        if (!triple.predicate.is_iri() ||
            !std::get<PredicatePath>(pattern.predicate).contains(triple.predicate.value))
            return std::nullopt;
    }
    if (!bind(mu, pattern.object, triple.object)) return std::nullopt;
    return mu;
}

TriplePattern apply_mapping(const SolutionMapping& mapping, const TriplePattern& pattern) {
    auto node = [&](const NodeSlot& slot) -> NodeSlot {
        if (auto* v = std::get_if<Variable>(&slot)) {
            if (auto it = mapping.find(v->name); it != mapping.end()) return it->second;
        }
        return slot;
    };
    TriplePattern out{node(pattern.subject), pattern.predicate, node(pattern.object)};
    if (auto* v = std::get_if<Variable>(&pattern.predicate)) {
        if (auto it = mapping.find(v->name); it != mapping.end() && it->second.is_iri())
            out.predicate = PredicatePath{{it->second.value}};
    }
    return out;
}

QueryClasses query_classes(const Bgp& bgp) {
    QueryClasses result;
    std::set<std::string> subjects;
    std::set<std::string> typed;
    for (const auto& p : bgp.patterns) {
        subjects.insert(subject_key(p.subject));
        bool object_is_iri = std::holds_alternative<Term>(p.object) && std::get<Term>(p.object).is_iri();
        if (p.is_type_pattern() && object_is_iri) {
            result.classes.insert(std::get<Term>(p.object).value);
            typed.insert(subject_key(p.subject));
            continue;
        }
        // A variable class or predicate matches <?v rdf:type c> for every c.
        bool may_be_type = std::holds_alternative<Variable>(p.predicate) ||
                           std::get<PredicatePath>(p.predicate).contains(ns::rdf_type);
        if (may_be_type && std::holds_alternative<Variable>(p.object)) result.has_untyped_subject = true;
        if (may_be_type && object_is_iri) result.classes.insert(std::get<Term>(p.object).value);
    }
    for (const auto& s : subjects) {
        if (!typed.contains(s)) result.has_untyped_subject = true;
    }
    return result;
}

std::set<std::string> query_seed_iris(const Query& query) {
    std::set<std::string> out;
    for (const auto& p : query.bgp.patterns) {
        for (const NodeSlot* slot : {&p.subject, &p.object}) {
            if (auto* t = std::get_if<Term>(slot); t && t->is_iri()) out.insert(strip_fragment(t->value));
        }
    }
    return out;
}

SolutionMapping project(const SolutionMapping& mapping, const std::vector<std::string>& projection) {
    SolutionMapping out;
    for (const auto& v : projection) {
        if (auto it = mapping.find(v); it != mapping.end()) out.emplace(v, it->second);
    }
    return out;
}

}  // namespace ltqp
