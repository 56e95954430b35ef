#include "ltqp/turtle.hpp"

#include <map>
#include <unordered_map>

#include "scanner.hpp"

namespace ltqp {

namespace {

class TurtleParser {
public:
    TurtleParser(std::string_view text, std::string_view base)
        : in_(text), base_(strip_fragment(base)) {
        doc_.url = base_;
    }

    ParsedDocument run() {
        while (true) {
            in_.skip_ws();
            if (in_.eof()) break;
            statement();
        }
        return std::move(doc_);
    }

private:
    void statement() {
        if (in_.peek() == '@') {
            in_.get();
            std::string kw = in_.read_name();
            if (kw == "prefix") {
                prefix_decl();
            } else if (kw == "base") {
                base_ = resolve_iri(base_, in_.read_iriref());
            } else {
                in_.fail("unknown directive @" + kw);
            }
            in_.expect('.');
            return;
        }
        if (in_.accept_keyword("PREFIX")) {
            prefix_decl();
            return;
        }
        if (in_.accept_keyword("BASE")) {
            base_ = resolve_iri(base_, in_.read_iriref());
            return;
        }
        triples();
        in_.expect('.');
    }

    void prefix_decl() {
        in_.skip_ws();
        std::string name;
        while (!in_.eof() && in_.peek() != ':') {
            char c = in_.peek();
            if (!detail::Scanner::is_name_char(c) && c != '.') in_.fail("bad prefix name");
            name.push_back(in_.get());
        }
        if (in_.eof()) in_.fail("expected ':' in prefix declaration");
        in_.get();
        prefixes_[name] = resolve_iri(base_, in_.read_iriref());
    }

    void triples() {
        in_.skip_ws();
        if (in_.peek() == '[') {
            Term subject = blank_property_list();
            in_.skip_ws();
            // `[ ... ] .` alone is a valid statement.
            if (in_.peek() != '.') predicate_object_list(subject);
            return;
        }
        Term subject = subject_term();
        predicate_object_list(subject);
    }

    void predicate_object_list(const Term& subject) {
        while (true) {
            Term predicate = verb();
            object_list(subject, predicate);
            bool more = false;
            while (in_.accept(';')) more = true;
            if (!more) return;
            in_.skip_ws();
            char c = in_.peek();
            if (c == '.' || c == ']' || in_.eof()) return;
        }
    }

    void object_list(const Term& subject, const Term& predicate) {
        do {
            Term object = object_term();
            doc_.triples.push_back(Triple{subject, predicate, std::move(object)});
        } while (in_.accept(','));
    }

    Term verb() {
        in_.skip_ws();
        if (in_.peek() == 'a' && !detail::Scanner::is_name_char(in_.peek(1)) && in_.peek(1) != ':') {
            in_.get();
            return Term::iri(std::string(ns::rdf_type));
        }
        Term t = iri_term();
        return t;
    }

    Term subject_term() {
        in_.skip_ws();
        if (in_.peek() == '_' && in_.peek(1) == ':') return labelled_blank();
        if (in_.peek() == '"' || in_.peek() == '\'' || in_.at_number())
            in_.fail("literal in subject position");
        return iri_term();
    }

    Term object_term() {
        in_.skip_ws();
        char c = in_.peek();
        if (c == '[') return blank_property_list();
        if (c == '_' && in_.peek(1) == ':') return labelled_blank();
        if (c == '"' || c == '\'') return string_literal();
        if (in_.at_number()) {
            auto [lex, decimal] = in_.read_number();
            return Term::literal(std::move(lex),
                                 std::string(decimal ? ns::xsd_decimal : ns::xsd_integer));
        }
        if (c == '(') in_.fail("collections are not supported");
        if (in_.accept_keyword("true")) return Term::literal("true", std::string(ns::xsd_boolean));
        if (in_.accept_keyword("false")) return Term::literal("false", std::string(ns::xsd_boolean));
        return iri_term();
    }

    Term string_literal() {
        std::string lex = in_.read_string();
        if (in_.peek() == '@') {
            in_.get();
            return Term::lang_literal(std::move(lex), in_.read_langtag());
        }
        if (in_.peek() == '^' && in_.peek(1) == '^') {
            in_.get();
            in_.get();
            Term dt = iri_term();
            return Term::literal(std::move(lex), std::move(dt.value));
        }
        return Term::literal(std::move(lex));
    }

    Term iri_term() {
        in_.skip_ws();
        if (in_.peek() == '<') return Term::iri(resolve_iri(base_, in_.read_iriref()));
        if (!in_.at_pname()) in_.fail("expected IRI or prefixed name");
        auto [prefix, local] = in_.read_pname();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) in_.fail("undeclared prefix '" + prefix + ":'");
        return Term::iri(it->second + local);
    }

    Term labelled_blank() {
        in_.get();
        in_.get();
        std::string label = in_.read_name();
        if (label.empty()) in_.fail("empty blank node label");
        return Term::blank("b_" + label, base_scope());
    }

    Term blank_property_list() {
        in_.expect('[');
        Term node = Term::blank("g" + std::to_string(anon_counter_++), base_scope());
        in_.skip_ws();
        if (in_.peek() != ']') predicate_object_list(node);
        in_.expect(']');
        return node;
    }

    const std::string& base_scope() const { return doc_.url; }

    detail::Scanner in_;
    std::string base_;
    std::unordered_map<std::string, std::string> prefixes_;
    ParsedDocument doc_;
    std::size_t anon_counter_ = 0;
};

bool plain_local_name(std::string_view local) {
    if (local.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(local[0])) && local[0] != '_') return false;
    for (char c : local) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    }
    return true;
}

std::string write_term(const Term& t, const PrefixMap& prefixes) {
    if (t.is_iri()) {
        if (t.value == ns::rdf_type) return "a";
        for (const auto& [name, iri] : prefixes) {
            if (t.value.size() > iri.size() && t.value.starts_with(iri) &&
                plain_local_name(std::string_view(t.value).substr(iri.size())))
                return name + ":" + t.value.substr(iri.size());
        }
        return "<" + t.value + ">";
    }
    if (t.is_blank()) {
        std::string label = "_:";
        for (char c : t.value) label.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
        return label;
    }
    if (t.datatype == ns::xsd_integer && !t.value.empty()) return t.value;
    std::string out = to_ntriples(t);
    for (const auto& [name, iri] : prefixes) {
        std::string dt = "^^<" + iri;
        if (auto pos = out.rfind(dt); pos != std::string::npos &&
                                      plain_local_name(std::string_view(t.datatype).substr(iri.size()))) {
            out = out.substr(0, pos) + "^^" + name + ":" + t.datatype.substr(iri.size());
            break;
        }
    }
    return out;
}

}  // namespace

ParsedDocument parse_turtle(std::string_view text, std::string_view base) {
    if (!is_absolute_iri(base)) throw SyntaxError("base IRI is not absolute", 1, 1);
    return TurtleParser(text, base).run();
}

std::string write_turtle(const std::vector<Triple>& triples, const PrefixMap& prefixes) {
    std::string out;
    for (const auto& [name, iri] : prefixes) out += "@prefix " + name + ": <" + iri + ">.\n";

    std::vector<const Term*> order;
    std::unordered_map<Term, std::vector<const Triple*>> by_subject;
    for (const auto& t : triples) {
        auto [it, inserted] = by_subject.try_emplace(t.subject);
        if (inserted) order.push_back(&t.subject);
        it->second.push_back(&t);
    }
    for (const Term* subject : order) {
        const auto& group = by_subject.at(*subject);
        out += write_term(*subject, prefixes);
        for (std::size_t i = 0; i < group.size(); ++i) {
            out += i == 0 ? " " : ";\n    ";
            out += write_term(group[i]->predicate, prefixes) + " " +
                   write_term(group[i]->object, prefixes);
        }
        out += ".\n";
    }
    return out;
}

}  // namespace ltqp
