#include "ltqp/rdf.hpp"

#include <cctype>
#include <cstdio>
#include <optional>

namespace ltqp {

Term Term::iri(std::string value) {
    return Term{TermKind::Iri, std::move(value), {}, {}, {}};
}

Term Term::blank(std::string label, std::string scope) {
    return Term{TermKind::BlankNode, std::move(label), {}, {}, std::move(scope)};
}

Term Term::literal(std::string lexical, std::string datatype) {
    return Term{TermKind::Literal, std::move(lexical), std::move(datatype), {}, {}};
}

Term Term::lang_literal(std::string lexical, std::string language) {
    return Term{TermKind::Literal, std::move(lexical), std::string(ns::rdf_lang_string),
                std::move(language), {}};
}

namespace {

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct UriParts {
    std::optional<std::string_view> scheme;
    std::optional<std::string_view> authority;
    std::string_view path;
    std::optional<std::string_view> query;
    std::optional<std::string_view> fragment;
};

UriParts split_uri(std::string_view s) {
    UriParts p;
    if (auto hash = s.find('#'); hash != std::string_view::npos) {
        p.fragment = s.substr(hash + 1);
        s = s.substr(0, hash);
    }
    if (auto q = s.find('?'); q != std::string_view::npos) {
        p.query = s.substr(q + 1);
        s = s.substr(0, q);
    }
    // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
    auto colon = s.find(':');
    if (colon != std::string_view::npos && colon > 0) {
        bool ok = std::isalpha(static_cast<unsigned char>(s[0])) != 0;
        for (std::size_t i = 1; ok && i < colon; ++i) {
            char c = s[i];
            ok = std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
        }
        if (ok) {
            p.scheme = s.substr(0, colon);
            s = s.substr(colon + 1);
        }
    }
    if (s.starts_with("//")) {
        s = s.substr(2);
        auto slash = s.find('/');
        p.authority = s.substr(0, slash);
        s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
    }
    p.path = s;
    return p;
}

std::string remove_dot_segments(std::string_view in) {
    std::string input(in);
    std::string output;
    while (!input.empty()) {
        if (input.starts_with("../")) {
            input.erase(0, 3);
        } else if (input.starts_with("./")) {
            input.erase(0, 2);
        } else if (input.starts_with("/./")) {
            input.erase(0, 2);
        } else if (input == "/.") {
            input = "/";
        } else if (input.starts_with("/../")) {
            input.erase(0, 3);
            auto last = output.rfind('/');
            output.erase(last == std::string::npos ? 0 : last);
        } else if (input == "/..") {
            input = "/";
            auto last = output.rfind('/');
            output.erase(last == std::string::npos ? 0 : last);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t start = input[0] == '/' ? 1 : 0;
            auto next = input.find('/', start);
            if (next == std::string::npos) next = input.size();
            output.append(input, 0, next);
            input.erase(0, next);
        }
    }
    return output;
}

std::string merge_paths(const UriParts& base, std::string_view ref_path) {
    if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
    auto last = base.path.rfind('/');
    if (last == std::string_view::npos) return std::string(ref_path);
    return std::string(base.path.substr(0, last + 1)) + std::string(ref_path);
}

std::string recompose(const UriParts& p, const std::string& path) {
    std::string out;
    if (p.scheme) out.append(*p.scheme).push_back(':');
    if (p.authority) out.append("//").append(*p.authority);
    out.append(path);
    if (p.query) out.append("?").append(*p.query);
    if (p.fragment) out.append("#").append(*p.fragment);
    return out;
}

void append_escaped(std::string& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
}

}  // namespace

std::size_t hash_term(const Term& t) noexcept {
    std::size_t seed = static_cast<std::size_t>(t.kind);
    hash_combine(seed, std::hash<std::string>{}(t.value));
    if (t.kind == TermKind::Literal) {
        hash_combine(seed, std::hash<std::string>{}(t.datatype));
        hash_combine(seed, std::hash<std::string>{}(t.language));
    } else if (t.kind == TermKind::BlankNode) {
        hash_combine(seed, std::hash<std::string>{}(t.scope));
    }
    return seed;
}

std::size_t hash_triple(const Triple& t) noexcept {
    std::size_t seed = hash_term(t.subject);
    hash_combine(seed, hash_term(t.predicate));
    hash_combine(seed, hash_term(t.object));
    return seed;
}

std::string strip_fragment(std::string_view iri) {
    return std::string(iri.substr(0, iri.find('#')));
}

std::string_view fragment_of(std::string_view iri) {
    auto hash = iri.find('#');
    return hash == std::string_view::npos ? std::string_view{} : iri.substr(hash + 1);
}

bool is_absolute_iri(std::string_view iri) {
    return split_uri(iri).scheme.has_value();
}

std::string resolve_iri(std::string_view base, std::string_view reference) {
    UriParts r = split_uri(reference);
    UriParts b = split_uri(base);
    UriParts t;
    std::string path;
    if (r.scheme) {
        t = r;
        path = remove_dot_segments(r.path);
    } else {
        t.scheme = b.scheme;
        if (r.authority) {
            t.authority = r.authority;
            path = remove_dot_segments(r.path);
            t.query = r.query;
        } else {
            t.authority = b.authority;
            if (r.path.empty()) {
                path = std::string(b.path);
                t.query = r.query ? r.query : b.query;
            } else {
                if (r.path.starts_with('/')) {
                    path = remove_dot_segments(r.path);
                } else {
                    path = remove_dot_segments(merge_paths(b, r.path));
                }
                t.query = r.query;
            }
        }
        t.fragment = r.fragment;
    }
    return recompose(t, path);
}

std::set<std::string> iris_of(const Triple& triple) {
    std::set<std::string> out;
    for (const Term* t : {&triple.subject, &triple.predicate, &triple.object}) {
        if (t->is_iri()) out.insert(t->value);
    }
    return out;
}

std::string to_ntriples(const Term& term) {
    std::string out;
    switch (term.kind) {
        case TermKind::Iri:
            out.append("<").append(term.value).append(">");
            break;
        case TermKind::BlankNode: {
            // Scope hash keeps labels from different documents apart in output.
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(fnv1a(term.scope)));
            out.append("_:b").append(buf, 8).append("_");
            for (char c : term.value) {
                out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
            }
            break;
        }
        case TermKind::Literal:
            out.push_back('"');
            append_escaped(out, term.value);
            out.push_back('"');
            if (!term.language.empty()) {
                out.append("@").append(term.language);
            } else if (!term.datatype.empty() && term.datatype != ns::xsd_string) {
                out.append("^^<").append(term.datatype).append(">");
            }
            break;
    }
    return out;
}

std::string to_ntriples(const Triple& triple) {
    return to_ntriples(triple.subject) + " " + to_ntriples(triple.predicate) + " " +
           to_ntriples(triple.object) + " .";
}

std::string to_ntriples(const std::vector<Triple>& triples) {
    std::string out;
    for (const auto& t : triples) out.append(to_ntriples(t)).push_back('\n');
    return out;
}

bool starts_with_any(std::string_view iri, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes) {
        if (iri.starts_with(p)) return true;
    }
    return false;
}

}  // namespace ltqp
