#pragma once
// RDF data model: terms, triples and parsed documents.
//
// Blank nodes carry the URL of the document they were minted in (`scope`),
// so equal labels from two different documents never compare equal.

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ltqp {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view ldp = "http://www.w3.org/ns/ldp#";
inline constexpr std::string_view pim = "http://www.w3.org/ns/pim/space#";
inline constexpr std::string_view solid = "http://www.w3.org/ns/solid/terms#";
inline constexpr std::string_view foaf = "http://xmlns.com/foaf/0.1/";

inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace ns

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;     // IRI, blank-node label, or literal lexical form
    std::string datatype;  // literals only
    std::string language;  // literals only
    std::string scope;     // blank nodes only

    static Term iri(std::string value);
    static Term blank(std::string label, std::string scope);
    static Term literal(std::string lexical, std::string datatype = std::string(ns::xsd_string));
    static Term lang_literal(std::string lexical, std::string language);

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_blank() const { return kind == TermKind::BlankNode; }
    bool is_literal() const { return kind == TermKind::Literal; }

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct ParsedDocument {
    std::string url;  // fragment-stripped
    std::vector<Triple> triples;
};

std::size_t hash_term(const Term& t) noexcept;
std::size_t hash_triple(const Triple& t) noexcept;

/// Removes a `#fragment` suffix, if any.
std::string strip_fragment(std::string_view iri);

/// Returns the fragment (without '#'), or empty.
std::string_view fragment_of(std::string_view iri);

bool is_absolute_iri(std::string_view iri);

/// RFC 3986 section 5.2 reference resolution.
std::string resolve_iri(std::string_view base, std::string_view reference);

/// Only IRIs count as links; blank nodes and literals are ignored.
std::set<std::string> iris_of(const Triple& triple);

std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);
std::string to_ntriples(const std::vector<Triple>& triples);

bool starts_with_any(std::string_view iri, const std::vector<std::string>& prefixes);

}  // namespace ltqp

template <>
struct std::hash<ltqp::Term> {
    std::size_t operator()(const ltqp::Term& t) const noexcept { return ltqp::hash_term(t); }
};

template <>
struct std::hash<ltqp::Triple> {
    std::size_t operator()(const ltqp::Triple& t) const noexcept { return ltqp::hash_triple(t); }
};
