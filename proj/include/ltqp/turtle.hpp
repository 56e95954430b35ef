#pragma once
// Turtle subset: @prefix/@base (and SPARQL-style PREFIX/BASE), `a`, `;` and `,`
// lists, `[ ... ]` anonymous blank nodes, `_:` labels, relative IRI refs,
// single-line strings with language tags or datatypes, integers, decimals,
// booleans and comments. No collections, long strings or exponents.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ltqp/errors.hpp"
#include "ltqp/rdf.hpp"

namespace ltqp {

/// Parses `text` as a document located at `base` (must be absolute).
/// Throws SyntaxError with line/column on malformed input or undeclared prefixes.
ParsedDocument parse_turtle(std::string_view text, std::string_view base);

using PrefixMap = std::vector<std::pair<std::string, std::string>>;

/// Subject-grouped Turtle; IRIs are abbreviated with `prefixes` when the local
/// part is a plain name. Output order follows first appearance of each subject.
std::string write_turtle(const std::vector<Triple>& triples, const PrefixMap& prefixes = {});

}  // namespace ltqp
