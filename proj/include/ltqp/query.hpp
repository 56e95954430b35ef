#pragma once
// Query dialect: SELECT [DISTINCT] over one basic graph pattern, with `|`
// predicate alternation, `[ ... ]` blank-node property lists and LIMIT.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ltqp/errors.hpp"
#include "ltqp/rdf.hpp"

namespace ltqp {

struct Variable {
    std::string name;  // without leading '?'

    friend bool operator==(const Variable&, const Variable&) = default;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Alternatives in textual order; a single entry is a plain predicate.
struct PredicatePath {
    std::vector<std::string> alternatives;

    bool contains(std::string_view iri) const;
    friend bool operator==(const PredicatePath&, const PredicatePath&) = default;
};

using NodeSlot = std::variant<Variable, Term>;
using PredicateSlot = std::variant<Variable, PredicatePath>;

struct TriplePattern {
    NodeSlot subject;
    PredicateSlot predicate;
    NodeSlot object;

    std::vector<std::string> variables() const;  // distinct, in s/p/o order
    bool is_type_pattern() const;                // predicate is exactly rdf:type
    friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct Bgp {
    std::vector<TriplePattern> patterns;

    std::set<std::string> variables() const;
    bool empty() const { return patterns.empty(); }
    friend bool operator==(const Bgp&, const Bgp&) = default;
};

struct Query {
    std::vector<std::string> projection;
    bool distinct = false;
    std::optional<std::size_t> limit;
    Bgp bgp;
};

/// Partial binding Variable -> Term, keyed by variable name.
using SolutionMapping = std::map<std::string, Term>;

/// Names of variables introduced for `[ ... ]` and `_:x` in queries start with
/// this prefix, which no user variable can carry.
inline constexpr std::string_view kBlankVariablePrefix = ".b";

bool is_blank_variable(std::string_view name);

/// Throws SyntaxError for malformed text and unknown prefixes, QueryError when
/// a projected variable does not occur in the pattern.
Query parse_query(std::string_view text);

/// Text accepted by parse_query; desugared blank variables are written as `_:` labels.
std::string serialize_query(const Query& query);

std::optional<SolutionMapping> match_pattern(const Triple& triple, const TriplePattern& pattern);
TriplePattern apply_mapping(const SolutionMapping& mapping, const TriplePattern& pattern);

struct QueryClasses {
    std::set<std::string> classes;
    bool has_untyped_subject = false;
};

QueryClasses query_classes(const Bgp& bgp);

/// IRIs in subject/object positions, fragment-stripped. Predicates are excluded.
std::set<std::string> query_seed_iris(const Query& query);

SolutionMapping project(const SolutionMapping& mapping, const std::vector<std::string>& projection);

std::string to_string(const TriplePattern& pattern);

}  // namespace ltqp
