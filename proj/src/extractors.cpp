#include "ltqp/extractors.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace ltqp {

namespace {

const std::string kPimStorage = std::string(ns::pim) + "storage";
const std::string kLdpContains = std::string(ns::ldp) + "contains";
const std::string kPublicTypeIndex = std::string(ns::solid) + "publicTypeIndex";
const std::string kPrivateTypeIndex = std::string(ns::solid) + "privateTypeIndex";
const std::string kTypeRegistration = std::string(ns::solid) + "TypeRegistration";
const std::string kForClass = std::string(ns::solid) + "forClass";
const std::string kInstance = std::string(ns::solid) + "instance";
const std::string kInstanceContainer = std::string(ns::solid) + "instanceContainer";

class LinkSet {
public:
    LinkSet(const ParsedDocument& doc, std::string_view label, int priority)
        : source_(doc.url), label_(label), priority_(priority) {}

    void add(const std::string& iri) { targets_.insert(iri); }

    std::vector<Link> take() {
        std::vector<Link> out;
        out.reserve(targets_.size());
        for (const auto& t : targets_) out.push_back(Link{t, source_, std::string(label_), priority_});
        return out;
    }

private:
    std::string source_;
    std::string_view label_;
    int priority_;
    std::set<std::string> targets_;
};

const std::string& document_iri(const ParsedDocument& doc, const ExtractionContext& ctx) {
    return ctx.requested_iri.empty() ? doc.url : ctx.requested_iri;
}

bool is(const Term& t, const std::string& iri) {
    return t.is_iri() && t.value == iri;
}

/// Objects of <subject predicate ?o> in doc.
void objects_of(const ParsedDocument& doc, const std::string& subject, const std::string& predicate,
                LinkSet& out) {
    for (const auto& t : doc.triples) {
        if (is(t.subject, subject) && is(t.predicate, predicate) && t.object.is_iri())
            out.add(t.object.value);
    }
}

void add_followable(const Triple& t, const ExtractionContext& ctx, LinkSet& out) {
    for (const auto& iri : iris_of(t)) {
        if (!starts_with_any(iri, ctx.excluded_namespaces)) out.add(iri);
    }
}

}  // namespace

std::vector<std::string> default_excluded_namespaces() {
    return {std::string(ns::rdf), std::string(ns::rdfs), std::string(ns::xsd),
            std::string(ns::ldp), std::string(ns::solid), std::string(ns::pim)};
}

std::vector<Link> extract_cnone(const ParsedDocument&, const ExtractionContext&) {
    return {};
}

std::vector<Link> extract_call(const ParsedDocument& doc, const ExtractionContext& ctx) {
    LinkSet out(doc, extractor_label::call, 1);
    for (const auto& t : doc.triples) add_followable(t, ctx, out);
    return out.take();
}

std::vector<Link> extract_cmatch(const ParsedDocument& doc, const ExtractionContext& ctx) {
    LinkSet out(doc, extractor_label::cmatch, 1);
    if (!ctx.bgp) return out.take();
    for (const auto& t : doc.triples) {
        for (const auto& pattern : ctx.bgp->patterns) {
            if (match_pattern(t, pattern)) {
                add_followable(t, ctx, out);
                break;
            }
        }
    }
    return out.take();
}

std::vector<Link> extract_solid_vault(const ParsedDocument& doc, const ExtractionContext& ctx) {
    LinkSet out(doc, extractor_label::solid_vault, 1);
    objects_of(doc, document_iri(doc, ctx), kPimStorage, out);
    return out.take();
}

std::vector<Link> extract_ldp_container(const ParsedDocument& doc, const ExtractionContext& ctx) {
    LinkSet out(doc, extractor_label::ldp_container, 1);
    objects_of(doc, document_iri(doc, ctx), kLdpContains, out);
    return out.take();
}

std::vector<Link> extract_type_index(const ParsedDocument& doc, const ExtractionContext& ctx) {
    LinkSet out(doc, extractor_label::type_index, 0);

    // WebID role: links to the type indexes themselves.
    const std::string& self = document_iri(doc, ctx);
    objects_of(doc, self, kPublicTypeIndex, out);
    objects_of(doc, self, kPrivateTypeIndex, out);

    // Type-index role: registrations whose class passes phi.
    std::map<Term, std::vector<std::string>> classes;
    std::set<Term> registrations;
    for (const auto& t : doc.triples) {
        if (is(t.predicate, std::string(ns::rdf_type)) && is(t.object, kTypeRegistration))
            registrations.insert(t.subject);
        if (is(t.predicate, kForClass) && t.object.is_iri()) classes[t.subject].push_back(t.object.value);
    }
    if (registrations.empty()) return out.take();

    static const Bgp kEmpty;
    const Bgp& bgp = ctx.bgp ? *ctx.bgp : kEmpty;
    std::set<Term> accepted;
    for (const auto& r : registrations) {
        auto it = classes.find(r);
        if (it == classes.end()) continue;
        for (const auto& c : it->second) {
            if (ctx.phi == PhiMode::All || phi_query_class(bgp, c)) {
                accepted.insert(r);
                break;
            }
        }
    }
    for (const auto& t : doc.triples) {
        if (accepted.contains(t.subject) && t.object.is_iri() &&
            (is(t.predicate, kInstance) || is(t.predicate, kInstanceContainer)))
            out.add(t.object.value);
    }
    return out.take();
}

bool phi_query_class(const Bgp& bgp, std::string_view cls) {
    auto qc = query_classes(bgp);
    return qc.has_untyped_subject || qc.classes.contains(std::string(cls));
}

PhiMode phi_mode_for(DiscoveryMode discovery) {
    return discovery == DiscoveryMode::IdxFilt || discovery == DiscoveryMode::LdpIdxFilt
               ? PhiMode::QueryClass
               : PhiMode::All;
}

std::vector<LinkExtractor> make_extractors(Reachability reachability, DiscoveryMode discovery) {
    std::vector<LinkExtractor> out;
    switch (reachability) {
        case Reachability::CNone: break;
        case Reachability::CMatch: out.push_back({std::string(extractor_label::cmatch), extract_cmatch}); break;
        case Reachability::CAll: out.push_back({std::string(extractor_label::call), extract_call}); break;
    }
    bool vault = discovery == DiscoveryMode::Ldp || discovery == DiscoveryMode::LdpIdx ||
                 discovery == DiscoveryMode::LdpIdxFilt;
    bool index = discovery != DiscoveryMode::Base && discovery != DiscoveryMode::Ldp;
    if (vault) out.push_back({std::string(extractor_label::solid_vault), extract_solid_vault});
    if (vault || index)
        out.push_back({std::string(extractor_label::ldp_container), extract_ldp_container});
    if (index) out.push_back({std::string(extractor_label::type_index), extract_type_index});
    return out;
}

std::string_view to_string(Reachability r) {
    switch (r) {
        case Reachability::CNone: return "cnone";
        case Reachability::CMatch: return "cmatch";
        case Reachability::CAll: return "call";
    }
    return "?";
}

std::string_view to_string(DiscoveryMode d) {
    switch (d) {
        case DiscoveryMode::Base: return "base";
        case DiscoveryMode::Ldp: return "ldp";
        case DiscoveryMode::Idx: return "idx";
        case DiscoveryMode::IdxFilt: return "idx-filt";
        case DiscoveryMode::LdpIdx: return "ldp-idx";
        case DiscoveryMode::LdpIdxFilt: return "ldp-idx-filt";
    }
    return "?";
}

std::optional<Reachability> parse_reachability(std::string_view text) {
    for (auto r : kAllReachabilities) {
        if (to_string(r) == text) return r;
    }
    return std::nullopt;
}

std::optional<DiscoveryMode> parse_discovery(std::string_view text) {
    for (auto d : kAllDiscoveryModes) {
        if (to_string(d) == text) return d;
    }
    if (text == "none") return DiscoveryMode::Base;
    return std::nullopt;
}

}  // namespace ltqp
