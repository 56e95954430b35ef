#include "ltqp/bench/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ltqp::bench {

namespace {

const char* const kFirstNames[] = {"Ada", "Bram", "Chen", "Dara", "Emil", "Fatima", "Goran", "Hana",
                                   "Ivo", "Jun", "Kemal", "Lena", "Mateo", "Nia", "Omar", "Pia"};
const char* const kLastNames[] = {"Achterberg", "Bianchi", "Costa", "Dubois", "Eriksen", "Fischer",
                                  "Garcia", "Horvat", "Ito", "Jansen", "Kowalski", "Lindqvist"};
const char* const kCountries[] = {"China", "India", "Germany", "Brazil", "Kenya", "Peru"};
const char* const kTags[] = {"Music", "Football", "Chess", "Cooking", "Hiking", "Painting", "Physics",
                             "Poetry"};
constexpr std::size_t kMessageLocations = 3;
constexpr std::size_t kDays = 10;

/// Uniform-enough draws with a fixed algorithm, so output does not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

std::string two_digits(std::size_t v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02zu", v);
    return buf;
}

std::string timestamp(const std::string& day, std::size_t hour, std::size_t minute) {
    return day + "T" + two_digits(hour) + ":" + two_digits(minute) + ":00Z";
}

struct Person {
    std::string pod;    // path of the vault root, ends in '/'
    std::string webid;  // absolute
    std::string first_name;
    std::string last_name;
    std::string location;
    std::vector<std::size_t> knows;
    std::vector<std::size_t> likes;  // message indexes
    std::vector<std::string> like_dates;
};

Triple triple(Term s, const std::string& p, Term o) {
    return Triple{std::move(s), Term::iri(p), std::move(o)};
}

std::string rdf_type() { return std::string(ns::rdf_type); }
std::string in_ns(std::string_view ns, std::string_view local) { return std::string(ns) + std::string(local); }

std::string file_name_for(const Message& m, FragmentationStrategy strategy, const std::string& place_ns) {
    switch (strategy) {
        case FragmentationStrategy::Separate: return m.local;
        case FragmentationStrategy::Location: return m.location.substr(place_ns.size());
        case FragmentationStrategy::Time: return m.day;
        default: break;
    }
    throw std::invalid_argument("fragment_messages: unresolved strategy");
}

std::vector<Triple> container(const std::string& iri, const std::vector<std::string>& members, bool storage) {
    std::vector<Triple> out;
    Term self = Term::iri(iri);
    out.push_back(triple(self, rdf_type(), Term::iri(in_ns(ns::ldp, "Container"))));
    out.push_back(triple(self, rdf_type(), Term::iri(in_ns(ns::ldp, "BasicContainer"))));
    if (storage) out.push_back(triple(self, rdf_type(), Term::iri(in_ns(ns::pim, "Storage"))));
    for (const auto& m : members) out.push_back(triple(self, in_ns(ns::ldp, "contains"), Term::iri(m)));
    return out;
}

}  // namespace

std::string_view to_string(FragmentationStrategy s) {
    switch (s) {
        case FragmentationStrategy::Separate: return "separate";
        case FragmentationStrategy::Single: return "single";
        case FragmentationStrategy::Location: return "location";
        case FragmentationStrategy::Time: return "time";
        case FragmentationStrategy::Composite: return "composite";
    }
    return "?";
}

std::optional<FragmentationStrategy> parse_strategy(std::string_view text) {
    for (auto s : kAllStrategies) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

void SyntheticConfig::validate() const {
    if (multiplication_factor < 1) throw std::invalid_argument("multiplication factor must be >= 1");
    if (!is_absolute_iri(base_url) || !base_url.ends_with('/'))
        throw std::invalid_argument("base URL must be absolute and end in '/': " + base_url);
}

Vocabulary::Vocabulary(std::string_view base)
    : snvoc(std::string(base) + "www.ldbc.eu/ldbc_socialnet/1.0/vocabulary/"),
      tag_ns(std::string(base) + "www.ldbc.eu/ldbc_socialnet/1.0/tag/"),
      place_ns(std::string(base) + "dbpedia.org/resource/") {}

PrefixMap Vocabulary::prefixes() const {
    return {{"snvoc", snvoc},
            {"ldp", std::string(ns::ldp)},
            {"solid", std::string(ns::solid)},
            {"pim", std::string(ns::pim)},
            {"xsd", std::string(ns::xsd)}};
}

void rewrite_iris(std::vector<Triple>& triples, const std::map<std::string, std::string>& rewrites) {
    auto fix = [&](Term& t) {
        if (!t.is_iri()) return;
        if (auto it = rewrites.find(t.value); it != rewrites.end()) t.value = it->second;
    };
    for (auto& t : triples) {
        fix(t.subject);
        fix(t.predicate);
        fix(t.object);
    }
}

FragmentedMessages fragment_messages(const std::vector<Message>& messages,
                                     FragmentationStrategy strategy, const std::string& path,
                                     const std::string& base_url) {
    FragmentedMessages out;
    Vocabulary vocab(base_url);
    for (const auto& m : messages) {
        std::string file = strategy == FragmentationStrategy::Single
                               ? path
                               : path + file_name_for(m, strategy, vocab.place_ns);
        out.rewrites[m.iri] = base_url + file + "#" + m.local;
        auto& triples = out.files[file];
        triples.insert(triples.end(), m.triples.begin(), m.triples.end());
    }
    for (auto& [file, triples] : out.files) rewrite_iris(triples, out.rewrites);
    return out;
}

GeneratedEnvironment generate_environment(const SyntheticConfig& config) {
    config.validate();
    GeneratedEnvironment env;
    env.config = config;
    const std::string& base = config.base_url;
    Vocabulary v(base);
    Rng rng(config.random_seed);
    Rng strategy_rng(config.random_seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
    const std::size_t n = config.persons;

    std::vector<Person> persons(n);
    for (std::size_t i = 0; i < n; ++i) {
        Person& p = persons[i];
        p.pod = "pods/" + std::to_string(i) + "/";
        p.webid = base + p.pod + "card#me";
        p.first_name = kFirstNames[rng.below(std::size(kFirstNames))];
        p.last_name = kLastNames[rng.below(std::size(kLastNames))];
        p.location = v.place_ns + kCountries[rng.below(std::size(kCountries))];
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) others.push_back(j);
        }
        std::size_t k = std::min(config.knows_per_person, others.size());
        for (std::size_t j = 0; j < k; ++j) {
            std::swap(others[j], others[j + rng.below(others.size() - j)]);
            persons[i].knows.push_back(others[j]);
        }
        std::sort(persons[i].knows.begin(), persons[i].knows.end());
    }

    std::vector<Message> messages;
    std::size_t next_id = 1;
    auto message_base = [&](bool post, std::size_t creator) {
        Message m;
        std::size_t id = next_id++;
        m.is_post = post;
        m.local = (post ? "post" : "comment") + std::to_string(id);
        m.iri = base + "messages/" + m.local;
        m.creator = persons[creator].webid;
        m.day = "2010-01-" + two_digits(1 + rng.below(kDays));
        m.location = v.place_ns + kCountries[rng.below(kMessageLocations)];
        Term self = Term::iri(m.iri);
        std::string when = timestamp(m.day, rng.below(24), rng.below(60));
        m.triples.push_back(triple(self, rdf_type(), Term::iri(v(post ? "Post" : "Comment"))));
        m.triples.push_back(triple(self, v("id"), Term::literal(std::to_string(id), std::string(ns::xsd_integer))));
        m.triples.push_back(triple(self, v("hasCreator"), Term::iri(m.creator)));
        m.triples.push_back(triple(self, v("creationDate"),
                                   Term::literal(when, std::string(ns::xsd) + "dateTime")));
        m.triples.push_back(triple(self, v("isLocatedIn"), Term::iri(m.location)));
        return m;
    };

    std::vector<std::size_t> post_indexes;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t count = config.posts_per_person * config.multiplication_factor;
        for (std::size_t j = 0; j < count; ++j) {
            Message m = message_base(true, i);
            Term self = Term::iri(m.iri);
            std::size_t tags = 1 + rng.below(2);
            std::size_t first_tag = rng.below(std::size(kTags));
            std::string topic = kTags[first_tag];
            for (std::size_t t = 0; t < tags; ++t)
                m.triples.push_back(triple(self, v("hasTag"),
                                           Term::iri(v.tag_ns + kTags[(first_tag + 3 * t) % std::size(kTags)])));
            m.triples.push_back(triple(self, v("content"),
                                       Term::literal(persons[i].first_name + " writes about " + topic + " (" +
                                                     m.local + ")")));
            post_indexes.push_back(messages.size());
            messages.push_back(std::move(m));
        }
    }
    for (std::size_t pi : post_indexes) {
        std::size_t author = 0;
        while (persons[author].webid != messages[pi].creator) ++author;
        std::string post_iri = messages[pi].iri;
        std::string post_local = messages[pi].local;
        for (std::size_t c = 0; c < config.comments_per_post; ++c) {
            std::size_t commenter = author;
            if (n > 1) {
                commenter = rng.below(n - 1);
                if (commenter >= author) ++commenter;
            }
            Message m = message_base(false, commenter);
            Term self = Term::iri(m.iri);
            m.triples.push_back(triple(self, v("replyOf"), Term::iri(post_iri)));
            m.triples.push_back(triple(self, v("content"),
                                       Term::literal(persons[commenter].first_name + " replies to " + post_local)));
            messages.push_back(std::move(m));
        }
    }
    for (auto& p : persons) {
        if (messages.empty()) break;
        for (std::size_t j = 0; j < config.likes_per_person; ++j) {
            p.likes.push_back(rng.below(messages.size()));
            p.like_dates.push_back(timestamp("2010-01-" + two_digits(1 + rng.below(kDays)), rng.below(24),
                                             rng.below(60)));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        auto s = config.strategy;
        if (s == FragmentationStrategy::Composite) s = kAllStrategies[strategy_rng.below(4)];
        env.person_strategies.push_back(s);
    }

    std::map<std::string, std::vector<Triple>> docs;
    for (std::size_t i = 0; i < n; ++i) {
        const Person& p = persons[i];
        FragmentationStrategy strategy = env.person_strategies[i];
        bool single = strategy == FragmentationStrategy::Single;
        env.web_ids.push_back(p.webid);
        env.vault_roots.push_back(base + p.pod);

        std::vector<Message> posts, comments;
        for (const auto& m : messages) {
            if (m.creator != p.webid) continue;
            (m.is_post ? posts : comments).push_back(m);
        }

        std::vector<std::string> root_members = {base + p.pod + "card", base + p.pod + "publicTypeIndex"};
        std::vector<Triple> index;
        Term index_iri = Term::iri(base + p.pod + "publicTypeIndex");
        index.push_back(triple(index_iri, rdf_type(), Term::iri(in_ns(ns::solid, "TypeIndex"))));
        index.push_back(triple(index_iri, rdf_type(), Term::iri(in_ns(ns::solid, "ListedDocument"))));

        auto place = [&](const std::vector<Message>& group, const std::string& name, const std::string& cls) {
            if (group.empty()) return;
            std::string path = p.pod + name + (single ? "" : "/");
            auto fragmented = fragment_messages(group, strategy, path, base);
            env.message_rewrites.insert(fragmented.rewrites.begin(), fragmented.rewrites.end());
            std::vector<std::string> members;
            for (auto& [file, triples] : fragmented.files) {
                members.push_back(base + file);
                docs[file] = std::move(triples);
            }
            if (!single) docs[path] = container(base + path, members, false);
            root_members.push_back(base + path);
            Term reg = Term::iri(base + p.pod + "publicTypeIndex#" + name);
            index.push_back(triple(reg, rdf_type(), Term::iri(in_ns(ns::solid, "TypeRegistration"))));
            index.push_back(triple(reg, in_ns(ns::solid, "forClass"), Term::iri(v(cls))));
            index.push_back(triple(reg, in_ns(ns::solid, single ? "instance" : "instanceContainer"),
                                   Term::iri(base + path)));
        };
        place(posts, "posts", "Post");
        place(comments, "comments", "Comment");

        if (config.noise_documents_per_person > 0) {
            std::string noise_path = p.pod + "noise/";
            std::vector<std::string> members;
            std::string noise_ns = base + "vocab/noise#";
            for (std::size_t k = 0; k < config.noise_documents_per_person; ++k) {
                std::string file = noise_path + "n" + std::to_string(k);
                Term item = Term::iri(base + file + "#item");
                docs[file] = {triple(item, rdf_type(), Term::iri(noise_ns + "Setting")),
                              triple(item, noise_ns + "value", Term::literal("setting " + std::to_string(k)))};
                members.push_back(base + file);
            }
            docs[noise_path] = container(base + noise_path, members, false);
            root_members.push_back(base + noise_path);
        }

        docs[p.pod] = container(base + p.pod, root_members, true);
        docs[p.pod + "publicTypeIndex"] = std::move(index);

        std::vector<Triple> card;
        Term me = Term::iri(p.webid);
        card.push_back(triple(me, rdf_type(), Term::iri(v("Person"))));
        card.push_back(triple(me, v("id"), Term::literal(std::to_string(i), std::string(ns::xsd_integer))));
        card.push_back(triple(me, v("firstName"), Term::literal(p.first_name)));
        card.push_back(triple(me, v("lastName"), Term::literal(p.last_name)));
        card.push_back(triple(me, v("isLocatedIn"), Term::iri(p.location)));
        card.push_back(triple(me, in_ns(ns::pim, "storage"), Term::iri(base + p.pod)));
        card.push_back(triple(me, in_ns(ns::solid, "publicTypeIndex"), Term::iri(base + p.pod + "publicTypeIndex")));
        for (std::size_t k = 0; k < p.knows.size(); ++k) {
            Term b = Term::blank("knows" + std::to_string(k), "");
            card.push_back(triple(me, v("knows"), b));
            card.push_back(triple(b, v("hasPerson"), Term::iri(persons[p.knows[k]].webid)));
        }
        for (std::size_t k = 0; k < p.likes.size(); ++k) {
            const Message& m = messages[p.likes[k]];
            Term b = Term::blank("like" + std::to_string(k), "");
            card.push_back(triple(me, v("likes"), b));
            card.push_back(triple(b, v(m.is_post ? "hasPost" : "hasComment"), Term::iri(m.iri)));
            card.push_back(triple(b, v("creationDate"),
                                  Term::literal(p.like_dates[k], std::string(ns::xsd) + "dateTime")));
        }
        docs[p.pod + "card"] = std::move(card);
    }

    PrefixMap prefixes = v.prefixes();
    for (auto& [path, triples] : docs) {
        rewrite_iris(triples, env.message_rewrites);
        env.texts[path] = write_turtle(triples, prefixes);
    }
    reparse(env);
    return env;
}

void reparse(GeneratedEnvironment& env) {
    env.documents.clear();
    std::unordered_set<Triple> seen;
    env.union_graph.clear();
    for (const auto& [path, text] : env.texts) {
        auto doc = parse_turtle(text, env.url(path));
        for (const auto& t : doc.triples) {
            if (seen.insert(t).second) env.union_graph.push_back(t);
        }
        env.documents.emplace(path, std::move(doc));
    }
}

}  // namespace ltqp::bench
