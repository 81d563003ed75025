#include "taxolint/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "taxolint/errors.hpp"

namespace taxolint {

namespace {

struct Clause {
    std::string functor;
    std::vector<std::string> args;
};

// Character-level parse of one Prolog fact line. Quoted atoms use doubled
// single quotes as the escape for a literal quote.
std::optional<Clause> parse_clause(const std::string& line, std::size_t line_no) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i; };
    skip_ws();
    if (i >= line.size() || line[i] == '%') return std::nullopt;

    Clause clause;
    while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        clause.functor += line[i++];
    if (clause.functor.empty() || i >= line.size() || line[i] != '(')
        throw ParseError(line_no, "malformed clause: " + line);
    ++i;

    while (true) {
        skip_ws();
        if (i >= line.size()) throw ParseError(line_no, "unterminated clause: " + line);
        std::string arg;
        if (line[i] == '\'') {
            ++i;
            while (true) {
                if (i >= line.size()) throw ParseError(line_no, "unterminated quoted atom: " + line);
                if (line[i] == '\'') {
                    if (i + 1 < line.size() && line[i + 1] == '\'') {
                        arg += '\'';
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    arg += line[i++];
                }
            }
        } else {
            while (i < line.size() && line[i] != ',' && line[i] != ')')
                arg += line[i++];
            while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.back())))
                arg.pop_back();
        }
        clause.args.push_back(std::move(arg));
        skip_ws();
        if (i < line.size() && line[i] == ',') {
            ++i;
            continue;
        }
        if (i < line.size() && line[i] == ')') {
            ++i;
            break;
        }
        throw ParseError(line_no, "expected ',' or ')': " + line);
    }
    skip_ws();
    if (i >= line.size() || line[i] != '.')
        throw ParseError(line_no, "missing terminating '.': " + line);
    return clause;
}

std::uint64_t parse_id(const std::string& text, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "bad numeric id '" + text + "'");
    }
}

void for_each_clause(std::istream& in, const std::string& functor,
                     const std::function<void(const Clause&, std::size_t)>& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto clause = parse_clause(line, line_no);
        if (!clause) continue;
        if (clause->functor != functor) {
            // Combined files are allowed; other known functors are skipped.
            if (clause->functor == "s" || clause->functor == "hyp" || clause->functor == "g")
                continue;
            throw ParseError(line_no, "unexpected functor '" + clause->functor + "'");
        }
        fn(*clause, line_no);
    }
}

std::string capitalize_words(const std::string& lemma) {
    std::string out;
    out.reserve(lemma.size());
    bool word_start = true;
    for (char ch : lemma) {
        if (ch == ' ') {
            out += '_';
            word_start = true;
        } else {
            out += word_start ? static_cast<char>(std::toupper(static_cast<unsigned char>(ch))) : ch;
            word_start = false;
        }
    }
    return out;
}

}  // namespace

PrologParse parse_prolog_db(std::istream& synsets, std::istream& hypernyms,
                            std::istream& glosses) {
    PrologParse out;
    std::map<std::uint64_t, std::size_t> index;  // synset id -> record slot
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::string>>> words;

    for_each_clause(synsets, "s", [&](const Clause& c, std::size_t line_no) {
        if (c.args.size() != 6) throw ParseError(line_no, "s/6 clause needs 6 arguments");
        if (c.args[3] != "n") return;  // noun records only
        const auto id = parse_id(c.args[0], line_no);
        const auto w_num = parse_id(c.args[1], line_no);
        if (!index.count(id)) {
            index.emplace(id, out.records.size());
            out.records.push_back(SynsetRecord{id, {}, "", ""});
        }
        words[id].emplace_back(w_num, c.args[2]);
    });
    for (auto& [id, ws] : words) {
        std::stable_sort(ws.begin(), ws.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& rec = out.records[index[id]];
        for (auto& [w_num, word] : ws) rec.lemmas.push_back(std::move(word));
    }

    for_each_clause(glosses, "g", [&](const Clause& c, std::size_t line_no) {
        if (c.args.size() != 2) throw ParseError(line_no, "g/2 clause needs 2 arguments");
        const auto id = parse_id(c.args[0], line_no);
        auto it = index.find(id);
        if (it != index.end()) out.records[it->second].gloss = c.args[1];
    });

    for_each_clause(hypernyms, "hyp", [&](const Clause& c, std::size_t line_no) {
        if (c.args.size() != 2) throw ParseError(line_no, "hyp/2 clause needs 2 arguments");
        const auto child = parse_id(c.args[0], line_no);
        const auto parent = parse_id(c.args[1], line_no);
        if (!index.count(child) || !index.count(parent)) {
            out.warnings.push_back("dangling hyp pair " + std::to_string(child) + " -> " +
                                   std::to_string(parent));
            return;
        }
        out.hypernym_pairs.emplace_back(child, parent);
    });
    return out;
}

NameMap normalize_names(const std::vector<SynsetRecord>& records) {
    NameMap out;
    // Global polysemy and source-order sense index per lemma.
    std::map<std::string, std::size_t> lemma_synsets;
    for (const auto& rec : records)
        for (const auto& lemma : rec.lemmas) ++lemma_synsets[lemma];

    std::map<std::string, std::size_t> sense_counter;
    std::set<std::string> used;
    for (const auto& rec : records) {
        for (const auto& lemma : rec.lemmas) ++sense_counter[lemma];
        std::string name;
        if (rec.lemmas.size() > 1) {
            for (const auto& lemma : rec.lemmas) {
                if (!name.empty()) name += '$';
                name += capitalize_words(lemma);
            }
        } else {
            const auto& lemma = rec.lemmas.front();
            name = capitalize_words(lemma);
            if (lemma_synsets[lemma] >= 2)
                name += "_" + std::to_string(sense_counter[lemma]);
        }
        if (used.count(name)) {
            std::size_t k = 2;
            std::string candidate;
            do {
                candidate = name + "_" + std::to_string(k++);
            } while (used.count(candidate));
            out.warnings.push_back("name collision: " + name + " -> " + candidate +
                                   " (synset " + std::to_string(rec.synset_id) + ")");
            name = candidate;
        }
        used.insert(name);
        out.names[rec.synset_id] = name;
    }
    return out;
}

BuildResult build_taxonomy(const std::vector<SynsetRecord>& records,
                           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
                           const NameMap& name_map) {
    BuildResult out;
    std::map<std::uint64_t, ConceptId> ids;
    for (const auto& rec : records) {
        auto it = name_map.names.find(rec.synset_id);
        if (it == name_map.names.end())
            throw Error("name map does not cover synset " + std::to_string(rec.synset_id));
        ids[rec.synset_id] = out.taxonomy.add_concept(it->second, rec.lemmas, rec.gloss,
                                                      rec.topic, std::to_string(rec.synset_id));
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const auto& [child, parent] : edges) {
        if (!seen.insert({child, parent}).second) continue;
        auto c = ids.find(child);
        auto p = ids.find(parent);
        if (c == ids.end() || p == ids.end()) {
            out.warnings.push_back("hypernym pair references unknown synset " +
                                   std::to_string(c == ids.end() ? child : parent));
            continue;
        }
        try {
            out.taxonomy.add_edge(c->second, p->second, EdgeKind::IsA);
        } catch (const CycleError& e) {
            out.warnings.push_back(std::string("dropped cycle-creating pair: ") + e.what());
        }
    }
    std::vector<std::vector<std::string>> lemma_lists;
    lemma_lists.reserve(records.size());
    for (const auto& rec : records) lemma_lists.push_back(rec.lemmas);
    out.stats = compute_stats(lemma_lists);
    return out;
}

CorpusStats compute_stats(const std::vector<std::vector<std::string>>& lemma_lists) {
    CorpusStats stats;
    stats.noun_synsets = lemma_lists.size();
    std::map<std::string, std::size_t> occurrences;
    for (const auto& lemmas : lemma_lists) {
        stats.noun_entries += lemmas.size();
        std::set<std::string> unique(lemmas.begin(), lemmas.end());
        for (const auto& lemma : unique) ++occurrences[lemma];
    }
    stats.nouns = occurrences.size();
    for (const auto& [lemma, count] : occurrences) {
        if (count == 1) ++stats.monosemous_nouns;
        else ++stats.polysemous_nouns;
        if (lemma.find(' ') == std::string::npos) ++stats.one_word_nouns;
        else ++stats.noun_phrases;
    }
    return stats;
}

CorpusStats stats_of(const Taxonomy& taxonomy) {
    std::vector<std::vector<std::string>> lemma_lists;
    lemma_lists.reserve(taxonomy.size());
    for (ConceptId id = 0; id < taxonomy.size(); ++id)
        lemma_lists.push_back(taxonomy.concept_of(id).lemmas);
    return compute_stats(lemma_lists);
}

Taxonomy read_native(std::istream& in) {
    Taxonomy taxonomy;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }

        try {
            if (fields[0] == "C") {
                if (fields.size() < 3) throw Error("concept line needs name and lemmas");
                std::vector<std::string> lemmas;
                std::istringstream ls(fields[2]);
                std::string lemma;
                while (std::getline(ls, lemma, '|'))
                    if (!lemma.empty()) lemmas.push_back(lemma);
                taxonomy.add_concept(fields[1], lemmas,
                                     fields.size() > 3 ? fields[3] : "",
                                     fields.size() > 4 ? fields[4] : "",
                                     fields.size() > 5 ? fields[5] : "");
            } else if (fields[0] == "E") {
                if (fields.size() != 4) throw Error("edge line needs child, parent, kind");
                EdgeKind kind;
                if (fields[3] == "ISA") kind = EdgeKind::IsA;
                else if (fields[3] == "INST") kind = EdgeKind::InstanceOf;
                else throw Error("unknown edge kind '" + fields[3] + "'");
                taxonomy.add_edge(taxonomy.require(fields[1]), taxonomy.require(fields[2]), kind);
            } else {
                throw Error("unknown record tag '" + fields[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return taxonomy;
}

void write_native(const Taxonomy& taxonomy, std::ostream& out) {
    auto sanitize = [](std::string s) {
        for (char& ch : s)
            if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
        return s;
    };
    for (ConceptId id : taxonomy.all_sorted()) {
        const Concept& c = taxonomy.concept_of(id);
        std::string lemmas;
        for (const auto& lemma : c.lemmas) {
            if (!lemmas.empty()) lemmas += '|';
            lemmas += lemma;
        }
        out << "C\t" << c.name << '\t' << sanitize(lemmas) << '\t' << sanitize(c.gloss)
            << '\t' << sanitize(c.topic) << '\t' << sanitize(c.external_id) << '\n';
    }
    std::vector<Edge> edges = taxonomy.edges();
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        const auto key = [&](const Edge& e) {
            return std::tuple(taxonomy.concept_of(e.child).name, taxonomy.concept_of(e.parent).name,
                              static_cast<int>(e.kind));
        };
        return key(a) < key(b);
    });
    for (const Edge& e : edges) {
        out << "E\t" << taxonomy.concept_of(e.child).name << '\t'
            << taxonomy.concept_of(e.parent).name << '\t'
            << (e.kind == EdgeKind::IsA ? "ISA" : "INST") << '\n';
    }
}

}  // namespace taxolint
