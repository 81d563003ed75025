#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "taxolint/taxonomy.hpp"

namespace taxolint {

struct SynsetRecord {
    std::uint64_t synset_id = 0;
    std::vector<std::string> lemmas;  // in word-number order
    std::string gloss;
    std::string topic;
};

struct CorpusStats {
    std::size_t noun_entries = 0;      // (synset, lemma) pairs
    std::optional<std::size_t> equivalence_classes;  // only with a quasi-synonym source
    std::size_t noun_synsets = 0;
    std::size_t nouns = 0;             // distinct lemmas
    std::size_t monosemous_nouns = 0;
    std::size_t polysemous_nouns = 0;
    std::size_t one_word_nouns = 0;
    std::size_t noun_phrases = 0;
};

struct PrologParse {
    std::vector<SynsetRecord> records;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> hypernym_pairs;  // (child, parent)
    std::vector<std::string> warnings;  // dangling hyp pairs etc.
};

// Parse WordNet Prolog-clause streams: `s/6` synset-word entries, `hyp/2`
// hypernym pairs, `g/2` glosses. Only noun records (type marker 'n') are
// retained. Each stream may contain clauses of the other functors; those are
// skipped, so one combined file can be fed to all three parameters.
PrologParse parse_prolog_db(std::istream& synsets, std::istream& hypernyms,
                            std::istream& glosses);

struct NameMap {
    std::map<std::uint64_t, std::string> names;
    std::vector<std::string> warnings;  // post-rule collision resolutions
};

// Unique concept names: capitalized words joined by underscores within a
// lemma, multiple lemmas joined by '$', polysemous single lemmas suffixed
// with their 1-based source-order sense index.
NameMap normalize_names(const std::vector<SynsetRecord>& records);

struct BuildResult {
    Taxonomy taxonomy;
    CorpusStats stats;
    std::vector<std::string> warnings;  // dropped cycle-creating pairs etc.
};

BuildResult build_taxonomy(const std::vector<SynsetRecord>& records,
                           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
                           const NameMap& name_map);

// Stats over raw lemma lists (one list per synset); shared by the Prolog and
// native ingestion paths.
CorpusStats compute_stats(const std::vector<std::vector<std::string>>& lemma_lists);
CorpusStats stats_of(const Taxonomy& taxonomy);

// Native tabular format: `C name lemma1|lemma2 gloss topic external_id` and
// `E child parent ISA|INST`, tab-separated, `#` comments.
Taxonomy read_native(std::istream& in);
void write_native(const Taxonomy& taxonomy, std::ostream& out);

}  // namespace taxolint
