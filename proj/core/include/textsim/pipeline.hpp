#ifndef TEXTSIM_PIPELINE_HPP
#define TEXTSIM_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace textsim {

/// Text unit a representation was built from.
enum class Unit { Character, Word };

/// Word-splitting rule. Only one rule is defined: maximal runs of Unicode
/// letters or digits are tokens, everything else separates.
enum class TokenRule { LetterDigitRuns };

/// Immutable preprocessing settings. Build one, then share it freely;
/// all pipeline functions are pure in (text, config).
struct PipelineConfig {
    bool lowercase = true;
    std::set<std::string> stopwords;  // lowercase forms when lowercase=true
    bool stem = false;                // light German suffix stripping
    TokenRule token_rule = TokenRule::LetterDigitRuns;
    Unit unit = Unit::Word;

    /// Empty stopword list, no stemming. Lowercases.
    static PipelineConfig bare();

    /// The shipped German stopword list, no stemming.
    static PipelineConfig default_german();

    /// FNV-1a fingerprint over every field including the stopword list.
    std::uint64_t fingerprint() const;
};

/// One text as an ordered list of phrases; a phrase's index is its
/// 0-based position. Gold alignment files refer to these indices.
struct PhraseDocument {
    std::string id;
    std::vector<std::string> phrases;

    std::size_t size() const { return phrases.size(); }
};

/// Bag of terms with raw frequency weights. Zero weights are never stored,
/// so dimension() is the number of distinct terms.
struct TermVector {
    std::map<std::string, double> weights;

    std::size_t dimension() const { return weights.size(); }
    bool empty() const { return weights.empty(); }
    double total_weight() const;
};

/// Set of distinct normalized terms.
struct TermSet {
    std::set<std::string> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
};

/// Multiset of n-grams. A gram is the ordered list of its elements
/// (tokens for word grams, single code points for character grams).
struct NGramMultiset {
    using Gram = std::vector<std::string>;

    std::map<Gram, int> grams;
    int n = 1;
    int skip = 0;  // max skipped positions between consecutive elements
    Unit unit = Unit::Word;

    bool empty() const { return grams.empty(); }
    /// Total gram count including multiplicities.
    long total() const;
    bool same_config(const NGramMultiset& other) const {
        return n == other.n && skip == other.skip && unit == other.unit;
    }
};

enum class SegmentMode { Line, Sentence };

/// Split raw text into phrases. Line mode keeps nonempty trimmed lines in
/// order (CRLF accepted); sentence mode splits after `.?!` followed by
/// whitespace, except after a known German abbreviation or an initial.
/// Throws EmptyDocumentError when nothing remains.
PhraseDocument segment_phrases(std::string_view raw_text, SegmentMode mode,
                               std::string doc_id = "");

/// Tokenize one phrase and normalize per config: split on non-letter/digit
/// boundaries, lowercase, drop stopwords, then stem. May return empty.
std::vector<std::string> tokenize_normalize(std::string_view phrase,
                                            const PipelineConfig& config);

/// Term-frequency vector of a token sequence.
TermVector term_vector(const std::vector<std::string>& tokens);

/// Distinct terms of a token sequence.
TermSet term_set(const std::vector<std::string>& tokens);

/// All k-skip-n-grams of a sequence: every n-gram whose consecutive
/// elements are at most `skip` positions apart in the input. skip=0 gives
/// the contiguous n-grams. n > |seq| yields an empty multiset.
NGramMultiset extract_ngrams(const std::vector<std::string>& seq, int n, int skip,
                             Unit unit = Unit::Word);

// --- UTF-8 helpers used across the library ---

/// Split a UTF-8 string into single-code-point strings. Invalid bytes are
/// kept as single-byte units rather than rejected.
std::vector<std::string> utf8_codepoints(std::string_view text);

/// Lowercase ASCII, Latin-1 and Latin Extended-A letters; other code
/// points pass through.
std::string utf8_lowercase(std::string_view text);

/// The stopword list shipped with the library (see data/stopwords_de.txt).
const std::set<std::string>& german_stopwords();

/// FNV-1a 64-bit hash; used for config and data fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace textsim

#endif  // TEXTSIM_PIPELINE_HPP
