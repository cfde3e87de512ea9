#ifndef TEXTSIM_ALIGNMENT_HPP
#define TEXTSIM_ALIGNMENT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textsim/pipeline.hpp"

namespace textsim {

/// Gold mapping from each source phrase to the target phrases its content
/// went to. An empty target list records a removed phrase; target phrases
/// referenced by no source were added.
struct AlignmentMap {
    /// targets_by_source[i] holds the target indices of source phrase i,
    /// ascending and without duplicates.
    std::vector<std::vector<int>> targets_by_source;
    int target_count = 0;

    int source_count() const { return static_cast<int>(targets_by_source.size()); }

    /// All (source, target) pairs, in source order.
    std::vector<std::pair<int, int>> links() const;

    bool operator==(const AlignmentMap&) const = default;
};

/// Structural reading of a map: which phrases were deleted, merged, split,
/// exchanged or added. Categories are not exclusive; a phrase pair showing
/// several patterns is reported under all of them.
struct LinkClassification {
    std::set<int> deleted;
    std::map<int, std::set<int>> merges;  // target <- the >=2 sources feeding it
    std::map<int, std::set<int>> splits;  // source -> its >=2 targets
    std::set<std::pair<int, int>> exchanges;  // source pairs sharing >=2 targets
    std::set<int> added;
};

/// Structural paraphrase rule set to validate against.
enum class RuleLevel { Basic, Complex };

/// The budgets each level enforces.
struct RuleLimits {
    int max_additions;
    int max_deletions;
    bool combined_budget;    // additions + deletions share one budget
    bool exchanges_allowed;
};

RuleLimits limits_for(RuleLevel level);

enum class ViolationKind {
    UnalteredPhrase,
    AdditionBudget,
    DeletionBudget,
    ExchangeForbidden,
};

struct Violation {
    ViolationKind kind;
    std::string message;
    int source = -1;  // phrase indices where applicable
    int target = -1;
};

/// One parsed mapping line. Targets are normalized to ascending order
/// with duplicates collapsed.
struct MapEntry {
    int source;
    std::vector<int> targets;
    int line_no;
};

/// Line-level grammar: `INT WS* ':' WS* (INT (WS* ',' WS* INT)*)?`, with
/// `#` comments and blank lines ignored. Accepts fragments (not every
/// source present); parse_alignment adds the coverage checks on top.
/// Throws MapSyntaxError, IndexOutOfRangeError, DuplicateSourceError.
std::vector<MapEntry> parse_map_lines(std::string_view text);

/// Canonical text of a set of mapping lines, sorted by source index.
/// Used by the CLI to canonicalize map fragments.
std::string canonicalize_map_lines(std::vector<MapEntry> entries);

/// Parse a complete mapping file: one `source: t1,t2` line per source
/// phrase. When counts are given, indices are validated against them;
/// when omitted, counts are inferred from the largest indices seen.
/// Every source in [0, source_count) must appear.
/// Throws MapSyntaxError, IndexOutOfRangeError, DuplicateSourceError,
/// MissingSourceError.
AlignmentMap parse_alignment(std::string_view text,
                             std::optional<int> source_count = std::nullopt,
                             std::optional<int> target_count = std::nullopt);

/// Canonical form: `<src>: t1,t2` with one space after the colon, sources
/// ascending, one line each. parse(serialize(m)) == m.
std::string serialize_alignment(const AlignmentMap& map);

/// Detect the delete/merge/split/exchange/add patterns of a map.
LinkClassification classify_links(const AlignmentMap& map);

/// Check a document pair against the structural rules of a level:
/// no target phrase may equal a source phrase (after trimming), and the
/// addition/deletion/exchange budgets of the level must hold.
/// Throws InconsistentCountsError when doc sizes disagree with the map.
std::vector<Violation> validate_rules(const AlignmentMap& map,
                                      const PhraseDocument& source_doc,
                                      const PhraseDocument& target_doc, RuleLevel level);

}  // namespace textsim

#endif  // TEXTSIM_ALIGNMENT_HPP
