#ifndef TEXTSIM_EDIT_DISTANCE_HPP
#define TEXTSIM_EDIT_DISTANCE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace textsim {

/// Jaro-Winkler parameters. Defaults are Winkler's classical values; the
/// prefix weight must stay <= 0.25 to keep scores within [0,1].
struct EditParams {
    double prefix_weight = 0.1;
    double boost_threshold = 0.7;
    int max_prefix = 4;

    /// Throws InvalidParamsError when out of range.
    void validate() const;
};

/// Minimum number of insertions, deletions and substitutions turning one
/// element sequence into the other.
std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Character-level distance; operates on code points, not bytes.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// 1 - distance / max(|a|,|b|), in [0,1]. Both empty -> 1.
double levenshtein_normalized(const std::vector<std::string>& a,
                              const std::vector<std::string>& b);
double levenshtein_normalized(std::string_view a, std::string_view b);

/// Classical Jaro similarity: matches within a window of
/// max(|a|,|b|)/2 - 1, transpositions counted over the matched order.
double jaro(const std::vector<std::string>& a, const std::vector<std::string>& b);
double jaro(std::string_view a, std::string_view b);

/// Jaro boosted by p * prefix_len * (1 - jaro) when jaro exceeds the
/// boost threshold; the common prefix is capped at max_prefix elements.
double jaro_winkler(const std::vector<std::string>& a, const std::vector<std::string>& b,
                    const EditParams& params = {});
double jaro_winkler(std::string_view a, std::string_view b, const EditParams& params = {});

}  // namespace textsim

#endif  // TEXTSIM_EDIT_DISTANCE_HPP
