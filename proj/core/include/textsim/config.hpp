#ifndef TEXTSIM_CONFIG_HPP
#define TEXTSIM_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "textsim/pipeline.hpp"

namespace textsim {

/// Values read from a plain key=value config file. Every field is
/// optional; command-line flags override whatever the file sets.
/// Recognized keys: stopwords, lowercase, stem, ngram_n, ngram_skip,
/// threshold_low, threshold_high. Unknown keys are errors.
struct FileConfig {
    std::optional<std::string> stopwords;  // path, "builtin" or "none"
    std::optional<bool> lowercase;
    std::optional<bool> stem;
    std::optional<int> ngram_n;
    std::optional<int> ngram_skip;
    std::optional<double> threshold_low;
    std::optional<double> threshold_high;
};

/// Throws ConfigError on unknown keys or unparseable values.
FileConfig parse_config_text(std::string_view text);
FileConfig parse_config_file(const std::string& path);  // also IoError

/// The settings one run operates under, after merging defaults, config
/// file and flags. Prints as a one-line fingerprint for reproducibility.
struct EffectiveConfig {
    PipelineConfig pipeline;
    /// Where the stopword list came from: "builtin:de", "none" or a path.
    std::string stopwords_source = "builtin:de";
    std::uint64_t stopwords_checksum = 0;
    int ngram_n = 2;
    int ngram_skip = 4;
    double threshold_low = 0.3;
    double threshold_high = 0.7;

    /// Library defaults: the shipped German stopword list, lowercasing
    /// on, stemming off.
    static EffectiveConfig defaults();

    void apply(const FileConfig& file);  // may read a stopword file

    std::uint64_t fingerprint() const;
    /// `key=value` summary including the fingerprint, for diagnostics.
    std::string describe() const;
};

/// Load a one-word-per-line stopword list. Lowercased on read when the
/// pipeline lowercases. Throws IoError.
std::set<std::string> load_stopword_file(const std::string& path, bool lowercase);

/// Checksum of a stopword set (order-independent content hash).
std::uint64_t stopword_checksum(const std::set<std::string>& words);

}  // namespace textsim

#endif  // TEXTSIM_CONFIG_HPP
