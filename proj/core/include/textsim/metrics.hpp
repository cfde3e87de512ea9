#ifndef TEXTSIM_METRICS_HPP
#define TEXTSIM_METRICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "textsim/pipeline.hpp"

namespace textsim {

enum class MetricKind { Similarity, Distance };

/// A text unit preprocessed once so every metric can read the
/// representation it needs.
struct PreparedText {
    std::vector<std::string> tokens;
    TermVector vector;
    TermSet set;
    /// Normalized tokens joined with single spaces; what the
    /// character-level metrics compare.
    std::string joined;
};

PreparedText prepare_text(std::string_view text, const PipelineConfig& config);
PreparedText prepare_document(const PhraseDocument& doc, const PipelineConfig& config);

/// One registered measure. For the asymmetric ROUGE-style scores the
/// first argument is the reference side (the source document).
struct Metric {
    std::string id;
    MetricKind kind;
    std::function<double(const PreparedText& ref, const PreparedText& can)> score;
};

/// The fixed measure set, keyed by the report row ids. Registration order
/// is the report row order.
class MetricRegistry {
public:
    /// Registry holding every built-in measure.
    static const MetricRegistry& builtin();

    const Metric& get(const std::string& id) const;  // throws UnknownMetricError
    bool has(const std::string& id) const;
    const std::vector<Metric>& all() const { return metrics_; }
    std::vector<std::string> ids() const;

private:
    MetricRegistry();
    std::vector<Metric> metrics_;
};

/// Monotone map from a distance to a similarity in (0,1].
inline double distance_to_similarity(double d) { return 1.0 / (1.0 + d); }

/// Metric value as a similarity in [0,1]: distances are converted via
/// 1/(1+d), similarities pass through.
double similarity_score(const Metric& metric, const PreparedText& ref, const PreparedText& can);

}  // namespace textsim

#endif  // TEXTSIM_METRICS_HPP
