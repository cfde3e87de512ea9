#ifndef TEXTSIM_MATCHER_HPP
#define TEXTSIM_MATCHER_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "textsim/alignment.hpp"
#include "textsim/metrics.hpp"
#include "textsim/pipeline.hpp"

namespace textsim {

/// Phrase-by-phrase similarity scores for one metric, rows = source
/// phrases, cols = target phrases. Cells are similarities in [0,1];
/// distance metrics enter via the 1/(1+d) conversion.
struct SimilarityMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> cells;  // row-major
    std::string metric_id;
    std::uint64_t config_checksum = 0;

    double at(int i, int j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }
    double& at(int i, int j) { return cells[static_cast<std::size_t>(i) * cols + j]; }
};

/// Predicted-vs-gold link bookkeeping.
struct MatchReport {
    std::set<std::pair<int, int>> true_links;
    std::set<std::pair<int, int>> predicted_links;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Score every (source phrase, target phrase) pair with one metric.
/// Throws UnknownMetricError.
SimilarityMatrix build_matrix(const PhraseDocument& src, const PhraseDocument& tgt,
                              const std::string& metric_id, const PipelineConfig& config);

/// Link (i,j) when cell(i,j) >= threshold and j is the best target for
/// source i or i is the best source for target j. Ties break toward the
/// lowest index. Unlinked sources come out as deletions.
AlignmentMap predict_alignment(const SimilarityMatrix& matrix, double threshold);

/// Precision/recall/F1 of predicted links against a gold map.
/// Throws InconsistentCountsError when the two maps disagree on counts.
MatchReport score_alignment(const AlignmentMap& predicted, const AlignmentMap& gold);

}  // namespace textsim

#endif  // TEXTSIM_MATCHER_HPP
