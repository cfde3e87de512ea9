#include "textsim/matcher.hpp"

#include <algorithm>

#include "textsim/errors.hpp"

namespace textsim {

SimilarityMatrix build_matrix(const PhraseDocument& src, const PhraseDocument& tgt,
                              const std::string& metric_id, const PipelineConfig& config) {
    const Metric& metric = MetricRegistry::builtin().get(metric_id);

    std::vector<PreparedText> src_prep, tgt_prep;
    src_prep.reserve(src.size());
    tgt_prep.reserve(tgt.size());
    for (const auto& phrase : src.phrases) src_prep.push_back(prepare_text(phrase, config));
    for (const auto& phrase : tgt.phrases) tgt_prep.push_back(prepare_text(phrase, config));

    SimilarityMatrix m;
    m.rows = static_cast<int>(src.size());
    m.cols = static_cast<int>(tgt.size());
    m.cells.resize(static_cast<std::size_t>(m.rows) * m.cols);
    m.metric_id = metric_id;
    m.config_checksum = config.fingerprint();
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            m.at(i, j) = similarity_score(metric, src_prep[i], tgt_prep[j]);
        }
    }
    return m;
}

AlignmentMap predict_alignment(const SimilarityMatrix& matrix, double threshold) {
    // Best target per row and best source per column; first occurrence
    // wins on ties so runs are deterministic.
    std::vector<int> row_best(matrix.rows, -1);
    std::vector<int> col_best(matrix.cols, -1);
    for (int i = 0; i < matrix.rows; ++i) {
        for (int j = 0; j < matrix.cols; ++j) {
            if (row_best[i] < 0 || matrix.at(i, j) > matrix.at(i, row_best[i])) row_best[i] = j;
            if (col_best[j] < 0 || matrix.at(i, j) > matrix.at(col_best[j], j)) col_best[j] = i;
        }
    }

    AlignmentMap map;
    map.targets_by_source.resize(matrix.rows);
    map.target_count = matrix.cols;
    for (int i = 0; i < matrix.rows; ++i) {
        for (int j = 0; j < matrix.cols; ++j) {
            if (matrix.at(i, j) < threshold) continue;
            if (row_best[i] == j || col_best[j] == i) {
                map.targets_by_source[i].push_back(j);
            }
        }
    }
    return map;
}

MatchReport score_alignment(const AlignmentMap& predicted, const AlignmentMap& gold) {
    if (predicted.source_count() != gold.source_count() ||
        predicted.target_count != gold.target_count) {
        throw InconsistentCountsError("predicted map covers " +
                                      std::to_string(predicted.source_count()) + "/" +
                                      std::to_string(predicted.target_count) +
                                      " phrases, gold covers " +
                                      std::to_string(gold.source_count()) + "/" +
                                      std::to_string(gold.target_count));
    }

    MatchReport report;
    auto predicted_links = predicted.links();
    auto gold_links = gold.links();
    report.predicted_links.insert(predicted_links.begin(), predicted_links.end());
    report.true_links.insert(gold_links.begin(), gold_links.end());

    std::size_t hits = 0;
    for (const auto& link : report.predicted_links) hits += report.true_links.count(link);

    if (report.predicted_links.empty()) {
        report.precision = report.true_links.empty() ? 1.0 : 0.0;
    } else {
        report.precision = static_cast<double>(hits) / report.predicted_links.size();
    }
    if (report.true_links.empty()) {
        report.recall = report.predicted_links.empty() ? 1.0 : 0.0;
    } else {
        report.recall = static_cast<double>(hits) / report.true_links.size();
    }
    report.f1 = (report.precision == 0.0 || report.recall == 0.0)
                    ? 0.0
                    : 2.0 * report.precision * report.recall /
                          (report.precision + report.recall);
    return report;
}

}  // namespace textsim
