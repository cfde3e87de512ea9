#ifndef TEXTSIM_REPORT_HPP
#define TEXTSIM_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "textsim/alignment.hpp"
#include "textsim/metrics.hpp"
#include "textsim/pipeline.hpp"

namespace textsim {

/// One paraphrase/control document plus its gold map when one is shipped.
struct CorpusDocument {
    std::string name;
    PhraseDocument doc;
    std::optional<AlignmentMap> gold;
};

/// On-disk corpus: source.txt plus the basic/, complex/, control/cited/,
/// control/unrelated/ sub-corpora and gold maps under maps/.
struct CorpusLayout {
    std::filesystem::path root;
    PhraseDocument source;
    std::vector<CorpusDocument> basic;
    std::vector<CorpusDocument> complex;
    std::vector<CorpusDocument> cited;
    std::vector<CorpusDocument> unrelated;
};

/// Read and validate a corpus directory. Documents are parsed in line
/// mode so gold indices stay exact; files are read in name order.
/// Throws MissingSourceFileError, EmptySubcorpusError, DanglingMapError.
CorpusLayout load_corpus(const std::filesystem::path& root);

/// Whole-document score: both documents are flattened to one
/// representation and the metric applied once. Distances stay distances.
double document_score(const PhraseDocument& src, const PhraseDocument& tgt,
                      const std::string& metric_id, const PipelineConfig& config);

/// One report row. low/high/not are the basic/complex/unrelated means;
/// cited is reported alongside but lives outside the three-column shape.
struct ScoreRow {
    std::string metric_id;
    double low = 0.0;
    double high = 0.0;
    double not_related = 0.0;
    std::optional<double> cited;
    std::optional<double> pearson;
};

struct ScoreTable {
    std::vector<ScoreRow> rows;
};

/// Mean score per (metric, sub-corpus). The pearson column stays empty;
/// fill it via correlation_analysis.
ScoreTable subcorpus_means(const CorpusLayout& corpus, const std::vector<std::string>& metric_ids,
                           const PipelineConfig& config);

/// Sample Pearson correlation coefficient.
/// Throws LengthMismatchError (also for fewer than two points) and
/// ZeroVarianceError.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Pairwise correlations over a fixed document set, plus one coefficient
/// per metric against a reference profile.
struct CorrelationAnalysis {
    std::vector<std::string> metric_ids;
    /// Pairwise Pearson over the raw score sequences.
    std::vector<std::vector<double>> matrix;
    /// Per-metric coefficient against the reference profile.
    std::vector<double> vs_reference;
    /// The profile itself: per-document mean of the [0,1] similarity
    /// forms (distances converted via 1/(1+d)), or one metric's
    /// converted scores when a metric id is named.
    std::vector<double> reference_profile;
};

/// per_doc_scores holds one raw score sequence per metric, all over the
/// same documents in the same order. reference is "mean" or a metric id.
CorrelationAnalysis correlation_analysis(
    const std::vector<std::pair<std::string, std::vector<double>>>& per_doc_scores,
    const std::string& reference = "mean");

enum class ParaphraseLevel { SameOrBasic, Paraphrase, Different };

/// Threshold rule: score >= t_high -> same_or_basic, >= t_low ->
/// paraphrase, else different. Throws InvalidThresholdsError unless
/// 0 <= t_low < t_high <= 1.
ParaphraseLevel classify_paraphrase_level(double score, double t_low, double t_high);

std::string to_string(ParaphraseLevel level);

enum class ReportFormat { Csv, Json };

/// Render a table. CSV carries exactly the columns
/// `metric,low,high,not,pearson` at five decimals; JSON mirrors the rows
/// and keeps the cited column when present. Byte-deterministic.
std::string emit_report(const ScoreTable& table, ReportFormat format);

/// Inverse of emit_report for JSON (values round-tripped at the emitted
/// five-decimal precision).
ScoreTable parse_report_json(const std::string& bytes);

}  // namespace textsim

#endif  // TEXTSIM_REPORT_HPP
