#include "textsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "textsim/errors.hpp"

namespace textsim {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<fs::path> sorted_files(const fs::path& dir, std::string_view extension) {
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) return files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == extension) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<CorpusDocument> load_subcorpus(const fs::path& dir, const std::string& name) {
    std::vector<CorpusDocument> docs;
    for (const auto& file : sorted_files(dir, ".txt")) {
        CorpusDocument cd;
        cd.name = file.stem().string();
        cd.doc = segment_phrases(read_file(file), SegmentMode::Line, cd.name);
        docs.push_back(std::move(cd));
    }
    if (docs.empty()) throw EmptySubcorpusError(name);
    return docs;
}

double mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double round5(double x) { return std::round(x * 1e5) / 1e5; }

std::string fixed5(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", x);
    return buf;
}

}  // namespace

CorpusLayout load_corpus(const fs::path& root) {
    CorpusLayout corpus;
    corpus.root = root;

    fs::path source_path = root / "source.txt";
    if (!fs::is_regular_file(source_path)) throw MissingSourceFileError(root.string());
    corpus.source = segment_phrases(read_file(source_path), SegmentMode::Line, "source");

    corpus.basic = load_subcorpus(root / "basic", "basic");
    corpus.complex = load_subcorpus(root / "complex", "complex");
    corpus.cited = load_subcorpus(root / "control" / "cited", "control/cited");
    corpus.unrelated = load_subcorpus(root / "control" / "unrelated", "control/unrelated");

    for (const auto& map_path : sorted_files(root / "maps", ".map")) {
        std::string stem = map_path.stem().string();
        CorpusDocument* target = nullptr;
        for (auto* bucket : {&corpus.basic, &corpus.complex, &corpus.cited, &corpus.unrelated}) {
            for (auto& cd : *bucket) {
                if (cd.name == stem) target = &cd;
            }
        }
        if (!target) throw DanglingMapError(map_path.filename().string());
        target->gold = parse_alignment(read_file(map_path),
                                       static_cast<int>(corpus.source.size()),
                                       static_cast<int>(target->doc.size()));
    }
    return corpus;
}

double document_score(const PhraseDocument& src, const PhraseDocument& tgt,
                      const std::string& metric_id, const PipelineConfig& config) {
    const Metric& metric = MetricRegistry::builtin().get(metric_id);
    return metric.score(prepare_document(src, config), prepare_document(tgt, config));
}

ScoreTable subcorpus_means(const CorpusLayout& corpus, const std::vector<std::string>& metric_ids,
                           const PipelineConfig& config) {
    const MetricRegistry& registry = MetricRegistry::builtin();
    PreparedText source = prepare_document(corpus.source, config);

    auto prepare_bucket = [&](const std::vector<CorpusDocument>& docs) {
        std::vector<PreparedText> out;
        out.reserve(docs.size());
        for (const auto& cd : docs) out.push_back(prepare_document(cd.doc, config));
        return out;
    };
    auto basic = prepare_bucket(corpus.basic);
    auto complex_docs = prepare_bucket(corpus.complex);
    auto cited = prepare_bucket(corpus.cited);
    auto unrelated = prepare_bucket(corpus.unrelated);

    ScoreTable table;
    for (const auto& id : metric_ids) {
        const Metric& metric = registry.get(id);
        auto bucket_mean = [&](const std::vector<PreparedText>& docs) {
            std::vector<double> scores;
            scores.reserve(docs.size());
            for (const auto& doc : docs) scores.push_back(metric.score(source, doc));
            return mean(scores);
        };
        ScoreRow row;
        row.metric_id = id;
        row.low = bucket_mean(basic);
        row.high = bucket_mean(complex_docs);
        row.not_related = bucket_mean(unrelated);
        row.cited = bucket_mean(cited);
        table.rows.push_back(std::move(row));
    }
    return table;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw LengthMismatchError(x.size(), y.size());
    double mx = mean(x);
    double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw ZeroVarianceError();
    return sxy / std::sqrt(sxx * syy);
}

CorrelationAnalysis correlation_analysis(
    const std::vector<std::pair<std::string, std::vector<double>>>& per_doc_scores,
    const std::string& reference) {
    const MetricRegistry& registry = MetricRegistry::builtin();
    CorrelationAnalysis analysis;
    if (per_doc_scores.empty()) return analysis;

    std::size_t docs = per_doc_scores.front().second.size();
    for (const auto& [id, scores] : per_doc_scores) {
        if (scores.size() != docs) throw LengthMismatchError(docs, scores.size());
        analysis.metric_ids.push_back(id);
    }

    auto normalized = [&](const std::string& id, double value) {
        return registry.get(id).kind == MetricKind::Distance ? distance_to_similarity(value)
                                                             : value;
    };

    if (reference == "mean") {
        analysis.reference_profile.assign(docs, 0.0);
        for (const auto& [id, scores] : per_doc_scores) {
            for (std::size_t d = 0; d < docs; ++d) {
                analysis.reference_profile[d] += normalized(id, scores[d]);
            }
        }
        for (double& v : analysis.reference_profile) {
            v /= static_cast<double>(per_doc_scores.size());
        }
    } else {
        auto it = std::find_if(per_doc_scores.begin(), per_doc_scores.end(),
                               [&](const auto& kv) { return kv.first == reference; });
        if (it == per_doc_scores.end()) throw UnknownMetricError(reference);
        analysis.reference_profile.reserve(docs);
        for (double v : it->second) analysis.reference_profile.push_back(normalized(reference, v));
    }

    std::size_t n = per_doc_scores.size();
    analysis.matrix.assign(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double r = pearson(per_doc_scores[i].second, per_doc_scores[j].second);
            analysis.matrix[i][j] = r;
            analysis.matrix[j][i] = r;
        }
    }
    analysis.vs_reference.reserve(n);
    for (const auto& [id, scores] : per_doc_scores) {
        analysis.vs_reference.push_back(pearson(scores, analysis.reference_profile));
    }
    return analysis;
}

ParaphraseLevel classify_paraphrase_level(double score, double t_low, double t_high) {
    if (!(0.0 <= t_low && t_low < t_high && t_high <= 1.0)) {
        throw InvalidThresholdsError("thresholds must satisfy 0 <= low < high <= 1");
    }
    if (score >= t_high) return ParaphraseLevel::SameOrBasic;
    if (score >= t_low) return ParaphraseLevel::Paraphrase;
    return ParaphraseLevel::Different;
}

std::string to_string(ParaphraseLevel level) {
    switch (level) {
        case ParaphraseLevel::SameOrBasic: return "same_or_basic";
        case ParaphraseLevel::Paraphrase: return "paraphrase";
        case ParaphraseLevel::Different: return "different";
    }
    return "different";
}

std::string emit_report(const ScoreTable& table, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out = "metric,low,high,not,pearson\n";
        for (const auto& row : table.rows) {
            out += row.metric_id;
            out += ',' + fixed5(row.low);
            out += ',' + fixed5(row.high);
            out += ',' + fixed5(row.not_related);
            out += ',';
            if (row.pearson) out += fixed5(*row.pearson);
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json doc;
    doc["metrics"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json j;
        j["metric"] = row.metric_id;
        j["low"] = round5(row.low);
        j["high"] = round5(row.high);
        j["not"] = round5(row.not_related);
        if (row.cited) j["cited"] = round5(*row.cited);
        if (row.pearson) j["pearson"] = round5(*row.pearson);
        doc["metrics"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

ScoreTable parse_report_json(const std::string& bytes) {
    nlohmann::json doc = nlohmann::json::parse(bytes);
    ScoreTable table;
    for (const auto& j : doc.at("metrics")) {
        ScoreRow row;
        row.metric_id = j.at("metric").get<std::string>();
        row.low = j.at("low").get<double>();
        row.high = j.at("high").get<double>();
        row.not_related = j.at("not").get<double>();
        if (j.contains("cited")) row.cited = j["cited"].get<double>();
        if (j.contains("pearson")) row.pearson = j["pearson"].get<double>();
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace textsim
