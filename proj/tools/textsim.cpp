// Command-line front end: document similarity, corpus evaluation, phrase
// alignment scoring and gold-map utilities.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "textsim/alignment.hpp"
#include "textsim/config.hpp"
#include "textsim/errors.hpp"
#include "textsim/matcher.hpp"
#include "textsim/metrics.hpp"
#include "textsim/ngram_scores.hpp"
#include "textsim/pipeline.hpp"
#include "textsim/report.hpp"

namespace {

using namespace textsim;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixed5(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", x);
    return buf;
}

// Flags shared by the scoring subcommands; mirrors the config file keys.
struct ConfigFlags {
    std::string config_path;
    std::string stopwords;
    std::optional<bool> lowercase;
    std::optional<bool> stem;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "key=value config file (default: $TEXTSIM_CONFIG)");
        cmd->add_option("--stopwords", stopwords, "stopword list: a path, 'builtin' or 'none'");
        cmd->add_flag(
            "--stem,!--no-stem", [this](std::int64_t count) { stem = count > 0; },
            "toggle the light German suffix stripper");
        cmd->add_flag(
            "--lowercase,!--no-lowercase",
            [this](std::int64_t count) { lowercase = count > 0; }, "toggle lowercasing");
    }

    EffectiveConfig resolve() const {
        EffectiveConfig cfg = EffectiveConfig::defaults();
        std::string path = config_path;
        if (path.empty()) {
            if (const char* env = std::getenv("TEXTSIM_CONFIG")) path = env;
        }
        if (!path.empty()) cfg.apply(parse_config_file(path));
        FileConfig flags;
        if (!stopwords.empty()) flags.stopwords = stopwords;
        flags.lowercase = lowercase;
        flags.stem = stem;
        cfg.apply(flags);
        std::cerr << "# config " << cfg.describe() << "\n";
        return cfg;
    }
};

std::vector<std::string> resolve_metric_ids(const std::string& spec) {
    const MetricRegistry& registry = MetricRegistry::builtin();
    if (spec == "all") return registry.ids();
    std::vector<std::string> ids;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        std::string id = (comma == std::string::npos) ? spec.substr(pos)
                                                      : spec.substr(pos, comma - pos);
        if (!id.empty()) ids.push_back(id);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (const auto& id : ids) {
        if (id != "ngrams") registry.get(id);  // throws UnknownMetricError
    }
    if (ids.empty()) throw UnknownMetricError(spec);
    return ids;
}

// `ngrams` is the configurable escape hatch: ROUGE over word n-grams of
// the configured length and skip. The named report rows stay fixed.
double generic_ngram_score(const PreparedText& ref, const PreparedText& can,
                           const EffectiveConfig& cfg) {
    NGramMultiset ref_grams = extract_ngrams(ref.tokens, cfg.ngram_n, cfg.ngram_skip);
    if (ref_grams.empty()) return 0.0;
    return rouge_n(extract_ngrams(can.tokens, cfg.ngram_n, cfg.ngram_skip), ref_grams);
}

int run_sim(const std::string& path_a, const std::string& path_b, const std::string& metric_spec,
            bool classify, const ConfigFlags& flags) {
    EffectiveConfig cfg = flags.resolve();
    PhraseDocument doc_a = segment_phrases(read_file(path_a), SegmentMode::Line, path_a);
    PhraseDocument doc_b = segment_phrases(read_file(path_b), SegmentMode::Line, path_b);
    PreparedText a = prepare_document(doc_a, cfg.pipeline);
    PreparedText b = prepare_document(doc_b, cfg.pipeline);

    const MetricRegistry& registry = MetricRegistry::builtin();
    for (const auto& id : resolve_metric_ids(metric_spec)) {
        double value;
        double as_similarity;
        if (id == "ngrams") {
            value = generic_ngram_score(a, b, cfg);
            as_similarity = value;
        } else {
            const Metric& metric = registry.get(id);
            value = metric.score(a, b);
            as_similarity = metric.kind == MetricKind::Distance ? distance_to_similarity(value)
                                                                : value;
        }
        std::cout << id << ' ' << fixed5(value);
        if (classify) {
            std::cout << ' '
                      << to_string(classify_paraphrase_level(as_similarity, cfg.threshold_low,
                                                             cfg.threshold_high));
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int run_corpus_eval(const std::string& corpus_dir, const std::string& metric_spec,
                    const std::string& out_path, const std::string& format,
                    const ConfigFlags& flags) {
    EffectiveConfig cfg = flags.resolve();
    std::vector<std::string> ids = resolve_metric_ids(metric_spec);
    for (const auto& id : ids) {
        if (id == "ngrams") throw UnknownMetricError("ngrams (not a report row)");
    }

    CorpusLayout corpus = load_corpus(corpus_dir);
    ScoreTable table = subcorpus_means(corpus, ids, cfg.pipeline);

    // Pearson column: per-document scores over the evaluated 15-text set
    // (basic + complex + unrelated; cited stays out) against the mean
    // profile of all measures.
    std::vector<std::pair<std::string, std::vector<double>>> per_doc;
    for (const auto& id : ids) {
        std::vector<double> scores;
        for (const auto* bucket : {&corpus.basic, &corpus.complex, &corpus.unrelated}) {
            for (const auto& cd : *bucket) {
                scores.push_back(document_score(corpus.source, cd.doc, id, cfg.pipeline));
            }
        }
        per_doc.emplace_back(id, std::move(scores));
    }
    CorrelationAnalysis analysis = correlation_analysis(per_doc, "mean");
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        table.rows[i].pearson = analysis.vs_reference[i];
    }

    for (const auto& row : table.rows) {
        std::cerr << "# cited " << row.metric_id << ' ' << fixed5(*row.cited) << "\n";
    }

    std::string report =
        emit_report(table, format == "json" ? ReportFormat::Json : ReportFormat::Csv);
    if (out_path.empty() || out_path == "-") {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + out_path);
        out << report;
    }
    return kExitOk;
}

int run_align_eval(const std::string& source_path, const std::string& target_path,
                   const std::string& gold_path, const std::string& metric_id, double threshold,
                   const ConfigFlags& flags) {
    EffectiveConfig cfg = flags.resolve();
    if (threshold < 0.0 || threshold > 1.0) {
        throw InvalidThresholdsError("threshold must be in [0,1]");
    }
    PhraseDocument src = segment_phrases(read_file(source_path), SegmentMode::Line, source_path);
    PhraseDocument tgt = segment_phrases(read_file(target_path), SegmentMode::Line, target_path);
    AlignmentMap gold = parse_alignment(read_file(gold_path), static_cast<int>(src.size()),
                                        static_cast<int>(tgt.size()));

    SimilarityMatrix matrix = build_matrix(src, tgt, metric_id, cfg.pipeline);
    AlignmentMap predicted = predict_alignment(matrix, threshold);
    MatchReport report = score_alignment(predicted, gold);

    std::cout << "links " << report.predicted_links.size() << '\n';
    std::cout << "precision " << fixed5(report.precision) << '\n';
    std::cout << "recall " << fixed5(report.recall) << '\n';
    std::cout << "f1 " << fixed5(report.f1) << '\n';
    return kExitOk;
}

int run_validate(const std::string& level_name, const std::string& source_path,
                 const std::string& target_path, const std::string& map_path) {
    RuleLevel level = level_name == "basic" ? RuleLevel::Basic : RuleLevel::Complex;
    PhraseDocument src = segment_phrases(read_file(source_path), SegmentMode::Line, source_path);
    PhraseDocument tgt = segment_phrases(read_file(target_path), SegmentMode::Line, target_path);
    AlignmentMap map = parse_alignment(read_file(map_path), static_cast<int>(src.size()),
                                       static_cast<int>(tgt.size()));

    auto kind_name = [](ViolationKind kind) {
        switch (kind) {
            case ViolationKind::UnalteredPhrase: return "unaltered_phrase";
            case ViolationKind::AdditionBudget: return "addition_budget";
            case ViolationKind::DeletionBudget: return "deletion_budget";
            case ViolationKind::ExchangeForbidden: return "exchange_forbidden";
        }
        return "violation";
    };
    std::vector<Violation> violations = validate_rules(map, src, tgt, level);
    for (const auto& v : violations) {
        std::cout << kind_name(v.kind) << ' ' << v.message << '\n';
    }
    return violations.empty() ? kExitOk : kExitViolation;
}

int run_parse_map(const std::string& map_path) {
    std::cout << canonicalize_map_lines(parse_map_lines(read_file(map_path)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"text similarity toolkit"};
    app.require_subcommand(1);

    ConfigFlags sim_flags, corpus_flags, align_flags;

    auto* sim = app.add_subcommand("sim", "score two documents against each other");
    std::string sim_a, sim_b, sim_metric = "all";
    bool sim_classify = false;
    sim->add_option("A", sim_a, "reference document")->required()->check(CLI::ExistingFile);
    sim->add_option("B", sim_b, "candidate document")->required()->check(CLI::ExistingFile);
    sim->add_option("--metric", sim_metric, "metric id, comma list or 'all'");
    sim->add_flag("--classify", sim_classify, "append the threshold-based paraphrase level");
    sim_flags.attach(sim);

    auto* corpus =
        app.add_subcommand("corpus-eval", "sub-corpus means and correlations of a corpus");
    std::string corpus_dir, corpus_metrics = "all", corpus_out, corpus_format = "csv";
    corpus->add_option("--corpus", corpus_dir, "corpus root directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    corpus->add_option("--metrics", corpus_metrics, "metric ids or 'all'");
    corpus->add_option("--out", corpus_out, "output file ('-' for stdout)");
    corpus->add_option("--format", corpus_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    corpus_flags.attach(corpus);

    auto* align = app.add_subcommand("align-eval", "score predicted phrase links against gold");
    std::string align_source, align_target, align_gold, align_metric = "cosine";
    double align_threshold = 0.3;
    align->add_option("--source", align_source)->required()->check(CLI::ExistingFile);
    align->add_option("--target", align_target)->required()->check(CLI::ExistingFile);
    align->add_option("--gold", align_gold)->required()->check(CLI::ExistingFile);
    align->add_option("--metric", align_metric, "metric id");
    align->add_option("--threshold", align_threshold, "linking threshold in [0,1]");
    align_flags.attach(align);

    auto* validate = app.add_subcommand("validate", "check a paraphrase against the level rules");
    std::string val_level, val_source, val_target, val_map;
    validate->add_option("--level", val_level)
        ->required()
        ->check(CLI::IsMember({"basic", "complex"}));
    validate->add_option("--source", val_source)->required()->check(CLI::ExistingFile);
    validate->add_option("--target", val_target)->required()->check(CLI::ExistingFile);
    validate->add_option("--map", val_map)->required()->check(CLI::ExistingFile);

    auto* parse_map = app.add_subcommand("parse-map", "canonicalize a mapping file");
    std::string pm_path;
    parse_map->add_option("file", pm_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sim->parsed()) return run_sim(sim_a, sim_b, sim_metric, sim_classify, sim_flags);
        if (corpus->parsed()) {
            return run_corpus_eval(corpus_dir, corpus_metrics, corpus_out, corpus_format,
                                   corpus_flags);
        }
        if (align->parsed()) {
            return run_align_eval(align_source, align_target, align_gold, align_metric,
                                  align_threshold, align_flags);
        }
        if (validate->parsed()) return run_validate(val_level, val_source, val_target, val_map);
        if (parse_map->parsed()) return run_parse_map(pm_path);
    } catch (const UnknownMetricError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidThresholdsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
