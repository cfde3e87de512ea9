#include "textsim/metrics.hpp"

#include "textsim/edit_distance.hpp"
#include "textsim/errors.hpp"
#include "textsim/ngram_scores.hpp"
#include "textsim/vector_measures.hpp"

namespace textsim {

PreparedText prepare_text(std::string_view text, const PipelineConfig& config) {
    PreparedText p;
    p.tokens = tokenize_normalize(text, config);
    p.vector = term_vector(p.tokens);
    p.set = term_set(p.tokens);
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
        if (i > 0) p.joined += ' ';
        p.joined += p.tokens[i];
    }
    return p;
}

PreparedText prepare_document(const PhraseDocument& doc, const PipelineConfig& config) {
    std::string flat;
    for (const auto& phrase : doc.phrases) {
        if (!flat.empty()) flat += '\n';
        flat += phrase;
    }
    return prepare_text(flat, config);
}

namespace {

// Word n-gram score with the source as reference. Candidates shorter than
// n grams score 0; a reference shorter than n grams cannot anchor any
// overlap and also scores 0 rather than erroring, which keeps phrase
// matrices total.
double rouge_words(const PreparedText& ref, const PreparedText& can, int n) {
    NGramMultiset ref_grams = extract_ngrams(ref.tokens, n, 0);
    if (ref_grams.empty()) return 0.0;
    return rouge_n(extract_ngrams(can.tokens, n, 0), ref_grams);
}

double rouge_su4(const PreparedText& ref, const PreparedText& can) {
    if (ref.tokens.empty()) return 0.0;
    return rouge_su(can.tokens, ref.tokens, 4);
}

}  // namespace

MetricRegistry::MetricRegistry() {
    auto add = [this](std::string id, MetricKind kind,
                      std::function<double(const PreparedText&, const PreparedText&)> fn) {
        metrics_.push_back({std::move(id), kind, std::move(fn)});
    };
    add("2grams", MetricKind::Similarity,
        [](const PreparedText& r, const PreparedText& c) { return rouge_words(r, c, 2); });
    add("2grams-su4", MetricKind::Similarity, rouge_su4);
    add("3grams", MetricKind::Similarity,
        [](const PreparedText& r, const PreparedText& c) { return rouge_words(r, c, 3); });
    add("cosine", MetricKind::Similarity, [](const PreparedText& r, const PreparedText& c) {
        return cosine(r.vector, c.vector);
    });
    add("dice", MetricKind::Similarity,
        [](const PreparedText& r, const PreparedText& c) { return dice(r.set, c.set); });
    add("euclidean", MetricKind::Distance, [](const PreparedText& r, const PreparedText& c) {
        return euclidean(r.vector, c.vector, /*pre_normalize=*/true);
    });
    add("jaccard", MetricKind::Similarity,
        [](const PreparedText& r, const PreparedText& c) { return jaccard(r.set, c.set); });
    add("jw", MetricKind::Similarity, [](const PreparedText& r, const PreparedText& c) {
        return jaro_winkler(r.joined, c.joined);
    });
    add("levenshtein", MetricKind::Similarity, [](const PreparedText& r, const PreparedText& c) {
        return levenshtein_normalized(r.joined, c.joined);
    });
    add("levenshtein-w", MetricKind::Similarity, [](const PreparedText& r, const PreparedText& c) {
        return levenshtein_normalized(r.tokens, c.tokens);
    });
    add("manhattan", MetricKind::Distance, [](const PreparedText& r, const PreparedText& c) {
        return manhattan(r.vector, c.vector, /*pre_normalize=*/true);
    });
}

const MetricRegistry& MetricRegistry::builtin() {
    static const MetricRegistry registry;
    return registry;
}

const Metric& MetricRegistry::get(const std::string& id) const {
    for (const auto& m : metrics_) {
        if (m.id == id) return m;
    }
    throw UnknownMetricError(id);
}

bool MetricRegistry::has(const std::string& id) const {
    for (const auto& m : metrics_) {
        if (m.id == id) return true;
    }
    return false;
}

std::vector<std::string> MetricRegistry::ids() const {
    std::vector<std::string> out;
    out.reserve(metrics_.size());
    for (const auto& m : metrics_) out.push_back(m.id);
    return out;
}

double similarity_score(const Metric& metric, const PreparedText& ref, const PreparedText& can) {
    double value = metric.score(ref, can);
    return metric.kind == MetricKind::Distance ? distance_to_similarity(value) : value;
}

}  // namespace textsim
