#include "textsim/ngram_scores.hpp"

#include <algorithm>

#include "textsim/errors.hpp"

namespace textsim {

namespace {

long clipped_intersection(const NGramMultiset& a, const NGramMultiset& b) {
    long count = 0;
    for (const auto& [gram, ca] : a.grams) {
        auto it = b.grams.find(gram);
        if (it != b.grams.end()) count += std::min(ca, it->second);
    }
    return count;
}

long distinct_intersection(const NGramMultiset& a, const NGramMultiset& b) {
    long count = 0;
    for (const auto& [gram, _] : a.grams) count += b.grams.count(gram);
    return count;
}

// Unigrams plus skip-bigrams of one side, merged into a single multiset.
// Gram lengths differ, so the two never collide.
NGramMultiset su_grams(const std::vector<std::string>& tokens, int skip) {
    NGramMultiset unigrams = extract_ngrams(tokens, 1, 0);
    NGramMultiset bigrams = extract_ngrams(tokens, 2, skip);
    NGramMultiset merged;
    merged.n = 2;
    merged.skip = skip;
    merged.grams = std::move(unigrams.grams);
    for (auto& [gram, c] : bigrams.grams) merged.grams[gram] += c;
    return merged;
}

}  // namespace

double ngram_overlap(const NGramMultiset& a, const NGramMultiset& b,
                     OverlapDenominator denominator) {
    if (!a.same_config(b)) throw MismatchedGramConfigError();
    long total_a = a.total();
    long total_b = b.total();
    if (total_a == 0 && total_b == 0) return 1.0;
    double shared = static_cast<double>(clipped_intersection(a, b));
    double denom = denominator == OverlapDenominator::Max
                       ? static_cast<double>(std::max(total_a, total_b))
                       : static_cast<double>(total_a + total_b) / 2.0;
    return shared / denom;
}

double rouge_n(const NGramMultiset& can, const NGramMultiset& ref, GramCounting counting) {
    if (!can.same_config(ref)) throw MismatchedGramConfigError();
    if (counting == GramCounting::Clipped) {
        long denom = ref.total();
        if (denom == 0) throw EmptyReferenceError();
        return static_cast<double>(clipped_intersection(can, ref)) /
               static_cast<double>(denom);
    }
    long denom = static_cast<long>(ref.grams.size());
    if (denom == 0) throw EmptyReferenceError();
    return static_cast<double>(distinct_intersection(can, ref)) / static_cast<double>(denom);
}

double rouge_su(const std::vector<std::string>& can_tokens,
                const std::vector<std::string>& ref_tokens, int skip, GramCounting counting) {
    if (skip < 0) throw InvalidParamsError("skip must be >= 0");
    return rouge_n(su_grams(can_tokens, skip), su_grams(ref_tokens, skip), counting);
}

}  // namespace textsim
