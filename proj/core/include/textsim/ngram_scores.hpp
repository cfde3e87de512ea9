#ifndef TEXTSIM_NGRAM_SCORES_HPP
#define TEXTSIM_NGRAM_SCORES_HPP

#include "textsim/pipeline.hpp"

namespace textsim {

/// Denominator for the symmetric overlap score.
enum class OverlapDenominator { Max, Dice };

/// Gram counting rule for ROUGE-style scores. Clipped takes the per-gram
/// minimum of the two counts (the standard reading); SetBased counts each
/// shared gram once.
enum class GramCounting { Clipped, SetBased };

/// Shared grams divided by max(|A|,|B|) or by the average size.
/// Both sides empty -> 1. Throws MismatchedGramConfigError when the two
/// multisets were built with different n/skip/unit.
double ngram_overlap(const NGramMultiset& a, const NGramMultiset& b,
                     OverlapDenominator denominator = OverlapDenominator::Max);

/// Candidate grams found in the reference, divided by the reference gram
/// count. Asymmetric. Throws EmptyReferenceError when ref holds no grams.
double rouge_n(const NGramMultiset& can, const NGramMultiset& ref,
               GramCounting counting = GramCounting::Clipped);

/// rouge_n over the union of unigrams and skip-bigrams (gap <= skip) of
/// each token sequence; skip=4 is the usual SU4 configuration.
double rouge_su(const std::vector<std::string>& can_tokens,
                const std::vector<std::string>& ref_tokens, int skip,
                GramCounting counting = GramCounting::Clipped);

}  // namespace textsim

#endif  // TEXTSIM_NGRAM_SCORES_HPP
