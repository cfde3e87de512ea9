#ifndef TEXTSIM_VECTOR_MEASURES_HPP
#define TEXTSIM_VECTOR_MEASURES_HPP

#include "textsim/pipeline.hpp"

namespace textsim {

/// Cosine of the angle between two term vectors, in [0,1] for nonnegative
/// weights. The dot product is divided by both norms so raw tf input stays
/// normalized. Either vector empty -> 0.
double cosine(const TermVector& v1, const TermVector& v2);

/// Dice coefficient 2*|common| / (|s1|+|s2|). Both sets empty -> 1.
double dice(const TermSet& s1, const TermSet& s2);

/// Jaccard coefficient |common| / |union|. Both sets empty -> 1.
double jaccard(const TermSet& s1, const TermSet& s2);

/// Euclidean distance over the union of terms. With pre_normalize each
/// vector is scaled to unit L2 norm first (empty vectors stay zero).
double euclidean(const TermVector& v1, const TermVector& v2, bool pre_normalize = false);

/// Manhattan distance: sum of absolute weight differences over the union
/// of terms. pre_normalize as in euclidean (L2 scaling).
double manhattan(const TermVector& v1, const TermVector& v2, bool pre_normalize = false);

}  // namespace textsim

#endif  // TEXTSIM_VECTOR_MEASURES_HPP
