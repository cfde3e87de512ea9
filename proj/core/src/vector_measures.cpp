#include "textsim/vector_measures.hpp"

#include <cmath>

namespace textsim {

namespace {

double l2_norm(const TermVector& v) {
    double sq = 0.0;
    for (const auto& [_, w] : v.weights) sq += w * w;
    return std::sqrt(sq);
}

TermVector scaled_to_unit(const TermVector& v) {
    double norm = l2_norm(v);
    if (norm == 0.0) return v;
    TermVector out;
    for (const auto& [term, w] : v.weights) out.weights.emplace(term, w / norm);
    return out;
}

// Walks both sorted maps once, calling f(w1, w2) for every term in the union.
template <typename F>
void for_union(const TermVector& v1, const TermVector& v2, F f) {
    auto it1 = v1.weights.begin();
    auto it2 = v2.weights.begin();
    while (it1 != v1.weights.end() || it2 != v2.weights.end()) {
        if (it2 == v2.weights.end() || (it1 != v1.weights.end() && it1->first < it2->first)) {
            f(it1->second, 0.0);
            ++it1;
        } else if (it1 == v1.weights.end() || it2->first < it1->first) {
            f(0.0, it2->second);
            ++it2;
        } else {
            f(it1->second, it2->second);
            ++it1;
            ++it2;
        }
    }
}

std::size_t intersection_size(const TermSet& s1, const TermSet& s2) {
    const TermSet& small = s1.size() <= s2.size() ? s1 : s2;
    const TermSet& large = s1.size() <= s2.size() ? s2 : s1;
    std::size_t count = 0;
    for (const auto& t : small.terms) count += large.terms.count(t);
    return count;
}

}  // namespace

double cosine(const TermVector& v1, const TermVector& v2) {
    if (v1.empty() || v2.empty()) return 0.0;
    double dot = 0.0;
    for (const auto& [term, w1] : v1.weights) {
        auto it = v2.weights.find(term);
        if (it != v2.weights.end()) dot += w1 * it->second;
    }
    return dot / (l2_norm(v1) * l2_norm(v2));
}

double dice(const TermSet& s1, const TermSet& s2) {
    if (s1.empty() && s2.empty()) return 1.0;
    double common = static_cast<double>(intersection_size(s1, s2));
    return 2.0 * common / static_cast<double>(s1.size() + s2.size());
}

double jaccard(const TermSet& s1, const TermSet& s2) {
    if (s1.empty() && s2.empty()) return 1.0;
    double common = static_cast<double>(intersection_size(s1, s2));
    return common / static_cast<double>(s1.size() + s2.size() - static_cast<std::size_t>(common));
}

double euclidean(const TermVector& v1, const TermVector& v2, bool pre_normalize) {
    TermVector n1, n2;
    const TermVector* a = &v1;
    const TermVector* b = &v2;
    if (pre_normalize) {
        n1 = scaled_to_unit(v1);
        n2 = scaled_to_unit(v2);
        a = &n1;
        b = &n2;
    }
    double sq = 0.0;
    for_union(*a, *b, [&](double w1, double w2) { sq += (w1 - w2) * (w1 - w2); });
    return std::sqrt(sq);
}

double manhattan(const TermVector& v1, const TermVector& v2, bool pre_normalize) {
    TermVector n1, n2;
    const TermVector* a = &v1;
    const TermVector* b = &v2;
    if (pre_normalize) {
        n1 = scaled_to_unit(v1);
        n2 = scaled_to_unit(v2);
        a = &n1;
        b = &n2;
    }
    double sum = 0.0;
    for_union(*a, *b, [&](double w1, double w2) { sum += std::abs(w1 - w2); });
    return sum;
}

}  // namespace textsim
