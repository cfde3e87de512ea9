#include "textsim/edit_distance.hpp"

#include <algorithm>
#include <numeric>

#include "textsim/errors.hpp"
#include "textsim/pipeline.hpp"

namespace textsim {

void EditParams::validate() const {
    if (prefix_weight < 0.0 || prefix_weight > 0.25) {
        throw InvalidParamsError("jaro-winkler prefix weight must be in [0, 0.25]");
    }
    if (max_prefix < 0) {
        throw InvalidParamsError("jaro-winkler max prefix must be >= 0");
    }
}

namespace {

// Two-row dynamic program over any equality-comparable element type.
template <typename Seq>
std::size_t levenshtein_impl(const Seq& a, const Seq& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), curr(m + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= n; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
        }
        std::swap(prev, curr);
    }
    return prev[m];
}

template <typename Seq>
double normalized_impl(const Seq& a, const Seq& b) {
    std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein_impl(a, b)) / static_cast<double>(longest);
}

template <typename Seq>
double jaro_impl(const Seq& a, const Seq& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0 && m == 0) return 1.0;
    if (n == 0 || m == 0) return 0.0;
    const std::size_t longest = std::max(n, m);
    const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

    std::vector<bool> a_matched(n, false), b_matched(m, false);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = i > window ? i - window : 0;
        std::size_t hi = std::min(m, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!b_matched[j] && a[i] == b[j]) {
                a_matched[i] = true;
                b_matched[j] = true;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;

    // Transpositions: mismatches between the two matched subsequences.
    std::size_t t2 = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!a_matched[i]) continue;
        while (!b_matched[j]) ++j;
        if (!(a[i] == b[j])) ++t2;
        ++j;
    }
    double mf = static_cast<double>(matches);
    double transpositions = static_cast<double>(t2) / 2.0;
    return (mf / n + mf / m + (mf - transpositions) / mf) / 3.0;
}

template <typename Seq>
double jaro_winkler_impl(const Seq& a, const Seq& b, const EditParams& params) {
    params.validate();
    double j = jaro_impl(a, b);
    if (j <= params.boost_threshold) return j;
    std::size_t cap = std::min({a.size(), b.size(), static_cast<std::size_t>(params.max_prefix)});
    std::size_t prefix = 0;
    while (prefix < cap && a[prefix] == b[prefix]) ++prefix;
    return j + static_cast<double>(prefix) * params.prefix_weight * (1.0 - j);
}

}  // namespace

std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return levenshtein_impl(a, b);
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    return levenshtein_impl(utf8_codepoints(a), utf8_codepoints(b));
}

double levenshtein_normalized(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
    return normalized_impl(a, b);
}

double levenshtein_normalized(std::string_view a, std::string_view b) {
    return normalized_impl(utf8_codepoints(a), utf8_codepoints(b));
}

double jaro(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return jaro_impl(a, b);
}

double jaro(std::string_view a, std::string_view b) {
    return jaro_impl(utf8_codepoints(a), utf8_codepoints(b));
}

double jaro_winkler(const std::vector<std::string>& a, const std::vector<std::string>& b,
                    const EditParams& params) {
    return jaro_winkler_impl(a, b, params);
}

double jaro_winkler(std::string_view a, std::string_view b, const EditParams& params) {
    return jaro_winkler_impl(utf8_codepoints(a), utf8_codepoints(b), params);
}

}  // namespace textsim
