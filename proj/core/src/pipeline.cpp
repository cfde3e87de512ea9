#include "textsim/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "textsim/errors.hpp"

#include "stopwords_de.inc"

namespace textsim {

namespace {

// --- UTF-8 decoding ---

// Decodes the code point starting at byte i and advances i. Malformed
// sequences yield the single byte value so bad input degrades instead of
// aborting the pipeline.
char32_t next_codepoint(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        i += 1;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        char32_t cp = ((b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        char32_t cp = ((b0 & 0x0F) << 12) | ((byte(i + 1) & 0x3F) << 6) | (byte(i + 2) & 0x3F);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        char32_t cp = ((b0 & 0x07) << 18) | ((byte(i + 1) & 0x3F) << 12) |
                      ((byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
        i += 4;
        return cp;
    }
    i += 1;
    return b0;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Covers ASCII plus the Latin, Greek and Cyrillic blocks European corpora
// use; anything outside is a separator.
bool is_letter(char32_t cp) {
    if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
    if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
    if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
    if (cp >= 0x100 && cp <= 0x24F) return true;   // Latin Extended-A/B
    if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x387;  // Greek
    if (cp >= 0x400 && cp <= 0x4FF) return true;   // Cyrillic
    if (cp >= 0x1E00 && cp <= 0x1EFF) return true; // Latin Extended Additional
    return false;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_token_char(char32_t cp) { return is_letter(cp) || is_digit(cp); }

char32_t lower_codepoint(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp == 0x130) return 'i';   // İ
    if (cp == 0x178) return 0xFF;  // Ÿ -> ÿ
    if (cp == 0x1E9E) return 0xDF; // ẞ -> ß
    if (cp >= 0x100 && cp <= 0x137 && (cp & 1) == 0) return cp + 1;
    if (cp >= 0x139 && cp <= 0x148 && (cp & 1) == 1) return cp + 1;
    if (cp >= 0x14A && cp <= 0x177 && (cp & 1) == 0) return cp + 1;
    if (cp >= 0x179 && cp <= 0x17E && (cp & 1) == 1) return cp + 1;
    if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    return cp;
}

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// German abbreviations that keep a following "." from ending a sentence.
// Single letters (initials, "z.", "u.") are handled separately.
const std::set<std::string>& sentence_abbreviations() {
    static const std::set<std::string> abbrevs = {
        "abb", "abs", "allg", "bspw", "bzw", "ca", "dr", "etc", "evtl",
        "ggf", "inkl", "max", "min", "nr", "prof", "sog", "tel", "usw",
        "vgl", "zzgl",
    };
    return abbrevs;
}

bool ends_in_abbreviation(std::string_view sentence_so_far) {
    // Word of letters/digits immediately before the terminal run.
    std::vector<std::string> cps = utf8_codepoints(sentence_so_far);
    std::size_t end = cps.size();
    std::size_t begin = end;
    while (begin > 0) {
        std::size_t i = 0;
        char32_t cp = next_codepoint(cps[begin - 1], i);
        if (!is_token_char(cp)) break;
        --begin;
    }
    if (begin == end) return false;
    if (end - begin == 1) {
        std::size_t i = 0;
        return is_letter(next_codepoint(cps[begin], i));  // an initial
    }
    std::string word;
    for (std::size_t k = begin; k < end; ++k) word += cps[k];
    return sentence_abbreviations().count(utf8_lowercase(word)) > 0;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '.' || c == '?' || c == '!') {
            std::size_t run_end = i;
            while (run_end < text.size() &&
                   (text[run_end] == '.' || text[run_end] == '?' || text[run_end] == '!')) {
                ++run_end;
            }
            bool boundary = run_end >= text.size() ||
                            std::isspace(static_cast<unsigned char>(text[run_end]));
            bool lone_period = (run_end - i == 1) && c == '.';
            if (boundary && !(lone_period && ends_in_abbreviation(current))) {
                current.append(text.substr(i, run_end - i));
                auto t = trim(current);
                if (!t.empty()) out.emplace_back(t);
                current.clear();
                i = run_end;
                continue;
            }
            current.append(text.substr(i, run_end - i));
            i = run_end;
            continue;
        }
        current.push_back(c);
        ++i;
    }
    auto t = trim(current);
    if (!t.empty()) out.emplace_back(t);
    return out;
}

}  // namespace

std::vector<std::string> utf8_codepoints(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        next_codepoint(text, i);
        out.emplace_back(text.substr(start, i - start));
    }
    return out;
}

std::string utf8_lowercase(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        append_utf8(out, lower_codepoint(next_codepoint(text, i)));
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::set<std::string>& german_stopwords() {
    static const std::set<std::string> words = [] {
        std::set<std::string> w;
        std::istringstream in(kGermanStopwordsRaw);
        std::string line;
        while (std::getline(in, line)) {
            auto t = trim(line);
            if (!t.empty()) w.emplace(t);
        }
        return w;
    }();
    return words;
}

PipelineConfig PipelineConfig::bare() { return PipelineConfig{}; }

PipelineConfig PipelineConfig::default_german() {
    PipelineConfig cfg;
    cfg.stopwords = german_stopwords();
    return cfg;
}

std::uint64_t PipelineConfig::fingerprint() const {
    std::string repr;
    repr += lowercase ? "lc=1;" : "lc=0;";
    repr += stem ? "stem=1;" : "stem=0;";
    repr += "rule=letter-digit;";
    repr += unit == Unit::Word ? "unit=word;" : "unit=char;";
    repr += "stop=";
    for (const auto& w : stopwords) {
        repr += w;
        repr += '\x1f';
    }
    return fnv1a64(repr);
}

PhraseDocument segment_phrases(std::string_view raw_text, SegmentMode mode,
                               std::string doc_id) {
    PhraseDocument doc;
    doc.id = std::move(doc_id);
    if (mode == SegmentMode::Line) {
        std::size_t pos = 0;
        while (pos <= raw_text.size()) {
            auto nl = raw_text.find('\n', pos);
            std::string_view line = (nl == std::string_view::npos)
                                        ? raw_text.substr(pos)
                                        : raw_text.substr(pos, nl - pos);
            auto t = trim(line);
            if (!t.empty()) doc.phrases.emplace_back(t);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    } else {
        doc.phrases = split_sentences(raw_text);
    }
    if (doc.phrases.empty()) throw EmptyDocumentError(doc.id);
    return doc;
}

std::vector<std::string> tokenize_normalize(std::string_view phrase,
                                            const PipelineConfig& config) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < phrase.size()) {
        std::size_t start = i;
        char32_t cp = next_codepoint(phrase, i);
        if (is_token_char(cp)) {
            current.append(phrase.substr(start, i - start));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));

    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (auto& tok : tokens) {
        std::string t = config.lowercase ? utf8_lowercase(tok) : std::move(tok);
        if (config.stopwords.count(t)) continue;
        if (config.stem) {
            // Minimal German suffix stripper: one suffix, longest first,
            // and at least 3 code points must remain.
            static constexpr std::array<std::string_view, 5> suffixes = {"en", "er", "e",
                                                                         "n", "s"};
            for (auto suf : suffixes) {
                if (t.size() > suf.size() && t.ends_with(suf)) {
                    std::string stem = t.substr(0, t.size() - suf.size());
                    if (utf8_codepoints(stem).size() >= 3) {
                        t = std::move(stem);
                        break;
                    }
                }
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

TermVector term_vector(const std::vector<std::string>& tokens) {
    TermVector v;
    for (const auto& t : tokens) v.weights[t] += 1.0;
    return v;
}

TermSet term_set(const std::vector<std::string>& tokens) {
    TermSet s;
    s.terms.insert(tokens.begin(), tokens.end());
    return s;
}

double TermVector::total_weight() const {
    double sum = 0.0;
    for (const auto& [_, w] : weights) sum += w;
    return sum;
}

long NGramMultiset::total() const {
    long sum = 0;
    for (const auto& [_, c] : grams) sum += c;
    return sum;
}

namespace {

void collect_skipgrams(const std::vector<std::string>& seq, int n, int skip,
                       std::size_t next_min, std::size_t next_max,
                       NGramMultiset::Gram& current, std::map<NGramMultiset::Gram, int>& out) {
    if (static_cast<int>(current.size()) == n) {
        ++out[current];
        return;
    }
    for (std::size_t j = next_min; j < seq.size() && j <= next_max; ++j) {
        current.push_back(seq[j]);
        collect_skipgrams(seq, n, skip, j + 1, j + 1 + skip, current, out);
        current.pop_back();
    }
}

}  // namespace

NGramMultiset extract_ngrams(const std::vector<std::string>& seq, int n, int skip, Unit unit) {
    if (n < 1) throw InvalidParamsError("n-gram length must be >= 1");
    if (skip < 0) throw InvalidParamsError("skip must be >= 0");
    NGramMultiset ms;
    ms.n = n;
    ms.skip = skip;
    ms.unit = unit;
    if (static_cast<std::size_t>(n) > seq.size()) return ms;
    NGramMultiset::Gram current;
    current.reserve(n);
    for (std::size_t i = 0; i + n <= seq.size(); ++i) {
        current.push_back(seq[i]);
        collect_skipgrams(seq, n, skip, i + 1, i + 1 + skip, current, ms.grams);
        current.pop_back();
    }
    return ms;
}

}  // namespace textsim
