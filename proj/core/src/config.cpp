#include "textsim/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "textsim/errors.hpp"

namespace textsim {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_bool(std::string_view value, const std::string& key) {
    if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "off" || value == "no") return false;
    throw ConfigError("expected a boolean for " + key + ", got '" + std::string(value) + "'");
}

int parse_int(std::string_view value, const std::string& key) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("expected an integer for " + key + ", got '" + std::string(value) + "'");
    }
    return out;
}

double parse_double(std::string_view value, const std::string& key) {
    try {
        std::size_t used = 0;
        double out = std::stod(std::string(value), &used);
        if (used != value.size()) throw std::invalid_argument("trailing garbage");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("expected a number for " + key + ", got '" + std::string(value) + "'");
    }
}

}  // namespace

FileConfig parse_config_text(std::string_view text) {
    FileConfig cfg;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos) ? text.substr(pos)
                                                              : text.substr(pos, nl - pos);
        ++line_no;
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected key=value on line " + std::to_string(line_no));
        }
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));

        if (key == "stopwords") {
            cfg.stopwords = std::string(value);
        } else if (key == "lowercase") {
            cfg.lowercase = parse_bool(value, key);
        } else if (key == "stem") {
            cfg.stem = parse_bool(value, key);
        } else if (key == "ngram_n") {
            cfg.ngram_n = parse_int(value, key);
        } else if (key == "ngram_skip") {
            cfg.ngram_skip = parse_int(value, key);
        } else if (key == "threshold_low") {
            cfg.threshold_low = parse_double(value, key);
        } else if (key == "threshold_high") {
            cfg.threshold_high = parse_double(value, key);
        } else {
            throw ConfigError("unknown config key '" + key + "' on line " +
                              std::to_string(line_no));
        }
    }
    return cfg;
}

FileConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::set<std::string> load_stopword_file(const std::string& path, bool lowercase) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read stopword file " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        words.emplace(lowercase ? utf8_lowercase(t) : std::string(t));
    }
    return words;
}

std::uint64_t stopword_checksum(const std::set<std::string>& words) {
    std::string repr;
    for (const auto& w : words) {
        repr += w;
        repr += '\n';
    }
    return fnv1a64(repr);
}

EffectiveConfig EffectiveConfig::defaults() {
    EffectiveConfig cfg;
    cfg.pipeline = PipelineConfig::default_german();
    cfg.stopwords_source = "builtin:de";
    cfg.stopwords_checksum = stopword_checksum(cfg.pipeline.stopwords);
    return cfg;
}

void EffectiveConfig::apply(const FileConfig& file) {
    if (file.lowercase) pipeline.lowercase = *file.lowercase;
    if (file.stem) pipeline.stem = *file.stem;
    if (file.stopwords) {
        if (*file.stopwords == "none") {
            pipeline.stopwords.clear();
            stopwords_source = "none";
        } else if (*file.stopwords == "builtin") {
            pipeline.stopwords = german_stopwords();
            stopwords_source = "builtin:de";
        } else {
            pipeline.stopwords = load_stopword_file(*file.stopwords, pipeline.lowercase);
            stopwords_source = *file.stopwords;
        }
        stopwords_checksum = stopword_checksum(pipeline.stopwords);
    }
    if (file.ngram_n) {
        if (*file.ngram_n < 1) throw ConfigError("ngram_n must be >= 1");
        ngram_n = *file.ngram_n;
    }
    if (file.ngram_skip) {
        if (*file.ngram_skip < 0) throw ConfigError("ngram_skip must be >= 0");
        ngram_skip = *file.ngram_skip;
    }
    if (file.threshold_low) threshold_low = *file.threshold_low;
    if (file.threshold_high) threshold_high = *file.threshold_high;
    if (!(0.0 <= threshold_low && threshold_low < threshold_high && threshold_high <= 1.0)) {
        throw ConfigError("thresholds must satisfy 0 <= low < high <= 1");
    }
}

std::uint64_t EffectiveConfig::fingerprint() const {
    std::ostringstream repr;
    repr << "pipeline=" << pipeline.fingerprint() << ";stop=" << stopwords_checksum
         << ";n=" << ngram_n << ";k=" << ngram_skip << ";tl=" << threshold_low
         << ";th=" << threshold_high;
    return fnv1a64(repr.str());
}

std::string EffectiveConfig::describe() const {
    std::ostringstream out;
    out << "lowercase=" << (pipeline.lowercase ? "1" : "0") << " stem="
        << (pipeline.stem ? "1" : "0") << " stopwords=" << stopwords_source << std::hex
        << " stopwords_fnv64=" << stopwords_checksum << std::dec << " ngram_n=" << ngram_n
        << " ngram_skip=" << ngram_skip << " thresholds=" << threshold_low << ","
        << threshold_high << std::hex << " fingerprint=" << fingerprint();
    return out.str();
}

}  // namespace textsim
