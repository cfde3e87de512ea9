#include "textsim/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "textsim/errors.hpp"

namespace textsim {

std::vector<std::pair<int, int>> AlignmentMap::links() const {
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < source_count(); ++s) {
        for (int t : targets_by_source[s]) out.emplace_back(s, t);
    }
    return out;
}

RuleLimits limits_for(RuleLevel level) {
    if (level == RuleLevel::Basic) {
        return RuleLimits{1, 1, /*combined_budget=*/true, /*exchanges_allowed=*/false};
    }
    return RuleLimits{5, 5, /*combined_budget=*/false, /*exchanges_allowed=*/true};
}

namespace {

struct LineCursor {
    std::string_view line;
    std::size_t pos = 0;
    int line_no;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.size();
    }
    int read_int() {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc() || ptr == line.data() + pos) {
            throw MapSyntaxError("expected a phrase index", line_no);
        }
        pos = static_cast<std::size_t>(ptr - line.data());
        return value;
    }
    bool consume(char c) {
        skip_ws();
        if (pos < line.size() && line[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

std::string_view trim_view(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<MapEntry> parse_map_lines(std::string_view text) {
    std::vector<MapEntry> entries;
    std::set<int> seen_sources;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos) ? text.substr(pos)
                                                              : text.substr(pos, nl - pos);
        ++line_no;
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        std::string_view line = trim_view(raw);
        if (line.empty() || line.front() == '#') continue;

        LineCursor cur{line, 0, line_no};
        int source = cur.read_int();
        if (!cur.consume(':')) throw MapSyntaxError("expected ':' after source index", line_no);
        std::vector<int> targets;
        if (!cur.at_end()) {
            targets.push_back(cur.read_int());
            while (!cur.at_end()) {
                if (!cur.consume(',')) {
                    throw MapSyntaxError("expected ',' between target indices", line_no);
                }
                targets.push_back(cur.read_int());
            }
        }

        if (source < 0) {
            throw IndexOutOfRangeError("source index " + std::to_string(source), line_no);
        }
        for (int t : targets) {
            if (t < 0) throw IndexOutOfRangeError("target index " + std::to_string(t), line_no);
        }
        if (!seen_sources.insert(source).second) throw DuplicateSourceError(source, line_no);

        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        entries.push_back({source, std::move(targets), line_no});
    }
    return entries;
}

std::string canonicalize_map_lines(std::vector<MapEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const MapEntry& a, const MapEntry& b) { return a.source < b.source; });
    std::ostringstream out;
    for (const auto& entry : entries) {
        out << entry.source << ':';
        for (std::size_t k = 0; k < entry.targets.size(); ++k) {
            out << (k == 0 ? " " : ",") << entry.targets[k];
        }
        out << '\n';
    }
    return out.str();
}

AlignmentMap parse_alignment(std::string_view text, std::optional<int> source_count,
                             std::optional<int> target_count) {
    std::vector<MapEntry> entries = parse_map_lines(text);

    int max_source = -1;
    int max_target = -1;
    for (const auto& entry : entries) {
        if (source_count && entry.source >= *source_count) {
            throw IndexOutOfRangeError("source index " + std::to_string(entry.source),
                                       entry.line_no);
        }
        for (int t : entry.targets) {
            if (target_count && t >= *target_count) {
                throw IndexOutOfRangeError("target index " + std::to_string(t), entry.line_no);
            }
            max_target = std::max(max_target, t);
        }
        max_source = std::max(max_source, entry.source);
    }

    int sources = source_count.value_or(max_source + 1);
    AlignmentMap map;
    map.targets_by_source.resize(sources);
    std::vector<bool> present(sources, false);
    for (auto& entry : entries) {
        present[entry.source] = true;
        map.targets_by_source[entry.source] = std::move(entry.targets);
    }
    for (int s = 0; s < sources; ++s) {
        if (!present[s]) throw MissingSourceError(s);
    }
    map.target_count = target_count.value_or(max_target + 1);
    return map;
}

std::string serialize_alignment(const AlignmentMap& map) {
    std::ostringstream out;
    for (int s = 0; s < map.source_count(); ++s) {
        out << s << ':';
        const auto& targets = map.targets_by_source[s];
        for (std::size_t k = 0; k < targets.size(); ++k) {
            out << (k == 0 ? " " : ",") << targets[k];
        }
        out << '\n';
    }
    return out.str();
}

LinkClassification classify_links(const AlignmentMap& map) {
    LinkClassification cls;
    std::map<int, std::set<int>> sources_by_target;
    for (int s = 0; s < map.source_count(); ++s) {
        const auto& targets = map.targets_by_source[s];
        if (targets.empty()) {
            cls.deleted.insert(s);
            continue;
        }
        for (int t : targets) sources_by_target[t].insert(s);
        if (targets.size() >= 2) {
            cls.splits.emplace(s, std::set<int>(targets.begin(), targets.end()));
        }
    }
    for (const auto& [t, sources] : sources_by_target) {
        if (sources.size() >= 2) cls.merges.emplace(t, sources);
    }
    // Two sources sharing two or more targets marks an exchanged segment.
    for (int s1 = 0; s1 < map.source_count(); ++s1) {
        for (int s2 = s1 + 1; s2 < map.source_count(); ++s2) {
            const auto& t1 = map.targets_by_source[s1];
            const auto& t2 = map.targets_by_source[s2];
            std::vector<int> common;
            std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) cls.exchanges.emplace(s1, s2);
        }
    }
    for (int t = 0; t < map.target_count; ++t) {
        if (!sources_by_target.count(t)) cls.added.insert(t);
    }
    return cls;
}

std::vector<Violation> validate_rules(const AlignmentMap& map, const PhraseDocument& source_doc,
                                      const PhraseDocument& target_doc, RuleLevel level) {
    if (static_cast<int>(source_doc.size()) != map.source_count() ||
        static_cast<int>(target_doc.size()) != map.target_count) {
        throw InconsistentCountsError(
            "documents have " + std::to_string(source_doc.size()) + "/" +
            std::to_string(target_doc.size()) + " phrases but the map covers " +
            std::to_string(map.source_count()) + "/" + std::to_string(map.target_count));
    }

    std::vector<Violation> violations;
    for (std::size_t i = 0; i < source_doc.size(); ++i) {
        for (std::size_t j = 0; j < target_doc.size(); ++j) {
            if (trim_view(source_doc.phrases[i]) == trim_view(target_doc.phrases[j])) {
                violations.push_back(
                    {ViolationKind::UnalteredPhrase,
                     "source phrase " + std::to_string(i) + " appears unaltered as target " +
                         std::to_string(j),
                     static_cast<int>(i), static_cast<int>(j)});
            }
        }
    }

    LinkClassification cls = classify_links(map);
    RuleLimits limits = limits_for(level);
    int added = static_cast<int>(cls.added.size());
    int deleted = static_cast<int>(cls.deleted.size());

    if (limits.combined_budget) {
        if (added + deleted > limits.max_additions) {
            violations.push_back({ViolationKind::AdditionBudget,
                                  "added+deleted phrases " + std::to_string(added + deleted) +
                                      " > " + std::to_string(limits.max_additions)});
        }
    } else {
        if (added > limits.max_additions) {
            violations.push_back({ViolationKind::AdditionBudget,
                                  "added phrases " + std::to_string(added) + " > " +
                                      std::to_string(limits.max_additions)});
        }
        if (deleted > limits.max_deletions) {
            violations.push_back({ViolationKind::DeletionBudget,
                                  "deleted phrases " + std::to_string(deleted) + " > " +
                                      std::to_string(limits.max_deletions)});
        }
    }
    if (!limits.exchanges_allowed) {
        for (const auto& [s1, s2] : cls.exchanges) {
            violations.push_back({ViolationKind::ExchangeForbidden,
                                  "sources " + std::to_string(s1) + " and " + std::to_string(s2) +
                                      " exchange segments",
                                  s1, s2});
        }
    }
    return violations;
}

}  // namespace textsim
