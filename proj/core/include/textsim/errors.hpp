#ifndef TEXTSIM_ERRORS_HPP
#define TEXTSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace textsim {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- text pipeline ---

class EmptyDocumentError : public Error {
public:
    explicit EmptyDocumentError(const std::string& doc_id)
        : Error("document has no phrases: " + doc_id) {}
};

// --- n-gram scores ---

class MismatchedGramConfigError : public Error {
public:
    MismatchedGramConfigError() : Error("n-gram multisets have different n/skip/unit") {}
};

class EmptyReferenceError : public Error {
public:
    EmptyReferenceError() : Error("reference n-gram multiset is empty") {}
};

// --- edit distance ---

class InvalidParamsError : public Error {
public:
    explicit InvalidParamsError(const std::string& msg) : Error(msg) {}
};

// --- alignment map files ---

/// Parse error carrying the 1-based line number of the offending line.
class MapParseError : public Error {
public:
    MapParseError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line_no(line_no) {}
    int line_no;
};

class MapSyntaxError : public MapParseError {
public:
    MapSyntaxError(const std::string& msg, int line_no) : MapParseError(msg, line_no) {}
};

class IndexOutOfRangeError : public MapParseError {
public:
    IndexOutOfRangeError(const std::string& msg, int line_no) : MapParseError(msg, line_no) {}
};

class DuplicateSourceError : public MapParseError {
public:
    DuplicateSourceError(int source, int line_no)
        : MapParseError("source index " + std::to_string(source) + " appears twice", line_no) {}
};

class MissingSourceError : public Error {
public:
    explicit MissingSourceError(int source)
        : Error("no mapping line for source phrase " + std::to_string(source)), source(source) {}
    int source;
};

class InconsistentCountsError : public Error {
public:
    explicit InconsistentCountsError(const std::string& msg) : Error(msg) {}
};

// --- metrics / evaluation ---

class UnknownMetricError : public Error {
public:
    explicit UnknownMetricError(const std::string& id) : Error("unknown metric: " + id) {}
};

class MissingSourceFileError : public Error {
public:
    explicit MissingSourceFileError(const std::string& path)
        : Error("corpus has no source.txt: " + path) {}
};

class EmptySubcorpusError : public Error {
public:
    explicit EmptySubcorpusError(const std::string& name)
        : Error("sub-corpus holds no documents: " + name) {}
};

class DanglingMapError : public Error {
public:
    explicit DanglingMapError(const std::string& map_name)
        : Error("gold map references no document: " + map_name) {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t nx, std::size_t ny)
        : Error("score sequences differ in length: " + std::to_string(nx) + " vs " +
                std::to_string(ny)) {}
};

class ZeroVarianceError : public Error {
public:
    ZeroVarianceError() : Error("correlation undefined for a constant sequence") {}
};

class InvalidThresholdsError : public Error {
public:
    explicit InvalidThresholdsError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace textsim

#endif  // TEXTSIM_ERRORS_HPP
