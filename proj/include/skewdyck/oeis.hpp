#ifndef SKEWDYCK_OEIS_HPP
#define SKEWDYCK_OEIS_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "skewdyck/rational.hpp"

namespace skewdyck {
namespace oeis {

// Parsed b-file: (index, value) pairs with contiguous increasing indices.
struct TermList {
    std::string anumber;  // "A" + 6 digits; may be empty for computed lists
    std::vector<std::pair<long, BigInt>> terms;
};

class ParseError : public std::runtime_error {
public:
    ParseError(long line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

enum class FetchFailure { BadANumber, MissingFixture, Transport, HttpStatus };

class FetchError : public std::runtime_error {
public:
    FetchError(FetchFailure kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    FetchFailure kind() const { return kind_; }

private:
    FetchFailure kind_;
};

// b-file text -> terms. Lines starting with '#' and blank lines are skipped;
// data lines are "<index> <value>". Throws ParseError with the offending
// line number on malformed input or non-contiguous indices.
TermList parse_bfile(const std::string& text, const std::string& anumber = "");

// Terms -> b-file text ("index value" per line).
std::string serialize(const TermList& t);

struct FetchConfig {
    std::string base_url = "https://oeis.org";
    std::chrono::seconds timeout{10};
    bool offline = false;
    // Explicit fixture directory; when empty the SKEWDYCK_FIXTURE_DIR
    // environment variable and then the built-in default are consulted.
    std::string fixture_dir;
};

std::string resolve_fixture_dir(const FetchConfig& cfg);

// Raw b-file text for the given A-number. Offline mode reads
// <fixture_dir>/b<digits>.txt; online mode issues
// GET <base_url>/<anumber>/b<digits>.txt. HTTP failures, transport
// errors/timeouts and missing fixtures raise distinct FetchError kinds.
std::string fetch_bfile(const std::string& anumber, const FetchConfig& cfg);

struct Mismatch {
    long index = 0;
    std::string expected;  // reference value
    std::string actual;    // computed value
};

struct ComparisonReport {
    long overlap_from = 0;
    long overlap_to = 0;
    long matched = 0;
    std::optional<Mismatch> first_mismatch;
};

// Element-wise equality over the overlapping index range; throws
// std::invalid_argument when the ranges do not overlap.
ComparisonReport compare(const TermList& computed, const TermList& reference);

}  // namespace oeis
}  // namespace skewdyck

#endif
