#include "skewdyck/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"

namespace skewdyck {
namespace oeis {

namespace {

bool valid_anumber(const std::string& a) {
    if (a.size() != 7 || a[0] != 'A') return false;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(a[i]))) return false;
    }
    return true;
}

std::string bfile_name(const std::string& anumber) {
    return "b" + anumber.substr(1) + ".txt";
}

}  // namespace

TermList parse_bfile(const std::string& text, const std::string& anumber) {
    TermList out;
    out.anumber = anumber;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream fields(line);
        long index = 0;
        std::string value_text, extra;
        if (!(fields >> index >> value_text)) {
            throw ParseError(line_no, "expected \"index value\", got \"" + line + "\"");
        }
        if (fields >> extra) {
            throw ParseError(line_no, "trailing content \"" + extra + "\"");
        }
        BigInt value;
        if (value.set_str(value_text, 10) != 0) {
            throw ParseError(line_no, "bad integer \"" + value_text + "\"");
        }
        if (!out.terms.empty()) {
            long prev = out.terms.back().first;
            if (index <= prev) {
                throw ParseError(line_no, "non-monotone index " + std::to_string(index));
            }
            if (index != prev + 1) {
                throw ParseError(line_no, "non-contiguous index " + std::to_string(index) +
                                              " after " + std::to_string(prev));
            }
        }
        out.terms.emplace_back(index, value);
    }
    return out;
}

std::string serialize(const TermList& t) {
    std::string out;
    for (const auto& [index, value] : t.terms) {
        out += std::to_string(index);
        out += ' ';
        out += value.get_str();
        out += '\n';
    }
    return out;
}

std::string resolve_fixture_dir(const FetchConfig& cfg) {
    if (!cfg.fixture_dir.empty()) return cfg.fixture_dir;
    if (const char* env = std::getenv("SKEWDYCK_FIXTURE_DIR"); env && *env) return env;
#ifdef SKEWDYCK_DEFAULT_FIXTURE_DIR
    return SKEWDYCK_DEFAULT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

std::string fetch_bfile(const std::string& anumber, const FetchConfig& cfg) {
    if (!valid_anumber(anumber)) {
        throw FetchError(FetchFailure::BadANumber,
                         "bad A-number \"" + anumber + "\" (want A followed by 6 digits)");
    }
    if (cfg.offline) {
        std::string path = resolve_fixture_dir(cfg) + "/" + bfile_name(anumber);
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw FetchError(FetchFailure::MissingFixture, "missing fixture " + path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    httplib::Client client(cfg.base_url);
    client.set_connection_timeout(cfg.timeout.count(), 0);
    client.set_read_timeout(cfg.timeout.count(), 0);
    client.set_follow_location(true);
    std::string path = "/" + anumber + "/" + bfile_name(anumber);
    httplib::Result res = client.Get(path);
    if (!res) {
        throw FetchError(FetchFailure::Transport,
                         "transport failure for " + cfg.base_url + path + ": " +
                             httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw FetchError(FetchFailure::HttpStatus, "HTTP " + std::to_string(res->status) +
                                                       " for " + cfg.base_url + path);
    }
    return res->body;
}

ComparisonReport compare(const TermList& computed, const TermList& reference) {
    if (computed.terms.empty() || reference.terms.empty()) {
        throw std::invalid_argument("compare: empty term list");
    }
    long from = std::max(computed.terms.front().first, reference.terms.front().first);
    long to = std::min(computed.terms.back().first, reference.terms.back().first);
    if (from > to) {
        throw std::invalid_argument("compare: index ranges do not overlap");
    }
    ComparisonReport report;
    report.overlap_from = from;
    report.overlap_to = to;
    for (long i = from; i <= to; ++i) {
        const BigInt& a = computed.terms[i - computed.terms.front().first].second;
        const BigInt& b = reference.terms[i - reference.terms.front().first].second;
        if (a == b) {
            ++report.matched;
        } else if (!report.first_mismatch) {
            report.first_mismatch = Mismatch{i, b.get_str(), a.get_str()};
        }
    }
    return report;
}

}  // namespace oeis
}  // namespace skewdyck
