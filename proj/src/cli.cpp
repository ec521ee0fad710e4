#include "skewdyck/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "skewdyck/counting.hpp"
#include "skewdyck/formulas.hpp"
#include "skewdyck/oeis.hpp"
#include "skewdyck/verify.hpp"

namespace skewdyck {
namespace cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Invocation {
    Format format = Format::Json;
    std::ostream* out = nullptr;
    int exit_code = 0;
};

Model parse_model(const std::string& s) {
    return s == "r2l" ? Model::RightToLeft : Model::LeftToRight;
}

PeakPolicy parse_policy(const std::string& s) {
    return s == "all" ? PeakPolicy::AllowAll : PeakPolicy::ForbidLevel1Peaks;
}

const char* layer_letters(Model m) { return m == Model::LeftToRight ? "fgh" : "abc"; }

void emit_json(const Invocation& inv, const std::string& command, const json& params,
               const json& data, bool ok) {
    json record;
    record["command"] = command;
    record["params"] = params;
    record["data"] = data;
    record["status"] = ok ? "ok" : "fail";
    *inv.out << record.dump(2) << "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    return q + "\"";
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateOptions {
    long length = 0;
    long level = 0;
    std::string model = "l2r";
    std::string policy = "no-peak-1";
    std::string emit = "json";
    long cap = static_cast<long>(kDefaultEnumerationCap);
};

void run_enumerate(Invocation& inv, const EnumerateOptions& opt) {
    if (opt.level > opt.length) {
        throw CLI::ValidationError("enumerate", "--level cannot exceed --length");
    }
    auto paths = enumerate(static_cast<std::size_t>(opt.length), opt.level,
                           parse_model(opt.model), parse_policy(opt.policy),
                           static_cast<std::size_t>(opt.cap));
    if (opt.emit == "steps" || inv.format == Format::Text) {
        for (const Path& p : paths) *inv.out << p.letters() << "\n";
        return;
    }
    if (inv.format == Format::Csv) {
        *inv.out << "index,steps\n";
        for (std::size_t i = 0; i < paths.size(); ++i) {
            *inv.out << i << "," << paths[i].letters() << "\n";
        }
        return;
    }
    json params{{"length", opt.length}, {"level", opt.level}, {"model", opt.model},
                {"policy", opt.policy}};
    json data;
    data["count"] = paths.size();
    json list = json::array();
    for (const Path& p : paths) list.push_back(p.letters());
    data["paths"] = list;
    emit_json(inv, "enumerate", params, data, true);
}

// ---- count ----------------------------------------------------------------

struct CountOptions {
    long length = 0;
    long level = -1;
    bool open = false;
    bool table = false;
    std::string model = "l2r";
    std::string policy = "no-peak-1";
};

void run_count(Invocation& inv, const CountOptions& opt) {
    Model model = parse_model(opt.model);
    PeakPolicy policy = parse_policy(opt.policy);
    json params{{"length", opt.length}, {"model", opt.model}, {"policy", opt.policy}};

    if (opt.table) {
        CountTable t(model, policy, opt.length, opt.length);
        const char* letters = layer_letters(model);
        if (inv.format == Format::Json) {
            json data{{"n_max", t.n_max()}, {"j_max", t.j_max()}};
            json entries = json::array();
            for (long n = 0; n <= t.n_max(); ++n) {
                for (long j = 0; j <= t.j_max(); ++j) {
                    BigInt total = t.count(n, j);
                    if (total == 0) continue;
                    json e{{"n", n}, {"j", j}};
                    for (std::uint8_t l = 0; l < 3; ++l) {
                        e[std::string(1, letters[l])] = t.layer_count(n, j, l).get_str();
                    }
                    e["total"] = total.get_str();
                    entries.push_back(e);
                }
            }
            data["entries"] = entries;
            emit_json(inv, "count", params, data, true);
        } else {
            char sep = inv.format == Format::Csv ? ',' : ' ';
            if (inv.format == Format::Csv) {
                *inv.out << "n,j," << letters[0] << "," << letters[1] << "," << letters[2]
                         << ",total\n";
            }
            for (long n = 0; n <= t.n_max(); ++n) {
                for (long j = 0; j <= t.j_max(); ++j) {
                    BigInt total = t.count(n, j);
                    if (total == 0) continue;
                    *inv.out << n << sep << j;
                    for (std::uint8_t l = 0; l < 3; ++l) {
                        *inv.out << sep << t.layer_count(n, j, l).get_str();
                    }
                    *inv.out << sep << total.get_str() << "\n";
                }
            }
        }
        return;
    }

    BigInt value;
    if (opt.open) {
        value = count_open(opt.length, model, policy);
        params["open"] = true;
    } else {
        if (opt.level < 0) {
            throw CLI::ValidationError("count", "one of --level, --open or --table is required");
        }
        if (opt.level > opt.length) {
            throw CLI::ValidationError("count", "--level cannot exceed --length");
        }
        value = count(opt.length, opt.level, model, policy);
        params["level"] = opt.level;
    }
    switch (inv.format) {
        case Format::Json:
            emit_json(inv, "count", params, json{{"count", value.get_str()}}, true);
            break;
        case Format::Csv:
            if (opt.open) *inv.out << "n,count\n" << opt.length << "," << value.get_str() << "\n";
            else *inv.out << "n,j,count\n" << opt.length << "," << opt.level << ","
                          << value.get_str() << "\n";
            break;
        case Format::Text:
            *inv.out << value.get_str() << "\n";
            break;
    }
}

// ---- series ---------------------------------------------------------------

struct SeriesOptions {
    std::string gf;
    long order = -1;  // default depends on the variable
};

void run_series(Invocation& inv, const SeriesOptions& opt) {
    std::string variable = opt.gf == "y" ? "x" : "z";
    long order = opt.order >= 0 ? opt.order : (variable == "x" ? kDefaultOrderX : kDefaultOrderZ);
    if (order < 1) throw CLI::ValidationError("series", "--order must be at least 1");

    Laurent s = [&]() -> Laurent {
        if (opt.gf == "g0") return gf_g0(order);
        if (opt.gf == "s0") return gf_s0(order);
        if (opt.gf == "y") return gf_y(order);
        if (opt.gf == "open") return gf_open_l2r(order);
        if (opt.gf == "b0") return gf_b0(order);
        if (opt.gf == "dual-open") return gf_dual_open(order);
        if (opt.gf == "r1") return kernel_roots(order).r1;
        if (opt.gf == "r2") return kernel_roots(order).r2;
        if (opt.gf == "sqrtw") return gf_radicand_sqrt(order);
        if (opt.gf.rfind("sj:", 0) == 0) {
            long j = 0;
            try {
                std::size_t used = 0;
                j = std::stol(opt.gf.substr(3), &used);
                if (used != opt.gf.size() - 3 || j < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw CLI::ValidationError("series", "bad level in \"" + opt.gf + "\"");
            }
            return gf_sj(j, order);
        }
        throw CLI::ValidationError("series", "unknown generating function \"" + opt.gf + "\"");
    }();

    long first = std::min(0L, s.valuation());
    std::vector<std::string> coeffs;
    coeffs.reserve(static_cast<std::size_t>(s.order() - first));
    for (long e = first; e < s.order(); ++e) coeffs.push_back(s.coeff(e).get_str());

    switch (inv.format) {
        case Format::Json: {
            json params{{"gf", opt.gf}, {"order", order}};
            json data{{"variable", variable},
                      {"valuation", s.valuation()},
                      {"first_exponent", first},
                      {"coefficients", coeffs}};
            emit_json(inv, "series", params, data, true);
            break;
        }
        case Format::Csv:
            *inv.out << "exponent,coefficient\n";
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                *inv.out << first + static_cast<long>(i) << "," << coeffs[i] << "\n";
            }
            break;
        case Format::Text: {
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (i) *inv.out << ",";
                *inv.out << coeffs[i];
            }
            *inv.out << "\n";
            break;
        }
    }
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    std::string suite = "all";
    long order = kDefaultOrderZ;
    long enum_max = 12;
    long dp_max = 200;
};

json report_to_json(const Report& r) {
    json j{{"suite", r.suite},
           {"pass", r.pass},
           {"range", {{"from", r.range_from}, {"to", r.range_to}}}};
    if (r.first_failure) {
        j["first_failure"] = {{"index", r.first_failure->index},
                              {"expected", r.first_failure->expected},
                              {"actual", r.first_failure->actual}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

void run_verify(Invocation& inv, const VerifyOptions& opt) {
    VerifyParams params;
    params.order = opt.order;
    params.enum_max = opt.enum_max;
    params.dp_terms = opt.dp_max;
    std::vector<Report> reports = run_suites(opt.suite, params);
    bool all_pass = std::all_of(reports.begin(), reports.end(),
                                [](const Report& r) { return r.pass; });
    switch (inv.format) {
        case Format::Json: {
            json p{{"suite", opt.suite}, {"order", opt.order}, {"enum_max", opt.enum_max},
                   {"dp_max", opt.dp_max}};
            json data;
            json list = json::array();
            for (const Report& r : reports) list.push_back(report_to_json(r));
            data["suites"] = list;
            data["pass"] = all_pass;
            emit_json(inv, "verify", p, data, all_pass);
            break;
        }
        case Format::Csv:
            *inv.out << "suite,pass,from,to,failure_index,expected,actual\n";
            for (const Report& r : reports) {
                *inv.out << r.suite << "," << (r.pass ? "true" : "false") << "," << r.range_from
                         << "," << r.range_to << ",";
                if (r.first_failure) {
                    *inv.out << r.first_failure->index << ","
                             << csv_escape(r.first_failure->expected) << ","
                             << csv_escape(r.first_failure->actual);
                } else {
                    *inv.out << ",,";
                }
                *inv.out << "\n";
            }
            break;
        case Format::Text:
            for (const Report& r : reports) {
                *inv.out << summarize(r) << "\n";
                for (const std::string& note : r.notes) *inv.out << "  note: " << note << "\n";
            }
            break;
    }
    if (!all_pass) inv.exit_code = 1;
}

// ---- oeis-compare ---------------------------------------------------------

struct OeisOptions {
    std::string anumber = "A128723";
    long terms = 15;
    bool offline = false;
    std::string fixture_dir;
    std::string endpoint = "https://oeis.org";
    long timeout_s = 10;
};

void run_oeis_compare(Invocation& inv, const OeisOptions& opt) {
    if (opt.terms < 1) throw CLI::ValidationError("oeis-compare", "--terms must be positive");

    oeis::TermList computed;
    computed.anumber = "computed";
    Laurent y = gf_y(opt.terms);
    for (long n = 0; n < opt.terms; ++n) computed.terms.emplace_back(n, integer_coeff(y, n));

    oeis::FetchConfig cfg;
    cfg.base_url = opt.endpoint;
    cfg.timeout = std::chrono::seconds(opt.timeout_s);
    cfg.offline = opt.offline;
    cfg.fixture_dir = opt.fixture_dir;
    oeis::TermList reference = oeis::parse_bfile(oeis::fetch_bfile(opt.anumber, cfg), opt.anumber);

    oeis::ComparisonReport report = oeis::compare(computed, reference);
    bool ok = !report.first_mismatch && report.matched == opt.terms;

    switch (inv.format) {
        case Format::Json: {
            json p{{"anumber", opt.anumber}, {"terms", opt.terms}, {"offline", opt.offline}};
            if (!opt.fixture_dir.empty()) p["fixture_dir"] = opt.fixture_dir;
            json data{{"source", opt.offline ? "fixture" : "http"},
                      {"matched", report.matched},
                      {"overlap", {{"from", report.overlap_from}, {"to", report.overlap_to}}}};
            if (report.first_mismatch) {
                data["first_mismatch"] = {{"index", report.first_mismatch->index},
                                          {"expected", report.first_mismatch->expected},
                                          {"actual", report.first_mismatch->actual}};
            } else {
                data["first_mismatch"] = nullptr;
            }
            emit_json(inv, "oeis-compare", p, data, ok);
            break;
        }
        case Format::Csv:
            *inv.out << "anumber,terms,matched,overlap_from,overlap_to,"
                        "mismatch_index,expected,actual\n";
            *inv.out << opt.anumber << "," << opt.terms << "," << report.matched << ","
                     << report.overlap_from << "," << report.overlap_to << ",";
            if (report.first_mismatch) {
                *inv.out << report.first_mismatch->index << "," << report.first_mismatch->expected
                         << "," << report.first_mismatch->actual;
            } else {
                *inv.out << ",,";
            }
            *inv.out << "\n";
            break;
        case Format::Text:
            *inv.out << report.matched << "/" << opt.terms << " matched (indices "
                     << report.overlap_from << ".." << report.overlap_to << ")\n";
            if (report.first_mismatch) {
                *inv.out << "first mismatch at " << report.first_mismatch->index << ": expected "
                         << report.first_mismatch->expected << ", got "
                         << report.first_mismatch->actual << "\n";
            }
            break;
    }
    if (!ok) inv.exit_code = 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting and verification of skew Dyck paths without peaks at level 1"};
    app.name("skewdyck");
    app.require_subcommand(1);
    app.fallthrough();  // global --format may follow the subcommand

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    Invocation inv;
    inv.out = &out;

    auto model_check = CLI::IsMember({"l2r", "r2l"});
    auto policy_check = CLI::IsMember({"all", "no-peak-1"});

    EnumerateOptions eo;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "List all valid paths of a given length");
    enum_cmd->add_option("--length", eo.length, "Number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enum_cmd->add_option("--level", eo.level, "Final level")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enum_cmd->add_option("--model", eo.model, "Reading direction")->check(model_check)
        ->capture_default_str();
    enum_cmd->add_option("--policy", eo.policy, "Peak policy")->check(policy_check)
        ->capture_default_str();
    enum_cmd->add_option("--emit", eo.emit, "Path rendering")
        ->check(CLI::IsMember({"steps", "json"}))
        ->capture_default_str();
    enum_cmd->add_option("--enum-cap", eo.cap, "Enumeration length cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CountOptions co;
    CLI::App* count_cmd = app.add_subcommand("count", "Count valid paths exactly");
    count_cmd->add_option("--length", co.length, "Number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    CLI::Option* level_opt =
        count_cmd->add_option("--level", co.level, "Final level")->check(CLI::NonNegativeNumber);
    CLI::Option* open_opt = count_cmd->add_flag("--open", co.open, "Sum over all final levels");
    CLI::Option* table_opt =
        count_cmd->add_flag("--table", co.table, "Emit the whole (length, level, layer) table");
    level_opt->excludes(open_opt)->excludes(table_opt);
    open_opt->excludes(table_opt);
    count_cmd->add_option("--model", co.model, "Reading direction")->check(model_check)
        ->capture_default_str();
    count_cmd->add_option("--policy", co.policy, "Peak policy")->check(policy_check)
        ->capture_default_str();

    SeriesOptions so;
    CLI::App* series_cmd = app.add_subcommand("series", "Expand a closed-form generating function");
    series_cmd->add_option("--gf", so.gf,
                           "One of g0, s0, y, sj:<j>, open, b0, dual-open, r1, r2, sqrtw")
        ->required();
    series_cmd->add_option("--order", so.order, "Truncation order (default 64 in z, 32 in x)");

    VerifyOptions vo;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", vo.suite, "Suite to run")
        ->check(CLI::IsMember({"recurrence", "algebraic", "ode", "cross", "identities", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--order", vo.order, "Series truncation order in z")
        ->check(CLI::Range(8L, 4096L))
        ->capture_default_str();
    verify_cmd->add_option("--enum-max", vo.enum_max, "Exhaustive enumeration bound")
        ->check(CLI::Range(0L, 16L))
        ->capture_default_str();
    verify_cmd->add_option("--dp-max", vo.dp_max, "Axis-series terms for the recurrence")
        ->check(CLI::Range(5L, 5000L))
        ->capture_default_str();

    OeisOptions oo;
    CLI::App* oeis_cmd = app.add_subcommand("oeis-compare", "Compare computed terms with a b-file");
    oeis_cmd->add_option("--anumber", oo.anumber, "Sequence identifier")->capture_default_str();
    oeis_cmd->add_option("--terms", oo.terms, "Number of leading terms to compare")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oeis_cmd->add_flag("--offline", oo.offline, "Use the bundled fixture instead of HTTP");
    oeis_cmd->add_option("--fixture-dir", oo.fixture_dir,
                         "Fixture directory (default: $SKEWDYCK_FIXTURE_DIR or built-in)");
    oeis_cmd->add_option("--endpoint", oo.endpoint, "Base URL for b-file fetches")
        ->capture_default_str();
    oeis_cmd->add_option("--timeout", oo.timeout_s, "Fetch timeout in seconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        inv.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
        if (enum_cmd->parsed()) run_enumerate(inv, eo);
        else if (count_cmd->parsed()) run_count(inv, co);
        else if (series_cmd->parsed()) run_series(inv, so);
        else if (verify_cmd->parsed()) run_verify(inv, vo);
        else if (oeis_cmd->parsed()) run_oeis_compare(inv, oo);
        return inv.exit_code;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace skewdyck
