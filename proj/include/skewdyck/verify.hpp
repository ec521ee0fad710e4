#ifndef SKEWDYCK_VERIFY_HPP
#define SKEWDYCK_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewdyck/formulas.hpp"
#include "skewdyck/laurent.hpp"
#include "skewdyck/rational.hpp"

namespace skewdyck {

struct FailureRecord {
    long index = 0;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string suite;
    bool pass = false;
    long range_from = 0;
    long range_to = 0;
    std::optional<FailureRecord> first_failure;
    std::vector<std::string> notes;
};

std::string summarize(const Report& r);

// 3(n+4) s_{n+3} - (17n+41) s_{n+2} + 9n s_{n+1} + 5(n+1) s_n = 0 over
// [n_from, n_to]. Throws std::invalid_argument when seq is too short.
Report check_recurrence(const std::vector<BigInt>& seq, long n_from, long n_to);

// Residual of the algebraic equation
// -(x-1)(x-2) + 2(1-x^2) y - x(3+x) y^2 at a candidate series.
Laurent algebraic_residual(const Laurent& y);
// Passes iff the residual of gf_y vanishes through order - 1.
Report check_algebraic(long order);

// Residual of the differential equation
// -(9x^2+5x^3+3-17x) x y' + (9x^2+7x-5x^3-3) y + 3+9x^2-5x^3-7x at a
// candidate series.
Laurent ode_residual(const Laurent& y);
// Passes iff the residual of gf_y vanishes through order - 2.
Report check_ode(long order);

// Enumeration = table counts for n <= n_max_enum (both models and policies),
// then table = closed-form coefficients for n <= n_max_dp (levels up to
// j_max for the level-indexed series).
Report cross_check(long n_max_enum, long n_max_dp, long j_max);

// Kernel-root identities, the level-0 layer coincidences and the parity of
// the level-indexed series, all through the given order.
Report check_identities(long order);

// s_n as counted by the automaton table (paths of length 2n back to the
// axis, no peaks at level 1).
std::vector<BigInt> dp_axis_series(long terms);

// The recurrence on dp-generated terms: valid range starts at n = 1; the
// n = 0 residual on the leading terms is recorded in the notes.
Report suite_recurrence(long terms = 200);

struct VerifyParams {
    long order = kDefaultOrderZ;  // truncation order for series checks
    long enum_max = 12;           // exhaustive-enumeration bound
    long dp_terms = 200;          // axis-series terms for the recurrence
    long cross_dp_max = 30;       // table-vs-series bound
    long cross_j_max = 6;
};

std::vector<Report> run_suites(const std::string& which, const VerifyParams& params);

}  // namespace skewdyck

#endif
