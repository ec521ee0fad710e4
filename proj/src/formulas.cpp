#include "skewdyck/formulas.hpp"

#include <stdexcept>
#include <string>

namespace skewdyck {

namespace {

// Intermediates are computed with headroom so the requested order survives
// the divisions; results are cut back to exactly `order`.
long work_order(long order, long margin) { return order + margin; }

Laurent poly(std::vector<std::pair<long, Rational>> terms, long order) {
    return Laurent::from_terms(terms, order);
}

Laurent cut(const Laurent& s, long order, const char* what) {
    if (s.order() < order) {
        throw std::logic_error(std::string(what) + ": lost precision (have " +
                               std::to_string(s.order()) + ", need " + std::to_string(order) + ")");
    }
    return s.truncated(order);
}

// Path-count series must have no pole left after cancellation.
Laurent require_counting_series(const Laurent& s, const char* what) {
    if (s.valuation() < 0) {
        throw std::domain_error(std::string(what) + ": cancellation failure, valuation " +
                                std::to_string(s.valuation()));
    }
    return s;
}

}  // namespace

Laurent gf_radicand_sqrt(long order) {
    return sqrt_series(poly({{0, 1}, {2, -6}, {4, 5}}, order));
}

KernelRoots kernel_roots(long order) {
    long w = work_order(order, 4);
    Laurent rt = gf_radicand_sqrt(w);
    Laurent one_plus_z2 = poly({{0, 1}, {2, 1}}, w);
    Laurent two_z = Laurent::monomial(2, 1, w);
    Laurent r1 = (one_plus_z2 + rt) / two_z;
    Laurent r2 = (one_plus_z2 - rt) / two_z;
    return {cut(r1, order, "r1"), cut(r2, order, "r2")};
}

Laurent kernel_at(const Laurent& u) {
    long w = u.order() + 8;
    Laurent z = Laurent::monomial(1, 1, w);
    Laurent lin = poly({{0, 1}, {2, 1}}, w);       // 1 + z^2
    Laurent cst = poly({{1, 2}, {3, -1}}, w);      // z (2 - z^2)
    return z * u * u - lin * u + cst;
}

Laurent gf_g0(long order) {
    long w = work_order(order, 8);
    Laurent num = poly({{0, 1}, {4, -2}, {2, -3}}, w) - gf_radicand_sqrt(w);
    Laurent den = poly({{2, 6}, {4, 2}}, w);  // 2 (z^2 + 3) z^2
    return require_counting_series(cut(num / den, order, "g0"), "g0");
}

Laurent gf_s0(long order) {
    long w = work_order(order, 8);
    Laurent num = poly({{0, 1}, {4, -1}}, w) - gf_radicand_sqrt(w);
    Laurent den = poly({{2, 3}, {4, 1}}, w);  // (z^2 + 3) z^2
    return require_counting_series(cut(num / den, order, "s0"), "s0");
}

Laurent gf_y(long order) {
    return reindex_even_to_x(gf_s0(2 * order));
}

Laurent gf_y_direct(long order) {
    long w = work_order(order, 8);
    Laurent rt = sqrt_series(poly({{0, 1}, {1, -6}, {2, 5}}, w));
    Laurent num = poly({{0, 1}, {2, -1}}, w) - rt;
    Laurent den = poly({{1, 3}, {2, 1}}, w);  // x (x + 3)
    return require_counting_series(cut(num / den, order, "y"), "y");
}

namespace {

// numerator shared by every s_j: z^4 + z^4 g0 + z^2 g0 - z^2 + 1
Laurent sj_numerator(long w) {
    Laurent g0 = gf_g0(w);
    return poly({{4, 1}, {2, -1}, {0, 1}}, w) + (poly({{4, 1}, {2, 1}}, w) * g0);
}

}  // namespace

Laurent gf_sj(long j, long order) {
    if (j < 0) throw std::invalid_argument("gf_sj: negative level");
    long w = work_order(order, 8 + 2 * j);
    Laurent inv_r1 = kernel_roots(w).r2 / poly({{0, 2}, {2, -1}}, w);  // r2 / (2 - z^2)
    Laurent s = sj_numerator(w) * pow(inv_r1, static_cast<unsigned long>(j) + 1) /
                Laurent::monomial(1, 1, w);
    return require_counting_series(cut(s, order, "sj"), "sj");
}

Laurent gf_sj_laurent(long j, long order) {
    if (j < 0) throw std::invalid_argument("gf_sj_laurent: negative level");
    long w = work_order(order, 8 + 2 * j);
    Laurent r1 = kernel_roots(w).r1;
    Laurent den = Laurent::monomial(1, 1, w) * pow(r1, static_cast<unsigned long>(j) + 1);
    Laurent s = sj_numerator(w) / den;
    return require_counting_series(cut(s, order, "sj_laurent"), "sj_laurent");
}

Laurent gf_open_l2r(long order) {
    long w = work_order(order, 8);
    Laurent rt = gf_radicand_sqrt(w);
    Laurent num = poly({{5, -2}, {4, -3}, {3, 1}, {2, -5}, {1, -3}, {0, 4}}, w) -
                  poly({{2, 1}, {1, 3}, {0, 4}}, w) * rt;
    // 2 z (3 + z^2) (z^2 + 2z - 1)
    Laurent den = Laurent::monomial(2, 1, w) * poly({{0, 3}, {2, 1}}, w) *
                  poly({{2, 1}, {1, 2}, {0, -1}}, w);
    return require_counting_series(cut(num / den, order, "open"), "open");
}

Laurent gf_b0(long order) {
    long w = work_order(order, 8);
    Laurent num = poly({{0, 1}, {4, -1}}, w) - gf_radicand_sqrt(w);
    Laurent den = poly({{2, 3}, {4, 1}}, w);  // z^2 (3 + z^2)
    Laurent b0 = num / den - Laurent::constant(1, w);
    return require_counting_series(cut(b0, order, "b0"), "b0");
}

Laurent gf_dual_open(long order) {
    long w = work_order(order, 12);
    KernelRoots roots = kernel_roots(w);
    const Laurent& r1 = roots.r1;
    const Laurent& r2 = roots.r2;
    Laurent b0 = gf_b0(w);
    Laurent z = Laurent::monomial(1, 1, w);
    Laurent one = Laurent::constant(1, w);

    // B(z,1) after cancelling the bad kernel factor
    Laurent num = z * (Rational(2) * r1 * z + Rational(2) * r1 * z * b0 + b0 * r1 +
                       Rational(2) * z + Rational(2) * z * b0) * r2;
    Laurent den = r1 * poly({{2, 1}, {0, -2}}, w) * (r2 - one);
    Laurent b_at_1 = num / den;

    Laurent common = (one + z * b_at_1) / poly({{0, 1}, {1, -2}}, w);  // (1 + z B)/(1 - 2z)
    Laurent a_at_1 = poly({{0, 1}, {1, -1}}, w) * common;
    Laurent c_at_1 = z * common;
    return require_counting_series(cut(a_at_1 + b_at_1 + c_at_1, order, "dual_open"),
                                   "dual_open");
}

GFBundle build_gf_bundle(long order, long j_max) {
    GFBundle b{gf_g0(order), gf_g0(order),     gf_s0(order), gf_y(order),
               gf_open_l2r(order), gf_b0(order), gf_dual_open(order), {}};
    for (long j = 0; j <= j_max; ++j) b.sj.push_back(gf_sj(j, order));
    return b;
}

}  // namespace skewdyck
