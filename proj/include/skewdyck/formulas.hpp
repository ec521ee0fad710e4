#ifndef SKEWDYCK_FORMULAS_HPP
#define SKEWDYCK_FORMULAS_HPP

#include "skewdyck/laurent.hpp"

namespace skewdyck {

// Closed forms for the path-counting generating functions. All constructors
// take the truncation order of the returned series; z marks steps, x = z^2
// marks step pairs. Each path-count series is checked to be a power series
// with integral nonnegative coefficients; failure of the built-in
// denominator cancellations throws std::domain_error.

inline constexpr long kDefaultOrderZ = 64;
inline constexpr long kDefaultOrderX = 32;

// sqrt(1 - 6 z^2 + 5 z^4), the radical shared by every closed form.
Laurent gf_radicand_sqrt(long order);

struct KernelRoots {
    Laurent r1;  // valuation -1
    Laurent r2;  // valuation +1
};

// Roots of the kernel K(u) = z u^2 - (1 + z^2) u + z (2 - z^2):
// r_{1,2} = (1 + z^2 ± sqrt(1 - 6 z^2 + 5 z^4)) / (2 z).
KernelRoots kernel_roots(long order);

// K evaluated at a series argument.
Laurent kernel_at(const Laurent& u);

// Level-0 series of the down-black layer:
// g0 = (1 - 2 z^4 - 3 z^2 - sqrt(1-6z^2+5z^4)) / (2 (z^2+3) z^2).
Laurent gf_g0(long order);

// All returns to the axis: s0 = f0 + g0 + h0
//    = (1 - z^4 - sqrt(1-6z^2+5z^4)) / ((z^2+3) z^2).
Laurent gf_s0(long order);

// s0 rewritten in x = z^2; the generating function of A128723. Built by
// reindexing gf_s0.
Laurent gf_y(long order);
// The same function expanded directly from
// y(x) = (1 - x^2 - sqrt(1 - 6x + 5x^2)) / (x (x + 3)).
Laurent gf_y_direct(long order);

// Paths ending at level j:
// s_j = (z^4 + z^4 g0 + z^2 g0 - z^2 + 1) / (z r1^{j+1}),
// computed through 1/r1 = r2 / (2 - z^2).
Laurent gf_sj(long j, long order);
// Same value, dividing directly by the Laurent series z r1^{j+1}.
Laurent gf_sj_laurent(long j, long order);

// Paths with any end level:
// S(z,1) = (-2z^5 - 3z^4 + z^3 - 5z^2 - 3z + 4 - (z^2+3z+4) sqrt(1-6z^2+5z^4))
//          / (2 z (3+z^2) (z^2+2z-1)).
Laurent gf_open_l2r(long order);

// Dual model, down-entered layer at level 0:
// b0 = (1 - z^4 - sqrt(1-6z^2+5z^4)) / (z^2 (3+z^2)) - 1.
Laurent gf_b0(long order);

// Dual model, any end level: A(z,1) + B(z,1) + C(z,1) with
// B(1) = z (2 r1 z + 2 r1 z b0 + b0 r1 + 2 z + 2 z b0) r2 / (r1 (z^2-2)(r2-1)),
// A(1) = (1-z)/(1-2z) (1 + z B(1)),  C(1) = z/(1-2z) (1 + z B(1)).
Laurent gf_dual_open(long order);

// Every closed form at one truncation order. h0 equals g0: swapping the
// color of a closing down-step is a bijection on level-0 paths.
struct GFBundle {
    Laurent g0, h0, s0, y_of_x, open, b0, dual_open;
    std::vector<Laurent> sj;  // levels 0..j_max
};

GFBundle build_gf_bundle(long order, long j_max);

}  // namespace skewdyck

#endif
