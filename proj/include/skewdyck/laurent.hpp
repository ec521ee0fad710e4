#ifndef SKEWDYCK_LAURENT_HPP
#define SKEWDYCK_LAURENT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "skewdyck/rational.hpp"

namespace skewdyck {

// Truncated Laurent series with exact rational coefficients.
//
// A value represents sum_{n = valuation}^{order-1} c_n z^n; coefficients at
// exponents >= order are unknown, never zero by assumption. The stored window
// is normalized: its first and last entries are nonzero (a series that is zero
// through its order stores no window and has valuation == order).
class Laurent {
public:
    // Zero series, known to vanish at every exponent below `order`.
    static Laurent zero(long order);
    static Laurent constant(const Rational& c, long order);
    static Laurent monomial(const Rational& c, long exponent, long order);
    // Builds sum c_i z^{e_i} from (exponent, coefficient) pairs; repeated
    // exponents accumulate, exponents at or beyond `order` are dropped.
    static Laurent from_terms(const std::vector<std::pair<long, Rational>>& terms, long order);

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient at exponent n. Throws std::out_of_range for n >= order.
    const Rational& coeff(long n) const;

    // Same series with a smaller truncation order.
    Laurent truncated(long new_order) const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Rational& c, const Laurent& a);
    // Laurent long division; throws std::domain_error when b is zero
    // through its order.
    friend Laurent operator/(const Laurent& a, const Laurent& b);

    friend bool operator==(const Laurent& a, const Laurent& b) = default;

private:
    Laurent(long val, long order, std::vector<Rational> coeffs)
        : val_(val), order_(order), coeffs_(std::move(coeffs)) {
        normalize();
    }
    void normalize();

    long val_ = 0;
    long order_ = 0;
    std::vector<Rational> coeffs_;
};

Laurent pow(const Laurent& a, unsigned long k);

// Square root with positive leading coefficient. Requires even valuation and
// a leading coefficient that is a square in Q; throws std::domain_error
// otherwise.
Laurent sqrt_series(const Laurent& a);

// Termwise derivative; the order drops by one.
Laurent derive(const Laurent& a);

// Substitutes x = z^2: coefficient of x^k is the coefficient of z^{2k}.
// Throws std::domain_error if a nonzero odd-exponent coefficient is present.
Laurent reindex_even_to_x(const Laurent& a);

// Smallest exponent below both orders where the coefficients differ.
std::optional<long> first_disagreement(const Laurent& a, const Laurent& b);
// True when a and b agree at every exponent known to both.
bool agree(const Laurent& a, const Laurent& b);

// Coefficient as an exact integer; throws std::domain_error when fractional.
BigInt integer_coeff(const Laurent& a, long n);

std::string to_string(const Laurent& a, const char* var = "z");

}  // namespace skewdyck

#endif
