#include "skewdyck/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skewdyck {

namespace {
const Rational kZero = 0;
}

void Laurent::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = order_;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(coeffs_.begin() + lead, coeffs_.begin() + tail);
    }
    val_ += static_cast<long>(lead);
}

Laurent Laurent::zero(long order) { return Laurent(order, order, {}); }

Laurent Laurent::constant(const Rational& c, long order) {
    return monomial(c, 0, order);
}

Laurent Laurent::monomial(const Rational& c, long exponent, long order) {
    if (c == 0 || exponent >= order) return zero(order);
    return Laurent(exponent, order, {c});
}

Laurent Laurent::from_terms(const std::vector<std::pair<long, Rational>>& terms, long order) {
    std::map<long, Rational> acc;
    for (const auto& [e, c] : terms) {
        if (e >= order) continue;  // beyond the known window
        acc[e] += c;
    }
    if (acc.empty()) return zero(order);
    long val = acc.begin()->first;
    std::vector<Rational> cs(static_cast<std::size_t>(acc.rbegin()->first - val + 1));
    for (const auto& [e, c] : acc) cs[static_cast<std::size_t>(e - val)] = c;
    return Laurent(val, order, std::move(cs));
}

const Rational& Laurent::coeff(long n) const {
    if (n >= order_) {
        throw std::out_of_range("coeff: exponent " + std::to_string(n) +
                                " is beyond truncation order " + std::to_string(order_));
    }
    if (n < val_ || n >= val_ + static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(n - val_)];
}

Laurent Laurent::truncated(long new_order) const {
    if (new_order > order_) {
        throw std::out_of_range("truncated: cannot extend a series");
    }
    if (new_order <= val_) return zero(new_order);
    std::size_t keep = std::min(coeffs_.size(), static_cast<std::size_t>(new_order - val_));
    return Laurent(val_, new_order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + keep));
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    long order = std::min(a.order_, b.order_);
    long val = std::min(a.val_, b.val_);
    if (val >= order) return Laurent::zero(order);
    std::vector<Rational> cs(static_cast<std::size_t>(order - val));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        long e = a.val_ + static_cast<long>(i);
        if (e < order) cs[static_cast<std::size_t>(e - val)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        long e = b.val_ + static_cast<long>(i);
        if (e < order) cs[static_cast<std::size_t>(e - val)] += b.coeffs_[i];
    }
    return Laurent(val, order, std::move(cs));
}

Laurent operator-(const Laurent& a) { return Rational(-1) * a; }

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Rational& c, const Laurent& a) {
    if (c == 0) return Laurent::zero(a.order_);
    std::vector<Rational> cs = a.coeffs_;
    for (auto& x : cs) x *= c;
    return Laurent(a.val_, a.order_, std::move(cs));
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
    long val = a.val_ + b.val_;
    if (a.coeffs_.empty() || b.coeffs_.empty() || val >= order) {
        return Laurent::zero(order);
    }
    std::vector<Rational> cs(static_cast<std::size_t>(order - val));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        long ea = a.val_ + static_cast<long>(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            long e = ea + b.val_ + static_cast<long>(j);
            if (e >= order) break;
            if (b.coeffs_[j] == 0) continue;
            cs[static_cast<std::size_t>(e - val)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Laurent(val, order, std::move(cs));
}

Laurent operator/(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by a series that is zero through its order");
    }
    // b's stored leading coefficient sits at its true valuation.
    long q_val = a.val_ - b.val_;
    long q_order = std::min(a.order_ - b.val_, b.order_ + a.val_ - 2 * b.val_);
    if (a.is_zero() || q_val >= q_order) return Laurent::zero(q_order);
    std::size_t q_len = static_cast<std::size_t>(q_order - q_val);
    std::vector<Rational> q(q_len);
    const Rational& lead = b.coeffs_.front();
    for (std::size_t k = 0; k < q_len; ++k) {
        Rational acc = a.coeff(a.val_ + static_cast<long>(k));
        std::size_t m_lo = (k >= b.coeffs_.size()) ? k - b.coeffs_.size() + 1 : 0;
        for (std::size_t m = m_lo; m < k; ++m) {
            const Rational& bc = b.coeffs_[k - m];
            if (bc != 0 && q[m] != 0) acc -= q[m] * bc;
        }
        q[k] = acc / lead;
    }
    return Laurent(q_val, q_order, std::move(q));
}

Laurent pow(const Laurent& a, unsigned long k) {
    if (k == 0) return Laurent::constant(1, a.order());
    Laurent r = a;
    for (unsigned long i = 1; i < k; ++i) r = r * a;
    return r;
}

Laurent sqrt_series(const Laurent& a) {
    if (a.is_zero()) {
        long half = a.order() - a.order() / 2;
        return Laurent::zero(half);
    }
    if (a.valuation() % 2 != 0) {
        throw std::domain_error("sqrt_series: odd valuation");
    }
    const Rational& lead = a.coeff(a.valuation());
    if (lead < 0 || mpz_perfect_square_p(lead.get_num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(lead.get_den().get_mpz_t()) == 0) {
        throw std::domain_error("sqrt_series: leading coefficient " + lead.get_str() +
                                " is not a rational square");
    }
    BigInt num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), lead.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), lead.get_den().get_mpz_t());
    Rational c0 = make_rational(num_root, den_root);

    long s_val = a.valuation() / 2;
    long s_order = a.order() - a.valuation() + s_val;
    std::size_t len = static_cast<std::size_t>(s_order - s_val);
    // s = c0 z^{s_val} (1 + sigma); (1 + sigma)^2 = a / (lead z^{2 s_val}).
    std::vector<Rational> s(len);
    s[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Rational acc = a.coeff(a.valuation() + static_cast<long>(n)) / lead;
        for (std::size_t k = 1; k < n; ++k) acc -= s[k] * s[n - k];
        s[n] = acc / 2;
    }
    for (auto& x : s) x *= c0;
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t n = 0; n < len; ++n) {
        if (s[n] != 0) terms.emplace_back(s_val + static_cast<long>(n), s[n]);
    }
    return Laurent::from_terms(terms, s_order);
}

Laurent derive(const Laurent& a) {
    long order = a.order() - 1;
    std::vector<std::pair<long, Rational>> terms;
    for (long e = a.valuation(); e < a.order(); ++e) {
        if (e == 0) continue;
        const Rational& c = a.coeff(e);
        if (c != 0) terms.emplace_back(e - 1, Rational(e) * c);
    }
    return Laurent::from_terms(terms, order);
}

Laurent reindex_even_to_x(const Laurent& a) {
    long x_order = (a.order() + 1) / 2;
    std::vector<std::pair<long, Rational>> terms;
    for (long e = a.valuation(); e < a.order(); ++e) {
        const Rational& c = a.coeff(e);
        if (c == 0) continue;
        if (e % 2 != 0) {
            throw std::domain_error("reindex_even_to_x: nonzero coefficient at odd exponent " +
                                    std::to_string(e));
        }
        if (e / 2 < x_order) terms.emplace_back(e / 2, c);
    }
    return Laurent::from_terms(terms, x_order);
}

std::optional<long> first_disagreement(const Laurent& a, const Laurent& b) {
    long order = std::min(a.order(), b.order());
    for (long e = std::min(a.valuation(), b.valuation()); e < order; ++e) {
        if (a.coeff(e) != b.coeff(e)) return e;
    }
    return std::nullopt;
}

bool agree(const Laurent& a, const Laurent& b) { return !first_disagreement(a, b).has_value(); }

BigInt integer_coeff(const Laurent& a, long n) { return to_integer(a.coeff(n)); }

std::string to_string(const Laurent& a, const char* var) {
    if (a.is_zero()) return "O(" + std::string(var) + "^" + std::to_string(a.order()) + ")";
    std::ostringstream os;
    bool first = true;
    for (long e = a.valuation(); e < a.order(); ++e) {
        const Rational& c = a.coeff(e);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational mag = abs(c);
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    os << " + O(" << var << "^" << a.order() << ")";
    return os.str();
}

}  // namespace skewdyck
