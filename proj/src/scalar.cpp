#include "slopecert/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace slopecert {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den))
            throw ParseError("bad rational: " + text);
        mpz_class den_z(den);
        if (den_z == 0) throw ParseError("zero denominator: " + text);
        Rational r{mpz_class(num), den_z};
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        if (!is_integer_text(text)) throw ParseError("bad number: " + text);
        return Rational(mpz_class(text));
    }
    std::string intpart = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (intpart == "+" || intpart == "-" || intpart.empty()) intpart += "0";
    if (!is_integer_text(intpart) || frac.empty()) throw ParseError("bad decimal: " + text);
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal: " + text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits = mpz_class(intpart) * scale;
    mpz_class fracval(frac);
    bool negative = text[0] == '-';
    digits += negative ? -fracval : fracval;
    Rational r(digits, scale);
    r.canonicalize();
    return r;
}

Rational decimal_half_ulp(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos || text.find('/') != std::string::npos) return Rational(0);
    std::size_t digits = text.size() - dot - 1;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational ulp(1, scale * 2);
    ulp.canonicalize();
    return ulp;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Scalar::Scalar(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw Error("interval endpoints out of order");
}

Scalar Scalar::from_midpoint_radius(const Rational& mid, const Rational& radius) {
    if (sgn(radius) < 0) throw Error("negative interval radius");
    return Scalar(mid - radius, mid + radius);
}

double Scalar::approx() const {
    Rational mid = (lo_ + hi_) / 2;
    return mid.get_d();
}

Scalar Scalar::abs() const {
    if (sgn(lo_) >= 0) return *this;
    if (sgn(hi_) <= 0) return -*this;
    return Scalar(Rational(0), std::max(Rational(-lo_), hi_));
}

Scalar Scalar::square() const {
    Scalar a = abs();
    return Scalar(a.lo_ * a.lo_, a.hi_ * a.hi_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    Rational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return Scalar(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.contains_zero()) throw Error("interval division by enclosure containing 0");
    return a * Scalar(1 / b.hi_, 1 / b.lo_);
}

bool certainly_lt(const Scalar& a, const Scalar& b) { return a.hi() < b.lo(); }
bool certainly_le(const Scalar& a, const Scalar& b) { return a.hi() <= b.lo(); }
bool certainly_gt(const Scalar& a, const Scalar& b) { return a.lo() > b.hi(); }
bool certainly_ge(const Scalar& a, const Scalar& b) { return a.lo() >= b.hi(); }

Order compare(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
        return a.lo() == b.lo() ? Order::Equal : (a.lo() < b.lo() ? Order::Less : Order::Greater);
    if (certainly_lt(a, b)) return Order::Less;
    if (certainly_gt(a, b)) return Order::Greater;
    return Order::Indeterminate;
}

Scalar min(const Scalar& a, const Scalar& b) {
    return Scalar(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Scalar max(const Scalar& a, const Scalar& b) {
    return Scalar(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

namespace {

Rational dyadic_floor(const Rational& x, int prec_bits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, prec_bits);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), mpz_class(x.get_num() * scale).get_mpz_t(), x.get_den().get_mpz_t());
    Rational r(n, scale);
    r.canonicalize();
    return r;
}

Rational dyadic_ceil(const Rational& x, int prec_bits) {
    return -dyadic_floor(-x, prec_bits);
}

// Lower bound of sqrt(x): largest t/(d*2^k) with t^2 <= n*d*4^k.
Rational sqrt_lower(const Rational& x, int prec_bits) {
    if (sgn(x) < 0) throw Error("sqrt of negative value");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, prec_bits);
    mpz_class nd = x.get_num() * x.get_den() * scale * scale;
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), nd.get_mpz_t());
    Rational r(t, x.get_den() * scale);
    r.canonicalize();
    return r;
}

Rational sqrt_upper(const Rational& x, int prec_bits) {
    if (sgn(x) < 0) throw Error("sqrt of negative value");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, prec_bits);
    mpz_class nd = x.get_num() * x.get_den() * scale * scale;
    mpz_class t, rem;
    mpz_sqrtrem(t.get_mpz_t(), rem.get_mpz_t(), nd.get_mpz_t());
    if (rem != 0) t += 1;
    Rational r(t, x.get_den() * scale);
    r.canonicalize();
    return r;
}

bool exact_sqrt(const Rational& x, Rational& out) {
    if (sgn(x) < 0) return false;
    mpz_class sn, sd;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(x.get_den().get_mpz_t())) {
        mpz_sqrt(sn.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), x.get_den().get_mpz_t());
        out = Rational(sn, sd);
        out.canonicalize();
        return true;
    }
    return false;
}

// Taylor polynomial for sin or cos at an exact rational t in [0, 4], with the
// Lagrange remainder |R_m| <= t^(m+1)/(m+1)! folded into the enclosure.
Scalar taylor_sin_cos(const Rational& t, bool want_sin, int prec_bits) {
    if (sgn(t) < 0 || t > 4) throw Error("sin/cos argument outside [0, 4]");
    Rational eps(1, 1);
    {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, prec_bits + 4);
        eps = Rational(1, scale);
        eps.canonicalize();
    }
    Rational t2 = t * t;
    Rational sum, term;
    unsigned long degree;
    if (want_sin) {
        term = t;
        degree = 1;
    } else {
        term = 1;
        degree = 0;
    }
    sum = term;
    // remainder after degree m is bounded by |term| * t / (m+1) * ... ; we
    // iterate until the next-term bound falls below eps.
    Rational rem_bound = ::abs(term) * t / Rational(degree + 1);
    while (rem_bound > eps) {
        term = term * (-t2) / Rational((degree + 1) * (degree + 2));
        degree += 2;
        sum += term;
        rem_bound = ::abs(term) * t / Rational(degree + 1);
    }
    return round_outward(Scalar(sum - rem_bound, sum + rem_bound), prec_bits);
}

}  // namespace

Scalar round_outward(const Scalar& value, int prec_bits) {
    if (value.is_exact()) return value;
    return Scalar(dyadic_floor(value.lo(), prec_bits), dyadic_ceil(value.hi(), prec_bits));
}

Scalar sqrt_enclosure(const Scalar& value, int prec_bits) {
    if (sgn(value.lo()) < 0) throw Error("sqrt of enclosure with negative lower bound");
    if (value.is_exact()) {
        Rational exact;
        if (exact_sqrt(value.lo(), exact)) return Scalar(exact);
        return Scalar(sqrt_lower(value.lo(), prec_bits), sqrt_upper(value.lo(), prec_bits));
    }
    return Scalar(sqrt_lower(value.lo(), prec_bits), sqrt_upper(value.hi(), prec_bits));
}

Scalar cos_enclosure(const Scalar& theta, int prec_bits) {
    // cos is decreasing on [0, pi]
    Scalar at_lo = taylor_sin_cos(theta.lo(), false, prec_bits);
    if (theta.is_exact()) return at_lo;
    Scalar at_hi = taylor_sin_cos(theta.hi(), false, prec_bits);
    return Scalar(at_hi.lo(), at_lo.hi());
}

Scalar sin_enclosure(const Scalar& theta, int prec_bits) {
    Scalar at_lo = taylor_sin_cos(theta.lo(), true, prec_bits);
    if (theta.is_exact()) return at_lo;
    Scalar at_hi = taylor_sin_cos(theta.hi(), true, prec_bits);
    const Scalar& pi = pi_enclosure();
    Rational half_pi_lo = pi.lo() / 2;
    Rational half_pi_hi = pi.hi() / 2;
    if (theta.hi() <= half_pi_lo)  // increasing region
        return Scalar(at_lo.lo(), at_hi.hi());
    if (theta.lo() >= half_pi_hi)  // decreasing region
        return Scalar(at_hi.lo(), at_lo.hi());
    // straddles pi/2: sup is 1
    return Scalar(std::min(at_lo.lo(), at_hi.lo()), Rational(1));
}

const Scalar& pi_enclosure() {
    static const Scalar pi = [] {
        const std::string digits =
            "3."
            "1415926535897932384626433832795028841971693993751058209749445923"
            "078164062862089986280348253421170679";
        Rational lo = parse_rational(digits);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, 100);
        Rational ulp(1, scale);
        ulp.canonicalize();
        return Scalar(lo, lo + ulp);
    }();
    return pi;
}

Scalar sqrt2_enclosure(int prec_bits) {
    return sqrt_enclosure(Scalar(2), prec_bits);
}

Scalar fourth_root_two_enclosure(int prec_bits) {
    return sqrt_enclosure(sqrt2_enclosure(prec_bits + 2), prec_bits);
}

}  // namespace slopecert
