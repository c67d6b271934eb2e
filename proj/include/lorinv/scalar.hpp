// The exact coefficient field: fractions of RingElem. Equality is decided by
// cross-multiplication (the ring has decidable zero through its normal form),
// so no multivariate gcd is needed; fractions are normalized by clearing the
// common rational content and common monomial factors, folding constant
// denominators into the numerator, and fixing the sign of the denominator's
// leading coefficient.
#pragma once

#include "lorinv/ring.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace lorinv {

class Scalar {
  public:
    Scalar() : num_(), den_(Rational(1)) {}
    explicit Scalar(const Rational& r) : num_(r), den_(Rational(1)) {}
    explicit Scalar(long n) : num_(Rational(n)), den_(Rational(1)) {}
    explicit Scalar(const RingElem& num) : num_(num), den_(Rational(1)) {}
    Scalar(RingElem num, RingElem den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static Scalar of(long num, long den = 1) { return Scalar(make_rational(num, den)); }
    static Scalar cosh_t() { return Scalar(RingElem::cosh_sym()); }
    static Scalar sinh_t() { return Scalar(RingElem::sinh_sym()); }
    static Scalar cos_u() { return Scalar(RingElem::cos_sym()); }
    static Scalar sin_u() { return Scalar(RingElem::sin_sym()); }

    const RingElem& num() const { return num_; }
    const RingElem& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    std::optional<Rational> rational_value() const {
        if (!is_rational()) return std::nullopt;
        return *num_.constant_value();  // den is 1 after normalization
    }

    bool operator==(const Scalar& o) const {
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        Scalar out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("scalar: division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("scalar: inverse of zero");
        return Scalar(den_, num_);
    }

    Scalar pow(unsigned e) const {
        Scalar out(1L);
        Scalar base = *this;
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    // Exact value at c=(t+1/t)/2, s=(t-1/t)/2 (and the angular point from u
    // when trig symbols occur). Throws when the denominator vanishes there.
    Rational evaluate(const Rational& t, const std::optional<Rational>& u = std::nullopt) const {
        Rational d = den_.evaluate(t, u);
        if (d == 0) throw std::domain_error("scalar: denominator vanishes at evaluation point");
        return num_.evaluate(t, u) / d;
    }

    bool has_trig() const { return num_.has_trig() || den_.has_trig(); }
    bool has_hyperbolic() const { return num_.has_hyperbolic() || den_.has_hyperbolic(); }

    // Sign of a rational value; nullopt for genuinely symbolic scalars (there
    // is deliberately no symbolic sign oracle).
    std::optional<int> sign_if_rational() const {
        auto r = rational_value();
        if (!r) return std::nullopt;
        return sign(*r);
    }

    std::string to_string() const {
        if (den_ == RingElem(Rational(1))) return num_.to_string();
        std::string n = num_.to_string();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        std::string d = den_.to_string();
        if (!den_is_plain_symbol()) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    RingElem num_;
    RingElem den_;

    bool den_is_plain_symbol() const {
        if (den_.terms().size() != 1) return false;
        const auto& [m, c] = *den_.terms().begin();
        return c == 1 && m.degree() == 1;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = RingElem(Rational(1));
            return;
        }
        ParamMono gn = num_.monomial_gcd();
        ParamMono gd = den_.monomial_gcd();
        ParamMono g{std::min(gn.ch, gd.ch), std::min(gn.sh, gd.sh), std::min(gn.co, gd.co),
                    std::min(gn.si, gd.si)};
        if (g.degree() > 0) {
            num_ = num_.divide_monomial(g);
            den_ = den_.divide_monomial(g);
        }
        if (auto k = den_.constant_value()) {
            num_ = num_.divide_rational(*k);
            den_ = RingElem(Rational(1));
            return;
        }
        Rational c = rational_gcd(num_.content(), den_.content());
        num_ = num_.divide_rational(c);
        den_ = den_.divide_rational(c);
        if (den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace lorinv
