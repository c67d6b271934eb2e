// The coefficient ring Q[c,s,p,q] / (c^2 - s^2 - 1, p^2 + q^2 - 1), where
// c,s stand for cosh/sinh of the hyperbolic parameter and p,q for cos/sin of
// the angular one. Normal form keeps the exponents of c and p at most 1, so
// an element is a free Q[s,q]-combination of {1, c, p, c*p} and zero-testing
// is plain coefficient comparison.
#pragma once

#include "lorinv/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorinv {

// Monomial c^ch * s^sh * p^co * q^si in normal form (ch, co in {0,1}).
struct ParamMono {
    std::uint8_t ch = 0;
    std::uint32_t sh = 0;
    std::uint8_t co = 0;
    std::uint32_t si = 0;

    unsigned degree() const { return ch + sh + co + si; }
    bool operator==(const ParamMono&) const = default;
};

// Graded lex with c > s > p > q. Defined as "less" for map storage; the
// serialization iterates in reverse to print leading terms first.
struct ParamMonoLess {
    bool operator()(const ParamMono& a, const ParamMono& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.ch != b.ch) return a.ch < b.ch;
        if (a.sh != b.sh) return a.sh < b.sh;
        if (a.co != b.co) return a.co < b.co;
        return a.si < b.si;
    }
};

class RingElem {
  public:
    using TermMap = std::map<ParamMono, Rational, ParamMonoLess>;

    RingElem() = default;
    explicit RingElem(const Rational& r) {
        if (r != 0) terms_[ParamMono{}] = r;
    }
    explicit RingElem(long n) : RingElem(Rational(n)) {}

    static RingElem cosh_sym() { return monomial(ParamMono{1, 0, 0, 0}); }
    static RingElem sinh_sym() { return monomial(ParamMono{0, 1, 0, 0}); }
    static RingElem cos_sym() { return monomial(ParamMono{0, 0, 1, 0}); }
    static RingElem sin_sym() { return monomial(ParamMono{0, 0, 0, 1}); }

    static RingElem monomial(ParamMono m, Rational coef = Rational(1)) {
        RingElem e;
        e.add_term(m, coef);
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamMono{});
    }
    // Constant value when is_constant(), else nullopt.
    std::optional<Rational> constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) return std::nullopt;
        return terms_.begin()->second;
    }

    unsigned degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    bool operator==(const RingElem& o) const { return terms_ == o.terms_; }

    RingElem operator-() const {
        RingElem out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    RingElem& operator+=(const RingElem& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    RingElem& operator-=(const RingElem& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }

    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        RingElem out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_product_term(ma, mb, ca * cb);
        return out;
    }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    friend RingElem operator*(const RingElem& a, const Rational& k) {
        RingElem out;
        if (k == 0) return out;
        for (const auto& [m, c] : a.terms_) out.terms_[m] = c * k;
        return out;
    }

    RingElem pow(unsigned e) const {
        RingElem out(Rational(1));
        RingElem base = *this;
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    // Positive gcd of all coefficients; 0 for the zero element.
    Rational content() const {
        Rational g(0);
        for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
        return g;
    }

    // Componentwise min of all exponent vectors (the common monomial factor).
    ParamMono monomial_gcd() const {
        if (terms_.empty()) return ParamMono{};
        auto it = terms_.begin();
        ParamMono g = it->first;
        for (++it; it != terms_.end(); ++it) {
            const ParamMono& m = it->first;
            g.ch = std::min(g.ch, m.ch);
            g.sh = std::min(g.sh, m.sh);
            g.co = std::min(g.co, m.co);
            g.si = std::min(g.si, m.si);
        }
        return g;
    }

    // Exact division by a monomial that divides every term.
    RingElem divide_monomial(const ParamMono& d) const {
        RingElem out;
        for (const auto& [m, c] : terms_) {
            if (m.ch < d.ch || m.sh < d.sh || m.co < d.co || m.si < d.si)
                throw std::domain_error("ring: monomial does not divide");
            ParamMono r{static_cast<std::uint8_t>(m.ch - d.ch), m.sh - d.sh,
                        static_cast<std::uint8_t>(m.co - d.co), m.si - d.si};
            out.terms_[r] = c;
        }
        return out;
    }

    RingElem divide_rational(const Rational& k) const {
        if (k == 0) throw std::domain_error("ring: division by zero rational");
        RingElem out;
        for (const auto& [m, c] : terms_) out.terms_[m] = c / k;
        return out;
    }

    // Leading coefficient under graded lex (c > s > p > q); 0 if zero.
    Rational leading_coefficient() const {
        return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
    }

    // Evaluate at the rational point c=(t+1/t)/2, s=(t-1/t)/2 and, when the
    // trig symbols occur, p=(1-u^2)/(1+u^2), q=2u/(1+u^2).
    Rational evaluate(const Rational& t, const std::optional<Rational>& u) const {
        if (t <= 0) throw std::domain_error("ring: hyperbolic parameter t must be positive");
        Rational c = (t + Rational(1) / t) / 2;
        Rational s = (t - Rational(1) / t) / 2;
        Rational p(1), q(0);
        bool have_trig = false;
        if (u) {
            Rational u2 = (*u) * (*u);
            p = (1 - u2) / (1 + u2);
            q = 2 * (*u) / (1 + u2);
            have_trig = true;
        }
        Rational out(0);
        for (const auto& [m, coef] : terms_) {
            if ((m.co || m.si) && !have_trig)
                throw std::domain_error("ring: trig symbol present but no angular point supplied");
            Rational v = coef;
            if (m.ch) v *= c;
            if (m.sh) v *= rational_pow(s, m.sh);
            if (m.co) v *= p;
            if (m.si) v *= rational_pow(q, m.si);
            out += v;
        }
        return out;
    }

    bool has_trig() const {
        for (const auto& [m, c] : terms_)
            if (m.co || m.si) return true;
        return false;
    }

    bool has_hyperbolic() const {
        for (const auto& [m, c] : terms_)
            if (m.ch || m.sh) return true;
        return false;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string t = term_string(it->first, it->second);
            if (first) {
                os << t;
                first = false;
            } else if (!t.empty() && t[0] == '-') {
                os << t;
            } else {
                os << "+" << t;
            }
        }
        return os.str();
    }

  private:
    TermMap terms_;

    void add_term(const ParamMono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Combine two normal-form monomials; c- and p-exponents may reach 2 and
    // are rewritten through c^2 = s^2 + 1 and p^2 = 1 - q^2.
    void add_product_term(const ParamMono& a, const ParamMono& b, const Rational& coef) {
        unsigned ch = a.ch + b.ch;
        unsigned co = a.co + b.co;
        std::uint32_t sh = a.sh + b.sh;
        std::uint32_t si = a.si + b.si;
        struct Part {
            std::uint8_t ch;
            std::uint32_t sh_extra;
            Rational k;
        };
        std::vector<Part> cparts;
        if (ch == 2)
            cparts = {{0, 2, Rational(1)}, {0, 0, Rational(1)}};
        else
            cparts = {{static_cast<std::uint8_t>(ch), 0, Rational(1)}};
        struct PartP {
            std::uint8_t co;
            std::uint32_t si_extra;
            Rational k;
        };
        std::vector<PartP> pparts;
        if (co == 2)
            pparts = {{0, 0, Rational(1)}, {0, 2, Rational(-1)}};
        else
            pparts = {{static_cast<std::uint8_t>(co), 0, Rational(1)}};
        for (const auto& cp : cparts)
            for (const auto& pp : pparts)
                add_term(ParamMono{cp.ch, sh + cp.sh_extra, pp.co, si + pp.si_extra},
                         coef * cp.k * pp.k);
    }

    static std::string term_string(const ParamMono& m, const Rational& c) {
        std::vector<std::string> factors;
        auto sym = [&](const char* name, unsigned e) {
            if (e == 0) return;
            std::string f = name;
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        };
        sym("cosh(t)", m.ch);
        sym("sinh(t)", m.sh);
        sym("cos(u)", m.co);
        sym("sin(u)", m.si);
        std::string coef = lorinv::to_string(c);
        if (factors.empty()) return coef;
        std::string out;
        // '^' binds tighter than unary minus in the grammar, so a bare '-'
        // may only prefix an exponent-free factor
        bool first_plain = factors[0].find('^') == std::string::npos;
        if (c == 1)
            out = "";
        else if (c == -1)
            out = first_plain ? "-" : "-1*";
        else
            out = coef + "*";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
        return out;
    }
};

}  // namespace lorinv
