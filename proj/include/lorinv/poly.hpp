// Multivariate polynomials over Scalar in coordinates x1..x{n+1} (and the
// doubled coordinates y1..y{n+1} on the cartesian product), with substitution
// by linear maps, differentiation, and the degree-bounded linear-algebra
// oracles used for generator pruning.
#pragma once

#include "lorinv/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorinv {

using Exponents = std::vector<unsigned>;

// Graded lex, earlier variables more significant; "less" for map storage.
struct ExponentsLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

class Poly {
  public:
    using TermMap = std::map<Exponents, Scalar, ExponentsLess>;

    Poly() = default;
    explicit Poly(unsigned nvars) : nvars_(nvars) {}

    static Poly constant(unsigned nvars, const Scalar& c) {
        Poly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static Poly variable(unsigned nvars, unsigned index) {
        if (index >= nvars) throw std::domain_error("poly: variable index out of range");
        Poly p(nvars);
        Exponents e(nvars, 0);
        e[index] = 1;
        p.add_term(e, Scalar(1L));
        return p;
    }
    static Poly monomial(unsigned nvars, Exponents e, const Scalar& c) {
        if (e.size() != nvars) throw std::domain_error("poly: exponent length mismatch");
        Poly p(nvars);
        p.add_term(std::move(e), c);
        return p;
    }

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree_of(terms_.begin()->first) == 0);
    }

    unsigned total_degree() const {
        return terms_.empty() ? 0 : total_degree_of(terms_.rbegin()->first);
    }

    bool operator==(const Poly& o) const {
        if (nvars_ != o.nvars_) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (it->second != jt->second) return false;
        }
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }
    friend Poly operator+(Poly a, const Poly& b) {
        a.check_same(b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend Poly operator-(Poly a, const Poly& b) {
        a.check_same(b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    friend Poly operator*(const Scalar& k, const Poly& p) {
        Poly out(p.nvars_);
        if (k.is_zero()) return out;
        for (const auto& [e, c] : p.terms_) out.terms_[e] = k * c;
        return out;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const {
        Poly out = constant(nvars_, Scalar(1L));
        Poly base = *this;
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    // f(Mx): variable i is replaced by the i-th row combination of M.
    Poly substitute_linear(const Matrix& m) const {
        if (!m.is_square() || m.rows() != nvars_)
            throw std::domain_error("substitute_linear: matrix size must match nvars");
        std::vector<Poly> images;
        images.reserve(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            Poly row(nvars_);
            for (unsigned j = 0; j < nvars_; ++j) {
                if (m.at(i, j).is_zero()) continue;
                row += m.at(i, j) * variable(nvars_, j);
            }
            images.push_back(std::move(row));
        }
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Poly term = constant(nvars_, c);
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i]) term *= images[i].pow(e[i]);
            out += term;
        }
        return out;
    }

    Poly partial_derivative(unsigned i) const {
        if (i >= nvars_) throw std::domain_error("partial_derivative: index out of range");
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            d[i] -= 1;
            out.add_term(std::move(d), Scalar(static_cast<long>(e[i])) * c);
        }
        return out;
    }

    // Set the last half of the variables to zero; result lives in half vars.
    Poly restrict_y_zero() const {
        if (nvars_ % 2 != 0) throw std::domain_error("restrict_y_zero: odd variable count");
        unsigned half = nvars_ / 2;
        Poly out(half);
        for (const auto& [e, c] : terms_) {
            bool has_y = false;
            for (unsigned i = half; i < nvars_; ++i)
                if (e[i]) {
                    has_y = true;
                    break;
                }
            if (has_y) continue;
            out.add_term(Exponents(e.begin(), e.begin() + half), c);
        }
        return out;
    }

    // Inclusion into the first half of a doubled variable set.
    Poly extend_to_double() const {
        Poly out(2 * nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents d(2 * nvars_, 0);
            std::copy(e.begin(), e.end(), d.begin());
            out.add_term(std::move(d), c);
        }
        return out;
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != nvars_) throw std::domain_error("poly evaluate: point size mismatch");
        Scalar acc(0L);
        for (const auto& [e, c] : terms_) {
            Scalar v = c;
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i]) v *= point[i].pow(e[i]);
            acc += v;
        }
        return acc;
    }

    // Instantiate the symbolic coefficients at a rational parameter point.
    Poly instantiate(const Rational& t, const std::optional<Rational>& u = std::nullopt) const {
        Poly out(nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, Scalar(c.evaluate(t, u)));
        return out;
    }

    // Text form: terms in descending graded-lex order, "coef*x1^a*..."; the
    // second half of the variables prints as y1.. when cartesian is set.
    std::string to_string(bool cartesian = false) const {
        if (terms_.empty()) return "0";
        unsigned half = nvars_ / 2;
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string t = term_string(it->first, it->second, cartesian, half);
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

    static unsigned total_degree_of(const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0u);
    }

  private:
    unsigned nvars_ = 0;
    TermMap terms_;

    void check_same(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::domain_error("poly: variable count mismatch");
    }

    void add_term(Exponents e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string term_string(const Exponents& e, const Scalar& c, bool cartesian,
                            unsigned half) const {
        std::vector<std::string> factors;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            std::string name;
            if (cartesian && i >= half)
                name = "y" + std::to_string(i - half + 1);
            else
                name = "x" + std::to_string(i + 1);
            if (e[i] > 1) name += "^" + std::to_string(e[i]);
            factors.push_back(name);
        }
        bool rational = c.is_rational();
        std::string coef = c.to_string();
        if (factors.empty()) return rational ? coef : "(" + coef + ")";
        std::string out;
        if (rational) {
            auto r = *c.rational_value();
            // a bare '-' may only prefix an exponent-free factor: the grammar
            // binds '^' tighter than unary minus, so "-x^2" reads as (-x)^2
            bool first_plain = factors[0].find('^') == std::string::npos;
            if (r == 1)
                out = "";
            else if (r == -1)
                out = first_plain ? "-" : "-1*";
            else
                out = coef + "*";
        } else {
            out = "(" + coef + ")*";
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
        return out;
    }
};

// A polynomial map R^{n+1} -> R^{n+1}; all components share a variable count.
class PolyMap {
  public:
    PolyMap() = default;
    explicit PolyMap(std::vector<Poly> components) : comps_(std::move(components)) {
        for (const auto& p : comps_)
            if (p.nvars() != comps_[0].nvars())
                throw std::domain_error("polymap: components disagree on nvars");
    }
    static PolyMap zero(unsigned ncomps, unsigned nvars) {
        return PolyMap(std::vector<Poly>(ncomps, Poly(nvars)));
    }
    static PolyMap identity(unsigned n) {
        std::vector<Poly> comps;
        for (unsigned i = 0; i < n; ++i) comps.push_back(Poly::variable(n, i));
        return PolyMap(std::move(comps));
    }

    std::size_t size() const { return comps_.size(); }
    unsigned nvars() const { return comps_.empty() ? 0 : comps_[0].nvars(); }
    const Poly& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Poly>& components() const { return comps_; }

    bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
    }
    bool operator==(const PolyMap& o) const { return comps_ == o.comps_; }

    // Componentwise g(Mx).
    PolyMap substitute_linear(const Matrix& m) const {
        std::vector<Poly> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.substitute_linear(m));
        return PolyMap(std::move(out));
    }

    // Matrix acting on the output: (M g)(x).
    friend PolyMap operator*(const Matrix& m, const PolyMap& g) {
        if (m.cols() != g.size()) throw std::domain_error("polymap: matrix size mismatch");
        std::vector<Poly> out;
        out.reserve(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Poly acc(g.nvars());
            for (std::size_t j = 0; j < g.size(); ++j) acc += m.at(i, j) * g[j];
            out.push_back(std::move(acc));
        }
        return PolyMap(std::move(out));
    }

    Vector evaluate(const Vector& point) const {
        std::vector<Scalar> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.evaluate(point.coords()));
        return Vector(std::move(out));
    }

    PolyMap instantiate(const Rational& t, const std::optional<Rational>& u = std::nullopt) const {
        std::vector<Poly> out;
        out.reserve(comps_.size());
        for (const auto& p : comps_) out.push_back(p.instantiate(t, u));
        return PolyMap(std::move(out));
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) out += ", ";
            out += comps_[i].to_string();
        }
        return out + ")";
    }

  private:
    std::vector<Poly> comps_;
};

// ---- Linear-algebra oracles over the monomial basis ----

namespace detail {

// Coefficient matrix of the given polynomials over the union of their
// monomials (deterministic column order).
inline std::pair<std::vector<Exponents>, Matrix> coefficient_matrix(const std::vector<Poly>& ps) {
    std::map<Exponents, std::size_t, ExponentsLess> columns;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms()) columns.try_emplace(e, 0);
    std::vector<Exponents> order;
    order.reserve(columns.size());
    for (auto& [e, idx] : columns) {
        idx = order.size();
        order.push_back(e);
    }
    Matrix m(ps.size(), order.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (const auto& [e, c] : ps[i].terms()) m.at(i, columns[e]) = c;
    return {order, m};
}

}  // namespace detail

// True iff f is a Scalar-linear combination of basis.
inline bool in_linear_span(const std::vector<Poly>& basis, const Poly& f) {
    if (f.is_zero()) return true;
    std::vector<Poly> all = basis;
    all.push_back(f);
    auto [cols, m] = detail::coefficient_matrix(all);
    Matrix without(basis.size(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) without.at(i, j) = m.at(i, j);
    return rank(without) == rank(m);
}

// Maximal linearly independent sublist; candidates are taken lowest total
// degree first (stable, so ties keep input order) and earlier survivors win.
inline std::vector<Poly> linear_reduce(const std::vector<Poly>& fs) {
    std::vector<std::size_t> order(fs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fs[a].total_degree() < fs[b].total_degree();
    });
    std::vector<Poly> kept;
    for (std::size_t idx : order) {
        if (fs[idx].is_zero()) continue;
        if (!in_linear_span(kept, fs[idx])) kept.push_back(fs[idx]);
    }
    return kept;
}

// All products of gens (with repetition) of total degree <= bound, including
// the empty product 1. Zero or constant generators are skipped.
inline std::vector<Poly> bounded_products(const std::vector<Poly>& gens, unsigned nvars,
                                          unsigned bound) {
    std::vector<Poly> useful;
    for (const auto& g : gens)
        if (!g.is_zero() && !g.is_constant()) useful.push_back(g);
    std::vector<Poly> out{Poly::constant(nvars, Scalar(1L))};
    struct Rec {
        const std::vector<Poly>& gens;
        unsigned bound;
        std::vector<Poly>& out;
        void run(std::size_t start, const Poly& acc, unsigned deg) {
            for (std::size_t i = start; i < gens.size(); ++i) {
                unsigned d = deg + gens[i].total_degree();
                if (d > bound) continue;
                Poly next = acc * gens[i];
                out.push_back(next);
                run(i, next, d);
            }
        }
    } rec{useful, bound, out};
    rec.run(0, Poly::constant(nvars, Scalar(1L)), 0);
    return out;
}

// True iff f lies in the linear span of the products of gens with total
// degree <= bound (the degree-bounded algebra membership oracle).
inline bool algebra_member_bounded(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
    if (f.is_zero() || f.is_constant()) return true;
    if (bound < f.total_degree())
        throw std::domain_error("algebra_member_bounded: bound below degree of query");
    return in_linear_span(bounded_products(gens, f.nvars(), bound), f);
}

}  // namespace lorinv
