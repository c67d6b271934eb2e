// Exact vectors and matrices over Scalar, the Minkowski bilinear form, Lorentz
// membership and component classification, fraction-field Gaussian elimination
// (kernel, rank, rref, determinant) and exact eigen-structure for sizes <= 4.
#pragma once

#include "lorinv/scalar.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorinv {

class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim, Scalar(0L)) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

    static Vector of_rationals(const std::vector<Rational>& rs) {
        std::vector<Scalar> c;
        c.reserve(rs.size());
        for (const auto& r : rs) c.emplace_back(r);
        return Vector(std::move(c));
    }
    static Vector of_longs(const std::vector<long>& ns) {
        std::vector<Scalar> c;
        c.reserve(ns.size());
        for (long n : ns) c.emplace_back(n);
        return Vector(std::move(c));
    }

    std::size_t dim() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](const Scalar& s) { return s.is_zero(); });
    }

    bool operator==(const Vector& o) const {
        if (dim() != o.dim()) return false;
        for (std::size_t i = 0; i < dim(); ++i)
            if (coords_[i] != o.coords_[i]) return false;
        return true;
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        Vector out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
        return out;
    }
    friend Vector operator-(const Vector& a, const Vector& b) {
        Vector out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
        return out;
    }
    friend Vector operator*(const Scalar& k, const Vector& v) {
        Vector out(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) out[i] = k * v[i];
        return out;
    }

    bool is_rational() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](const Scalar& s) { return s.is_rational(); });
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) out += ", ";
            out += coords_[i].to_string();
        }
        return out + ")";
    }

  private:
    std::vector<Scalar> coords_;
};

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0L)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1L);
        return m;
    }
    static Matrix diagonal(const std::vector<Scalar>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }
    static Matrix of_longs(const std::vector<std::vector<long>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = Scalar(rows[i][j]);
        return m;
    }
    static Matrix from_rows(const std::vector<Vector>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].dim());
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != o.entries_[i]) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("matrix: size mismatch in product");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                Scalar acc(0L);
                for (std::size_t k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
                out.at(i, j) = acc;
            }
        return out;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::domain_error("matrix: size mismatch in sum");
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            out.entries_[i] = a.entries_[i] + b.entries_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::domain_error("matrix: size mismatch in difference");
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            out.entries_[i] = a.entries_[i] - b.entries_[i];
        return out;
    }
    friend Matrix operator*(const Scalar& k, const Matrix& a) {
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = k * a.entries_[i];
        return out;
    }
    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.dim()) throw std::domain_error("matrix: size mismatch in apply");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Scalar acc(0L);
            for (std::size_t j = 0; j < a.cols_; ++j) acc += a.at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    bool is_rational() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Scalar& s) { return s.is_rational(); });
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << at(i, j).to_string();
            }
            os << "]";
            if (i + 1 < rows_) os << "\n";
        }
        return os.str();
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

// J = diag(1,...,1,-1).
inline Matrix metric_matrix(std::size_t dim) {
    Matrix j = Matrix::identity(dim);
    j.at(dim - 1, dim - 1) = Scalar(-1L);
    return j;
}

// diag(J, J): the form carried by the cartesian double (x, y).
inline Matrix doubled_metric_matrix(std::size_t dim) {
    if (dim % 2 != 0) throw std::domain_error("doubled_metric_matrix: even dimension required");
    Matrix j = Matrix::identity(dim);
    j.at(dim / 2 - 1, dim / 2 - 1) = Scalar(-1L);
    j.at(dim - 1, dim - 1) = Scalar(-1L);
    return j;
}

// <x,y> = x^t J y.
inline Scalar minkowski_product(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) throw std::domain_error("minkowski_product: dimension mismatch");
    if (x.dim() == 0) throw std::domain_error("minkowski_product: empty vectors");
    Scalar acc(0L);
    for (std::size_t i = 0; i + 1 < x.dim(); ++i) acc += x[i] * y[i];
    acc -= x[x.dim() - 1] * y[y.dim() - 1];
    return acc;
}

inline bool is_lorentz(const Matrix& a) {
    if (!a.is_square()) throw std::domain_error("is_lorentz: non-square matrix");
    Matrix j = metric_matrix(a.rows());
    return a.transpose() * j * a == j;
}

// Isometry of the doubled block form diag(J, J).
inline bool is_lorentz_doubled(const Matrix& a) {
    if (!a.is_square()) throw std::domain_error("is_lorentz_doubled: non-square matrix");
    Matrix j = doubled_metric_matrix(a.rows());
    return a.transpose() * j * a == j;
}

// A^{-1} = J A^t J for Lorentz A.
inline Matrix lorentz_inverse(const Matrix& a) {
    if (!is_lorentz(a)) throw std::domain_error("lorentz_inverse: input is not Lorentz");
    Matrix j = metric_matrix(a.rows());
    return j * a.transpose() * j;
}

// ---- Gaussian elimination over the Scalar fraction field ----
// Pivot rule: first nonzero entry in column order, so results are
// deterministic and bases byte-stable.

struct EchelonForm {
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
    int row_swaps = 0;
};

inline EchelonForm reduced_row_echelon(Matrix m) {
    EchelonForm out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
            ++out.row_swaps;
        }
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rref = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivot_cols.size(); }

// Echelon-normalized basis of the null space (one vector per free column).
inline std::vector<Vector> kernel(const Matrix& m) {
    EchelonForm ef = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vector v(m.cols());
        v[c] = Scalar(1L);
        for (std::size_t ri = 0; ri < ef.pivot_cols.size(); ++ri)
            v[ef.pivot_cols[ri]] = -ef.rref.at(ri, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Scalar determinant(Matrix m) {
    if (!m.is_square()) throw std::domain_error("determinant: non-square matrix");
    Scalar det(1L);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return Scalar(0L);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

// General inverse through rref of [m | I]; prefer lorentz_inverse for group
// elements.
inline Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::domain_error("inverse: non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1L);
    }
    EchelonForm ef = reduced_row_echelon(aug);
    if (ef.pivot_cols.size() < n || ef.pivot_cols[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ef.rref.at(i, n + j);
    return out;
}

// ---- Connected-component classification ----

enum class ComponentTag { SO0, LambdaP, LambdaT, LambdaPT };

inline const char* to_string(ComponentTag t) {
    switch (t) {
        case ComponentTag::SO0: return "SO0";
        case ComponentTag::LambdaP: return "LambdaP";
        case ComponentTag::LambdaT: return "LambdaT";
        case ComponentTag::LambdaPT: return "LambdaPT";
    }
    return "?";
}

// Klein four-group product of the component tags.
inline ComponentTag component_product(ComponentTag a, ComponentTag b) {
    auto tosigns = [](ComponentTag t) -> std::pair<int, int> {
        switch (t) {
            case ComponentTag::SO0: return {1, 1};
            case ComponentTag::LambdaP: return {-1, 1};
            case ComponentTag::LambdaT: return {-1, -1};
            case ComponentTag::LambdaPT: return {1, -1};
        }
        return {1, 1};
    };
    auto [da, ca] = tosigns(a);
    auto [db, cb] = tosigns(b);
    int d = da * db, c = ca * cb;
    if (d > 0 && c > 0) return ComponentTag::SO0;
    if (d < 0 && c > 0) return ComponentTag::LambdaP;
    if (d < 0 && c < 0) return ComponentTag::LambdaT;
    return ComponentTag::LambdaPT;
}

// Tag by (sign det A, sign A_{n+1,n+1}): (+,+) SO0, (-,+) Lambda^p,
// (-,-) Lambda^t, (+,-) Lambda^pt. Requires both signs rationally decidable.
inline ComponentTag classify_component(const Matrix& a) {
    if (!is_lorentz(a)) throw std::domain_error("classify_component: input is not Lorentz");
    Scalar det = determinant(a);
    auto ds = det.sign_if_rational();
    auto cs = a.at(a.rows() - 1, a.cols() - 1).sign_if_rational();
    if (!ds || !cs)
        throw std::domain_error(
            "classify_component: sign of det or corner entry not decidable from rational data");
    if (*ds > 0 && *cs > 0) return ComponentTag::SO0;
    if (*ds < 0 && *cs > 0) return ComponentTag::LambdaP;
    if (*ds < 0 && *cs < 0) return ComponentTag::LambdaT;
    return ComponentTag::LambdaPT;
}

// ---- Exact eigen-structure for small matrices ----

// Univariate polynomial over Scalar, coefficient of x^i at index i.
using UniPoly = std::vector<Scalar>;

inline UniPoly unipoly_trim(UniPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}
inline UniPoly unipoly_add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Scalar(0L));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return unipoly_trim(out);
}
inline UniPoly unipoly_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Scalar(0L));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return unipoly_trim(out);
}
inline UniPoly unipoly_neg(UniPoly a) {
    for (auto& c : a) c = -c;
    return a;
}
inline Scalar unipoly_eval(const UniPoly& p, const Scalar& x) {
    Scalar acc(0L);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}
// Synthetic division by (x - r); remainder must be zero.
inline UniPoly unipoly_deflate(const UniPoly& p, const Scalar& r) {
    UniPoly q(p.size() - 1, Scalar(0L));
    Scalar carry(0L);
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

inline std::string unipoly_to_string(const UniPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + p[i].to_string() + ")";
        if (i >= 1) out += "*x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// det(A - x I) by cofactor expansion with polynomial entries (n <= 4).
inline UniPoly characteristic_polynomial(const Matrix& a) {
    if (!a.is_square()) throw std::domain_error("characteristic_polynomial: non-square");
    std::size_t n = a.rows();
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UniPoly e{a.at(i, j)};
            if (i == j) e.push_back(Scalar(-1L));
            m[i][j] = unipoly_trim(e);
        }
    // recursive cofactor expansion over row sets
    struct Rec {
        const std::vector<std::vector<UniPoly>>& m;
        std::size_t n;
        UniPoly run(std::vector<std::size_t> rows, std::size_t col) {
            if (rows.empty()) return UniPoly{Scalar(1L)};
            UniPoly acc;
            int s = 1;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                std::vector<std::size_t> rest;
                for (std::size_t l = 0; l < rows.size(); ++l)
                    if (l != k) rest.push_back(rows[l]);
                UniPoly term = unipoly_mul(m[rows[k]][col], run(rest, col + 1));
                if (s < 0) term = unipoly_neg(term);
                acc = unipoly_add(acc, term);
                s = -s;
            }
            return acc;
        }
    } rec{m, n};
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return rec.run(all, 0);
}

struct EigenPair {
    Scalar value;
    std::vector<Vector> space;
};

// Complete real eigen-structure, or partial with the unresolved factor of the
// characteristic polynomial attached.
struct EigenDecomposition {
    std::vector<EigenPair> pairs;
    std::optional<UniPoly> unresolved;
    bool decided() const { return !unresolved.has_value(); }
};

namespace detail {

// Divisors of |n| by trial division; nullopt when |n| is too large to factor
// cheaply (the caller then falls back to Undecided).
inline std::optional<std::vector<BigInt>> small_divisors(const BigInt& n) {
    BigInt a = abs(n);
    if (a == 0) return std::vector<BigInt>{};
    if (a > 1000000) return std::nullopt;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return out;
}

// Rational root candidates p/q with p | a0, q | an, both signs.
inline std::vector<Scalar> rational_root_candidates(const UniPoly& p) {
    std::vector<Scalar> out;
    if (p.size() < 2) return out;
    // clear denominators
    BigInt lcm(1);
    std::vector<Rational> coeffs;
    for (const auto& c : p) {
        auto r = c.rational_value();
        if (!r) return out;
        coeffs.push_back(*r);
        BigInt l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), r->get_den().get_mpz_t());
        lcm = l;
    }
    std::vector<BigInt> ints;
    for (const auto& r : coeffs) {
        Rational scaled = r * Rational(lcm);
        ints.push_back(scaled.get_num());
    }
    std::size_t lo = 0;
    while (lo < ints.size() && ints[lo] == 0) ++lo;  // factor out x^lo; 0 handled by caller
    if (lo >= ints.size()) return out;
    auto ds0 = small_divisors(ints[lo]);
    auto dsn = small_divisors(ints.back());
    if (!ds0 || !dsn) return out;
    for (const auto& a : *ds0)
        for (const auto& b : *dsn) {
            Rational r = make_rational(a, b);
            out.emplace_back(r);
            out.emplace_back(Rational(-r));
        }
    return out;
}

// Square root of a scalar when it is a perfect square of a recognizable form:
// a rational square, or a single monomial with even exponents and square
// rational coefficient (numerator and denominator separately).
inline std::optional<Scalar> scalar_sqrt(const Scalar& s) {
    if (s.is_zero()) return Scalar(0L);
    if (auto r = s.rational_value()) {
        auto q = rational_sqrt(*r);
        if (!q) return std::nullopt;
        return Scalar(*q);
    }
    auto mono_sqrt = [](const RingElem& e) -> std::optional<RingElem> {
        if (e.terms().size() != 1) return std::nullopt;
        const auto& [m, c] = *e.terms().begin();
        if (m.ch % 2 || m.sh % 2 || m.co % 2 || m.si % 2) return std::nullopt;
        auto cr = rational_sqrt(c);
        if (!cr) return std::nullopt;
        return RingElem::monomial(
            ParamMono{static_cast<std::uint8_t>(m.ch / 2), m.sh / 2,
                      static_cast<std::uint8_t>(m.co / 2), m.si / 2},
            *cr);
    };
    auto n = mono_sqrt(s.num());
    auto d = mono_sqrt(s.den());
    if (!n || !d) return std::nullopt;
    return Scalar(*n, *d);
}

}  // namespace detail

// Factors the characteristic polynomial by rational-root search (rational
// coefficients), the symbolic candidates {1, -1, c+s, c-s}, then quadratic
// closure when the remaining discriminant has a recognizable square root.
// Negative rational discriminants contribute no real roots and do not spoil
// completeness.
inline EigenDecomposition eigen_lines(const Matrix& a) {
    if (!a.is_square()) throw std::domain_error("eigen_lines: non-square matrix");
    if (a.rows() > 4) throw std::domain_error("eigen_lines: size must be at most 4");
    EigenDecomposition out;
    UniPoly p = unipoly_trim(characteristic_polynomial(a));

    std::vector<Scalar> candidates = {Scalar(1L), Scalar(-1L), Scalar(0L),
                                      Scalar::cosh_t() + Scalar::sinh_t(),
                                      Scalar::cosh_t() - Scalar::sinh_t()};
    for (const Scalar& c : detail::rational_root_candidates(p)) candidates.push_back(c);

    std::vector<Scalar> roots;
    auto take_root = [&](const Scalar& r) {
        for (const Scalar& seen : roots)
            if (seen == r) return;
        roots.push_back(r);
    };

    for (const Scalar& cand : candidates) {
        while (p.size() >= 2 && unipoly_eval(p, cand).is_zero()) {
            take_root(cand);
            p = unipoly_deflate(p, cand);
        }
    }
    bool complete = false;
    if (p.size() <= 1) {
        complete = true;
    } else if (p.size() == 2) {
        take_root(Scalar(0L) - p[0] / p[1]);
        complete = true;
    } else if (p.size() == 3) {
        Scalar disc = p[1] * p[1] - Scalar(4L) * p[2] * p[0];
        if (auto ds = disc.sign_if_rational(); ds && *ds < 0) {
            complete = true;  // conjugate complex pair, no real roots
        } else if (auto sq = detail::scalar_sqrt(disc)) {
            Scalar two_a = Scalar(2L) * p[2];
            take_root((Scalar(0L) - p[1] + *sq) / two_a);
            take_root((Scalar(0L) - p[1] - *sq) / two_a);
            complete = true;
        }
    }
    if (!complete) out.unresolved = p;

    for (const Scalar& r : roots) {
        Matrix shifted = a - r * Matrix::identity(a.rows());
        std::vector<Vector> space = kernel(shifted);
        if (space.empty()) continue;  // spurious candidate (cannot happen for true roots)
        out.pairs.push_back(EigenPair{r, std::move(space)});
    }
    return out;
}

}  // namespace lorinv
