// Invariant-subspace machinery: echelon-normalized subspaces, causal-type
// classification through the restricted Gram form, pseudo-orthogonal
// complements, invariant complements (orthogonal in the nondegenerate case,
// J W-perp for lightlike subspaces of transpose-closed groups), fixed-point
// subspaces, invariant line/plane enumeration, and the low-dimensional
// conjugacy/fix catalog with its kernel-oracle verification.
#pragma once

#include "lorinv/catalog.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorinv {

class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    // Row-reduces the spanning set; the reduced rows are the canonical basis,
    // so equal subspaces compare equal member-wise.
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
        for (const Vector& v : vectors)
            if (v.dim() != ambient) throw std::domain_error("subspace: ambient mismatch");
        Subspace out(ambient);
        if (vectors.empty()) return out;
        EchelonForm ef = reduced_row_echelon(Matrix::from_rows(vectors));
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i) {
            Vector row(ambient);
            for (std::size_t j = 0; j < ambient; ++j) row[j] = ef.rref.at(i, j);
            out.basis_.push_back(std::move(row));
        }
        return out;
    }
    static Subspace full(std::size_t ambient) {
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vector v(ambient);
            v[i] = Scalar(1L);
            rows.push_back(std::move(v));
        }
        return span(ambient, rows);
    }
    static Subspace line(const Vector& v) { return span(v.dim(), {v}); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    bool is_trivial() const { return basis_.empty(); }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const Vector& v) const {
        if (v.dim() != ambient_) return false;
        if (v.is_zero()) return true;
        std::vector<Vector> rows = basis_;
        rows.push_back(v);
        return rank(Matrix::from_rows(rows)) == basis_.size();
    }
    bool contains(const Subspace& w) const {
        for (const Vector& v : w.basis_)
            if (!contains(v)) return false;
        return true;
    }

    bool is_rational() const {
        for (const Vector& v : basis_)
            if (!v.is_rational()) return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        std::vector<Vector> rows = a.basis_;
        rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
        return span(a.ambient_, rows);
    }

    // Intersection: vectors x with x in both spans, through the kernel of the
    // stacked coordinate representation.
    friend Subspace intersection(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::domain_error("subspace: ambient mismatch");
        if (a.is_trivial() || b.is_trivial()) return Subspace(a.ambient_);
        // columns: coefficients over basis of a, then basis of b; kernel rows
        // of [A^t | -B^t] give the common vectors.
        Matrix m(a.ambient_, a.dim() + b.dim());
        for (std::size_t i = 0; i < a.ambient_; ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.basis_[j][i];
            for (std::size_t j = 0; j < b.dim(); ++j) m.at(i, a.dim() + j) = -b.basis_[j][i];
        }
        std::vector<Vector> vecs;
        for (const Vector& k : kernel(m)) {
            Vector v(a.ambient_);
            for (std::size_t j = 0; j < a.dim(); ++j) v = v + k[j] * a.basis_[j];
            vecs.push_back(std::move(v));
        }
        return span(a.ambient_, vecs);
    }

    std::string to_string() const {
        std::string out = "span{";
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (i) out += ", ";
            out += basis_[i].to_string();
        }
        return out + "}";
    }

  private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

inline Subspace apply(const Matrix& m, const Subspace& w) {
    std::vector<Vector> img;
    img.reserve(w.dim());
    for (const Vector& b : w.basis()) img.push_back(m * b);
    return Subspace::span(w.ambient_dim(), img);
}

inline bool is_invariant_subspace(const Subspace& w, const Matrix& gamma) {
    return apply(gamma, w) == w;
}

// ---- causal type ----

enum class CausalType { Spacelike, Timelike, Lightlike };

inline const char* to_string(CausalType t) {
    switch (t) {
        case CausalType::Spacelike: return "space";
        case CausalType::Timelike: return "time";
        case CausalType::Lightlike: return "light";
    }
    return "?";
}

inline CausalType vector_type(const Vector& x) {
    if (x.is_zero()) throw std::domain_error("vector_type: zero vector has no causal type");
    Scalar n = minkowski_product(x, x);
    auto s = n.sign_if_rational();
    if (!s) throw std::domain_error("vector_type: sign undecidable on symbolic input");
    if (*s > 0) return CausalType::Spacelike;
    if (*s < 0) return CausalType::Timelike;
    return CausalType::Lightlike;
}

// Signature of the restricted Gram form by exact symmetric (Lagrange)
// reduction: positive definite -> space, any negative direction -> time,
// degenerate positive semidefinite -> light.
inline CausalType subspace_type(const Subspace& w) {
    std::size_t k = w.dim();
    if (k == 0) return CausalType::Spacelike;  // vacuously positive definite
    std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Scalar e = minkowski_product(w.basis()[i], w.basis()[j]);
            auto r = e.rational_value();
            if (!r) throw std::domain_error("subspace_type: symbolic entries are not classifiable");
            g[i][j] = *r;
        }
    int pos = 0, neg = 0, zero = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (g[i][i] == 0) {
            std::size_t swap_with = k;
            for (std::size_t j = i + 1; j < k; ++j)
                if (g[j][j] != 0) {
                    swap_with = j;
                    break;
                }
            if (swap_with < k) {
                std::swap(g[i], g[swap_with]);
                for (std::size_t r = 0; r < k; ++r) std::swap(g[r][i], g[r][swap_with]);
            } else {
                std::size_t mate = k;
                for (std::size_t j = i + 1; j < k; ++j)
                    if (g[i][j] != 0) {
                        mate = j;
                        break;
                    }
                if (mate == k) {
                    ++zero;
                    continue;
                }
                // e_i += e_mate turns the hyperbolic pair into a nonzero square
                for (std::size_t c = 0; c < k; ++c) g[i][c] += g[mate][c];
                for (std::size_t r = 0; r < k; ++r) g[r][i] += g[r][mate];
            }
        }
        Rational piv = g[i][i];
        if (piv > 0)
            ++pos;
        else
            ++neg;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (g[i][j] == 0) continue;
            Rational f = g[i][j] / piv;
            for (std::size_t c = 0; c < k; ++c) g[j][c] -= f * g[i][c];
            for (std::size_t r = 0; r < k; ++r) g[r][j] -= f * g[r][i];
        }
    }
    if (neg > 0) return CausalType::Timelike;
    if (zero > 0) return CausalType::Lightlike;
    return CausalType::Spacelike;
}

// ---- complements ----

inline Subspace orthogonal_complement(const Subspace& w) {
    std::size_t n = w.ambient_dim();
    if (w.is_trivial()) return Subspace::full(n);
    Matrix m(w.dim(), n);
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar e = w.basis()[i][j];
            m.at(i, j) = (j + 1 == n) ? -e : e;  // row = (basis_i)^t J
        }
    return Subspace::span(n, kernel(m));
}

inline bool is_nondegenerate(const Subspace& w) {
    return intersection(w, orthogonal_complement(w)).is_trivial();
}

inline Subspace apply_metric(const Subspace& w) {
    Matrix j = metric_matrix(w.ambient_dim());
    return apply(j, w);
}

// All products of the generators up to the given word length (the identity
// included). Exact matrix equality deduplicates.
inline std::vector<Matrix> bounded_words(const std::vector<Matrix>& gens, unsigned max_len) {
    if (gens.empty()) return {};
    std::size_t n = gens[0].rows();
    std::vector<Matrix> words{Matrix::identity(n)};
    auto known = [&](const Matrix& m) {
        for (const Matrix& w : words)
            if (w == m) return true;
        return false;
    };
    std::vector<Matrix> frontier = words;
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<Matrix> next;
        for (const Matrix& w : frontier)
            for (const Matrix& g : gens) {
                Matrix m = w * g;
                if (!known(m)) {
                    words.push_back(m);
                    next.push_back(m);
                }
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return words;
}

// Certifies gamma^t in the generated group for every generator, by membership
// in the word closure up to the given length. A failed search proves nothing,
// so it reports unverifiable rather than false.
inline bool transpose_closed(const std::vector<Matrix>& gens, unsigned max_len = 4) {
    std::vector<Matrix> words = bounded_words(gens, max_len);
    for (const Matrix& g : gens) {
        Matrix gt = g.transpose();
        bool found = false;
        for (const Matrix& w : words)
            if (w == gt) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// W-perp when W is nondegenerate; J W-perp when W is degenerate (lightlike)
// and the group is certifiably transpose-closed. The returned complement is
// verified: it is invariant and sums directly with W to the whole space.
inline Subspace invariant_complement(const Subspace& w, const std::vector<Matrix>& group) {
    for (const Matrix& g : group)
        if (!is_invariant_subspace(w, g))
            throw std::domain_error("invariant_complement: subspace is not invariant");
    std::size_t n = w.ambient_dim();
    Subspace comp;
    if (is_nondegenerate(w)) {
        comp = orthogonal_complement(w);
    } else {
        if (!transpose_closed(group))
            throw std::domain_error(
                "invariant_complement: degenerate subspace and transpose closure unverifiable "
                "at word length 4");
        comp = apply_metric(orthogonal_complement(w));
    }
    if (comp.dim() + w.dim() != n || !intersection(comp, w).is_trivial())
        throw std::domain_error("invariant_complement: complement verification failed");
    for (const Matrix& g : group)
        if (!is_invariant_subspace(comp, g))
            throw std::domain_error("invariant_complement: complement is not invariant");
    return comp;
}

// Fix of the generated subgroup: kernel of the stacked (gamma_i - I).
inline Subspace fix_subspace(const std::vector<Matrix>& gens) {
    if (gens.empty()) throw std::domain_error("fix_subspace: no generators");
    std::size_t n = gens[0].rows();
    for (const Matrix& g : gens)
        if (!g.is_square() || g.rows() != n)
            throw std::domain_error("fix_subspace: generator size mismatch");
    Matrix stacked(gens.size() * n, n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix d = gens[k] - Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked.at(k * n + i, j) = d.at(i, j);
    }
    return Subspace::span(n, kernel(stacked));
}

// ---- invariant lines and planes ----

// A single invariant line, or the family of all lines inside a (>= 2)-dim
// eigenspace; `type` annotates a single line's causal type, or the carrier's,
// when rationally decidable.
struct LineItem {
    bool is_family = false;
    Subspace space;  // the line itself, or the family's carrier subspace
    std::optional<CausalType> type;
};

struct InvariantLines {
    std::vector<LineItem> items;
    std::optional<UniPoly> unresolved;  // attached unfactored characteristic part
    bool decided() const { return !unresolved.has_value(); }
};

inline InvariantLines invariant_lines(const Matrix& gamma) {
    if (!is_lorentz(gamma)) throw std::domain_error("invariant_lines: matrix is not Lorentz");
    if (gamma.rows() > 3) throw std::domain_error("invariant_lines: ambient dimension at most 3");
    EigenDecomposition eig = eigen_lines(gamma);
    InvariantLines out;
    out.unresolved = eig.unresolved;
    for (const EigenPair& p : eig.pairs) {
        LineItem item;
        item.space = Subspace::span(gamma.rows(), p.space);
        item.is_family = item.space.dim() >= 2;
        try {
            item.type = item.is_family ? subspace_type(item.space)
                                       : vector_type(item.space.basis()[0]);
        } catch (const std::domain_error&) {
            item.type = std::nullopt;  // symbolic data: leave unannotated
        }
        out.items.push_back(std::move(item));
    }
    return out;
}

// A single invariant plane, or the family of all planes containing an axis
// line (the perp-dual of a line family's carrier).
struct PlaneItem {
    bool is_family = false;
    Subspace space;  // the plane, or the family's common axis line
    std::optional<CausalType> type;
};

struct InvariantPlanes {
    std::vector<PlaneItem> items;
    std::optional<UniPoly> unresolved;
    bool decided() const { return !unresolved.has_value(); }
};

// Planes are perp-duals of invariant lines (W invariant iff W-perp invariant
// for Lorentz elements, no nondegeneracy needed); a family of lines inside E
// dualizes to the family of planes containing E-perp.
inline InvariantPlanes invariant_planes(const Matrix& gamma) {
    if (gamma.rows() != 3) throw std::domain_error("invariant_planes: ambient dimension 3 only");
    InvariantLines lines = invariant_lines(gamma);
    InvariantPlanes out;
    out.unresolved = lines.unresolved;
    for (const LineItem& li : lines.items) {
        PlaneItem pi;
        pi.is_family = li.is_family;
        pi.space = orthogonal_complement(li.space);
        try {
            pi.type = pi.is_family ? std::optional<CausalType>(vector_type(pi.space.basis()[0]))
                                   : std::optional<CausalType>(subspace_type(pi.space));
        } catch (const std::domain_error&) {
            pi.type = std::nullopt;
        }
        out.items.push_back(std::move(pi));
    }
    return out;
}

// Causal types a plane through the given axis line can take: a timelike axis
// forces timelike planes; a lightlike axis allows light and time; a spacelike
// axis allows all three.
inline std::vector<CausalType> plane_types_through_axis(CausalType axis) {
    switch (axis) {
        case CausalType::Timelike: return {CausalType::Timelike};
        case CausalType::Lightlike: return {CausalType::Lightlike, CausalType::Timelike};
        case CausalType::Spacelike:
            return {CausalType::Spacelike, CausalType::Lightlike, CausalType::Timelike};
    }
    return {};
}

// ---- the dimension-3 conjugacy/fix catalog ----

// The conjugating element: rows (-cos, -sin*ch, -sin*sh), (sin, -cos*ch,
// -cos*sh), (0, sh, ch) with (ch, sh) the hyperbolic point of the half
// parameter r (so the full parameter sits at t = r^2).
inline Matrix conjugacy_matrix_3d(const CirclePair& phi, const Rational& half_param) {
    require_circle(phi);
    HyperbolicPair h = hyperbolic_point(half_param);
    Matrix m(3, 3);
    m.at(0, 0) = -phi.p;
    m.at(0, 1) = -phi.q * h.c;
    m.at(0, 2) = -phi.q * h.s;
    m.at(1, 0) = phi.q;
    m.at(1, 1) = -phi.p * h.c;
    m.at(1, 2) = -phi.p * h.s;
    m.at(2, 2) = h.c;
    m.at(2, 1) = h.s;
    return m;
}

enum class FixLineKind { Hplus, LambdaPtHplus };

struct FixLineResult {
    Vector vector;           // the line's spanning vector (catalog or kernel)
    bool catalog_confirmed;  // catalog formula agreed with the kernel oracle
    Subspace fixed_line;
};

// Catalog fixed-line formulas for the noncompact one-generator subgroups,
// always verified against the kernel of (element - I); on mismatch the kernel
// result wins and the formula is flagged.
inline FixLineResult fix_line_catalog(FixLineKind kind, const CirclePair& varphi,
                                      const HyperbolicPair& theta, const CirclePair& phi) {
    require_circle(varphi);
    require_circle(phi);
    require_hyperbolic(theta);
    Scalar denom_angle = phi.p + varphi.p;
    if (denom_angle.is_zero())
        throw std::domain_error("fix_line_catalog: cos(varphi) + cos(phi) must be nonzero");
    if (theta.c == Scalar(1L))
        throw std::domain_error("fix_line_catalog: cosh(theta) must differ from 1");

    Matrix element = (kind == FixLineKind::Hplus) ? h_plus(varphi, theta, phi, 1)
                                                  : h_minus(varphi, theta, phi, -1);
    Scalar cross = varphi.p * phi.q + varphi.q * phi.p;  // sin of the angle sum
    Vector formula(3);
    formula[0] = Scalar(1L);
    if (kind == FixLineKind::Hplus) {
        formula[1] = (varphi.q - phi.q) / denom_angle;
        formula[2] = cross * theta.s / ((Scalar(1L) - theta.c) * denom_angle);
    } else {
        formula[1] = -(phi.q - varphi.q) / denom_angle;
        formula[2] = -(cross * theta.s) / ((theta.c + Scalar(1L)) * denom_angle);
    }

    Subspace fix = fix_subspace({element});
    if (fix.dim() != 1)
        throw std::domain_error("fix_line_catalog: parameters degenerate (fix is not a line)");
    bool confirmed = fix.contains(formula);
    FixLineResult out;
    out.fixed_line = fix;
    out.catalog_confirmed = confirmed;
    out.vector = confirmed ? formula : fix.basis()[0];
    return out;
}

}  // namespace lorinv
