// The invariant <-> equivariant correspondence: J grad f, the pairing
// f(x,y) = <g(x),y>, extraction g = J (d_y f)^t at (x,0), and module
// generators from invariant generators on the doubled space under the
// diagonal action.
#pragma once

#include "lorinv/invariants.hpp"

#include <stdexcept>
#include <vector>

namespace lorinv {

// block-diag(gamma, gamma) acting on (x, y).
inline Matrix diagonal_lift(const Matrix& gamma) {
    if (!gamma.is_square()) throw std::domain_error("diagonal_lift: non-square matrix");
    std::size_t n = gamma.rows();
    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.at(i, j) = gamma.at(i, j);
            out.at(n + i, n + j) = gamma.at(i, j);
        }
    return out;
}

// J grad f: components (d1 f, ..., dn f, -d{n+1} f).
inline PolyMap gradient_map(const Poly& f) {
    unsigned n = f.nvars();
    if (n == 0) throw std::domain_error("gradient_map: no variables");
    std::vector<Poly> comps;
    comps.reserve(n);
    for (unsigned i = 0; i < n; ++i) comps.push_back(f.partial_derivative(i));
    comps[n - 1] = -comps[n - 1];
    return PolyMap(std::move(comps));
}

// f(x,y) = <g(x), y> on the doubled variable set.
inline Poly pairing_invariant(const PolyMap& g) {
    unsigned n = g.nvars();
    if (g.size() != n) throw std::domain_error("pairing_invariant: map is not an endomorphism");
    Poly out(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        Poly gi = g[i].extend_to_double();
        Poly yi = Poly::variable(2 * n, n + i);
        if (i + 1 == n)
            out -= gi * yi;
        else
            out += gi * yi;
    }
    return out;
}

// g(x) = J (d_y f)^t at (x, 0).
inline PolyMap equivariant_from_invariant(const Poly& f) {
    if (f.nvars() % 2 != 0)
        throw std::domain_error("equivariant_from_invariant: even variable count required");
    unsigned n = f.nvars() / 2;
    std::vector<Poly> comps;
    comps.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        Poly d = f.partial_derivative(n + i).restrict_y_zero();
        if (i + 1 == n) d = -d;
        comps.push_back(std::move(d));
    }
    return PolyMap(std::move(comps));
}

// g(gamma x) == gamma g(x), exactly.
inline bool is_equivariant(const PolyMap& g, const Matrix& gamma) {
    if (gamma.rows() != g.size() || gamma.cols() != g.nvars())
        throw std::domain_error("is_equivariant: size mismatch");
    return g.substitute_linear(gamma) == gamma * g;
}

namespace detail {

inline std::vector<Exponents> monomials_up_to(unsigned nvars, unsigned bound,
                                              std::optional<unsigned> exact_degree) {
    std::vector<Exponents> out;
    struct Gen {
        unsigned nvars, bound;
        std::optional<unsigned> exact;
        std::vector<Exponents>& out;
        void run(Exponents& cur, unsigned var, unsigned deg) {
            if (var == nvars) {
                if (!exact || deg == *exact) out.push_back(cur);
                return;
            }
            for (unsigned k = 0; deg + k <= bound; ++k) {
                cur[var] = k;
                run(cur, var + 1, deg + k);
            }
            cur[var] = 0;
        }
    } gen{nvars, bound, exact_degree, out};
    Exponents cur(nvars, 0);
    gen.run(cur, 0, 0);
    return out;
}

inline std::optional<unsigned> homogeneous_degree(const PolyMap& m) {
    std::optional<unsigned> deg;
    for (const Poly& c : m.components()) {
        for (const auto& [e, coef] : c.terms()) {
            unsigned d = Poly::total_degree_of(e);
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;
        }
    }
    return deg;  // nullopt only for the zero map handled by callers
}

// Is g a combination sum_k f_k h_k with polynomial coefficients f_k of total
// degree <= bound? When everything in sight is homogeneous the coefficient
// monomials can be taken of the exact complementary degree.
inline bool module_dependent_bounded(const std::vector<PolyMap>& basis, const PolyMap& g,
                                     unsigned bound) {
    if (g.is_zero()) return true;
    if (basis.empty()) return false;
    unsigned nvars = g.nvars();

    auto gdeg = homogeneous_degree(g);
    bool all_homogeneous = gdeg.has_value();
    std::vector<std::optional<unsigned>> hdegs;
    for (const PolyMap& h : basis) {
        hdegs.push_back(homogeneous_degree(h));
        if (!hdegs.back()) all_homogeneous = false;
    }

    // stack a map's components into one poly over an extended variable set;
    // the extra variable's exponent tags the component index
    auto stack = [&](const PolyMap& m) {
        Poly out(nvars + 1);
        for (std::size_t comp = 0; comp < m.size(); ++comp) {
            for (const auto& [e, c] : m[comp].terms()) {
                Exponents ext(e);
                ext.push_back(static_cast<unsigned>(comp));
                out += Poly::monomial(nvars + 1, std::move(ext), c);
            }
        }
        return out;
    };

    std::vector<Poly> stacked_cols;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const PolyMap& h = basis[k];
        std::vector<Exponents> monos;
        if (all_homogeneous) {
            if (*hdegs[k] > *gdeg) continue;
            monos = monomials_up_to(nvars, bound, *gdeg - *hdegs[k]);
        } else {
            monos = monomials_up_to(nvars, bound, std::nullopt);
        }
        for (const Exponents& e : monos) {
            Poly mono = Poly::monomial(nvars, e, Scalar(1L));
            std::vector<Poly> comps;
            comps.reserve(h.size());
            for (std::size_t c = 0; c < h.size(); ++c) comps.push_back(mono * h[c]);
            stacked_cols.push_back(stack(PolyMap(std::move(comps))));
        }
    }
    return in_linear_span(stacked_cols, stack(g));
}

}  // namespace detail

// Images J (d_y u)^t_{(x,0)} of the supplied cartesian invariant generators;
// zero maps are dropped, and a map is dropped when it is a combination of the
// retained ones with polynomial coefficients of bounded degree. The caller
// certifies that cartesian_gens generate the invariant ring of the diagonal
// action (for instance via algorithm_generators on the lift). The group
// argument only drives a sanity check that every retained map is equivariant.
inline std::vector<PolyMap> module_generators(const std::vector<Poly>& cartesian_gens,
                                              const std::vector<Matrix>& group) {
    std::vector<PolyMap> maps;
    for (const Poly& u : cartesian_gens) {
        PolyMap g = equivariant_from_invariant(u);
        if (g.is_zero()) continue;
        maps.push_back(std::move(g));
    }
    std::vector<PolyMap> kept;
    for (const PolyMap& g : maps) {
        unsigned maxdeg = 0;
        for (const Poly& c : g.components()) maxdeg = std::max(maxdeg, c.total_degree());
        unsigned bound = 2 * std::max(1u, maxdeg);
        if (!detail::module_dependent_bounded(kept, g, bound)) kept.push_back(g);
    }
    for (const PolyMap& g : kept)
        for (const Matrix& gamma : group)
            if (!is_equivariant(g, gamma))
                throw std::domain_error(
                    "module_generators: produced map is not equivariant (bad cartesian input?)");
    return kept;
}

}  // namespace lorinv
