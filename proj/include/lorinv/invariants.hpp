// Reynolds operators over an involution and the recursive computation of
// invariant-ring generators for groups of the form Sigma x| [d_1,...,d_m]
// with the d_i generalized reflections. Each involution step forms
// {R(u_i)} u {S(u_i)S(u_j), i<=j}, drops zeros and constants, reduces linear
// dependence, then prunes elements already generated at bounded degree.
#pragma once

#include "lorinv/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lorinv {

enum class ProductKind { Semidirect, Direct };

inline bool is_involution(const Matrix& m) {
    return m.is_square() && m * m == Matrix::identity(m.rows());
}

// f(gamma x) == f(x), exactly.
inline bool is_invariant(const Poly& f, const Matrix& gamma) {
    return f.substitute_linear(gamma) == f;
}

struct GroupSpec {
    std::size_t dim = 0;  // ambient n+1
    std::vector<Matrix> sigma_generators;
    std::vector<Poly> sigma_invariant_gens;
    std::vector<Matrix> involutions;
    ProductKind product_kind = ProductKind::Semidirect;
    bool doubled_metric = false;  // set for diagonal actions on the cartesian double

    // All generators of the group presentation, base subgroup first.
    std::vector<Matrix> all_generators() const {
        std::vector<Matrix> out = sigma_generators;
        out.insert(out.end(), involutions.begin(), involutions.end());
        return out;
    }

    // Throws when a structural invariant fails: involutions must be Lorentz
    // of order 2, and the supplied base invariants must actually be invariant
    // under every base generator.
    void validate() const {
        auto isometry = [this](const Matrix& m) {
            return doubled_metric ? is_lorentz_doubled(m) : is_lorentz(m);
        };
        for (const Matrix& g : sigma_generators) {
            if (g.rows() != dim || g.cols() != dim)
                throw std::domain_error("group: base generator has wrong size");
            if (!isometry(g)) throw std::domain_error("group: base generator is not Lorentz");
        }
        for (const Matrix& d : involutions) {
            if (d.rows() != dim || d.cols() != dim)
                throw std::domain_error("group: involution has wrong size");
            if (!isometry(d)) throw std::domain_error("group: involution is not Lorentz");
            if (!is_involution(d))
                throw std::domain_error("group: listed involution does not square to identity");
        }
        for (const Poly& u : sigma_invariant_gens) {
            if (u.nvars() != dim)
                throw std::domain_error("group: base invariant has wrong variable count");
            for (const Matrix& g : sigma_generators)
                if (!is_invariant(u, g))
                    throw std::domain_error(
                        "group: listed base invariant is not invariant under a base generator");
        }
    }
};

// R(f) = (f + f o delta)/2; fixed by delta.
inline Poly reynolds_R(const Poly& f, const Matrix& delta) {
    if (!is_involution(delta)) throw std::domain_error("reynolds_R: delta is not an involution");
    return Scalar(make_rational(1, 2)) * (f + f.substitute_linear(delta));
}

// S(f) = (f - f o delta)/2; anti-fixed by delta.
inline Poly reynolds_S(const Poly& f, const Matrix& delta) {
    if (!is_involution(delta)) throw std::domain_error("reynolds_S: delta is not an involution");
    return Scalar(make_rational(1, 2)) * (f - f.substitute_linear(delta));
}

// Greedy prune: keep lowest degree first, drop anything generated by the
// already-retained elements at degree <= bound.
inline std::vector<Poly> prune_generators(const std::vector<Poly>& gens, unsigned bound) {
    std::vector<Poly> kept;
    for (const Poly& f : gens) {
        if (f.is_zero() || f.is_constant()) continue;
        unsigned b = std::max(bound, f.total_degree());
        if (!algebra_member_bounded(f, kept, b)) kept.push_back(f);
    }
    return kept;
}

inline unsigned default_step_bound(const std::vector<Poly>& gens) {
    unsigned maxdeg = 1;
    for (const Poly& g : gens) maxdeg = std::max(maxdeg, g.total_degree());
    return 2 * maxdeg;
}

// One step of the recursion: from generators of I(Sigma_k) to generators of
// I(Sigma_k x| Z2(delta)).
inline std::vector<Poly> involution_step(const std::vector<Poly>& gens, const Matrix& delta,
                                         unsigned bound) {
    std::vector<Poly> candidates;
    std::vector<Poly> s_images;
    for (const Poly& u : gens) {
        Poly r = reynolds_R(u, delta);
        if (!r.is_zero() && !r.is_constant()) candidates.push_back(std::move(r));
        s_images.push_back(reynolds_S(u, delta));
    }
    for (std::size_t i = 0; i < s_images.size(); ++i)
        for (std::size_t j = i; j < s_images.size(); ++j) {
            Poly prod = s_images[i] * s_images[j];
            if (!prod.is_zero() && !prod.is_constant()) candidates.push_back(std::move(prod));
        }
    return prune_generators(linear_reduce(candidates), bound);
}

// Folds involution_step over the listed reflections, starting from the
// invariants of the base subgroup. degree_bound <= 0 picks 2*max(deg) per
// step, which covers the degree doubling of the S*S products.
inline std::vector<Poly> algorithm_generators(const GroupSpec& spec, unsigned degree_bound = 0) {
    spec.validate();
    std::vector<Poly> gens = spec.sigma_invariant_gens;
    for (const Matrix& delta : spec.involutions) {
        unsigned bound = degree_bound ? degree_bound : default_step_bound(gens);
        gens = involution_step(gens, delta, bound);
    }
    return gens;
}

}  // namespace lorinv
