// Shared test fixtures: seeded random sampling of rationals and group
// elements, and the standard worked group (SO(2)-block times two boost
// reflections acting on R^4_1) that several suites exercise.
#pragma once

#include "lorinv/equivariants.hpp"
#include "lorinv/parse.hpp"
#include "lorinv/subspaces.hpp"

#include <random>
#include <vector>

namespace testsupport {

using namespace lorinv;

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }
    Rational rational(long lo = -9, long hi = 9, long maxden = 9) {
        return make_rational(integer(lo, hi), integer(1, maxden));
    }
    Rational nonzero_rational(long lo = -9, long hi = 9, long maxden = 9) {
        for (;;) {
            Rational r = rational(lo, hi, maxden);
            if (r != 0) return r;
        }
    }
    Rational positive_rational(long hi = 9, long maxden = 9) {
        return make_rational(integer(1, hi), integer(1, maxden));
    }

    HyperbolicPair hyperbolic() { return hyperbolic_point(positive_rational()); }
    CirclePair circle() { return circle_point(rational(-5, 5, 5)); }

    // Random element of O(1,1) as a product of catalog elements at rational
    // parameters (all four components reachable).
    Matrix lorentz_2d(int words = 3) {
        Matrix m = Matrix::identity(2);
        for (int i = 0; i < words; ++i) {
            switch (integer(0, 3)) {
                case 0: m = m * hyperbolic_rotation_2d(hyperbolic()); break;
                case 1: m = m * lambda_p(2); break;
                case 2: m = m * lambda_t(2); break;
                default: m = m * lambda_pt(2); break;
            }
        }
        return m;
    }

    // Random element of O(2,1), likewise.
    Matrix lorentz_3d(int words = 3) {
        Matrix m = Matrix::identity(3);
        for (int i = 0; i < words; ++i) {
            switch (integer(0, 4)) {
                case 0: m = m * rotation_z(circle()); break;
                case 1: m = m * boost_yz(hyperbolic()); break;
                case 2: m = m * lambda_p(3); break;
                case 3: m = m * lambda_t(3); break;
                default: m = m * lambda_pt(3); break;
            }
        }
        return m;
    }

    // Random element of a group presented by rotation blocks and the two
    // given reflections: random-angle rotations interleaved with the
    // reflections themselves (whose parameter is part of the group data).
    Matrix group_element_4d(const Matrix& d1, const Matrix& d2, int words = 3) {
        Matrix m = Matrix::identity(4);
        for (int i = 0; i < words; ++i) {
            switch (integer(0, 2)) {
                case 0: m = m * so2_block_4d(circle()); break;
                case 1: m = m * d1; break;
                default: m = m * d2; break;
            }
        }
        return m;
    }

    Vector vector(std::size_t dim, long lo = -5, long hi = 5) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < dim; ++i) c.emplace_back(rational(lo, hi, 5));
        return Vector(std::move(c));
    }

    Vector nonzero_vector(std::size_t dim) {
        for (;;) {
            Vector v = vector(dim);
            if (!v.is_zero()) return v;
        }
    }

    Subspace subspace(std::size_t ambient, std::size_t dim) {
        for (;;) {
            std::vector<Vector> rows;
            for (std::size_t i = 0; i < dim; ++i) rows.push_back(vector(ambient));
            Subspace w = Subspace::span(ambient, rows);
            if (w.dim() == dim) return w;
        }
    }

    Poly poly(unsigned nvars, unsigned maxdeg = 2, int terms = 3) {
        Poly out(nvars);
        for (int t = 0; t < terms; ++t) {
            Exponents e(nvars, 0);
            unsigned budget = static_cast<unsigned>(integer(0, maxdeg));
            for (unsigned spent = 0; spent < budget; ++spent)
                e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))] += 1;
            out += Poly::monomial(nvars, e, Scalar(nonzero_rational(-4, 4, 4)));
        }
        return out;
    }

    PolyMap poly_map(unsigned n, unsigned maxdeg = 2) {
        std::vector<Poly> comps;
        for (unsigned i = 0; i < n; ++i) comps.push_back(poly(n, maxdeg));
        return PolyMap(std::move(comps));
    }

  private:
    std::mt19937_64 eng_;
};

// The worked example group: SO(2) block with two boost reflections on the
// (x3, x4) plane, symbolic boost parameter.
struct WorkedGroup {
    Matrix delta1 = boost_reflection_4d(hyperbolic_symbolic());
    Matrix delta2 = boost_reflection_4d_neg(hyperbolic_symbolic());
    std::vector<Matrix> rotation_samples{so2_block_4d(circle_point(make_rational(1, 2))),
                                         so2_block_4d(circle_point(make_rational(2, 3)))};

    GroupSpec spec() const {
        GroupSpec s;
        s.dim = 4;
        s.sigma_generators = rotation_samples;
        s.sigma_invariant_gens = {parse_poly("x1^2+x2^2", 4), parse_poly("x3", 4),
                                  parse_poly("x4", 4)};
        s.involutions = {delta1, delta2};
        return s;
    }

    std::vector<Matrix> generators() const {
        std::vector<Matrix> g = rotation_samples;
        g.push_back(delta1);
        g.push_back(delta2);
        return g;
    }

    // Base invariants of the diagonal action on the doubled space.
    std::vector<Poly> cartesian_base() const {
        auto p = [](const char* s) { return parse_poly(s, 8, true); };
        return {p("x1^2+x2^2"), p("x3"), p("x4"),          p("y1^2+y2^2"),
                p("y3"),       p("y4"), p("x1*y2-x2*y1"),  p("x1*y1+x2*y2")};
    }

    // The cataloged doubled-space generator list the module computation uses.
    std::vector<Poly> cartesian_catalog() const {
        auto p = [](const char* s) { return parse_poly(s, 8, true); };
        return {p("x1^2+x2^2"),
                p("x3^2-x4^2"),
                p("((cosh(t)-1)*x4+sinh(t)*x3)^2"),
                p("y1^2+y2^2"),
                p("y3^2-y4^2"),
                p("((cosh(t)-1)*y4+sinh(t)*y3)^2"),
                p("x1*y2-x2*y1"),
                p("x1*y1+x2*y2"),
                p("((cosh(t)-1)*x4+sinh(t)*x3)*((cosh(t)-1)*y4+sinh(t)*y3)")};
    }
};

inline Poly px(const char* s, unsigned nvars = 4) { return lorinv::parse_poly(s, nvars); }
inline Poly pxy(const char* s) { return lorinv::parse_poly(s, 8, true); }

}  // namespace testsupport
