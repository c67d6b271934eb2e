// Constructors for the standard Lorentz elements in ambient dimensions 2-4:
// hyperbolic rotations, the reflection representatives, the SVD-style factor
// forms in dimension 3, and the block elements acting on R^4. Parameters are
// passed as exact (cosh, sinh) and (cos, sin) pairs; helpers produce rational
// points of both parameter curves or the symbolic pair.
#pragma once

#include "lorinv/linalg.hpp"

#include <stdexcept>

namespace lorinv {

struct HyperbolicPair {
    Scalar c, s;  // c^2 - s^2 = 1
};
struct CirclePair {
    Scalar p, q;  // p^2 + q^2 = 1
};

// Rational point of the hyperbola: c = (t + 1/t)/2, s = (t - 1/t)/2, t > 0.
inline HyperbolicPair hyperbolic_point(const Rational& t) {
    if (t <= 0) throw std::domain_error("hyperbolic_point: t must be positive");
    Scalar ts{Rational(t)};
    Scalar half = Scalar(make_rational(1, 2));
    return {half * (ts + ts.inverse()), half * (ts - ts.inverse())};
}

inline HyperbolicPair hyperbolic_symbolic() { return {Scalar::cosh_t(), Scalar::sinh_t()}; }

// Rational point of the circle: p = (1-u^2)/(1+u^2), q = 2u/(1+u^2).
inline CirclePair circle_point(const Rational& u) {
    Scalar us{u};
    Scalar one(1L);
    Scalar d = one + us * us;
    return {(one - us * us) / d, (Scalar(2L) * us) / d};
}

inline CirclePair circle_symbolic() { return {Scalar::cos_u(), Scalar::sin_u()}; }

inline CirclePair circle_of(const Rational& p, const Rational& q) {
    if (p * p + q * q != 1) throw std::domain_error("circle_of: point is not on the unit circle");
    return {Scalar(p), Scalar(q)};
}

inline void require_hyperbolic(const HyperbolicPair& h) {
    if (h.c * h.c - h.s * h.s != Scalar(1L))
        throw std::domain_error("catalog: (c,s) is not on the unit hyperbola");
}
inline void require_circle(const CirclePair& a) {
    if (a.p * a.p + a.q * a.q != Scalar(1L))
        throw std::domain_error("catalog: (p,q) is not on the unit circle");
}

// ---- dimension 2 (ambient R^2_1) ----

inline Matrix hyperbolic_rotation_2d(const HyperbolicPair& h) {
    require_hyperbolic(h);
    Matrix m(2, 2);
    m.at(0, 0) = h.c;
    m.at(0, 1) = h.s;
    m.at(1, 0) = h.s;
    m.at(1, 1) = h.c;
    return m;
}

// ---- reflection representatives, any ambient dimension ----

// Lambda^p = diag(1,...,1,-1,1): flips the last spatial coordinate.
inline Matrix lambda_p(std::size_t dim) {
    Matrix m = Matrix::identity(dim);
    m.at(dim - 2, dim - 2) = Scalar(-1L);
    return m;
}
// Lambda^t = J.
inline Matrix lambda_t(std::size_t dim) { return metric_matrix(dim); }
inline Matrix lambda_pt(std::size_t dim) { return lambda_p(dim) * lambda_t(dim); }

// ---- dimension 3 (ambient R^3_1) ----

// [[p,-q,0],[q,p,0],[0,0,corner]]
inline Matrix rotation_z(const CirclePair& a, long corner = 1) {
    require_circle(a);
    Matrix m(3, 3);
    m.at(0, 0) = a.p;
    m.at(0, 1) = -a.q;
    m.at(1, 0) = a.q;
    m.at(1, 1) = a.p;
    m.at(2, 2) = Scalar(corner);
    return m;
}

// [[p,q,0],[q,-p,0],[0,0,corner]]
inline Matrix reflection_z(const CirclePair& a, long corner = 1) {
    require_circle(a);
    Matrix m(3, 3);
    m.at(0, 0) = a.p;
    m.at(0, 1) = a.q;
    m.at(1, 0) = a.q;
    m.at(1, 1) = -a.p;
    m.at(2, 2) = Scalar(corner);
    return m;
}

// [[1,0,0],[0,c,s],[0,s,c]]
inline Matrix boost_yz(const HyperbolicPair& h) {
    require_hyperbolic(h);
    Matrix m = Matrix::identity(3);
    m.at(1, 1) = h.c;
    m.at(1, 2) = h.s;
    m.at(2, 1) = h.s;
    m.at(2, 2) = h.c;
    return m;
}

// The factored forms of O(2,1): rotation * boost * rotation covers SO0
// (corner +1) and the Lambda^t coset (corner -1); reflection * boost *
// rotation covers the Lambda^p coset (corner +1) and the Lambda^pt coset
// (corner -1).
inline Matrix h_plus(const CirclePair& varphi, const HyperbolicPair& theta, const CirclePair& phi,
                     long corner = 1) {
    return rotation_z(varphi, corner) * boost_yz(theta) * rotation_z(phi, 1);
}

inline Matrix h_minus(const CirclePair& varphi, const HyperbolicPair& theta, const CirclePair& phi,
                      long corner = -1) {
    return reflection_z(varphi, corner) * boost_yz(theta) * rotation_z(phi, 1);
}

// ---- blocks acting on R^4_1 ----

// diag(rotation(p,q), I_2): the compact block acting on (x1, x2).
inline Matrix so2_block_4d(const CirclePair& a) {
    require_circle(a);
    Matrix m = Matrix::identity(4);
    m.at(0, 0) = a.p;
    m.at(0, 1) = -a.q;
    m.at(1, 0) = a.q;
    m.at(1, 1) = a.p;
    return m;
}

// diag(I_2, [[c,s],[-s,-c]]): a generalized reflection mixing (x3, x4).
inline Matrix boost_reflection_4d(const HyperbolicPair& h) {
    require_hyperbolic(h);
    Matrix m = Matrix::identity(4);
    m.at(2, 2) = h.c;
    m.at(2, 3) = h.s;
    m.at(3, 2) = -h.s;
    m.at(3, 3) = -h.c;
    return m;
}

// The negated-block companion diag(I_2, [[-c,-s],[s,c]]).
inline Matrix boost_reflection_4d_neg(const HyperbolicPair& h) {
    require_hyperbolic(h);
    Matrix m = Matrix::identity(4);
    m.at(2, 2) = -h.c;
    m.at(2, 3) = -h.s;
    m.at(3, 2) = h.s;
    m.at(3, 3) = h.c;
    return m;
}

}  // namespace lorinv
