#include "support.hpp"

#include <catch2/catch.hpp>

using namespace lorinv;
using testsupport::Rng;
using testsupport::px;
using testsupport::pxy;
using testsupport::WorkedGroup;

namespace {

// equality up to a nonzero Scalar multiple, componentwise with one ratio
bool proportional(const PolyMap& a, const PolyMap& b) {
    if (a.size() != b.size()) return false;
    // find the ratio from the first nonzero component pair
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        const auto& [ea, ca] = *a[i].terms().begin();
        auto it = b[i].terms().find(ea);
        if (it == b[i].terms().end()) return false;
        Scalar ratio = ca / it->second;
        for (std::size_t j = 0; j < a.size(); ++j) {
            Poly scaled = ratio * b[j];
            if (a[j] != scaled) return false;
        }
        return true;
    }
    return true;  // both zero maps
}

}  // namespace

TEST_CASE("metric gradient of the basic invariants", "[equivariants]") {
    PolyMap g1 = gradient_map(px("x1^2+x2^2"));
    CHECK(g1 == PolyMap({px("2*x1"), px("2*x2"), px("0"), px("0")}));

    PolyMap g2 = gradient_map(px("x3^2-x4^2"));
    CHECK(g2 == PolyMap({px("0"), px("0"), px("2*x3"), px("2*x4")}));

    CHECK(gradient_map(px("5")).is_zero());
}

TEST_CASE("pairing with the form", "[equivariants]") {
    PolyMap id = PolyMap::identity(4);
    CHECK(pairing_invariant(id) == pxy("x1*y1+x2*y2+x3*y3-x4*y4"));

    PolyMap rot({px("-x2"), px("x1"), px("0"), px("0")});
    CHECK(pairing_invariant(rot) == pxy("x1*y2-x2*y1"));

    CHECK(pairing_invariant(PolyMap::zero(4, 4)).is_zero());
}

TEST_CASE("extraction from the worked cartesian invariants", "[equivariants]") {
    CHECK(equivariant_from_invariant(pxy("x1*y2-x2*y1")) ==
          PolyMap({px("-x2"), px("x1"), px("0"), px("0")}));
    CHECK(equivariant_from_invariant(pxy("x1*y1+x2*y2")) ==
          PolyMap({px("x1"), px("x2"), px("0"), px("0")}));

    // the product generator: derived fourth component is (1-cosh)*u, with
    // u = (cosh-1)x4 + sinh x3; the opposite-sign variant is refuted below
    Poly uv = pxy("((cosh(t)-1)*x4+sinh(t)*x3)*((cosh(t)-1)*y4+sinh(t)*y3)");
    PolyMap g = equivariant_from_invariant(uv);
    PolyMap derived({px("0"), px("0"), px("sinh(t)*((cosh(t)-1)*x4+sinh(t)*x3)"),
                     px("(1-cosh(t))*((cosh(t)-1)*x4+sinh(t)*x3)")});
    CHECK(g == derived);

    WorkedGroup wg;
    CHECK(is_equivariant(g, wg.delta1));
    CHECK(is_equivariant(g, wg.delta2));

    PolyMap flipped({px("0"), px("0"), px("sinh(t)*((cosh(t)-1)*x4+sinh(t)*x3)"),
                     px("(cosh(t)-1)*((cosh(t)-1)*x4+sinh(t)*x3)")});
    CHECK_FALSE(is_equivariant(flipped, wg.delta1));
}

TEST_CASE("round trip between the two sides", "[equivariants]") {
    Rng rng(81);
    for (int i = 0; i < 100; ++i) {
        unsigned n = static_cast<unsigned>(rng.integer(2, 4));
        PolyMap g = rng.poly_map(n);
        CHECK(equivariant_from_invariant(pairing_invariant(g)) == g);
    }
}

TEST_CASE("module generators from the cataloged cartesian list", "[equivariants]") {
    WorkedGroup wg;
    std::vector<PolyMap> gens = module_generators(wg.cartesian_catalog(), wg.generators());
    REQUIRE(gens.size() == 3);

    PolyMap m1({px("-x2"), px("x1"), px("0"), px("0")});
    PolyMap m2({px("x1"), px("x2"), px("0"), px("0")});
    PolyMap m3({px("0"), px("0"), px("sinh(t)*((cosh(t)-1)*x4+sinh(t)*x3)"),
                px("(1-cosh(t))*((cosh(t)-1)*x4+sinh(t)*x3)")});
    CHECK(proportional(gens[0], m1));
    CHECK(proportional(gens[1], m2));
    CHECK(proportional(gens[2], m3));

    for (const PolyMap& g : gens)
        for (const Matrix& gamma : wg.generators()) CHECK(is_equivariant(g, gamma));
}

TEST_CASE("pure x-generators contribute nothing", "[equivariants]") {
    CHECK(module_generators({pxy("x1^2+x2^2"), pxy("x3^2-x4^2")}, {}).empty());
}

TEST_CASE("the form itself yields the identity map", "[equivariants]") {
    auto gens = module_generators({pxy("x1*y1+x2*y2+x3*y3-x4*y4")}, {});
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == PolyMap::identity(4));
}

TEST_CASE("full recursion on the lift also yields equivariant maps", "[equivariants]") {
    WorkedGroup wg;
    GroupSpec doubled;
    doubled.dim = 8;
    doubled.doubled_metric = true;
    for (const Matrix& g : wg.rotation_samples) doubled.sigma_generators.push_back(diagonal_lift(g));
    doubled.involutions = {diagonal_lift(wg.delta1), diagonal_lift(wg.delta2)};
    doubled.sigma_invariant_gens = wg.cartesian_base();
    std::vector<Poly> cart = algorithm_generators(doubled, 4);

    // the recursion keeps the cross products the cataloged list drops, so a
    // fourth independent map appears
    std::vector<PolyMap> maps = module_generators(cart, wg.generators());
    CHECK(maps.size() == 4);
    for (const PolyMap& g : maps)
        for (const Matrix& gamma : wg.generators()) CHECK(is_equivariant(g, gamma));
}

TEST_CASE("invariance of the input transfers to equivariance of the image", "[equivariants]") {
    Rng rng(82);
    WorkedGroup wg;
    for (const Poly& u : wg.cartesian_catalog()) {
        PolyMap g = equivariant_from_invariant(u);
        for (int i = 0; i < 5; ++i) {
            Matrix gamma = rng.group_element_4d(wg.delta1, wg.delta2);
            CHECK(is_invariant(u, diagonal_lift(gamma)));
            CHECK(is_equivariant(g, gamma));
        }
    }
}

TEST_CASE("gradients of invariants are equivariant", "[equivariants]") {
    Rng rng(83);
    WorkedGroup wg;
    std::vector<Poly> invs = algorithm_generators(wg.spec(), 4);
    for (const Poly& f : invs) {
        PolyMap g = gradient_map(f);
        CHECK(is_equivariant(g, wg.delta1));
        CHECK(is_equivariant(g, wg.delta2));
        for (int i = 0; i < 34; ++i) {
            Matrix gamma = rng.group_element_4d(wg.delta1, wg.delta2);
            CHECK(is_equivariant(g, gamma));
        }
    }
}

TEST_CASE("equivariance checks", "[equivariants]") {
    WorkedGroup wg;
    Rng rng(84);
    for (int i = 0; i < 5; ++i)
        CHECK(is_equivariant(PolyMap::identity(4), rng.group_element_4d(wg.delta1, wg.delta2)));
    CHECK(is_equivariant(PolyMap({px("-x2"), px("x1"), px("0"), px("0")}), wg.delta1));
    Matrix xi = so2_block_4d(circle_point(make_rational(1, 3)));
    CHECK_FALSE(is_equivariant(PolyMap({px("x2"), px("x1"), px("0"), px("0")}), xi));
}

TEST_CASE("diagonal lift is blockwise and preserves the group", "[equivariants]") {
    WorkedGroup wg;
    Matrix lift = diagonal_lift(wg.delta1);
    CHECK(lift.rows() == 8);
    CHECK(is_lorentz(wg.delta1));
    CHECK(is_lorentz_doubled(lift));
    CHECK(lift * lift == Matrix::identity(8));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(lift.at(i, j) == wg.delta1.at(i, j));
            CHECK(lift.at(4 + i, 4 + j) == wg.delta1.at(i, j));
        }
}
