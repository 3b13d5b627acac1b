#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfcyc/sayd.hpp"

using namespace hopfcyc;

TEST_CASE("ad and coad modules are SAYD for every built-in Hopf algebra") {
    for (const auto& name : builtin_hopf_names()) {
        CAPTURE(name);
        auto h = builtin_hopf(name);
        CHECK(check_sayd(ad_module(h)).ok());
        CHECK(check_sayd(coad_module(h)).ok());
        CHECK(check_sayd(coad_left_right(h)).ok());
        // k is AYD exactly when h₍₂₎S(h₍₁₎) = ε(h)1, which needs S² = id.
        bool involutive = h.antipode() * h.antipode() == SparseMatrix::identity(h.dim(), h.field());
        CHECK(check_sayd(trivial_module(h)).ok() == involutive);
        CHECK(check_sayd(trivial_module(h, Chirality::RightLeft)).ok() == involutive);
        CHECK(check_stable(trivial_module(h)).ok());
    }
}

TEST_CASE("trivial module over H4 fails only the AYD condition") {
    auto h = builtin_hopf("H4");
    auto k = trivial_module(h);
    CHECK(check_module(k).ok());
    CHECK(check_comodule(k).ok());
    CHECK(check_stable(k).ok());
    CHECK_FALSE(check_ayd(k).ok());
}

TEST_CASE("ad action on group algebras is conjugation") {
    auto g = FiniteGroup::builtin("S3");
    auto h = group_algebra(g);
    auto ad = ad_module(h);
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < g.order(); ++x) {
            SVec v = Tensor::basis({6, 6}, {Index(a), Index(x)}, h.one_scalar()).apply(0, ad.action).pack();
            CHECK(v == h.basis_vector(static_cast<Index>(g.conj(a, x))));
        }
}

TEST_CASE("ad action factors through the counit for commutative H") {
    for (const char* name : {"OS3", "OC2", "kC3"}) {
        auto h = builtin_hopf(name);
        auto ad = ad_module(h);
        Index d = h.dim();
        for (Index a = 0; a < d; ++a)
            for (Index x = 0; x < d; ++x) {
                SVec v = Tensor::basis({d, d}, {a, x}, h.one_scalar()).apply(0, ad.action).pack();
                CHECK(v == h.basis_vector(x).scaled(h.counit(h.basis_vector(a))));
            }
    }
}

TEST_CASE("coad coaction is trivial for cocommutative H") {
    for (const char* name : {"kS3", "kC2"}) {
        auto h = builtin_hopf(name);
        auto co = coad_module(h);
        Index d = h.dim();
        for (Index x = 0; x < d; ++x) {
            SVec v = Tensor::basis({d}, {x}, h.one_scalar()).apply(0, co.coaction).pack();
            CHECK(v == Tensor::from_svec({d}, h.one()).outer(Tensor::basis({d}, {x}, h.one_scalar())).pack());
        }
    }
}

TEST_CASE("h₍₂₎ ▷ (h′h₍₁₎) = hh′ for ad") {
    for (const auto& name : builtin_hopf_names()) {
        auto h = builtin_hopf(name);
        auto ad = ad_module(h);
        Index d = h.dim();
        for (Index a = 0; a < d; ++a)
            for (Index b = 0; b < d; ++b) {
                Tensor t = h.comult_power(h.basis_vector(a), 2);       // [h₁, h₂]
                t = t.insert(2, d, h.basis_vector(b));                  // [h₁, h₂, h′]
                t = h.mul_slots(t, 2, 0);                               // [h₂, h′h₁]
                CHECK(t.apply(0, ad.action).pack() == h.mul(a, b));
            }
    }
}

TEST_CASE("failing examples") {
    auto h = builtin_hopf("kC2");
    SaydModule reg = ad_module(h);
    reg.name = "regular";
    reg.action = h.mult_map();
    CHECK(check_module(reg).ok());
    CHECK(check_comodule(reg).ok());
    Report r = check_ayd(reg);
    CHECK_FALSE(r.ok());
    REQUIRE(r.first_failure());
    CHECK(r.first_failure()->detail.find("fails at") != std::string::npos);

    auto h4 = builtin_hopf("H4");
    SaydModule scaled = ad_module(h4);
    for (auto& v : scaled.coaction.table) v = v.scaled(h4.field().from_int(2));
    Report s = check_stable(scaled);
    CHECK_FALSE(s.ok());
    CHECK_FALSE(check_comodule(scaled).ok());
}
