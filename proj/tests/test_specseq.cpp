#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/specseq.hpp"

using namespace hopfcyc;

namespace {

std::string first_failure(const Report& r) {
    const Check* c = r.first_failure();
    return c ? c->name + ": " + c->detail : std::string();
}

// Number of conjugacy orbits, by closing each element under conjugation.
std::int64_t orbit_count(const FiniteGroup& g) {
    std::set<int> seen;
    std::int64_t orbits = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (seen.count(x)) continue;
        ++orbits;
        for (int y = 0; y < g.order(); ++y) seen.insert(g.mul(g.mul(y, x), g.inv(y)));
    }
    return orbits;
}

}  // namespace

TEST_CASE("bar resolution is exact and has the expected sizes") {
    auto h = builtin_hopf("kC2");
    auto bar = bar_resolution(h, trivial_left(h), 3);
    CHECK(bar.complex.dims == std::vector<Index>{2, 4, 8, 16});
    CHECK_MESSAGE(bar.exactness.ok(), first_failure(bar.exactness));
    for (const auto& name : {"kS3", "H4"}) {
        CAPTURE(name);
        auto a = builtin_hopf(name);
        auto b = bar_resolution(a, ad_left(a), 2);
        CHECK_MESSAGE(b.exactness.ok(), first_failure(b.exactness));
    }
}

TEST_CASE("Tor over group algebras matches class counts") {
    for (const auto& gname : {"C2", "C3", "S3"}) {
        CAPTURE(gname);
        auto g = FiniteGroup::builtin(gname);
        auto h = group_algebra(g);
        auto t = tor(h, trivial_right(h), ad_left(h), 2);
        CHECK(t == std::vector<std::int64_t>{orbit_count(g), 0, 0});
    }
}

TEST_CASE("Tor(k, ad H4) is frozen") {
    auto h = builtin_hopf("H4");
    CHECK(tor(h, trivial_right(h), ad_left(h), 3) == std::vector<std::int64_t>{2, 1, 1, 1});
}

TEST_CASE("HH(H) = Tor(k, ad H) with a free twist") {
    for (const auto& name : {"kC2", "kS3", "H4", "OS3"}) {
        CAPTURE(name);
        auto r = corollary36_check(builtin_hopf(name), name == std::string("kS3") || name == std::string("OS3") ? 2 : 3);
        CHECK_MESSAGE(r.ok(), first_failure(r));
    }
}

TEST_CASE("row complex of C = H/I is contractible") {
    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        auto r = contracting_homotopy_check(s.c, 3);
        CHECK_MESSAGE(r.ok(), first_failure(r));
    }
}

TEST_CASE("double complex squares to zero") {
    auto s = builtin_setup("kC2/kC2");
    auto dc = build_double_complex(s, 3, 3);
    auto r = dc.check();
    CHECK_MESSAGE(r.ok(), first_failure(r));
    CHECK(dc.total().check().ok());
    CHECK(dc.dim(1, 2) == 1 * 1 * 4 * 2);
}

TEST_CASE("spectral sequence comparison on every setup") {
    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        int n = s.h.dim() >= 6 ? 2 : 3;
        auto r = theorem35_check(s, n);
        CHECK_MESSAGE(r.ok(), first_failure(r));
    }
}

TEST_CASE("five-term exact sequence") {
    for (const auto& name : {"kC2/k", "kC2/kC2", "H4/k", "H4/x"}) {
        CAPTURE(name);
        auto r = five_term_check(builtin_setup(name));
        CHECK_MESSAGE(r.ok(), first_failure(r));
    }
}

TEST_CASE("d₂ needs p ≥ 2") {
    auto dc = build_double_complex(builtin_setup("kC2/k"), 2, 2);
    CHECK_THROWS_AS(d2_map(dc, 1, 0), std::out_of_range);
}
