#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hopfcyc/cyclic.hpp"

using namespace hopfcyc;

namespace {

std::string first_failure(const Report& r) {
    const Check* c = r.first_failure();
    return c ? c->name + ": " + c->detail : std::string();
}

using Dims = std::vector<std::int64_t>;

// Brute-force oracle for the Hochschild and Connes complexes of a group algebra,
// working directly on group tuples with dense elimination modulo a large prime.
struct GroupOracle {
    static constexpr std::int64_t P = 2147483647;
    FiniteGroup g;

    static std::int64_t pw(std::int64_t a, std::int64_t e) {
        std::int64_t r = 1;
        a %= P;
        for (; e; e >>= 1, a = a * a % P)
            if (e & 1) r = r * a % P;
        return r;
    }

    static std::int64_t rank(std::vector<std::vector<std::int64_t>> m) {
        std::int64_t r = 0;
        std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
        for (std::size_t c = 0; c < cols && r < static_cast<std::int64_t>(rows); ++c) {
            std::size_t piv = static_cast<std::size_t>(r);
            while (piv < rows && m[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(m[piv], m[static_cast<std::size_t>(r)]);
            auto& pr = m[static_cast<std::size_t>(r)];
            std::int64_t inv = pw(pr[c], P - 2);
            for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                std::int64_t f = m[i][c] * inv % P;
                for (std::size_t k = c; k < cols; ++k) m[i][k] = ((m[i][k] - f * pr[k]) % P + P) % P;
            }
            ++r;
        }
        return r;
    }

    std::vector<std::vector<int>> tuples(int n) const {
        std::vector<std::vector<int>> out{{}};
        for (int k = 0; k <= n; ++k) {
            std::vector<std::vector<int>> next;
            for (const auto& t : out)
                for (int a = 0; a < g.order(); ++a) {
                    auto u = t;
                    u.push_back(a);
                    next.push_back(u);
                }
            out = next;
        }
        return out;
    }

    std::vector<std::pair<std::vector<int>, int>> boundary(const std::vector<int>& x) const {
        std::vector<std::pair<std::vector<int>, int>> out;
        int n = static_cast<int>(x.size()) - 1;
        for (int i = 0; i < n; ++i) {
            std::vector<int> y(x.begin(), x.begin() + i);
            y.push_back(g.mul(x[i], x[i + 1]));
            y.insert(y.end(), x.begin() + i + 2, x.end());
            out.emplace_back(y, i % 2 == 0 ? 1 : -1);
        }
        std::vector<int> y{g.mul(x[n], x[0])};
        y.insert(y.end(), x.begin() + 1, x.end() - 1);
        out.emplace_back(y, n % 2 == 0 ? 1 : -1);
        return out;
    }

    // Class of a tuple in C_n / (1 − λ): orbit representative and sign, or sign 0.
    std::pair<std::vector<int>, int> cyclic_class(const std::vector<int>& x) const {
        int n = static_cast<int>(x.size()) - 1;
        std::vector<int> best = x, cur = x;
        int best_sign = 1, sign = 1;
        bool killed = false;
        for (int k = 1; k <= n; ++k) {
            std::rotate(cur.rbegin(), cur.rbegin() + 1, cur.rend());
            if (n % 2 == 1) sign = -sign;
            if (cur == x && sign == -1) killed = true;
            if (cur < best) {
                best = cur;
                best_sign = sign;
            }
        }
        return {best, killed ? 0 : best_sign};
    }

    Dims hochschild(int top) const {
        std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 2, 0), dims;
        for (int n = 0; n <= top + 1; ++n) {
            auto src = tuples(n);
            dims.push_back(static_cast<std::int64_t>(src.size()));
            if (n == 0) continue;
            auto tgt = tuples(n - 1);
            std::map<std::vector<int>, std::size_t> at;
            for (std::size_t i = 0; i < tgt.size(); ++i) at[tgt[i]] = i;
            std::vector<std::vector<std::int64_t>> m(tgt.size(), std::vector<std::int64_t>(src.size(), 0));
            for (std::size_t j = 0; j < src.size(); ++j)
                for (const auto& [y, s] : boundary(src[j])) m[at[y]][j] = ((m[at[y]][j] + s) % P + P) % P;
            ranks[static_cast<std::size_t>(n)] = rank(m);
        }
        Dims out;
        for (int n = 0; n <= top; ++n) out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
        return out;
    }

    Dims connes(int top) const {
        std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 2, 0), dims;
        std::vector<std::map<std::vector<int>, std::size_t>> reps;
        for (int n = 0; n <= top + 1; ++n) {
            std::map<std::vector<int>, std::size_t> r;
            for (const auto& x : tuples(n)) {
                auto [rep, s] = cyclic_class(x);
                if (s != 0 && !r.count(rep)) r.emplace(rep, r.size());
            }
            dims.push_back(static_cast<std::int64_t>(r.size()));
            reps.push_back(r);
        }
        for (int n = 1; n <= top + 1; ++n) {
            std::vector<std::vector<std::int64_t>> m(reps[n - 1].size(), std::vector<std::int64_t>(reps[n].size(), 0));
            for (const auto& [x, j] : reps[n])
                for (const auto& [y, s] : boundary(x)) {
                    auto [rep, t] = cyclic_class(y);
                    if (t == 0) continue;
                    auto& e = m[reps[n - 1].at(rep)][j];
                    e = ((e + s * t) % P + P) % P;
                }
            ranks[static_cast<std::size_t>(n)] = rank(m);
        }
        Dims out;
        for (int n = 0; n <= top; ++n) out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
        return out;
    }
};

CyclicModule zero_operators(CyclicModule x) {
    for (auto& fs : x.faces)
        for (auto& f : fs) f = SparseMatrix(f.rows(), f.cols());
    for (auto& ds : x.degens)
        for (auto& d : ds) d = SparseMatrix(d.rows(), d.cols());
    for (auto& t : x.cyclic) t = SparseMatrix(t.rows(), t.cols());
    return x;
}

}  // namespace

TEST_CASE("identities hold for every construction on every setup") {
    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        int n_max = 4;
        auto ad = ad_module(s.h);
        auto coad = coad_left_right(s.h);
        for (const Report& r : {check_identities(relative_cyclic(s.b, n_max)), check_identities(coext_cyclic(s.c, n_max)),
                                check_identities(relative_cocyclic_coext(s.c, n_max)),
                                check_identities(hopf_cyclic_coalgebra(s.c, ad, n_max)),
                                check_identities(hopf_cocyclic_coalgebra(s.c, ad, n_max)),
                                check_identities(hopf_cyclic_comodule_algebra(s.b, coad, n_max))}) {
            CAPTURE(r.title());
            CHECK_MESSAGE(r.ok(), first_failure(r));
            for (const auto& c : r.checks()) CHECK(c.status == Status::Pass);
        }
    }
}

TEST_CASE("mutants break the expected identities") {
    auto s = builtin_setup("kS3/kC2");
    auto x = relative_cyclic(s.b, 3);

    auto status = [](const Report& r, const std::string& name) {
        for (const auto& c : r.checks())
            if (c.name == name) return c.status;
        return Status::Skip;
    };

    // (t²)^{n+1} is still the identity; the rotation relations catch it at degree 1
    auto squared = x;
    for (auto& t : squared.cyclic) t = t * t;
    Report r1 = check_identities(squared);
    CHECK(status(r1, "t^{n+1} = id") == Status::Pass);
    CHECK(status(r1, "d_i t = t d_{i-1}, d_0 t = d_n") == Status::Fail);
    CHECK(r1.first_failure()->detail.find("degree 1") != std::string::npos);

    // with d_0 = 0 both sides of every d_i d_j relation involving d_0 vanish
    auto zeroed = x;
    for (int n = 1; n <= zeroed.n_max; ++n) zeroed.faces[n][0] = SparseMatrix(zeroed.dim(n - 1), zeroed.dim(n));
    Report r2 = check_identities(zeroed);
    CHECK(status(r2, "d_i d_j = d_{j-1} d_i (i < j)") == Status::Pass);
    CHECK(status(r2, "d_i s_j relations") == Status::Fail);
    CHECK(status(r2, "d_i t = t d_{i-1}, d_0 t = d_n") == Status::Fail);

    // zeroing a middle face is caught by the face relations
    auto middle = x;
    for (int n = 2; n <= middle.n_max; ++n) middle.faces[n][1] = SparseMatrix(middle.dim(n - 1), middle.dim(n));
    CHECK(status(check_identities(middle), "d_i d_j = d_{j-1} d_i (i < j)") == Status::Fail);
}

TEST_CASE("dimensions of the standard examples") {
    auto s = builtin_setup("kC2/k");
    auto x = relative_cyclic(s.b, 4);
    for (int n = 0; n <= 4; ++n) CHECK(x.dim(n) == (Index(1) << (n + 1)));

    // B = H collapses to H/[H,H] in every degree
    for (const char* name : {"kS3", "kQ8", "H4", "OS3"}) {
        CAPTURE(name);
        auto h = builtin_hopf(name);
        std::vector<SVec> all;
        for (Index i = 0; i < h.dim(); ++i) all.push_back(h.basis_vector(i));
        auto b = ComoduleSubalgebra::generate(h, all);
        std::vector<SVec> comm;
        for (Index i = 0; i < h.dim(); ++i)
            for (Index j = 0; j < h.dim(); ++j) comm.push_back(h.mul(i, j) - h.mul(j, i));
        Index expected = h.dim() - span_subspace(h.dim(), comm).dim();
        auto y = relative_cyclic(b, 3);
        for (int n = 0; n <= 3; ++n) CHECK(y.dim(n) == expected);
    }

    // C = k: no invariance condition, full tensor powers
    auto t = builtin_setup("kC2/kC2");
    auto z = coext_cyclic(t.c, 3);
    for (int n = 0; n <= 3; ++n) CHECK(z.dim(n) == (Index(1) << (n + 1)));
}

TEST_CASE("trivial coefficients give the constant cyclic module") {
    auto s = builtin_setup("kC2/kC2");  // C = k
    auto x = hopf_cyclic_coalgebra(s.c, trivial_module(s.h), 3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(x.dim(n) == 1);
        CHECK(x.cyclic[n] == SparseMatrix::identity(1, s.h.field()));
    }
    auto t = builtin_setup("kS3/k");  // B = k
    auto y = hopf_cyclic_comodule_algebra(t.b, trivial_module(t.h), 3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(y.dim(n) == 1);
        CHECK(y.cyclic[n] == SparseMatrix::identity(1, t.h.field()));
    }
}

TEST_CASE("regression dimensions") {
    CHECK(relative_cyclic(builtin_setup("kS3/kC2").b, 3).dims() == Dims{4, 10, 28, 82});
    CHECK(coext_cyclic(builtin_setup("kS3/kC2").c, 3).dims() == Dims{6, 12, 24, 48});
    CHECK(coext_cyclic(builtin_setup("OS3/C2").c, 3).dims() == Dims{4, 10, 28, 82});
    CHECK(relative_cyclic(builtin_setup("H4/x").b, 3).dims() == Dims{3, 6, 12, 24});
}

TEST_CASE("Pontryagin-dual setups have matching dimensions") {
    CHECK(coext_cyclic(builtin_setup("OS3/C2").c, 3).dims() == relative_cyclic(builtin_setup("kS3/kC2").b, 3).dims());
}

TEST_CASE("Takeuchi-transform setups have matching dimensions and homology") {
    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        auto rel = relative_cyclic(s.b, 3);
        auto coalg = hopf_cyclic_coalgebra(s.c, ad_module(s.h), 3);
        CHECK(rel.dims() == coalg.dims());
        CHECK(cyclic_homology(rel, 2) == cyclic_homology(coalg, 2));

        auto coext = coext_cyclic(s.c, 3);
        auto comod = hopf_cyclic_comodule_algebra(s.b, coad_left_right(s.h), 3);
        CHECK(coext.dims() == comod.dims());
        CHECK(cyclic_homology(coext, 2) == cyclic_homology(comod, 2));
    }
}

TEST_CASE("cyclic duality matches operator by operator") {
    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        auto ad = ad_module(s.h);
        auto pairs = {std::make_pair(cyclic_dual(hopf_cocyclic_coalgebra(s.c, ad, 3)), hopf_cyclic_coalgebra(s.c, ad, 3)),
                      std::make_pair(cyclic_dual(relative_cocyclic_coext(s.c, 3)), coext_cyclic(s.c, 3))};
        for (const auto& [dual, direct] : pairs) {
            CAPTURE(direct.name);
            REQUIRE(dual.dims() == direct.dims());
            for (int n = 0; n <= 3; ++n) {
                CHECK(dual.cyclic[n] == direct.cyclic[n]);
                for (std::size_t i = 0; i < direct.faces[n].size(); ++i) CHECK(dual.faces[n][i] == direct.faces[n][i]);
                for (std::size_t j = 0; j < direct.degens[n].size(); ++j) CHECK(dual.degens[n][j] == direct.degens[n][j]);
            }
        }
    }
}

TEST_CASE("b and B square to zero and anticommute") {
    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        for (const auto& x : {relative_cyclic(s.b, 4), coext_cyclic(s.c, 4), hopf_cyclic_coalgebra(s.c, ad_module(s.h), 4),
                              cyclic_dual(relative_cocyclic_coext(s.c, 4))}) {
            CAPTURE(x.name);
            for (int n = 2; n <= 4; ++n) CHECK((hochschild_boundary(x, n - 1) * hochschild_boundary(x, n)).is_zero());
            for (int n = 0; n + 2 <= 4; ++n) CHECK((connes_boundary(x, n + 1) * connes_boundary(x, n)).is_zero());
            for (int n = 1; n + 1 <= 4; ++n)
                CHECK((hochschild_boundary(x, n + 1) * connes_boundary(x, n) + connes_boundary(x, n - 1) * hochschild_boundary(x, n))
                          .is_zero());
        }
    }
}

TEST_CASE("Hochschild homology of group algebras agrees with the tuple oracle") {
    auto c2 = relative_cyclic(builtin_setup("kC2/k").b, 4);
    GroupOracle o2{FiniteGroup::builtin("C2")};
    CHECK(o2.hochschild(3) == Dims{2, 0, 0, 0});
    CHECK(hochschild_homology(c2, 3) == o2.hochschild(3));

    auto s3 = relative_cyclic(builtin_setup("kS3/k").b, 3);
    GroupOracle o6{FiniteGroup::builtin("S3")};
    CHECK(o6.hochschild(1) == Dims{3, 0});
    CHECK(hochschild_homology(s3, 2) == o6.hochschild(2));
}

TEST_CASE("cyclic homology agrees across methods and with the orbit oracle") {
    GroupOracle o2{FiniteGroup::builtin("C2")};
    CHECK(o2.connes(2) == Dims{2, 0, 2});
    auto c2 = relative_cyclic(builtin_setup("kC2/k").b, 4);
    for (auto m : {HcMethod::BBicomplex, HcMethod::NormalizedBBicomplex, HcMethod::ConnesComplex})
        CHECK(cyclic_homology(c2, 3, m) == o2.connes(3));

    GroupOracle o6{FiniteGroup::builtin("S3")};
    auto s3 = relative_cyclic(builtin_setup("kS3/k").b, 3);
    CHECK(cyclic_homology(s3, 2) == o6.connes(2));

    for (const auto& name : builtin_setup_names()) {
        CAPTURE(name);
        auto s = builtin_setup(name);
        for (const auto& x : {relative_cyclic(s.b, 3), coext_cyclic(s.c, 3)}) {
            auto ref = cyclic_homology(x, 2, HcMethod::ConnesComplex);
            CHECK(cyclic_homology(x, 2, HcMethod::BBicomplex) == ref);
            CHECK(cyclic_homology(x, 2, HcMethod::NormalizedBBicomplex) == ref);
        }
    }
    CHECK(cyclic_homology(relative_cyclic(builtin_setup("kS3/kC2").b, 3), 2) == Dims{3, 0, 3});
    CHECK(cyclic_homology(relative_cyclic(builtin_setup("H4/k").b, 4), 3) == Dims{2, 1, 2, 1});
}

TEST_CASE("all-zero operators") {
    auto x = zero_operators(relative_cyclic(builtin_setup("kC2/k").b, 4));
    CHECK(hochschild_homology(x, 3) == Dims{2, 4, 8, 16});
    // Tot_n = C_n ⊕ C_{n-2} ⊕ ...
    CHECK(cyclic_homology(x, 3) == Dims{2, 4, 10, 20});
}

TEST_CASE("degree guards") {
    auto x = relative_cyclic(builtin_setup("kC2/k").b, 2);
    CHECK_THROWS_AS(hochschild_homology(x, 2), DegreeError);
    CHECK_THROWS_AS(cyclic_homology(x, 2), DegreeError);
    CHECK_THROWS_AS(relative_cyclic(builtin_setup("kC2/k").b, -1), DegreeError);
}
