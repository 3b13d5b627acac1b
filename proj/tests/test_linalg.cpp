#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hopfcyc/linalg.hpp"

using namespace hopfcyc;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar::rational(n, d); }

SparseMatrix dense(Index r, Index c, const std::vector<long long>& vals) {
    std::vector<std::tuple<Index, Index, Scalar>> t;
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            if (vals[i * c + j] != 0) t.emplace_back(i, j, q(vals[i * c + j]));
    return SparseMatrix::from_triplets(r, c, t);
}

SparseMatrix random_matrix(std::mt19937& rng, Index r, Index c, int fill_percent, const Field& f) {
    std::uniform_int_distribution<int> pct(0, 99), val(-3, 3);
    std::vector<std::tuple<Index, Index, Scalar>> t;
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            if (pct(rng) < fill_percent) t.emplace_back(i, j, f.from_int(val(rng)));
    return SparseMatrix::from_triplets(r, c, t);
}

// Rank oracle: plain Gaussian elimination on exact rationals, no sparsity.
Index oracle_rank(const SparseMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (const auto& [i, j, s] : m.triplets()) a[i][j] = s.to_mpq();
    Index r = 0;
    for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Index p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (Index i = r + 1; i < m.rows(); ++i) {
            mpq_class f = a[i][c] / a[r][c];
            for (Index k = c; k < m.cols(); ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(1, -2) == q(-1, 2));
    CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
    CHECK((q(1, 3) * q(3)).is_one());
    Scalar big = q(1LL << 61);
    Scalar sq = big * big * big;
    CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 183));
    CHECK((sq / (big * big)) == big);
    Field f7 = Field::prime(7);
    CHECK(f7.from_int(-1) == f7.from_int(6));
    CHECK((f7.from_int(3) * f7.from_int(5)) == f7.from_int(1));
    CHECK(f7.parse("1/2") == f7.from_int(4));
    CHECK((q(1, 2) * f7.from_int(2)).is_one());
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
    CHECK_THROWS_AS(f7.from_int(1) + Field::prime(5).from_int(1), FieldMismatch);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(SparseMatrix::identity(2, Field())).dim() == 0);
    CHECK(kernel(SparseMatrix::zero(1, 2)).dim() == 2);
    auto k = kernel(dense(2, 2, {1, 2, 2, 4}));
    REQUIRE(k.dim() == 1);
    SVec v = k.section.col(0);
    // (-2, 1) up to scale
    CHECK(v.get(0) * q(1) == v.get(1) * q(-2));
    CHECK(dense(2, 2, {1, 2, 2, 4}).apply(v).empty());
}

TEST_CASE("coequalizer and equalizer examples") {
    auto f = dense(2, 3, {1, 0, 2, 0, 1, 1});
    CHECK(coequalizer(f, f).dim() == 2);
    CHECK(coequalizer(SparseMatrix::identity(1, Field()), SparseMatrix::zero(1, 1)).dim() == 0);
    // k (x) kC2 with basis 1⊗e, 1⊗g; relations (1·h)⊗x = 1⊗(h x) for h = g:
    // trivial action sends 1⊗x to 1⊗x, regular action sends 1⊗x to 1⊗gx.
    auto trivial = SparseMatrix::identity(2, Field());
    auto regular = dense(2, 2, {0, 1, 1, 0});
    auto co = coequalizer(trivial, regular);
    CHECK(co.dim() == 1);
    CHECK(co.projection * trivial == co.projection * regular);
    auto eq = equalizer(trivial, regular);
    CHECK(eq.dim() == 1);
    CHECK(trivial * eq.section == regular * eq.section);
    CHECK_THROWS(coequalizer(SparseMatrix::zero(1, 2), SparseMatrix::zero(2, 2)));
}

TEST_CASE("tensor index") {
    TensorIndex a({2, 3});
    CHECK(a.encode({1, 2}) == 5);
    TensorIndex b({2, 2, 2});
    CHECK(b.encode({1, 0, 1}) == 5);
    TensorIndex c({1, 5});
    for (Index i = 0; i < 5; ++i) CHECK(c.encode({0, i}) == i);
    for (Index d0 = 1; d0 <= 6; ++d0)
        for (Index d1 = 1; d1 <= 6; ++d1)
            for (Index d2 = 1; d2 <= 6; ++d2) {
                TensorIndex t({d0, d1, d2});
                for (Index i = 0; i < t.size(); ++i) REQUIRE(t.encode(t.decode(i)) == i);
            }
}

TEST_CASE("induced map examples") {
    Field Q;
    auto id = SubquotientSpace::whole(3, Q);
    CHECK(induced_map(SparseMatrix::identity(3, Q), id, id) == SparseMatrix::identity(3, Q));
    CHECK(induced_map(SparseMatrix::zero(3, 3), id, id).is_zero());
    // kC2 (x) kC2 -> kC2 by multiplication, descending to the quotient of both
    // sides by commutators; kC2 is commutative so HH_0 = kC2 and the map is onto.
    auto mult = dense(2, 4, {1, 0, 0, 1, 0, 1, 1, 0});
    auto hh0 = quotient_by(2, {}, Q);
    auto dom = quotient_by(4, {SVec::from_pairs({{1, q(1)}, {2, q(-1)}})}, Q);
    auto m = induced_map(mult, dom, hh0);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(rank(m) == 2);
    // Swapping the two factors of a non-symmetric relation does not descend.
    auto bad = dense(2, 2, {1, 0, 0, 0});
    auto quo = quotient_by(2, {SVec::from_pairs({{0, q(1)}, {1, q(-1)}})}, Q);
    CHECK_THROWS_AS(induced_map(bad, quo, quo), DescentError);
    auto sub = span_subspace(2, {SVec::from_pairs({{0, q(1)}, {1, q(1)}})});
    CHECK_THROWS_AS(induced_map(bad, sub, sub), DescentError);
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        Field f = trial % 3 == 0 ? Field::prime(5) : Field();
        Index r = 1 + rng() % 9, c = 1 + rng() % 9;
        auto m = random_matrix(rng, r, c, trial % 2 ? 20 : 60, f);
        auto k = kernel(m);
        k.assert_valid();
        Index rk = rank(m);
        CHECK(rk + k.dim() == c);
        CHECK((m * k.section).is_zero());
        if (f.is_rational()) CHECK(rk == oracle_rank(m));
        CHECK(rank(m.transpose()) == rk);
        CHECK(dense_rank(m) == rk);
        auto im = image_space(m);
        im.assert_valid();
        CHECK(im.dim() == rk);
        for (Index j = 0; j < c; ++j) CHECK(im.contains(m.col(j)));
        auto quo = quotient_by(r, [&] {
            std::vector<SVec> v;
            for (Index j = 0; j < c; ++j) v.push_back(m.col(j));
            return v;
        }(), f);
        quo.assert_valid();
        CHECK(quo.dim() == r - rk);
        CHECK((quo.projection * m).is_zero());
    }
}

TEST_CASE("preimage solves consistent systems") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 6, 5, 40, Field());
        Preimage pre(m);
        CHECK(pre.rank() == rank(m));
        SVec x = SVec::from_pairs({{0, q(1)}, {3, q(-2, 3)}});
        SVec b = m.apply(x);
        auto sol = pre.solve(b);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == b);
    }
    auto z = SparseMatrix::zero(2, 2);
    CHECK_FALSE(Preimage(z).solve(SVec::unit(0, q(1))));
}
