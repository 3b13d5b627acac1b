#pragma once

#include <algorithm>

#include <string>
#include <vector>

#include "hopfcyc/galois.hpp"
#include "hopfcyc/sayd.hpp"

namespace hopfcyc {

// d[k]: X_k → X_{k-1} for 1 ≤ k ≤ top; d[0] is the empty map.
struct ChainComplex {
    std::vector<Index> dims;
    std::vector<SparseMatrix> d;

    int top() const { return static_cast<int>(dims.size()) - 1; }
    // dims of H_0..H_top, the top degree taken without an incoming boundary.
    std::vector<std::int64_t> homology() const;
    Report check() const;  // d∘d = 0
};

// Right H-module on a tensor product of basis spaces; action has in_dims dims + {dim H}.
struct RightModule {
    std::vector<Index> dims;
    SlotMap action;
};
// Left H-module; action has in_dims {dim H} + dims.
struct LeftModule {
    std::vector<Index> dims;
    SlotMap action;
};

RightModule trivial_right(const HopfAlgebra& h);
RightModule regular_right(const HopfAlgebra& h);
LeftModule trivial_left(const HopfAlgebra& h);
LeftModule ad_left(const HopfAlgebra& h);
// C^{⊗p+1} with the diagonal right action.
RightModule diagonal_right(const QuotientModuleCoalgebra& c, int p);

// N ⊗_H bar(M) simplified to N ⊗ H^{⊗q} ⊗ M, degrees 0..length.
ChainComplex tor_complex(const HopfAlgebra& h, const RightModule& n, const LeftModule& m, int length);

struct BarResolution {
    ChainComplex complex;       // H^{⊗q+1} ⊗ M
    SparseMatrix augmentation;  // H ⊗ M → M
    Report exactness;           // augmented complex exact in degrees 0..length−1
};
BarResolution bar_resolution(const HopfAlgebra& h, const LeftModule& m, int length);

// dims of Tor_0..Tor_n.
std::vector<std::int64_t> tor(const HopfAlgebra& h, const RightModule& n, const LeftModule& m, int degree);

// First-quadrant double complex on 0 ≤ p ≤ p_max, 0 ≤ q ≤ q_max, p + q ≤ degree_max.
// Cells outside that region have dimension 0. The vertical maps carry the sign (−1)^p.
struct DoubleComplex {
    int p_max = 0, q_max = 0, degree_max = 0;
    Field field;
    std::vector<std::vector<Index>> dims;         // [p][q]
    std::vector<std::vector<SparseMatrix>> dh;    // [p][q]: (p,q) → (p−1,q), p ≥ 1
    std::vector<std::vector<SparseMatrix>> dv;    // [p][q]: (p,q) → (p,q−1), q ≥ 1

    Index dim(int p, int q) const;
    Report check() const;
    DoubleComplex transposed() const;
    // Total complex over the computed region.
    ChainComplex total() const;
    // Total degrees whose homology and E² entries are unaffected by the truncation.
    int trusted_degree() const { return std::min({p_max, q_max, degree_max}) - 1; }
};

// C_p ⊗_H M_q for C = H/I, M = ad(H) and the bar resolution, as C^{⊗p+1} ⊗ H^{⊗q} ⊗ M.
// degree_max < 0 keeps the full rectangle.
DoubleComplex build_double_complex(const GaloisSetup& s, int p_max, int q_max, int degree_max = -1);

struct SpectralPage {
    int r = 0;
    std::vector<std::vector<std::int64_t>> dims;  // [p][q]
};

enum class Orientation { Columns, Rows };
// Pages E¹ and E² (Columns: vertical homology first). Rows uses the transposed complex,
// so its [p][q] entry is ᵀE_{p,q} with p the row-homology index. Entries with p + q above
// trusted_degree() are left at −1.
std::vector<SpectralPage> spectral_pages(const DoubleComplex& dc, Orientation o);

// Matrix of d₂: E²_{p,q} → E²_{p−2,q+1} in the bases chosen by the page computation.
// The recomputation with a second lift is compared and recorded in the report.
struct D2Map {
    SparseMatrix matrix;
    bool lift_independent = false;
};
D2Map d2_map(const DoubleComplex& dc, int p, int q);

// Row homology of C_•: checks ∂h + h∂ = id − proj for h(c⁰⊗…) = 1̄⊗c⁰⊗… and H_0 = k.
Report contracting_homotopy_check(const QuotientModuleCoalgebra& c, int p_max);

Report theorem35_check(const GaloisSetup& s, int n_max);
Report five_term_check(const GaloisSetup& s);
Report corollary36_check(const HopfAlgebra& h, int n_max);

}  // namespace hopfcyc
