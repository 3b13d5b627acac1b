#pragma once

#include <string>
#include <vector>

#include "hopfcyc/galois.hpp"
#include "hopfcyc/sayd.hpp"

namespace hopfcyc {

// Truncated cyclic module: degrees 0..n_max, all maps on reduced coordinates.
struct CyclicModule {
    std::string name;
    Field field;
    int n_max = 0;
    std::vector<TensorSpace> spaces;
    std::vector<std::vector<SparseMatrix>> faces;   // faces[n][i]: C_n → C_{n-1}, 1 ≤ n ≤ n_max, 0 ≤ i ≤ n
    std::vector<std::vector<SparseMatrix>> degens;  // degens[n][j]: C_n → C_{n+1}, n < n_max, 0 ≤ j ≤ n
    std::vector<SparseMatrix> cyclic;               // cyclic[n] = t_n

    Index dim(int n) const { return spaces[static_cast<std::size_t>(n)].dim(); }
    std::vector<std::int64_t> dims() const;
};

// Truncated cocyclic module.
struct CocyclicModule {
    std::string name;
    Field field;
    int n_max = 0;
    std::vector<TensorSpace> spaces;
    std::vector<std::vector<SparseMatrix>> cofaces;   // cofaces[n][i]: C^n → C^{n+1}, n < n_max, 0 ≤ i ≤ n+1
    std::vector<std::vector<SparseMatrix>> codegens;  // codegens[n][j]: C^n → C^{n-1}, n ≥ 1, 0 ≤ j ≤ n-1
    std::vector<SparseMatrix> cocyclic;               // τ_n

    Index dim(int n) const { return spaces[static_cast<std::size_t>(n)].dim(); }
    std::vector<std::int64_t> dims() const;
};

// C^{⊗n+1} ⊗_H M for a left H-module M with action (d,m)->(m), as a quotient of C^{⊗n+1} ⊗ M.
TensorSpace coalgebra_tensor_module(const QuotientModuleCoalgebra& c, Index mdim, const SlotMap& action, int n);

// [H^{⊗_B n+1}]_B with multiplication faces, unit degeneracies and rotation.
CyclicModule relative_cyclic(const ComoduleSubalgebra& b, int n_max);
// (D^{□_C n+1})^C with counit faces, coproduct degeneracies and rotation.
CyclicModule coext_cyclic(const QuotientModuleCoalgebra& c, int n_max);
CocyclicModule relative_cocyclic_coext(const QuotientModuleCoalgebra& c, int n_max);
// C^{⊗n+1} ⊗_H M for a left-right SAYD module M.
CyclicModule hopf_cyclic_coalgebra(const QuotientModuleCoalgebra& c, const SaydModule& m, int n_max);
CocyclicModule hopf_cocyclic_coalgebra(const QuotientModuleCoalgebra& c, const SaydModule& m, int n_max);
// M □_H B^{⊗n+1} for a left-right SAYD module M, in B-coordinates.
CyclicModule hopf_cyclic_comodule_algebra(const ComoduleSubalgebra& b, const SaydModule& m, int n_max);

// Cyclic module of a cocyclic module under Connes' duality:
// d_0 = σ_{n-1}τ_n, d_i = σ_{i-1}, s_i = δ_i, t_n = τ_n⁻¹.
CyclicModule cyclic_dual(const CocyclicModule& x);

Report check_identities(const CyclicModule& x);
Report check_identities(const CocyclicModule& x);

// b_n = Σ(−1)ⁱ dᵢ : C_n → C_{n-1}.
SparseMatrix hochschild_boundary(const CyclicModule& x, int n);
// dims of HH_0..HH_n; requires n ≤ n_max − 1.
std::vector<std::int64_t> hochschild_homology(const CyclicModule& x, int n);

// Connes' B = (1 − λ) s₋₁ N : C_n → C_{n+1}, λ = (−1)ⁿ t_n, s₋₁ = t_{n+1} s_n.
SparseMatrix connes_boundary(const CyclicModule& x, int n);
enum class HcMethod { BBicomplex, NormalizedBBicomplex, ConnesComplex };
// dims of HC_0..HC_n; requires n ≤ n_max − 1.
std::vector<std::int64_t> cyclic_homology(const CyclicModule& x, int n, HcMethod method = HcMethod::BBicomplex);

class DegreeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace hopfcyc
