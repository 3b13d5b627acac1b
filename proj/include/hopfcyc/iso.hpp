#pragma once

#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"

namespace hopfcyc {

// Degreewise linear maps between two truncated cyclic modules.
struct CyclicMap {
    std::string name;
    CyclicModule source;
    CyclicModule target;
    std::vector<SparseMatrix> components;  // components[n]: source_n → target_n
};

// f∘d_i = d_i∘f, f∘s_j = s_j∘f, f∘t_n = t_n∘f for every degree, one check per operator kind and degree.
Report check_cyclic_map(const CyclicMap& f);
// g∘f = id and f∘g = id degreewise.
Report check_inverse(const CyclicMap& f, const CyclicMap& g);
CyclicMap identity_map(const CyclicModule& x);

// C_n(H|B) with B the coinvariants of the setup, and C_n(H/I, ad(H))_H.
CyclicModule relative_side(const GaloisSetup& s, int n_max);
CyclicModule coalgebra_side(const GaloisSetup& s, int n_max);
// C_n(B, coad(H))^H and C_n(H|H/B⁺H).
CyclicModule comodule_algebra_side(const GaloisSetup& s, int n_max);
CyclicModule coext_side(const GaloisSetup& s, int n_max);

// ψ: C(H/I, ad H)_H → C(H|B) and φ: C(H|B) → C(H/I, ad H)_H.
CyclicMap psi_map(const GaloisSetup& s, const CyclicModule& coalgebra, const CyclicModule& relative);
CyclicMap phi_map(const GaloisSetup& s, const CyclicModule& relative, const CyclicModule& coalgebra);
// γ: C(B, coad H)^H → C(H|C) and its inverse.
CyclicMap gamma_map(const GaloisSetup& s, const CyclicModule& comodule_algebra, const CyclicModule& coext);
CyclicMap gamma_inv_map(const GaloisSetup& s, const CyclicModule& coext, const CyclicModule& comodule_algebra);

SparseMatrix psi(const GaloisSetup& s, int n);
SparseMatrix phi(const GaloisSetup& s, int n);
SparseMatrix gamma(const GaloisSetup& s, int n);
SparseMatrix gamma_inv(const GaloisSetup& s, int n);

class NotHopfIdeal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks H·I ⊆ I and S(I) ⊆ I for the ideal of c; returns an empty string or the reason.
std::string hopf_ideal_failure(const QuotientModuleCoalgebra& c);

struct JaraStefan {
    TensorSpace target;           // (H/I)^{⊗n+1} ⊗_{H/I} [ad H]_B
    SparseMatrix phi_bar;         // [H^{⊗_B n+1}]_B → target
    SparseMatrix identification;  // (H/I)^{⊗n+1} ⊗_H ad H → target, x ⊗ h ↦ x ⊗ [h]
    Report report;                // bijectivity and identification ∘ φ = φ̄
};

// Throws NotHopfIdeal when I is not a Hopf ideal.
JaraStefan jara_stefan(const GaloisSetup& s, int n);

}  // namespace hopfcyc
