#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

// Subalgebra B ⊆ H containing 1 which is a left coideal: Δ(B) ⊆ H ⊗ B.
class ComoduleSubalgebra {
public:
    // Subalgebra generated by 1 and gens; throws HopfError if it is not a left coideal.
    static ComoduleSubalgebra generate(const HopfAlgebra& h, const std::vector<SVec>& gens);
    static ComoduleSubalgebra scalars(const HopfAlgebra& h) { return generate(h, {}); }

    const HopfAlgebra& parent() const { return h_; }
    Index dim() const { return space_.dim(); }
    const SubquotientSpace& space() const { return space_; }
    // Basis of B as vectors of H (section columns).
    std::vector<SVec> basis() const;
    // Basis of B⁺ = B ∩ ker ε as vectors of H.
    std::vector<SVec> augmentation_basis() const;
    bool contains(const SVec& v) const { return space_.contains(v); }

    const SlotMap& inclusion() const { return incl_; }   // (b) -> (d)
    const SlotMap& mult_map() const { return mult_; }    // (b,b) -> (b)
    const SlotMap& coaction() const { return coact_; }   // (b) -> (d,b), restriction of Δ
    SVec one() const;  // 1 in B-coordinates

private:
    HopfAlgebra h_;
    SubquotientSpace space_;
    SlotMap incl_, mult_, coact_;
};

// C = H/I for a coideal right ideal I, with the induced right H-module coalgebra structure.
class QuotientModuleCoalgebra {
public:
    // I is the right ideal generated by gens; throws HopfError unless it is a coideal.
    static QuotientModuleCoalgebra from_generators(const HopfAlgebra& h, const std::vector<SVec>& gens);

    const HopfAlgebra& parent() const { return h_; }
    Index dim() const { return quotient_.dim(); }
    const SubquotientSpace& ideal() const { return ideal_; }
    const SubquotientSpace& quotient() const { return quotient_; }
    std::vector<SVec> ideal_basis() const;
    Index ideal_dim() const { return ideal_.dim(); }

    const SlotMap& projection() const { return proj_; }  // (d) -> (c)
    const SlotMap& lift() const { return lift_; }        // (c) -> (d)
    const SlotMap& comult_map() const { return comult_; }  // (c) -> (c,c)
    const SlotMap& counit_map() const { return counit_; }  // (c) -> ()
    const SlotMap& action() const { return action_; }      // (c,d) -> (c)
    SVec one() const;  // 1̄
    std::vector<std::string> basis_names() const;

private:
    HopfAlgebra h_;
    SubquotientSpace ideal_, quotient_;
    SlotMap proj_, lift_, comult_, counit_, action_;
};

// I = B⁺H and C = H/I.
QuotientModuleCoalgebra takeuchi_B_to_I(const ComoduleSubalgebra& b);
// B = H^{co C}, the equalizer of h ↦ h₍₁₎ ⊗ h̄₍₂₎ and h ↦ h ⊗ 1̄.
ComoduleSubalgebra coinvariants(const QuotientModuleCoalgebra& c);
bool same_subspace(const SubquotientSpace& a, const SubquotientSpace& b);

// H^{⊗_B k} (and with cyclic = true the commutator quotient [H^{⊗_B k}]_B) as a
// quotient of H^{⊗k}.
TensorSpace balanced_power(const ComoduleSubalgebra& b, std::size_t factors, bool cyclic);

struct CanonicalMaps {
    TensorSpace domain;   // H^{⊗_B n+1}
    TensorSpace target;   // H ⊗ C^{⊗n}
    SparseMatrix can;
    std::optional<SparseMatrix> can_inv;  // absent when not well-defined
    std::string failure;                  // why can or can⁻¹ failed
    bool bijective = false;
};

// canₙ(h⁰ ⊗_B ... ⊗_B hⁿ) = h⁰h¹₍₁₎⋯hⁿ₍₁₎ ⊗ h̄¹₍₂₎⋯h̄ⁿ₍₂₎ ⊗ ... ⊗ h̄ⁿ₍ₙ₊₁₎ and its inverse
// h ⊗ c̄¹ ⊗ ... ⊗ c̄ⁿ ↦ hS(c¹₍₁₎) ⊗_B c¹₍₂₎S(c²₍₁₎) ⊗_B ... ⊗_B cⁿ₍₂₎.
CanonicalMaps canonical_maps(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c, std::size_t n);

// τ(c̄) = S(c₍₁₎) ⊗_B c₍₂₎ as a matrix C → H ⊗_B H; also checks can∘τ = 1 ⊗ id.
struct TranslationMap {
    SparseMatrix tau;
    bool inverse_ok = false;
};
TranslationMap translation_map(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c);

// I = B⁺H, cross-checked against can₁.
Report galois_criterion(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c);

// B ⊗ H → H □_C H, b ⊗ d ↦ b d₍₁₎ ⊗ d₍₂₎.
struct CocanonicalMap {
    TensorSpace cotensor;  // H □_C H inside H ⊗ H
    SparseMatrix cocan;
    bool bijective = false;
};
CocanonicalMap cocanonical_map(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c);

// Named homogeneous setups (H, B, C) used across the tool.
struct GaloisSetup {
    std::string name;
    HopfAlgebra h;
    ComoduleSubalgebra b;
    QuotientModuleCoalgebra c;
};
GaloisSetup make_setup(const HopfAlgebra& h, const ComoduleSubalgebra& b);
// kC2/k, kC2/kC2, kS3/k, kS3/kC2, kS3/kC3, H4/k, H4/x, OS3/C2.
GaloisSetup builtin_setup(const std::string& name, const Field& f = Field());
std::vector<std::string> builtin_setup_names();

}  // namespace hopfcyc
