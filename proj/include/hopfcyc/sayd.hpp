#pragma once

#include <string>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

// LeftRight: left action H⊗M → M and right coaction M → M⊗H.
// RightLeft: right action M⊗H → M and left coaction M → H⊗M.
enum class Chirality { LeftRight, RightLeft };

struct SaydModule {
    std::string name;
    HopfAlgebra h;
    Index dim = 0;
    Chirality chirality = Chirality::LeftRight;
    SlotMap action;    // (d,m)->(m) or (m,d)->(m)
    SlotMap coaction;  // (m)->(m,d) or (m)->(d,m)
};

// H with h▷h′ = h₍₂₎h′S(h₍₁₎) and coaction Δ.
SaydModule ad_module(const HopfAlgebra& h);
// H with right multiplication and λ(h′) = S(h′₍₃₎)h′₍₁₎ ⊗ h′₍₂₎.
SaydModule coad_module(const HopfAlgebra& h);
// H with left multiplication and ρ(h′) = h′₍₂₎ ⊗ h′₍₃₎S(h′₍₁₎).
SaydModule coad_left_right(const HopfAlgebra& h);
// k with the counit action and the unit coaction.
SaydModule trivial_module(const HopfAlgebra& h, Chirality c = Chirality::LeftRight);

Report check_module(const SaydModule& m);
Report check_comodule(const SaydModule& m);
Report check_ayd(const SaydModule& m);
Report check_stable(const SaydModule& m);
// All four.
Report check_sayd(const SaydModule& m);

}  // namespace hopfcyc
