#include "hopfcyc/sayd.hpp"

namespace hopfcyc {

namespace {

bool lr(const SaydModule& m) { return m.chirality == Chirality::LeftRight; }

std::string pair_name(const SaydModule& m, Index h, Index x) {
    return "(" + m.h.basis_names()[h] + ", m" + std::to_string(x) + ")";
}

// h ⊗ m in the order used by the action of m.
Tensor hm_basis(const SaydModule& m, Index h, Index x) {
    Index d = m.h.dim();
    if (lr(m)) return Tensor::basis({d, m.dim}, {h, x}, m.h.one_scalar());
    return Tensor::basis({m.dim, d}, {x, h}, m.h.one_scalar());
}

}  // namespace

SaydModule ad_module(const HopfAlgebra& h) {
    Index d = h.dim();
    SaydModule m{"ad(" + h.name() + ")", h, d, Chirality::LeftRight, {}, {}};
    m.action = SlotMap::from_function({d, d}, {d}, [&](Index ij) {
        // h ⊗ h′ → h₁ ⊗ h₂ ⊗ h′ → h₂ h′ S(h₁)
        Tensor t = Tensor::basis({d, d}, {ij / d, ij % d}, h.one_scalar()).apply(0, h.comult_map());
        t = t.apply(0, h.antipode_map());
        t = h.mul_slots(t, 1, 2);  // [S(h₁), h₂h′]
        return h.mul_slots(t, 1, 0).pack();
    });
    m.coaction = h.comult_map();
    return m;
}

SaydModule coad_module(const HopfAlgebra& h) {
    Index d = h.dim();
    SaydModule m{"coad(" + h.name() + ")", h, d, Chirality::RightLeft, h.mult_map(), {}};
    m.coaction = SlotMap::from_function({d}, {d, d}, [&](Index i) {
        Tensor t = h.comult_power(h.basis_vector(i), 3).apply(2, h.antipode_map());  // [h₁, h₂, S(h₃)]
        return h.mul_slots(t, 2, 0).permute({1, 0}).pack();                           // [S(h₃)h₁, h₂]
    });
    return m;
}

SaydModule coad_left_right(const HopfAlgebra& h) {
    Index d = h.dim();
    SaydModule m{"coad_lr(" + h.name() + ")", h, d, Chirality::LeftRight, h.mult_map(), {}};
    m.coaction = SlotMap::from_function({d}, {d, d}, [&](Index i) {
        Tensor t = h.comult_power(h.basis_vector(i), 3).apply(0, h.antipode_map());  // [S(h₁), h₂, h₃]
        return h.mul_slots(t, 2, 0).pack();                                           // [h₂, h₃S(h₁)]
    });
    return m;
}

SaydModule trivial_module(const HopfAlgebra& h, Chirality c) {
    Index d = h.dim();
    SaydModule m{"k", h, 1, c, {}, {}};
    m.action = SlotMap::from_function(c == Chirality::LeftRight ? std::vector<Index>{d, 1} : std::vector<Index>{1, d},
                                      {1}, [&](Index i) {
                                          SVec v;
                                          v.push_back(0, h.counit(h.basis_vector(i)));
                                          return v;
                                      });
    m.coaction = SlotMap::from_function({1}, c == Chirality::LeftRight ? std::vector<Index>{1, d} : std::vector<Index>{d, 1},
                                        [&](Index) { return h.one(); });
    return m;
}

Report check_module(const SaydModule& m) {
    Report r("module " + m.name);
    const HopfAlgebra& h = m.h;
    Index d = h.dim();
    std::string w;
    for (Index x = 0; x < m.dim && w.empty(); ++x) {
        // unit
        Tensor t = Tensor::basis({m.dim}, {x}, h.one_scalar()).insert(lr(m) ? 0 : 1, d, h.one());
        if (t.apply(0, m.action).pack() != SVec::unit(x, h.one_scalar())) w = "unit acts nontrivially on m" + std::to_string(x);
        for (Index a = 0; a < d && w.empty(); ++a)
            for (Index b = 0; b < d && w.empty(); ++b) {
                SVec lhs, rhs;
                if (lr(m)) {
                    // (ab)▷x = a▷(b▷x)
                    Tensor ab = Tensor::basis({d, d, m.dim}, {a, b, x}, h.one_scalar());
                    lhs = ab.apply(0, h.mult_map()).apply(0, m.action).pack();
                    rhs = ab.apply(1, m.action).apply(0, m.action).pack();
                } else {
                    Tensor ab = Tensor::basis({m.dim, d, d}, {x, a, b}, h.one_scalar());
                    lhs = ab.apply(1, h.mult_map()).apply(0, m.action).pack();
                    rhs = ab.apply(0, m.action).apply(0, m.action).pack();
                }
                if (lhs != rhs) w = "(" + h.basis_names()[a] + ", " + h.basis_names()[b] + ", m" + std::to_string(x) + ")";
            }
    }
    r.check("action is a module structure", w.empty(), "fails at " + w);
    return r;
}

Report check_comodule(const SaydModule& m) {
    Report r("comodule " + m.name);
    const HopfAlgebra& h = m.h;
    std::string w;
    for (Index x = 0; x < m.dim && w.empty(); ++x) {
        Tensor t = Tensor::basis({m.dim}, {x}, h.one_scalar()).apply(0, m.coaction);
        std::size_t hs = lr(m) ? 1 : 0, ms = lr(m) ? 0 : 1;
        SVec lhs = t.apply(ms, m.coaction).pack();
        SVec rhs = t.apply(hs, h.comult_map()).pack();
        if (lhs != rhs) w = "coassociativity at m" + std::to_string(x);
        if (w.empty() && t.apply(hs, h.counit_map()).pack() != SVec::unit(x, h.one_scalar()))
            w = "counit at m" + std::to_string(x);
    }
    r.check("coaction is a comodule structure", w.empty(), "fails: " + w);
    return r;
}

Report check_ayd(const SaydModule& m) {
    Report r("AYD " + m.name);
    const HopfAlgebra& h = m.h;
    Index d = h.dim();
    std::string w;
    for (Index a = 0; a < d && w.empty(); ++a)
        for (Index x = 0; x < m.dim && w.empty(); ++x) {
            Tensor t = hm_basis(m, a, x);
            SVec lhs, rhs;
            if (lr(m)) {
                // (h·m)₀ ⊗ (h·m)₁ = h₂·m₀ ⊗ h₃m₁S(h₁)
                lhs = t.apply(0, m.action).apply(0, m.coaction).pack();
                Tensor u = t.apply(1, m.coaction);                      // [h, m₀, m₁]
                u = u.apply(0, h.comult_map()).apply(0, h.comult_map());  // [h₁, h₂, h₃, m₀, m₁]
                u = u.apply(0, h.antipode_map());
                u = u.move_slot(0, 4);                                 // [h₂, h₃, m₀, m₁, S(h₁)]
                u = h.mul_slots(u, 3, 4);                              // [h₂, h₃, m₀, m₁S(h₁)]
                u = h.mul_slots(u, 1, 3);                              // [h₂, h₃m₁S(h₁), m₀]
                u = u.move_slot(1, 2);                                 // [h₂, m₀, h₃m₁S(h₁)]
                rhs = u.apply(0, m.action).pack();
            } else {
                // (m·h)₋₁ ⊗ (m·h)₀ = S(h₃)m₋₁h₁ ⊗ m₀h₂
                lhs = t.apply(0, m.action).apply(0, m.coaction).pack();
                Tensor u = t.apply(0, m.coaction);                      // [m₋₁, m₀, h]
                u = u.apply(2, h.comult_map()).apply(2, h.comult_map());  // [m₋₁, m₀, h₁, h₂, h₃]
                u = u.apply(4, h.antipode_map());
                u = h.mul_slots(u, 0, 2);                              // [m₋₁h₁, m₀, h₂, S(h₃)]
                u = h.mul_slots(u, 3, 0);                              // [m₀, h₂, S(h₃)m₋₁h₁]
                u = u.move_slot(2, 0);                                 // [S(h₃)m₋₁h₁, m₀, h₂]
                rhs = u.apply(1, m.action).pack();
            }
            if (lhs != rhs) w = pair_name(m, a, x);
        }
    r.check("anti-Yetter-Drinfeld condition", w.empty(), "fails at " + w);
    return r;
}

Report check_stable(const SaydModule& m) {
    Report r("stability " + m.name);
    const HopfAlgebra& h = m.h;
    std::string w;
    for (Index x = 0; x < m.dim && w.empty(); ++x) {
        Tensor t = Tensor::basis({m.dim}, {x}, h.one_scalar()).apply(0, m.coaction);
        // left-right: m₁·m₀; right-left: m₀·m₋₁
        SVec v = t.permute({1, 0}).apply(0, m.action).pack();
        if (v != SVec::unit(x, h.one_scalar())) w = "m" + std::to_string(x);
    }
    r.check("stability", w.empty(), "fails at " + w);
    return r;
}

Report check_sayd(const SaydModule& m) {
    Report r("SAYD " + m.name);
    r.merge(check_module(m));
    r.merge(check_comodule(m));
    r.merge(check_ayd(m));
    r.merge(check_stable(m));
    return r;
}

}  // namespace hopfcyc
