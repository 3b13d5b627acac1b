#include "hopfcyc/iso.hpp"

namespace hopfcyc {

namespace {

std::vector<Index> repeat(Index d, std::size_t k) { return std::vector<Index>(k, d); }

std::vector<std::size_t> range(std::size_t first, std::size_t last) {
    std::vector<std::size_t> v;
    for (std::size_t i = first; i < last; ++i) v.push_back(i);
    return v;
}

// Input h⁰ ⊗ ... ⊗ hⁿ; output (h¹₍₂₎⋯hⁿ₍₂₎ ⊗ ... ⊗ hⁿ₍ₙ₊₁₎ ⊗ 1) ⊗ h⁰h¹₍₁₎⋯hⁿ₍₁₎ with H-valued slots.
Tensor phi_ambient(const HopfAlgebra& h, const Digits& x) {
    std::size_t n = x.size() - 1;
    Tensor acc = h.ones(n + 1).outer(Tensor::basis({h.dim()}, {x[0]}, h.one_scalar()));
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<std::size_t> target{n + 1};
        for (std::size_t k = 0; k < j; ++k) target.push_back(k);
        acc = h.multiply_into(acc, h.comult_power(h.basis_vector(x[j]), j + 1), target);
    }
    return acc;
}

// [S(x⁰₍₁₎), x⁰₍₂₎S(x¹₍₁₎), ..., xⁿ⁻¹₍₂₎S(xⁿ₍₁₎), xⁿ₍₂₎, ..., xⁿ₍ₗ₊₁₎], multiplying as soon as
// a factor is complete so that vanishing products are dropped early.
Tensor antipode_chain(const HopfAlgebra& h, const Digits& x, std::size_t n, std::size_t last_pieces) {
    Tensor t = h.comult_power(h.basis_vector(x[0]), n == 0 ? last_pieces : 2).apply(0, h.antipode_map());
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t pieces = k == n ? last_pieces : 2;
        Tensor next = h.comult_power(h.basis_vector(x[k]), pieces).apply(0, h.antipode_map());
        std::size_t prev = t.slots() - 1;
        t = h.mul_slots(t.outer(next), prev, prev + 1);
        t.canonicalize();
    }
    return t;
}

// Lifted ḡ⁰ ⊗ ... ⊗ ḡⁿ ⊗ h ↦ gⁿ₍₂₎hS(g⁰₍₁₎) ⊗ g⁰₍₂₎S(g¹₍₁₎) ⊗ ... ⊗ gⁿ⁻¹₍₂₎S(gⁿ₍₁₎).
Formula psi_formula(const HopfAlgebra& h, std::size_t n) {
    return [&h, n](const Digits& x) {
        Tensor t = antipode_chain(h, x, n, 2);
        std::size_t last = t.slots() - 1;
        t = h.mul_slots(t.insert(last + 1, h.dim(), h.basis_vector(x[n + 1])), last, last + 1);
        t = h.mul_slots(t, last, 0);
        t.canonicalize();
        return t.move_slot(last - 1, 0);
    };
}

// h ⊗ b⁰ ⊗ ... ⊗ bⁿ (b's already in H) ↦ b¹₍₂₎⋯bⁿ₍₂₎h₍₂₎ ⊗ ... ⊗ bⁿ₍ₙ₊₁₎h₍ₙ₊₁₎ ⊗ b⁰b¹₍₁₎⋯bⁿ₍₁₎h₍₁₎.
Tensor gamma_ambient(const HopfAlgebra& h, const std::vector<SVec>& b, const SVec& m) {
    std::size_t n = b.size() - 1;
    Tensor acc = h.ones(n).outer(Tensor::from_svec({h.dim()}, b[0]));
    auto spread = [&](const SVec& v, std::size_t pieces) {
        std::vector<std::size_t> target{n};
        for (std::size_t k = 0; k + 1 < pieces; ++k) target.push_back(k);
        acc = h.multiply_into(acc, h.comult_power(v, pieces), target);
    };
    for (std::size_t j = 1; j <= n; ++j) spread(b[j], j + 1);
    spread(m, n + 1);
    return acc;
}

// h⁰ ⊗ ... ⊗ hⁿ ↦ hⁿ₍₂₎ ⊗ hⁿ₍₃₎S(h⁰₍₁₎) ⊗ h⁰₍₂₎S(h¹₍₁₎) ⊗ ... ⊗ hⁿ⁻¹₍₂₎S(hⁿ₍₁₎), all slots in H.
Formula gamma_inv_formula(const HopfAlgebra& h, std::size_t n) {
    return [&h, n](const Digits& x) {
        Tensor t = antipode_chain(h, x, n, 3);
        std::size_t last = t.slots() - 1;
        t = h.mul_slots(t, last, 0);
        t.canonicalize();
        return t.move_slot(last - 2, 0).move_slot(last - 1, 1);
    };
}

CyclicMap make_map(std::string name, const CyclicModule& src, const CyclicModule& tgt,
                   const std::function<SparseMatrix(int)>& component) {
    CyclicMap f{std::move(name), src, tgt, {}};
    int top = std::min(src.n_max, tgt.n_max);
    for (int n = 0; n <= top; ++n) f.components.push_back(component(n));
    return f;
}

void compare(Report& r, const std::string& name, const SparseMatrix& a, const SparseMatrix& b) {
    if (a == b) {
        r.pass(name);
        return;
    }
    for (Index j = 0; j < a.cols(); ++j)
        if (a.col(j) != b.col(j)) {
            r.fail(name, "column " + std::to_string(j) + ": " + a.col(j).to_string() + " vs " + b.col(j).to_string());
            return;
        }
    r.fail(name, "shape mismatch");
}

}  // namespace

Report check_cyclic_map(const CyclicMap& f) {
    Report r("cyclic map " + f.name);
    const auto& x = f.source;
    const auto& y = f.target;
    int top = static_cast<int>(f.components.size()) - 1;
    for (int n = 0; n <= top; ++n) {
        if (x.dim(n) != f.components[n].cols() || y.dim(n) != f.components[n].rows()) {
            r.fail("shape on degree " + std::to_string(n), "component does not match the spaces");
            return r;
        }
    }
    for (int n = 0; n <= top; ++n) {
        std::string deg = " on degree " + std::to_string(n);
        const SparseMatrix& fn = f.components[n];
        if (n >= 1) {
            bool ok = true;
            for (int i = 0; i <= n && ok; ++i) {
                Report tmp;
                compare(tmp, "", f.components[n - 1] * x.faces[n][i], y.faces[n][i] * fn);
                if (!tmp.ok()) {
                    std::string which = i == 0 ? "d_0" : (i == n ? "d_n" : "d_i");
                    r.fail("faces" + deg, which + " (i=" + std::to_string(i) + ") " + tmp.checks().front().detail);
                    ok = false;
                }
            }
            if (ok) r.pass("faces" + deg);
        }
        if (n < top) {
            bool ok = true;
            for (int j = 0; j <= n && ok; ++j) {
                Report tmp;
                compare(tmp, "", f.components[n + 1] * x.degens[n][j], y.degens[n][j] * fn);
                if (!tmp.ok()) {
                    r.fail("degeneracies" + deg, "j=" + std::to_string(j) + " " + tmp.checks().front().detail);
                    ok = false;
                }
            }
            if (ok) r.pass("degeneracies" + deg);
        }
        Report tmp;
        compare(tmp, "", fn * x.cyclic[n], y.cyclic[n] * fn);
        if (tmp.ok()) r.pass("t_n" + deg);
        else r.fail("t_n" + deg, tmp.checks().front().detail);
    }
    return r;
}

Report check_inverse(const CyclicMap& f, const CyclicMap& g) {
    Report r(g.name + " ∘ " + f.name);
    std::size_t top = std::min(f.components.size(), g.components.size());
    for (std::size_t n = 0; n < top; ++n) {
        std::string deg = " on degree " + std::to_string(n);
        const Field& fld = f.source.field;
        compare(r, g.name + "∘" + f.name + " = id" + deg, g.components[n] * f.components[n],
                SparseMatrix::identity(f.source.dim(static_cast<int>(n)), fld));
        compare(r, f.name + "∘" + g.name + " = id" + deg, f.components[n] * g.components[n],
                SparseMatrix::identity(g.source.dim(static_cast<int>(n)), fld));
    }
    return r;
}

CyclicMap identity_map(const CyclicModule& x) {
    return make_map("id", x, x, [&x](int n) { return SparseMatrix::identity(x.dim(n), x.field); });
}

CyclicModule relative_side(const GaloisSetup& s, int n_max) { return relative_cyclic(s.b, n_max); }
CyclicModule coalgebra_side(const GaloisSetup& s, int n_max) { return hopf_cyclic_coalgebra(s.c, ad_module(s.h), n_max); }
CyclicModule comodule_algebra_side(const GaloisSetup& s, int n_max) {
    return hopf_cyclic_comodule_algebra(s.b, coad_left_right(s.h), n_max);
}
CyclicModule coext_side(const GaloisSetup& s, int n_max) { return coext_cyclic(s.c, n_max); }

CyclicMap psi_map(const GaloisSetup& s, const CyclicModule& coalgebra, const CyclicModule& relative) {
    const HopfAlgebra& h = s.h;
    Index d = h.dim();
    return make_map("ψ", coalgebra, relative, [&](int n) {
        std::size_t k = static_cast<std::size_t>(n) + 1;
        auto lifted = repeat(d, k + 1);
        Formula f = psi_formula(h, static_cast<std::size_t>(n));
        auto slots = range(0, k);
        check_lift_independence(f, lifted, slots, s.c.ideal_basis(), relative.spaces[n], "ψ");
        return descend(through_lifts(f, lifted, slots, s.c.lift(), h.one_scalar()), coalgebra.spaces[n],
                       relative.spaces[n], "ψ on degree " + std::to_string(n));
    });
}

CyclicMap phi_map(const GaloisSetup& s, const CyclicModule& relative, const CyclicModule& coalgebra) {
    const HopfAlgebra& h = s.h;
    const QuotientModuleCoalgebra& c = s.c;
    return make_map("φ", relative, coalgebra, [&](int n) {
        Formula f = [&h, &c, n](const Digits& x) {
            Tensor t = phi_ambient(h, x);
            for (int k = 0; k <= n; ++k) t = t.apply(static_cast<std::size_t>(k), c.projection());
            return t;
        };
        return descend(f, relative.spaces[n], coalgebra.spaces[n], "φ on degree " + std::to_string(n));
    });
}

CyclicMap gamma_map(const GaloisSetup& s, const CyclicModule& comodule_algebra, const CyclicModule& coext) {
    const HopfAlgebra& h = s.h;
    const ComoduleSubalgebra& b = s.b;
    SparseMatrix incl = b.inclusion().matrix();
    return make_map("γ", comodule_algebra, coext, [&](int n) {
        Formula f = [&h, &incl](const Digits& x) {
            std::vector<SVec> bs;
            for (std::size_t k = 1; k < x.size(); ++k) bs.push_back(incl.col(x[k]));
            return gamma_ambient(h, bs, h.basis_vector(x[0]));
        };
        return descend(f, comodule_algebra.spaces[n], coext.spaces[n], "γ on degree " + std::to_string(n));
    });
}

CyclicMap gamma_inv_map(const GaloisSetup& s, const CyclicModule& coext, const CyclicModule& comodule_algebra) {
    const HopfAlgebra& h = s.h;
    const ComoduleSubalgebra& b = s.b;
    Index d = h.dim();
    return make_map("γ⁻¹", coext, comodule_algebra, [&](int n) {
        std::size_t k = static_cast<std::size_t>(n) + 1;
        const TensorSpace& cod = comodule_algebra.spaces[n];
        // the target pushed into M ⊗ H^{⊗n+1}
        Formula push = [&b, &cod, k, &h](const Digits& x) {
            Tensor t = Tensor::basis(cod.dims, x, h.one_scalar());
            for (std::size_t j = 1; j <= k; ++j) t = t.apply(j, b.inclusion());
            return t;
        };
        std::vector<Index> hdims = repeat(d, k + 1);
        AmbientMap pushed = ambient_map(push, cod.dims);
        std::vector<SVec> image;
        for (Index j = 0; j < cod.dim(); ++j) image.push_back(apply_linear(pushed, cod.space.lift(SVec::unit(j, h.one_scalar()))));
        TensorSpace in_h{hdims, span_subspace(TensorSpace::whole(hdims, h.field()).ambient_dim(), image)};
        std::string what = "γ⁻¹ on degree " + std::to_string(n);
        SparseMatrix raw = descend(gamma_inv_formula(h, static_cast<std::size_t>(n)), coext.spaces[n], in_h, what);
        SparseMatrix change = descend(push, cod, in_h, what);
        Preimage solver(change);
        std::vector<SVec> cols;
        for (Index j = 0; j < raw.cols(); ++j) {
            auto x = solver.solve(raw.col(j));
            if (!x) throw DescentError(what + ": image not in the cotensor product");
            cols.push_back(*x);
        }
        return SparseMatrix(cod.dim(), std::move(cols));
    });
}

SparseMatrix psi(const GaloisSetup& s, int n) {
    return psi_map(s, coalgebra_side(s, n), relative_side(s, n)).components[n];
}
SparseMatrix phi(const GaloisSetup& s, int n) {
    return phi_map(s, relative_side(s, n), coalgebra_side(s, n)).components[n];
}
SparseMatrix gamma(const GaloisSetup& s, int n) {
    return gamma_map(s, comodule_algebra_side(s, n), coext_side(s, n)).components[n];
}
SparseMatrix gamma_inv(const GaloisSetup& s, int n) {
    return gamma_inv_map(s, coext_side(s, n), comodule_algebra_side(s, n)).components[n];
}

std::string hopf_ideal_failure(const QuotientModuleCoalgebra& c) {
    const HopfAlgebra& h = c.parent();
    const SubquotientSpace& ideal = c.ideal();
    for (const SVec& v : c.ideal_basis()) {
        for (Index i = 0; i < h.dim(); ++i)
            if (!ideal.contains(h.mul(h.basis_vector(i), v)))
                return "not a two-sided ideal: " + h.basis_names()[i] + " · " + v.to_string() + " leaves I";
        if (!ideal.contains(h.S(v))) return "not stable under the antipode: S(" + v.to_string() + ") leaves I";
    }
    return {};
}

JaraStefan jara_stefan(const GaloisSetup& s, int n) {
    std::string why = hopf_ideal_failure(s.c);
    if (!why.empty()) throw NotHopfIdeal(s.name + ": " + why);
    const HopfAlgebra& h = s.h;
    const QuotientModuleCoalgebra& c = s.c;
    Index d = h.dim();

    // [ad H]_B = H / span{hb − bh}
    std::vector<SVec> comm;
    for (const SVec& bv : s.b.basis())
        for (Index i = 0; i < d; ++i) comm.push_back(h.mul(h.basis_vector(i), bv) - h.mul(bv, h.basis_vector(i)));
    SubquotientSpace adb = quotient_by(d, comm, h.field());
    Index q = adb.dim();
    SaydModule ad = ad_module(h);
    SlotMap qproj = SlotMap::from_matrix(adb.projection);
    for (Index p = 0; p < d; ++p)
        for (const SVec& r : comm) {
            Tensor t = Tensor::basis({d}, {p}, h.one_scalar()).outer(Tensor::from_svec({d}, r)).apply(0, ad.action);
            if (!t.apply(0, qproj).is_zero()) throw DescentError("ad action does not descend to [ad H]_B");
        }
    SlotMap qaction = SlotMap::from_function({d, q}, {q}, [&](Index idx) {
        Index p = idx / q, j = idx % q;
        return Tensor::basis({d}, {p}, h.one_scalar())
            .outer(Tensor::from_svec({d}, adb.lift(SVec::unit(j, h.one_scalar()))))
            .apply(0, ad.action)
            .apply(0, qproj)
            .pack();
    });

    JaraStefan out;
    out.target = coalgebra_tensor_module(c, q, qaction, n);
    out.report = Report("Jara–Ştefan comparison " + s.name + " n=" + std::to_string(n));
    TensorSpace rel = balanced_power(s.b, static_cast<std::size_t>(n) + 1, true);
    Formula fbar = [&h, &c, &qproj, n](const Digits& x) {
        Tensor t = phi_ambient(h, x);
        for (int k = 0; k <= n; ++k) t = t.apply(static_cast<std::size_t>(k), c.projection());
        return t.apply(static_cast<std::size_t>(n) + 1, qproj);
    };
    out.phi_bar = descend(fbar, rel, out.target, "φ̄ on degree " + std::to_string(n));

    TensorSpace src = coalgebra_tensor_module(c, d, ad.action, n);
    std::vector<Index> sdims = src.dims;
    Formula ident = [&qproj, sdims, n, &h](const Digits& x) {
        return Tensor::basis(sdims, x, h.one_scalar()).apply(static_cast<std::size_t>(n) + 1, qproj);
    };
    out.identification = descend(ident, src, out.target, "identification on degree " + std::to_string(n));

    Index sd = src.dim(), td = out.target.dim();
    out.report.check("identification is bijective", sd == td && rank(out.identification) == td,
                     "dims " + std::to_string(sd) + " → " + std::to_string(td));
    SparseMatrix phi_n = phi_map(s, relative_side(s, n), coalgebra_side(s, n)).components[n];
    out.report.check("identification ∘ φ = φ̄", out.identification * phi_n == out.phi_bar);
    out.report.check("φ̄ is bijective", rel.dim() == td && rank(out.phi_bar) == td);
    return out;
}

}  // namespace hopfcyc
