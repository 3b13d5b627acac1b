#include "hopfcyc/galois.hpp"

namespace hopfcyc {

namespace {

std::vector<SVec> columns(const SparseMatrix& m) {
    std::vector<SVec> out;
    out.reserve(m.cols());
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
    return out;
}

Index power(Index base, std::size_t e) {
    Index r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

ComoduleSubalgebra ComoduleSubalgebra::generate(const HopfAlgebra& h, const std::vector<SVec>& gens) {
    Index d = h.dim();
    std::vector<SVec> vecs{h.one()};
    vecs.insert(vecs.end(), gens.begin(), gens.end());
    SubquotientSpace sp = span_subspace(d, vecs);
    for (;;) {
        auto basis = columns(sp.section);
        std::vector<SVec> more = basis;
        for (const auto& x : basis)
            for (const auto& y : basis) more.push_back(h.mul(x, y));
        SubquotientSpace next = span_subspace(d, more);
        if (next.dim() == sp.dim()) break;
        sp = std::move(next);
    }
    ComoduleSubalgebra b;
    b.h_ = h;
    b.space_ = sp;
    Index k = sp.dim();
    b.incl_ = SlotMap::from_matrix(sp.section);
    SlotMap proj = SlotMap::from_matrix(sp.projection);
    auto basis = columns(sp.section);
    b.mult_ = SlotMap::from_function({k, k}, {k}, [&](Index ij) {
        return sp.project(h.mul(basis[ij / k], basis[ij % k]));
    });
    b.coact_.in_dims = {k};
    b.coact_.out_dims = {d, k};
    for (Index i = 0; i < k; ++i) {
        Tensor t = Tensor::from_svec({d}, basis[i]).apply(0, h.comult_map());
        Tensor u = t.apply(1, proj);
        if (u.apply(1, b.incl_).pack() != t.pack())
            throw HopfError("subalgebra of " + h.name() + " is not a left coideal: Δ(b) ∉ H⊗B");
        b.coact_.table.push_back(u.pack());
    }
    return b;
}

std::vector<SVec> ComoduleSubalgebra::basis() const { return columns(space_.section); }

std::vector<SVec> ComoduleSubalgebra::augmentation_basis() const {
    auto bs = basis();
    SparseMatrix eps(1, dim());
    for (Index i = 0; i < dim(); ++i) {
        SVec v;
        v.push_back(0, h_.counit(bs[i]));
        eps.set_col(i, v);
    }
    SubquotientSpace ker = kernel(eps);
    std::vector<SVec> out;
    for (Index j = 0; j < ker.dim(); ++j) out.push_back(space_.lift(ker.section.col(j)));
    return out;
}

SVec ComoduleSubalgebra::one() const { return space_.project(h_.one()); }

QuotientModuleCoalgebra QuotientModuleCoalgebra::from_generators(const HopfAlgebra& h, const std::vector<SVec>& gens) {
    Index d = h.dim();
    std::vector<SVec> span;
    for (const auto& g : gens)
        for (Index j = 0; j < d; ++j) span.push_back(h.mul(g, h.basis_vector(j)));
    QuotientModuleCoalgebra c;
    c.h_ = h;
    c.ideal_ = span_subspace(d, span);
    auto ib = columns(c.ideal_.section);
    c.quotient_ = quotient_by(d, ib, h.field());
    Index k = c.quotient_.dim();
    c.proj_ = SlotMap::from_matrix(c.quotient_.projection);
    c.lift_ = SlotMap::from_matrix(c.quotient_.section);
    for (const auto& v : ib)
        if (!h.counit(v).is_zero()) throw HopfError("ideal of " + h.name() + " is not a coideal: ε(I) ≠ 0");
    c.counit_.in_dims = {k};
    for (Index i = 0; i < k; ++i) {
        SVec v;
        v.push_back(0, h.counit(c.quotient_.section.col(i)));
        c.counit_.table.push_back(v);
    }
    TensorSpace dom{{d}, c.quotient_};
    TensorSpace cod = TensorSpace::whole({k, k}, h.field());
    Formula delta = [&](const Digits& x) {
        return Tensor::basis({d}, x, h.one_scalar()).apply(0, h.comult_map()).apply(0, c.proj_).apply(1, c.proj_);
    };
    try {
        c.comult_ = SlotMap{{k}, {k, k}, columns(descend(delta, dom, cod, "coproduct of H/I"))};
    } catch (const DescentError&) {
        throw HopfError("ideal of " + h.name() + " is not a coideal: Δ(I) ⊄ I⊗H + H⊗I");
    }
    Formula act = [&](const Digits& x) {
        Tensor t = Tensor::basis({d, d}, x, h.one_scalar());
        return t.apply(0, h.mult_map()).apply(0, c.proj_);
    };
    TensorSpace cspace = TensorSpace::whole({k}, h.field());
    check_lift_independence(act, {d, d}, {0}, ib, cspace, "right action on H/I");
    c.action_ = SlotMap::from_function({k, d}, {k}, [&](Index ij) {
        return through_lifts(act, {d, d}, {0}, c.lift_, h.one_scalar())(Digits{ij / d, ij % d}).pack();
    });
    return c;
}

std::vector<SVec> QuotientModuleCoalgebra::ideal_basis() const { return columns(ideal_.section); }

SVec QuotientModuleCoalgebra::one() const { return quotient_.project(h_.one()); }

std::vector<std::string> QuotientModuleCoalgebra::basis_names() const {
    std::vector<std::string> out;
    for (Index k = 0; k < dim(); ++k) out.push_back("[" + h_.basis_names()[quotient_.section.col(k).entries()[0].first] + "]");
    return out;
}

QuotientModuleCoalgebra takeuchi_B_to_I(const ComoduleSubalgebra& b) {
    return QuotientModuleCoalgebra::from_generators(b.parent(), b.augmentation_basis());
}

ComoduleSubalgebra coinvariants(const QuotientModuleCoalgebra& c) {
    const HopfAlgebra& h = c.parent();
    Index d = h.dim(), k = c.dim();
    SVec one_bar = c.one();
    SparseMatrix m(d * k, d);
    for (Index j = 0; j < d; ++j) {
        SVec rho = Tensor::from_svec({d}, h.basis_vector(j)).apply(0, h.comult_map()).apply(1, c.projection()).pack();
        SVec triv = Tensor::basis({d}, {j}, h.one_scalar()).insert(1, k, one_bar).pack();
        m.set_col(j, rho - triv);
    }
    SubquotientSpace ker = kernel(m);
    ComoduleSubalgebra b = ComoduleSubalgebra::generate(h, columns(ker.section));
    if (b.dim() != ker.dim()) throw HopfError("coinvariants of " + h.name() + "/I are not closed under products");
    return b;
}

bool same_subspace(const SubquotientSpace& a, const SubquotientSpace& b) {
    if (a.dim() != b.dim() || a.ambient_dim != b.ambient_dim) return false;
    for (Index j = 0; j < a.dim(); ++j)
        if (!b.contains(a.section.col(j))) return false;
    return true;
}

TensorSpace balanced_power(const ComoduleSubalgebra& b, std::size_t factors, bool cyclic) {
    const HopfAlgebra& h = b.parent();
    Index d = h.dim();
    TensorSpace out;
    out.dims.assign(factors, d);
    Index n = power(d, factors);
    std::vector<Index> stride(factors);
    for (std::size_t s = 0; s < factors; ++s) stride[s] = power(d, factors - 1 - s);
    auto bs = b.basis();
    std::vector<std::vector<SVec>> right(bs.size()), left(bs.size());
    for (std::size_t k = 0; k < bs.size(); ++k)
        for (Index x = 0; x < d; ++x) {
            right[k].push_back(h.mul(h.basis_vector(x), bs[k]));
            left[k].push_back(h.mul(bs[k], h.basis_vector(x)));
        }
    std::vector<SVec> rel;
    auto relation = [&](Index idx, std::size_t s, std::size_t t, std::size_t k) {
        Index xs = (idx / stride[s]) % d, xt = (idx / stride[t]) % d;
        Index base_s = idx - xs * stride[s], base_t = idx - xt * stride[t];
        std::vector<SVec::Entry> e;
        for (const auto& [y, c] : right[k][xs].entries()) e.emplace_back(base_s + y * stride[s], c);
        for (const auto& [y, c] : left[k][xt].entries()) e.emplace_back(base_t + y * stride[t], -c);
        SVec v = SVec::from_pairs(std::move(e));
        if (!v.empty()) rel.push_back(std::move(v));
    };
    for (Index idx = 0; idx < n; ++idx)
        for (std::size_t k = 0; k < bs.size(); ++k) {
            for (std::size_t s = 0; s + 1 < factors; ++s) relation(idx, s, s + 1, k);
            // x⁰ ⊗ ... ⊗ xⁿb − bx⁰ ⊗ ... ⊗ xⁿ
            if (cyclic) relation(idx, factors - 1, 0, k);
        }
    out.space = quotient_by(n, rel, h.field());
    return out;
}

namespace {

std::vector<SVec> ideal_or_empty(const QuotientModuleCoalgebra& c) { return c.ideal_basis(); }

// Input h⁰ ⊗ ... ⊗ hⁿ; output slot 0: h⁰h¹₍₁₎⋯hⁿ₍₁₎, slot k: π(hᵏ₍ₖ₊₁₎⋯hⁿ₍ₖ₊₁₎).
Formula can_formula(const HopfAlgebra& h, const QuotientModuleCoalgebra& c, std::size_t n) {
    return [&h, &c, n](const Digits& x) {
        Tensor acc = Tensor::basis({h.dim()}, {x[0]}, h.one_scalar()).outer(h.ones(n));
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<std::size_t> target(j + 1);
            for (std::size_t k = 0; k <= j; ++k) target[k] = k;
            acc = h.multiply_into(acc, h.comult_power(h.basis_vector(x[j]), j + 1), target);
        }
        for (std::size_t k = 1; k <= n; ++k) acc = acc.apply(k, c.projection());
        return acc;
    };
}

// Input h ⊗ c¹ ⊗ ... ⊗ cⁿ (lifted); output hS(c¹₍₁₎) ⊗ c¹₍₂₎S(c²₍₁₎) ⊗ ... ⊗ cⁿ₍₂₎.
Formula can_inv_formula(const HopfAlgebra& h, std::size_t n) {
    return [&h, n](const Digits& x) {
        Index d = h.dim();
        Tensor t = Tensor::basis({d}, {x[0]}, h.one_scalar());
        for (std::size_t k = 1; k <= n; ++k) t = t.outer(h.comult_power(h.basis_vector(x[k]), 2));
        for (std::size_t k = 1; k <= n; ++k) t = t.apply(2 * k - 1, h.antipode_map());
        std::vector<std::vector<std::size_t>> prods(n + 1);
        for (std::size_t k = 0; k < n; ++k) prods[k] = {2 * k, 2 * k + 1};
        prods[n] = {2 * n};
        return h.assemble(t, prods);
    };
}

bool is_identity(const SparseMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (Index j = 0; j < m.cols(); ++j) {
        const SVec& c = m.col(j);
        if (c.size() != 1 || c.entries()[0].first != j || !c.entries()[0].second.is_one()) return false;
    }
    return true;
}

}  // namespace

CanonicalMaps canonical_maps(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c, std::size_t n) {
    const HopfAlgebra& h = b.parent();
    Index d = h.dim(), k = c.dim();
    CanonicalMaps out;
    out.domain = balanced_power(b, n + 1, false);
    std::vector<Index> tdims{d};
    for (std::size_t i = 0; i < n; ++i) tdims.push_back(k);
    out.target = TensorSpace::whole(tdims, h.field());
    try {
        out.can = descend(can_formula(h, c, n), out.domain, out.target, "can");
    } catch (const DescentError& e) {
        out.failure = e.what();
        return out;
    }
    std::vector<std::size_t> slots;
    for (std::size_t i = 1; i <= n; ++i) slots.push_back(i);
    Formula inv = can_inv_formula(h, n);
    try {
        check_lift_independence(inv, std::vector<Index>(n + 1, d), slots, ideal_or_empty(c), out.domain, "can⁻¹");
        out.can_inv = descend(through_lifts(inv, std::vector<Index>(n + 1, d), slots, c.lift(), h.one_scalar()),
                              out.target, out.domain, "can⁻¹");
    } catch (const DescentError& e) {
        out.failure = e.what();
        return out;
    }
    if (out.domain.dim() != out.target.dim()) {
        out.failure = "dimensions differ: " + std::to_string(out.domain.dim()) + " vs " + std::to_string(out.target.dim());
        return out;
    }
    out.bijective = is_identity(out.can * *out.can_inv) && is_identity(*out.can_inv * out.can);
    if (!out.bijective) out.failure = "can and can⁻¹ are not mutually inverse";
    return out;
}

TranslationMap translation_map(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c) {
    const HopfAlgebra& h = b.parent();
    Index d = h.dim(), k = c.dim();
    TensorSpace cod = balanced_power(b, 2, false);
    Formula f = [&h](const Digits& x) {
        return h.comult_power(h.basis_vector(x[0]), 2).apply(0, h.antipode_map());
    };
    check_lift_independence(f, {d}, {0}, c.ideal_basis(), cod, "translation map");
    TranslationMap out;
    out.tau = descend(through_lifts(f, {d}, {0}, c.lift(), h.one_scalar()), TensorSpace::whole({k}, h.field()), cod,
                      "translation map");
    CanonicalMaps cm = canonical_maps(b, c, 1);
    if (cm.failure.empty() || cm.bijective) {
        SparseMatrix comp = cm.can * out.tau;
        bool ok = true;
        for (Index j = 0; j < k && ok; ++j) {
            SVec expect = Tensor::from_svec({d}, h.one()).insert(1, k, SVec::unit(j, h.one_scalar())).pack();
            ok = comp.col(j) == expect;
        }
        out.inverse_ok = ok;
    }
    return out;
}

Report galois_criterion(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c) {
    Report r("galois " + b.parent().name());
    QuotientModuleCoalgebra bplus = takeuchi_B_to_I(b);
    bool criterion = same_subspace(c.ideal(), bplus.ideal());
    r.table("dim I", {c.ideal_dim()});
    r.table("dim B+H", {bplus.ideal_dim()});
    CanonicalMaps cm = canonical_maps(b, c, 1);
    r.table("dim H⊗_B H", {cm.domain.dim()});
    r.table("dim H⊗C", {cm.target.dim()});
    if (criterion)
        r.pass("I = B+H");
    else
        r.fail("I = B+H", "dim I = " + std::to_string(c.ideal_dim()) + ", dim B+H = " + std::to_string(bplus.ideal_dim()));
    if (cm.bijective)
        r.pass("can1 bijective");
    else
        r.fail("can1 bijective", cm.failure);
    r.check("criterion agrees with can1", criterion == cm.bijective, "I = B+H and bijectivity of can1 disagree");
    return r;
}

CocanonicalMap cocanonical_map(const ComoduleSubalgebra& b, const QuotientModuleCoalgebra& c) {
    const HopfAlgebra& h = b.parent();
    Index d = h.dim(), kb = b.dim();
    SparseMatrix eq(d * c.dim() * d, d * d);
    for (Index j = 0; j < d * d; ++j) {
        Tensor t = Tensor::basis({d, d}, {j / d, j % d}, h.one_scalar());
        SVec lhs = t.apply(0, h.comult_map()).apply(1, c.projection()).pack();
        SVec rhs = t.apply(1, h.comult_map()).apply(1, c.projection()).pack();
        eq.set_col(j, lhs - rhs);
    }
    CocanonicalMap out;
    out.cotensor = TensorSpace{{d, d}, kernel(eq)};
    Formula f = [&h, &b](const Digits& x) {
        Tensor t = Tensor::basis({b.dim()}, {x[0]}, h.one_scalar()).apply(0, b.inclusion());
        t = t.outer(h.comult_power(h.basis_vector(x[1]), 2));
        return h.mul_slots(t, 0, 1);
    };
    out.cocan = descend(f, TensorSpace::whole({kb, d}, h.field()), out.cotensor, "cocanonical map");
    out.bijective = out.cocan.rows() == out.cocan.cols() && rank(out.cocan) == out.cocan.cols();
    return out;
}

GaloisSetup make_setup(const HopfAlgebra& h, const ComoduleSubalgebra& b) {
    return GaloisSetup{h.name() + "/" + std::to_string(b.dim()), h, b, takeuchi_B_to_I(b)};
}

GaloisSetup builtin_setup(const std::string& name, const Field& f) {
    auto slash = name.find('/');
    if (slash == std::string::npos) throw HopfError("setup name must look like H/B, got '" + name + "'");
    std::string hn = name.substr(0, slash), bn = name.substr(slash + 1);
    HopfAlgebra h = builtin_hopf(hn, f);
    auto elem = [&](const std::string& g) {
        const auto& names = h.basis_names();
        for (Index i = 0; i < h.dim(); ++i)
            if (names[i] == g) return h.basis_vector(i);
        throw HopfError("no basis element '" + g + "' in " + hn);
    };
    std::vector<SVec> gens;
    if (hn == "OS3" && bn == "C2") {
        // C = O(C2) = O(S3)/I with I the functions vanishing on {e, (12)}; B its coinvariants.
        std::vector<SVec> igens;
        for (const char* g : {"d_(13)", "d_(23)", "d_(123)", "d_(132)"}) igens.push_back(elem(g));
        QuotientModuleCoalgebra c = QuotientModuleCoalgebra::from_generators(h, igens);
        ComoduleSubalgebra b = coinvariants(c);
        return GaloisSetup{name, h, b, c};
    }
    if (bn == "k") {
    } else if (hn == "H4" && bn == "x") {
        gens.push_back(elem("x"));
    } else if (bn == "kC2" && (hn == "kC2" || hn == "kS3")) {
        gens.push_back(elem(hn == "kC2" ? "a" : "(12)"));
    } else if (bn == "kC3" && hn == "kS3") {
        gens.push_back(elem("(123)"));
    } else {
        throw HopfError("unknown built-in setup '" + name + "'");
    }
    ComoduleSubalgebra b = ComoduleSubalgebra::generate(h, gens);
    GaloisSetup s = make_setup(h, b);
    s.name = name;
    return s;
}

std::vector<std::string> builtin_setup_names() {
    return {"kC2/k", "kC2/kC2", "kS3/k", "kS3/kC2", "kS3/kC3", "H4/k", "H4/x", "OS3/C2"};
}

}  // namespace hopfcyc
