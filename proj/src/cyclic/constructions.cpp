#include "hopfcyc/cyclic.hpp"

namespace hopfcyc {

namespace {

std::vector<Index> repeat(Index d, std::size_t k) { return std::vector<Index>(k, d); }

std::vector<Index> concat(std::vector<Index> a, const std::vector<Index>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct Family {
    std::function<TensorSpace(int)> space;
    std::function<Formula(int, int)> face;
    std::function<Formula(int, int)> degen;
    std::function<Formula(int)> cyclic;
};

CyclicModule build_cyclic(std::string name, const Field& f, int n_max, const Family& fam) {
    if (n_max < 0) throw DegreeError("n_max must be nonnegative");
    CyclicModule x;
    x.name = std::move(name);
    x.field = f;
    x.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) x.spaces.push_back(fam.space(n));
    x.faces.resize(static_cast<std::size_t>(n_max) + 1);
    x.degens.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const TensorSpace& sp = x.spaces[static_cast<std::size_t>(n)];
        std::string tag = x.name + " n=" + std::to_string(n);
        for (int i = 0; n >= 1 && i <= n; ++i)
            x.faces[n].push_back(descend(fam.face(n, i), sp, x.spaces[n - 1], tag + " d" + std::to_string(i)));
        for (int j = 0; n < n_max && j <= n; ++j)
            x.degens[n].push_back(descend(fam.degen(n, j), sp, x.spaces[n + 1], tag + " s" + std::to_string(j)));
        x.cyclic.push_back(descend(fam.cyclic(n), sp, sp, tag + " t"));
    }
    return x;
}

struct CoFamily {
    std::function<TensorSpace(int)> space;
    std::function<Formula(int, int)> coface;
    std::function<Formula(int, int)> codegen;
    std::function<Formula(int)> cocyclic;
};

CocyclicModule build_cocyclic(std::string name, const Field& f, int n_max, const CoFamily& fam) {
    if (n_max < 0) throw DegreeError("n_max must be nonnegative");
    CocyclicModule x;
    x.name = std::move(name);
    x.field = f;
    x.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) x.spaces.push_back(fam.space(n));
    x.cofaces.resize(static_cast<std::size_t>(n_max) + 1);
    x.codegens.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const TensorSpace& sp = x.spaces[static_cast<std::size_t>(n)];
        std::string tag = x.name + " n=" + std::to_string(n);
        for (int i = 0; n < n_max && i <= n + 1; ++i)
            x.cofaces[n].push_back(descend(fam.coface(n, i), sp, x.spaces[n + 1], tag + " δ" + std::to_string(i)));
        for (int j = 0; n >= 1 && j <= n - 1; ++j)
            x.codegens[n].push_back(descend(fam.codegen(n, j), sp, x.spaces[n - 1], tag + " σ" + std::to_string(j)));
        x.cocyclic.push_back(descend(fam.cocyclic(n), sp, sp, tag + " τ"));
    }
    return x;
}

// (D^{□_C n+1})^C inside D^{⊗n+1}.
TensorSpace cotensor_invariants(const QuotientModuleCoalgebra& c, int n) {
    const HopfAlgebra& h = c.parent();
    Index d = h.dim();
    std::size_t k = static_cast<std::size_t>(n) + 1;
    auto dims = repeat(d, k);
    Index amb = 1;
    for (std::size_t i = 0; i < k; ++i) amb *= d;
    std::vector<SparseMatrix> blocks;
    auto add_block = [&](const std::function<Tensor(const Tensor&)>& lhs, const std::function<Tensor(const Tensor&)>& rhs) {
        std::vector<SVec> cols(amb);
        Index rows = 0;
        for (Index j = 0; j < amb; ++j) {
            Digits x(k);
            Index r = j;
            for (std::size_t s = k; s-- > 0;) {
                x[s] = r % d;
                r /= d;
            }
            Tensor t = Tensor::basis(dims, x, h.one_scalar());
            Tensor a = lhs(t), b = rhs(t);
            if (rows == 0) {
                rows = 1;
                for (Index dd : a.dims()) rows *= dd;
            }
            cols[j] = a.pack() - b.pack();
        }
        blocks.emplace_back(rows, std::move(cols));
    };
    for (std::size_t i = 0; i + 1 < k; ++i)
        add_block([&](const Tensor& t) { return t.apply(i, h.comult_map()).apply(i + 1, c.projection()); },
                  [&](const Tensor& t) { return t.apply(i + 1, h.comult_map()).apply(i + 1, c.projection()); });
    // right coaction from the last factor equals the left coaction from the first
    add_block([&](const Tensor& t) { return t.apply(k - 1, h.comult_map()).apply(k, c.projection()); },
              [&](const Tensor& t) { return t.apply(0, h.comult_map()).move_slot(0, k).apply(k, c.projection()); });
    SparseMatrix m = vstack(blocks);
    return TensorSpace{dims, kernel(m)};
}

// M □_H B^{⊗n+1} inside M ⊗ B^{⊗n+1}.
TensorSpace module_cotensor(const ComoduleSubalgebra& b, const SaydModule& m, int n) {
    const HopfAlgebra& h = b.parent();
    std::size_t p = static_cast<std::size_t>(n) + 1;
    auto dims = concat({m.dim}, repeat(b.dim(), p));
    Index amb = 1;
    for (Index dd : dims) amb *= dd;
    Index rows = amb * h.dim();
    std::vector<SVec> cols;
    cols.reserve(amb);
    for (const Digits& x : all_digits(dims)) {
        Tensor t = Tensor::basis(dims, x, h.one_scalar());
        SVec lhs = t.apply(0, m.coaction).pack();
        Tensor u = t.apply(1, b.coaction());  // [m, h, x⁰', x¹, ...]
        for (std::size_t s = 1; s < p; ++s) u = h.mul_slots(u.apply(s + 2, b.coaction()), 1, s + 2);
        cols.push_back(lhs - u.pack());
    }
    return TensorSpace{dims, kernel(SparseMatrix(rows, std::move(cols)))};
}

}  // namespace

TensorSpace coalgebra_tensor_module(const QuotientModuleCoalgebra& c, Index mdim, const SlotMap& action, int n) {
    const HopfAlgebra& h = c.parent();
    Index d = h.dim(), k = c.dim();
    std::size_t p = static_cast<std::size_t>(n) + 1;
    auto dims = concat(repeat(k, p), {mdim});
    std::vector<SVec> rel;
    for (const Digits& x : all_digits(dims))
        for (Index a = 0; a < d; ++a) {
            Digits cx(x.begin(), x.end() - 1);
            Tensor lhs = Tensor::basis(repeat(k, p), cx, h.one_scalar()).outer(h.comult_power(h.basis_vector(a), p));
            lhs = lhs.insert(2 * p, mdim, SVec::unit(x.back(), h.one_scalar()));
            for (std::size_t s = 0; s < p; ++s) lhs = lhs.move_slot(p, s + 1).apply(s, c.action());
            Tensor rhs = Tensor::basis(repeat(k, p), cx, h.one_scalar())
                             .outer(Tensor::basis({d, mdim}, {a, x.back()}, h.one_scalar()).apply(0, action));
            SVec r = lhs.pack() - rhs.pack();
            if (!r.empty()) rel.push_back(std::move(r));
        }
    Index amb = 1;
    for (Index dd : dims) amb *= dd;
    return TensorSpace{dims, quotient_by(amb, rel, h.field())};
}

std::vector<std::int64_t> CyclicModule::dims() const {
    std::vector<std::int64_t> d;
    for (const auto& s : spaces) d.push_back(s.dim());
    return d;
}

std::vector<std::int64_t> CocyclicModule::dims() const {
    std::vector<std::int64_t> d;
    for (const auto& s : spaces) d.push_back(s.dim());
    return d;
}

CyclicModule relative_cyclic(const ComoduleSubalgebra& b, int n_max) {
    const HopfAlgebra& h = b.parent();
    Index d = h.dim();
    Scalar one = h.one_scalar();
    auto base = [d, one](int n, const Digits& x) { return Tensor::basis(repeat(d, n + 1), x, one); };
    Family fam;
    fam.space = [&b](int n) { return balanced_power(b, static_cast<std::size_t>(n) + 1, true); };
    fam.face = [&h, base](int n, int i) -> Formula {
        return [&h, base, n, i](const Digits& x) {
            Tensor t = base(n, x);
            if (i < n) return t.apply(i, h.mult_map());
            return t.move_slot(n, 0).apply(0, h.mult_map());
        };
    };
    fam.degen = [&h, d, base](int n, int j) -> Formula {
        return [&h, d, base, n, j](const Digits& x) { return base(n, x).insert(j + 1, d, h.one()); };
    };
    fam.cyclic = [base](int n) -> Formula {
        return [base, n](const Digits& x) { return base(n, x).move_slot(n, 0); };
    };
    return build_cyclic("C(" + h.name() + "|B)", h.field(), n_max, fam);
}

CyclicModule coext_cyclic(const QuotientModuleCoalgebra& c, int n_max) {
    const HopfAlgebra& h = c.parent();
    Index d = h.dim();
    Scalar one = h.one_scalar();
    auto base = [d, one](int n, const Digits& x) { return Tensor::basis(repeat(d, n + 1), x, one); };
    Family fam;
    fam.space = [&c](int n) { return cotensor_invariants(c, n); };
    fam.face = [&h, base](int n, int i) -> Formula {
        return [&h, base, n, i](const Digits& x) { return base(n, x).apply(i, h.counit_map()); };
    };
    fam.degen = [&h, base](int n, int j) -> Formula {
        return [&h, base, n, j](const Digits& x) { return base(n, x).apply(j, h.comult_map()); };
    };
    fam.cyclic = [base](int n) -> Formula {
        return [base, n](const Digits& x) { return base(n, x).move_slot(n, 0); };
    };
    return build_cyclic("C(" + h.name() + "|C)", h.field(), n_max, fam);
}

CocyclicModule relative_cocyclic_coext(const QuotientModuleCoalgebra& c, int n_max) {
    const HopfAlgebra& h = c.parent();
    Index d = h.dim();
    Scalar one = h.one_scalar();
    auto base = [d, one](int n, const Digits& x) { return Tensor::basis(repeat(d, n + 1), x, one); };
    CoFamily fam;
    fam.space = [&c](int n) { return cotensor_invariants(c, n); };
    fam.coface = [&h, base](int n, int i) -> Formula {
        return [&h, base, n, i](const Digits& x) {
            if (i <= n) return base(n, x).apply(i, h.comult_map());
            return base(n, x).apply(0, h.comult_map()).move_slot(0, n + 1);
        };
    };
    fam.codegen = [&h, base](int n, int j) -> Formula {
        return [&h, base, n, j](const Digits& x) { return base(n, x).apply(j + 1, h.counit_map()); };
    };
    fam.cocyclic = [base](int n) -> Formula {
        return [base, n](const Digits& x) { return base(n, x).move_slot(0, n); };
    };
    return build_cocyclic("C^(" + h.name() + "|C)", h.field(), n_max, fam);
}

CyclicModule hopf_cyclic_coalgebra(const QuotientModuleCoalgebra& c, const SaydModule& m, int n_max) {
    if (m.chirality != Chirality::LeftRight) throw std::invalid_argument("coefficients must be a left-right SAYD module");
    const HopfAlgebra& h = c.parent();
    Index k = c.dim();
    Scalar one = h.one_scalar();
    auto base = [k, md = m.dim, one](int n, const Digits& x) {
        return Tensor::basis(concat(repeat(k, n + 1), {md}), x, one);
    };
    Family fam;
    fam.space = [&c, &m](int n) { return coalgebra_tensor_module(c, m.dim, m.action, n); };
    fam.face = [&c, base](int n, int i) -> Formula {
        return [&c, base, n, i](const Digits& x) { return base(n, x).apply(i, c.counit_map()); };
    };
    fam.degen = [&c, base](int n, int j) -> Formula {
        return [&c, base, n, j](const Digits& x) { return base(n, x).apply(j, c.comult_map()); };
    };
    // [cⁿ·m₍₁₎, c⁰, ..., cⁿ⁻¹, m₍₀₎]
    fam.cyclic = [&c, &m, base](int n) -> Formula {
        return [&c, &m, base, n](const Digits& x) {
            Tensor t = base(n, x).apply(n + 1, m.coaction);  // [c⁰..cⁿ, m₀, m₁]
            t = t.move_slot(n + 2, n + 1).apply(n, c.action());
            return t.move_slot(n, 0);
        };
    };
    return build_cyclic("C(" + h.name() + "/I," + m.name + ")", h.field(), n_max, fam);
}

CocyclicModule hopf_cocyclic_coalgebra(const QuotientModuleCoalgebra& c, const SaydModule& m, int n_max) {
    if (m.chirality != Chirality::LeftRight) throw std::invalid_argument("coefficients must be a left-right SAYD module");
    const HopfAlgebra& h = c.parent();
    Index k = c.dim();
    Scalar one = h.one_scalar();
    auto base = [k, md = m.dim, one](int n, const Digits& x) {
        return Tensor::basis(concat(repeat(k, n + 1), {md}), x, one);
    };
    CoFamily fam;
    fam.space = [&c, &m](int n) { return coalgebra_tensor_module(c, m.dim, m.action, n); };
    fam.coface = [&c, &m, &h, base](int n, int i) -> Formula {
        return [&c, &m, &h, base, n, i](const Digits& x) {
            if (i <= n) return base(n, x).apply(i, c.comult_map());
            // [c⁰₍₂₎, c¹, ..., cⁿ, c⁰₍₁₎·S⁻¹(m₍₁₎), m₍₀₎]
            Tensor t = base(n, x).apply(0, c.comult_map()).apply(n + 2, m.coaction);
            t = t.apply(n + 3, h.antipode_inv_map());
            t = t.move_slot(0, n + 1).move_slot(n + 3, n + 2);
            return t.apply(n + 1, c.action());
        };
    };
    fam.codegen = [&c, base](int n, int j) -> Formula {
        return [&c, base, n, j](const Digits& x) { return base(n, x).apply(j + 1, c.counit_map()); };
    };
    // [c¹, ..., cⁿ, c⁰·S⁻¹(m₍₁₎), m₍₀₎]
    fam.cocyclic = [&c, &m, &h, base](int n) -> Formula {
        return [&c, &m, &h, base, n](const Digits& x) {
            Tensor t = base(n, x).apply(n + 1, m.coaction).apply(n + 2, h.antipode_inv_map());
            t = t.move_slot(0, n).move_slot(n + 2, n + 1);
            return t.apply(n, c.action());
        };
    };
    return build_cocyclic("C^(" + h.name() + "/I," + m.name + ")", h.field(), n_max, fam);
}

CyclicModule hopf_cyclic_comodule_algebra(const ComoduleSubalgebra& b, const SaydModule& m, int n_max) {
    if (m.chirality != Chirality::LeftRight) throw std::invalid_argument("coefficients must be a left-right SAYD module");
    const HopfAlgebra& h = b.parent();
    Index kb = b.dim();
    Scalar one = h.one_scalar();
    auto base = [kb, md = m.dim, one](int n, const Digits& x) {
        return Tensor::basis(concat({md}, repeat(kb, n + 1)), x, one);
    };
    // [bⁿ₍₋₁₎·m, bⁿ₍₀₎, b⁰, ..., bⁿ⁻¹]
    auto rotate = [&b, &m, base](int n, const Digits& x) {
        Tensor t = base(n, x).apply(n + 1, b.coaction());  // [m, b⁰..bⁿ⁻¹, h, bⁿ₀]
        t = t.move_slot(n + 1, 0).apply(0, m.action);
        return t.move_slot(n + 1, 1);
    };
    Family fam;
    fam.space = [&b, &m](int n) { return module_cotensor(b, m, n); };
    fam.face = [&b, base, rotate](int n, int i) -> Formula {
        return [&b, base, rotate, n, i](const Digits& x) {
            if (i < n) return base(n, x).apply(i + 1, b.mult_map());
            return rotate(n, x).apply(1, b.mult_map());
        };
    };
    fam.degen = [&b, kb, base](int n, int j) -> Formula {
        return [&b, kb, base, n, j](const Digits& x) { return base(n, x).insert(j + 2, kb, b.one()); };
    };
    fam.cyclic = [rotate](int n) -> Formula {
        return [rotate, n](const Digits& x) { return rotate(n, x); };
    };
    return build_cyclic("C(B," + m.name + ")", h.field(), n_max, fam);
}

CyclicModule cyclic_dual(const CocyclicModule& x) {
    CyclicModule y;
    y.name = "dual " + x.name;
    y.field = x.field;
    y.n_max = x.n_max;
    y.spaces = x.spaces;
    y.faces.resize(static_cast<std::size_t>(x.n_max) + 1);
    y.degens.resize(static_cast<std::size_t>(x.n_max) + 1);
    for (int n = 0; n <= x.n_max; ++n) {
        for (int i = 0; n >= 1 && i <= n; ++i)
            y.faces[n].push_back(i == 0 ? x.codegens[n][n - 1] * x.cocyclic[n] : x.codegens[n][i - 1]);
        for (int j = 0; n < x.n_max && j <= n; ++j) y.degens[n].push_back(x.cofaces[n][j]);
        SparseMatrix inv = SparseMatrix::identity(x.dim(n), x.field);
        for (int k = 0; k < n; ++k) inv = inv * x.cocyclic[n];
        y.cyclic.push_back(inv);
    }
    return y;
}

}  // namespace hopfcyc
