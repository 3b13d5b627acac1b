#include "hopfcyc/hopf.hpp"

#include <sstream>

namespace hopfcyc {

namespace {

std::string fmt_vec(const HopfAlgebra& h, const SVec& v, const std::vector<Index>& dims) {
    std::ostringstream os;
    bool first = true;
    TensorIndex ti(dims);
    for (const auto& [i, s] : v.entries()) {
        if (!first) os << " + ";
        first = false;
        os << s << "*";
        auto d = ti.decode(i);
        for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "⊗" : "") << h.basis_names()[d[k]];
    }
    return first ? "0" : os.str();
}

}  // namespace

HopfAlgebra HopfAlgebra::build(HopfData data) {
    Index d = static_cast<Index>(data.basis.size());
    if (d == 0) throw HopfError("Hopf algebra must have positive dimension");
    if (data.mult.size() != static_cast<std::size_t>(d) * d) throw HopfError("multiplication table has wrong size");
    if (data.comult.size() != d) throw HopfError("comultiplication table has wrong size");
    if (data.counit.size() != d) throw HopfError("counit has wrong size");
    if (data.antipode.rows() != d || data.antipode.cols() != d) throw HopfError("antipode matrix has wrong shape");
    auto in_range = [](const SVec& v, Index n) { return v.empty() || v.entries().back().first < n; };
    for (const auto& v : data.mult)
        if (!in_range(v, d)) throw HopfError("multiplication coefficient index out of range");
    for (const auto& v : data.comult)
        if (!in_range(v, d * d)) throw HopfError("comultiplication coefficient index out of range");
    if (!in_range(data.unit, d)) throw HopfError("unit index out of range");

    HopfAlgebra h;
    auto maps = std::make_shared<Maps>();
    maps->mult = SlotMap{{d, d}, {d}, data.mult};
    maps->unit = SlotMap{{}, {d}, {data.unit}};
    maps->comult = SlotMap{{d}, {d, d}, data.comult};
    maps->counit.in_dims = {d};
    for (Index i = 0; i < d; ++i) {
        SVec v;
        v.push_back(0, data.counit[i]);
        maps->counit.table.push_back(v);
    }
    maps->antipode = SlotMap::from_matrix(data.antipode);
    if (rank(data.antipode) == d) {
        Preimage pre(data.antipode);
        SparseMatrix inv(d, d);
        for (Index i = 0; i < d; ++i) inv.set_col(i, *pre.solve(SVec::unit(i, data.field.one())));
        maps->antipode_inv = SlotMap::from_matrix(inv);
    }
    h.data_ = std::make_shared<const HopfData>(std::move(data));
    h.maps_ = std::move(maps);
    return h;
}

const SlotMap& HopfAlgebra::antipode_inv_map() const {
    if (!maps_->antipode_inv) throw HopfError(name() + ": antipode is not invertible");
    return *maps_->antipode_inv;
}

SVec HopfAlgebra::mul(const SVec& a, const SVec& b) const {
    std::vector<SVec::Entry> acc;
    for (const auto& [i, s] : a.entries())
        for (const auto& [j, t] : b.entries()) {
            Scalar st = s * t;
            for (const auto& [k, c] : data_->mult[i * dim() + j].entries()) acc.emplace_back(k, c * st);
        }
    return SVec::from_pairs(std::move(acc));
}

Scalar HopfAlgebra::counit(const SVec& a) const {
    Scalar r = field().zero();
    for (const auto& [i, s] : a.entries()) r += s * data_->counit[i];
    return r;
}

Tensor HopfAlgebra::comult_power(const SVec& a, std::size_t pieces) const {
    if (pieces == 0) {
        Tensor t(std::vector<Index>{});
        t.add(Digits{}, counit(a));
        return t;
    }
    Tensor t = Tensor::from_svec({dim()}, a);
    for (std::size_t k = 1; k < pieces; ++k) t = t.apply(0, comult_map());
    return t;
}

Tensor HopfAlgebra::mul_slots(const Tensor& t, std::size_t a, std::size_t b) const {
    if (a == b) throw std::invalid_argument("mul_slots needs two distinct slots");
    if (b > a) return t.move_slot(b, a + 1).apply(a, mult_map());
    return t.move_slot(b, a).apply(a - 1, mult_map());
}

Tensor HopfAlgebra::assemble(const Tensor& t, const std::vector<std::vector<std::size_t>>& products) const {
    Tensor out(std::vector<Index>(products.size(), dim()));
    std::vector<SVec> factors(products.size());
    for (const auto& term : t.terms()) {
        bool zero = false;
        for (std::size_t o = 0; o < products.size() && !zero; ++o) {
            SVec v = one();
            for (std::size_t s : products[o]) {
                if (t.dims()[s] != dim()) throw std::invalid_argument("assemble: slot is not an element of H");
                v = mul(v, basis_vector(term.d[s]));
                if (v.empty()) break;
            }
            zero = v.empty();
            factors[o] = std::move(v);
        }
        if (zero) continue;
        Tensor prod(std::vector<Index>{});
        prod.add(Digits{}, term.c);
        for (const auto& f : factors) prod = prod.outer(Tensor::from_svec({dim()}, f));
        out.add(prod, one_scalar());
    }
    out.canonicalize();
    return out;
}

Tensor HopfAlgebra::multiply_into(const Tensor& acc, const Tensor& f, const std::vector<std::size_t>& target,
                                  bool from_right) const {
    if (target.size() != f.slots()) throw std::invalid_argument("multiply_into: one target per factor slot");
    Index d = dim();
    Tensor out(acc.dims());
    std::vector<const SVec*> prods(target.size());
    for (const auto& a : acc.terms())
        for (const auto& b : f.terms()) {
            bool zero = false;
            for (std::size_t i = 0; i < target.size() && !zero; ++i) {
                Index x = a.d[target[i]], y = b.d[i];
                prods[i] = from_right ? &data_->mult[x * d + y] : &data_->mult[y * d + x];
                zero = prods[i]->empty();
            }
            if (zero) continue;
            Scalar c = a.c * b.c;
            // expand the product of the per-slot results
            std::vector<std::size_t> pos(target.size(), 0);
            for (;;) {
                Digits dd = a.d;
                Scalar cc = c;
                for (std::size_t i = 0; i < target.size(); ++i) {
                    const auto& e = prods[i]->entries()[pos[i]];
                    dd[target[i]] = e.first;
                    cc = cc * e.second;
                }
                out.add(std::move(dd), cc);
                std::size_t i = 0;
                while (i < target.size() && ++pos[i] == prods[i]->size()) pos[i++] = 0;
                if (i == target.size()) break;
            }
        }
    out.canonicalize();
    return out;
}

Tensor HopfAlgebra::ones(std::size_t k) const {
    Tensor t(std::vector<Index>{});
    t.add(Digits{}, one_scalar());
    for (std::size_t i = 0; i < k; ++i) t = t.outer(Tensor::from_svec({dim()}, one()));
    return t;
}

bool HopfAlgebra::is_commutative() const {
    for (Index i = 0; i < dim(); ++i)
        for (Index j = i + 1; j < dim(); ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

bool HopfAlgebra::is_cocommutative() const {
    for (Index k = 0; k < dim(); ++k) {
        Tensor t = comult_power(basis_vector(k), 2);
        if (t.pack() != t.permute({1, 0}).pack()) return false;
    }
    return true;
}

Report validate(const HopfAlgebra& h) {
    Report r("validate " + h.name());
    Index d = h.dim();
    const auto& names = h.basis_names();
    const Scalar one = h.one_scalar();

    // Each probe returns an empty string on success and a witness otherwise.
    std::string w = [&]() -> std::string {
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                for (Index k = 0; k < d; ++k)
                    if (h.mul(h.mul(i, j), h.basis_vector(k)) != h.mul(h.basis_vector(i), h.mul(j, k)))
                        return "(" + names[i] + ", " + names[j] + ", " + names[k] + ")";
        return {};
    }();
    r.check("associativity", w.empty(), "(xy)z != x(yz) at " + w);

    w = [&]() -> std::string {
        for (Index i = 0; i < d; ++i) {
            SVec e = h.basis_vector(i);
            if (h.mul(h.one(), e) != e || h.mul(e, h.one()) != e) return names[i];
        }
        return {};
    }();
    r.check("unit", w.empty(), "1·x != x or x·1 != x at " + w);

    w = [&]() -> std::string {
        for (Index k = 0; k < d; ++k) {
            Tensor t = h.comult_power(h.basis_vector(k), 2);
            SVec left = t.apply(0, h.comult_map()).pack();
            SVec right = t.apply(1, h.comult_map()).pack();
            if (left != right) return names[k];
        }
        return {};
    }();
    r.check("coassociativity", w.empty(), "(Δ⊗id)Δ != (id⊗Δ)Δ at " + w);

    w = [&]() -> std::string {
        for (Index k = 0; k < d; ++k) {
            Tensor t = h.comult_power(h.basis_vector(k), 2);
            SVec e = h.basis_vector(k);
            if (t.apply(0, h.counit_map()).pack() != e || t.apply(1, h.counit_map()).pack() != e) return names[k];
        }
        return {};
    }();
    r.check("counit", w.empty(), "(ε⊗id)Δ or (id⊗ε)Δ differs from id at " + w);

    w = [&]() -> std::string {
        Tensor u = h.comult_power(h.one(), 2);
        Tensor uu = Tensor::from_svec({d}, h.one()).outer(Tensor::from_svec({d}, h.one()));
        if (u.pack() != uu.pack()) return "1";
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) {
                SVec lhs = h.comult_power(h.mul(i, j), 2).pack();
                Tensor prod = h.comult_power(h.basis_vector(i), 2).outer(h.comult_power(h.basis_vector(j), 2));
                SVec rhs = h.assemble(prod, {{0, 2}, {1, 3}}).pack();
                if (lhs != rhs) return "(" + names[i] + ", " + names[j] + ")";
            }
        return {};
    }();
    r.check("comultiplication is an algebra map", w.empty(), "Δ(xy) != Δ(x)Δ(y) at " + w);

    w = [&]() -> std::string {
        if (h.counit(h.one()) != one) return "1";
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                if (h.counit(h.mul(i, j)) != h.counit(h.basis_vector(i)) * h.counit(h.basis_vector(j)))
                    return "(" + names[i] + ", " + names[j] + ")";
        return {};
    }();
    r.check("counit is an algebra map", w.empty(), "ε(xy) != ε(x)ε(y) at " + w);

    std::string wl, wr;
    for (Index k = 0; k < d && (wl.empty() || wr.empty()); ++k) {
        Tensor t = h.comult_power(h.basis_vector(k), 2);
        SVec expect = h.one().scaled(h.counit(h.basis_vector(k)));
        SVec left = t.apply(0, h.antipode_map()).apply(0, h.mult_map()).pack();
        SVec right = t.apply(1, h.antipode_map()).apply(0, h.mult_map()).pack();
        if (wl.empty() && left != expect) wl = names[k] + " gives " + fmt_vec(h, left, {d});
        if (wr.empty() && right != expect) wr = names[k] + " gives " + fmt_vec(h, right, {d});
    }
    r.check("antipode S(x1)x2 = ε(x)1", wl.empty(), "fails at " + wl);
    r.check("antipode x1S(x2) = ε(x)1", wr.empty(), "fails at " + wr);
    r.check("antipode invertible", h.antipode_invertible(), "S is singular");
    return r;
}

HopfAlgebra group_algebra(const FiniteGroup& g, const Field& f) {
    HopfData data;
    data.name = g.order() == 1 ? "k" : "k" + g.name();
    data.field = f;
    Index n = static_cast<Index>(g.order());
    data.basis = g.element_names();
    Scalar one = f.one();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) data.mult.push_back(SVec::unit(static_cast<Index>(g.mul(a, b)), one));
    data.unit = SVec::unit(static_cast<Index>(g.identity()), one);
    data.antipode = SparseMatrix(n, n);
    for (Index a = 0; a < n; ++a) {
        data.comult.push_back(SVec::unit(a * n + a, one));
        data.counit.push_back(one);
        data.antipode.set_col(a, SVec::unit(static_cast<Index>(g.inv(a)), one));
    }
    return HopfAlgebra::build(std::move(data));
}

HopfAlgebra function_algebra(const FiniteGroup& g, const Field& f) {
    HopfData data;
    data.name = g.order() == 1 ? "k" : "O" + g.name();
    data.field = f;
    Index n = static_cast<Index>(g.order());
    Scalar one = f.one();
    for (Index a = 0; a < n; ++a) data.basis.push_back("d_" + g.element_name(a));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) data.mult.push_back(a == b ? SVec::unit(a, one) : SVec());
    std::vector<SVec::Entry> u;
    for (Index a = 0; a < n; ++a) u.emplace_back(a, one);
    data.unit = SVec::from_pairs(u);
    data.antipode = SparseMatrix(n, n);
    for (Index c = 0; c < n; ++c) {
        std::vector<SVec::Entry> e;
        for (Index a = 0; a < n; ++a) e.emplace_back(a * n + static_cast<Index>(g.mul(g.inv(a), c)), one);
        data.comult.push_back(SVec::from_pairs(e));
        data.counit.push_back(c == static_cast<Index>(g.identity()) ? one : f.zero());
        data.antipode.set_col(c, SVec::unit(static_cast<Index>(g.inv(c)), one));
    }
    return HopfAlgebra::build(std::move(data));
}

HopfAlgebra sweedler(const Field& f) {
    HopfData data;
    data.name = "H4";
    data.field = f;
    data.basis = {"1", "g", "x", "gx"};
    Scalar one = f.one(), m1 = -f.one();
    auto e = [&](Index i, const Scalar& s) { return SVec::unit(i, s); };
    // rows: left factor 1, g, x, gx; columns: right factor
    data.mult = {e(0, one), e(1, one), e(2, one), e(3, one),  //
                 e(1, one), e(0, one), e(3, one), e(2, one),  //
                 e(2, one), e(3, m1),  SVec(),    SVec(),     //
                 e(3, one), e(2, m1),  SVec(),    SVec()};
    data.unit = e(0, one);
    auto pair = [](Index i, Index j) { return i * 4 + j; };
    data.comult = {e(pair(0, 0), one), e(pair(1, 1), one),
                   SVec::from_pairs({{pair(2, 0), one}, {pair(1, 2), one}}),
                   SVec::from_pairs({{pair(3, 1), one}, {pair(0, 3), one}})};
    data.counit = {one, one, f.zero(), f.zero()};
    data.antipode = SparseMatrix(4, 4);
    data.antipode.set_col(0, e(0, one));
    data.antipode.set_col(1, e(1, one));
    data.antipode.set_col(2, e(3, m1));
    data.antipode.set_col(3, e(2, one));
    return HopfAlgebra::build(std::move(data));
}

HopfAlgebra builtin_hopf(const std::string& name, const Field& f) {
    if (name == "k") return group_algebra(FiniteGroup::builtin("trivial"), f);
    if (name == "H4") return sweedler(f);
    if (name.size() > 1 && name[0] == 'k') return group_algebra(FiniteGroup::builtin(name.substr(1)), f);
    if (name.size() > 1 && name[0] == 'O') return function_algebra(FiniteGroup::builtin(name.substr(1)), f);
    throw HopfError("unknown built-in Hopf algebra '" + name + "'");
}

std::vector<std::string> builtin_hopf_names() { return {"k", "kC2", "kC3", "kS3", "kQ8", "OC2", "OS3", "H4"}; }

}  // namespace hopfcyc
