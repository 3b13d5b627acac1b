#include "hopfcyc/tensor.hpp"

#include <algorithm>

namespace hopfcyc {

namespace {

Index product(const std::vector<Index>& dims) {
    Index p = 1;
    for (Index d : dims) p *= d;
    return p;
}

Index encode_range(const Digits& d, std::size_t first, const std::vector<Index>& dims) {
    Index r = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) r = r * dims[k] + d[first + k];
    return r;
}

void decode_into(Index i, const std::vector<Index>& dims, Index* out) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = i % dims[k];
        i /= dims[k];
    }
}

}  // namespace

Index SlotMap::in_size() const { return product(in_dims); }
Index SlotMap::out_size() const { return product(out_dims); }

SlotMap SlotMap::from_matrix(const SparseMatrix& m) {
    SlotMap s;
    s.in_dims = {m.cols()};
    s.out_dims = {m.rows()};
    s.table.reserve(m.cols());
    for (Index j = 0; j < m.cols(); ++j) s.table.push_back(m.col(j));
    return s;
}

SlotMap SlotMap::from_function(std::vector<Index> in_dims, std::vector<Index> out_dims,
                               const std::function<SVec(Index)>& f) {
    SlotMap s;
    s.in_dims = std::move(in_dims);
    s.out_dims = std::move(out_dims);
    Index n = s.in_size();
    s.table.reserve(n);
    for (Index j = 0; j < n; ++j) s.table.push_back(f(j));
    return s;
}

SparseMatrix SlotMap::matrix() const { return SparseMatrix(out_size(), table); }

Tensor Tensor::basis(std::vector<Index> dims, Digits d, const Scalar& one) {
    Tensor t(std::move(dims));
    t.terms_.push_back({std::move(d), one});
    return t;
}

Tensor Tensor::from_svec(std::vector<Index> dims, const SVec& v) {
    Tensor t(std::move(dims));
    for (const auto& [i, s] : v.entries()) {
        Digits d(t.dims_.size());
        decode_into(i, t.dims_, d.data());
        t.terms_.push_back({std::move(d), s});
    }
    return t;
}

bool Tensor::is_zero() const {
    for (const auto& t : terms_)
        if (!t.c.is_zero()) return false;
    return true;
}

void Tensor::add(Digits d, const Scalar& c) {
    if (!c.is_zero()) terms_.push_back({std::move(d), c});
}

void Tensor::add(const Tensor& t, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& x : t.terms_) terms_.push_back({x.d, x.c * c});
}

Tensor Tensor::apply(std::size_t first, const SlotMap& m) const {
    std::size_t k = m.in_dims.size(), o = m.out_dims.size();
    if (first + k > dims_.size()) throw std::out_of_range("slot map applied beyond the last slot");
    for (std::size_t i = 0; i < k; ++i)
        if (dims_[first + i] != m.in_dims[i]) throw std::invalid_argument("slot map input dimension mismatch");
    std::vector<Index> nd(dims_.begin(), dims_.begin() + static_cast<long>(first));
    nd.insert(nd.end(), m.out_dims.begin(), m.out_dims.end());
    nd.insert(nd.end(), dims_.begin() + static_cast<long>(first + k), dims_.end());
    Tensor r(nd);
    for (const auto& t : terms_) {
        Index in = encode_range(t.d, first, m.in_dims);
        for (const auto& [out, s] : m.table[in].entries()) {
            Digits d(nd.size());
            std::copy(t.d.begin(), t.d.begin() + static_cast<long>(first), d.begin());
            decode_into(out, m.out_dims, d.data() + first);
            std::copy(t.d.begin() + static_cast<long>(first + k), t.d.end(), d.begin() + static_cast<long>(first + o));
            r.terms_.push_back({std::move(d), t.c * s});
        }
    }
    r.canonicalize();
    return r;
}

Tensor Tensor::permute(const std::vector<std::size_t>& order) const {
    if (order.size() != dims_.size()) throw std::invalid_argument("permutation arity mismatch");
    std::vector<Index> nd(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) nd[k] = dims_[order[k]];
    Tensor r(nd);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Digits d(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) d[k] = t.d[order[k]];
        r.terms_.push_back({std::move(d), t.c});
    }
    return r;
}

Tensor Tensor::move_slot(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < dims_.size(); ++k)
        if (k != from) order.push_back(k);
    order.insert(order.begin() + static_cast<long>(to), from);
    return permute(order);
}

Tensor Tensor::insert(std::size_t pos, Index dim, const SVec& v) const {
    std::vector<Index> nd = dims_;
    nd.insert(nd.begin() + static_cast<long>(pos), dim);
    Tensor r(nd);
    for (const auto& t : terms_)
        for (const auto& [i, s] : v.entries()) {
            Digits d = t.d;
            d.insert(d.begin() + static_cast<long>(pos), i);
            r.terms_.push_back({std::move(d), t.c * s});
        }
    return r;
}

Tensor Tensor::outer(const Tensor& o) const {
    std::vector<Index> nd = dims_;
    nd.insert(nd.end(), o.dims_.begin(), o.dims_.end());
    Tensor r(nd);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Digits d = a.d;
            d.insert(d.end(), b.d.begin(), b.d.end());
            r.terms_.push_back({std::move(d), a.c * b.c});
        }
    return r;
}

Tensor Tensor::scaled(const Scalar& a) const {
    Tensor r(dims_);
    if (a.is_zero()) return r;
    for (const auto& t : terms_) r.terms_.push_back({t.d, t.c * a});
    return r;
}

void Tensor::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.d < b.d; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().d == t.d) {
            out.back().c += t.c;
            continue;
        }
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

SVec Tensor::pack() const {
    std::vector<SVec::Entry> e;
    e.reserve(terms_.size());
    for (const auto& t : terms_) e.emplace_back(encode_range(t.d, 0, dims_), t.c);
    return SVec::from_pairs(std::move(e));
}

Index TensorSpace::ambient_dim() const { return product(dims); }

TensorSpace TensorSpace::whole(std::vector<Index> dims, const Field& f) {
    TensorSpace t;
    t.dims = std::move(dims);
    t.space = SubquotientSpace::whole(product(t.dims), f);
    return t;
}

std::vector<Digits> all_digits(const std::vector<Index>& dims) {
    Index n = product(dims);
    std::vector<Digits> out(n, Digits(dims.size()));
    for (Index i = 0; i < n; ++i) decode_into(i, dims, out[i].data());
    return out;
}

AmbientMap ambient_map(const Formula& f, const std::vector<Index>& dom_dims) {
    return [f, dom_dims](Index j) {
        Digits d(dom_dims.size());
        decode_into(j, dom_dims, d.data());
        return f(d).pack();
    };
}

SparseMatrix descend(const Formula& f, const TensorSpace& dom, const TensorSpace& cod, const std::string& what) {
    return induced_map(ambient_map(f, dom.dims), dom.space, cod.space, what);
}

Formula through_lifts(const Formula& f, const std::vector<Index>& lifted_dims, const std::vector<std::size_t>& slots,
                      const SlotMap& lift, const Scalar& one) {
    return [=](const Digits& d) {
        std::vector<Index> dims = lifted_dims;
        for (std::size_t s : slots) dims[s] = lift.in_dims[0];
        Tensor t = Tensor::basis(dims, d, one);
        for (std::size_t s : slots) t = t.apply(s, lift);
        Tensor out;
        bool first = true;
        for (const auto& term : t.terms()) {
            Tensor img = f(term.d);
            if (first) {
                out = Tensor(img.dims());
                first = false;
            }
            out.add(img, term.c);
        }
        if (first) return Tensor();
        out.canonicalize();
        return out;
    };
}

void check_lift_independence(const Formula& f, const std::vector<Index>& lifted_dims,
                             const std::vector<std::size_t>& slots, const std::vector<SVec>& ideal_basis,
                             const TensorSpace& cod, const std::string& what) {
    if (ideal_basis.empty()) return;
    for (std::size_t s : slots) {
        std::vector<Index> others = lifted_dims;
        others.erase(others.begin() + static_cast<long>(s));
        for (const Digits& rest : all_digits(others)) {
            for (std::size_t v = 0; v < ideal_basis.size(); ++v) {
                std::vector<SVec::Entry> acc;
                for (const auto& [k, c] : ideal_basis[v].entries()) {
                    Digits d = rest;
                    d.insert(d.begin() + static_cast<long>(s), k);
                    SVec img = f(d).pack();
                    for (const auto& [i, x] : img.entries()) acc.emplace_back(i, x * c);
                }
                SVec w = SVec::from_pairs(std::move(acc));
                if (!cod.space.is_trivial(w))
                    throw DescentError(what + ": value depends on the lift in slot " + std::to_string(s));
            }
        }
    }
}

}  // namespace hopfcyc
