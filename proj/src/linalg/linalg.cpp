#include "hopfcyc/linalg.hpp"

#include <algorithm>
#include <queue>

namespace hopfcyc {

namespace {

struct Workspace {
    std::vector<Scalar> acc;
    std::vector<unsigned char> mark;
    std::vector<Index> touched;

    void ensure(Index n) {
        if (acc.size() < n) {
            acc.resize(n);
            mark.resize(n, 0);
        }
    }
    void clear() {
        for (Index t : touched) {
            acc[t] = Scalar();
            mark[t] = 0;
        }
        touched.clear();
    }
};

thread_local Workspace tl_ws;

}  // namespace

Echelon::Echelon(Index dim) : dim_(dim), row_of_(dim, -1) {}

SVec Echelon::reduce_impl(const SVec& v, bool full, Index* lead) const {
    Workspace& ws = tl_ws;
    ws.ensure(dim_);
    std::priority_queue<Index, std::vector<Index>, std::greater<Index>> heap;
    for (const auto& [i, s] : v.entries()) {
        if (i >= dim_) throw std::out_of_range("vector index beyond echelon dimension");
        ws.acc[i] = s;
        ws.mark[i] = 1;
        ws.touched.push_back(i);
        heap.push(i);
    }
    SVec out;
    bool found_lead = false;
    while (!heap.empty()) {
        Index c = heap.top();
        heap.pop();
        if (ws.mark[c] == 2) continue;
        ws.mark[c] = 2;
        if (ws.acc[c].is_zero()) continue;
        if (row_of_[c] >= 0 && !found_lead) {
            Scalar a = ws.acc[c];
            for (const auto& [j, x] : rows_[static_cast<std::size_t>(row_of_[c])].entries()) {
                if (ws.mark[j] == 0) {
                    ws.mark[j] = 1;
                    ws.touched.push_back(j);
                    heap.push(j);
                    ws.acc[j] = -(a * x);
                } else {
                    ws.acc[j] -= a * x;
                }
            }
            continue;
        }
        if (row_of_[c] >= 0) {
            // Past the leading entry of a partial reduction: keep as is.
            out.push_back(c, ws.acc[c]);
            continue;
        }
        if (!full && !found_lead) {
            found_lead = true;
            if (lead) *lead = c;
        }
        out.push_back(c, ws.acc[c]);
    }
    ws.clear();
    return out;
}

bool Echelon::insert(const SVec& v) {
    Index lead = 0;
    SVec r = reduce_impl(v, false, &lead);
    if (r.empty()) return false;
    Scalar inv = r.entries().front().second.inverse();
    if (!inv.is_one()) r = r.scaled(inv);
    row_of_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

SVec Echelon::reduce(const SVec& v) const { return reduce_impl(v, true, nullptr); }

std::vector<Index> Echelon::pivots() const {
    std::vector<Index> p;
    for (Index c = 0; c < dim_; ++c)
        if (row_of_[c] >= 0) p.push_back(c);
    return p;
}

std::vector<Index> Echelon::free_columns() const {
    std::vector<Index> f;
    for (Index c = 0; c < dim_; ++c)
        if (row_of_[c] < 0) f.push_back(c);
    return f;
}

SVec Echelon::reduced_row(Index c) const {
    const SVec& r = row(c);
    SVec tail;
    for (std::size_t k = 1; k < r.entries().size(); ++k) tail.push_back(r.entries()[k].first, r.entries()[k].second);
    SVec red = reduce(tail);
    SVec out;
    out.push_back(c, r.entries().front().second);
    for (const auto& [j, s] : red.entries()) out.push_back(j, s);
    return out;
}

Index dense_rank(const SparseMatrix& m) {
    Index R = m.rows(), C = m.cols();
    std::vector<std::vector<Scalar>> a(R, std::vector<Scalar>(C));
    for (Index j = 0; j < C; ++j)
        for (const auto& [i, s] : m.col(j).entries()) a[i][j] = s;
    Index rank = 0;
    for (Index c = 0; c < C && rank < R; ++c) {
        Index piv = R;
        std::size_t best = 0;
        for (Index r = rank; r < R; ++r) {
            if (a[r][c].is_zero()) continue;
            std::size_t h = a[r][c].height();
            if (piv == R || h < best) {
                piv = r;
                best = h;
            }
        }
        if (piv == R) continue;
        std::swap(a[piv], a[rank]);
        Scalar inv = a[rank][c].inverse();
        for (Index k = c; k < C; ++k)
            if (!a[rank][k].is_zero()) a[rank][k] = a[rank][k] * inv;
        for (Index r = rank + 1; r < R; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (Index k = c; k < C; ++k)
                if (!a[rank][k].is_zero()) a[r][k] = a[r][k] - f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

Index rank(const SparseMatrix& m, std::optional<Index> upper_bound) {
    Index R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    if (m.density() > 0.25 && static_cast<std::size_t>(R) * C <= 4'000'000) return dense_rank(m);
    Index bound = std::min(R, C);
    if (upper_bound) bound = std::min(bound, *upper_bound);
    std::vector<SVec> vecs;
    Index dim;
    if (R <= C) {
        dim = R;
        vecs.reserve(C);
        for (Index j = 0; j < C; ++j) vecs.push_back(m.col(j));
    } else {
        dim = C;
        vecs = m.rows_vec();
    }
    std::stable_sort(vecs.begin(), vecs.end(), [](const SVec& a, const SVec& b) { return a.size() < b.size(); });
    Echelon e(dim);
    for (const auto& v : vecs) {
        if (v.empty()) continue;
        e.insert(v);
        if (e.rank() >= bound) break;
    }
    return e.rank();
}

bool SubquotientSpace::contains(const SVec& v) const {
    if (kind == Kind::Quotient) return true;
    return lift(project(v)) == v;
}

bool SubquotientSpace::is_trivial(const SVec& v) const {
    if (kind == Kind::Quotient) return project(v).empty();
    return v.empty();
}

void SubquotientSpace::assert_valid() const {
    if (projection.cols() != ambient_dim || section.rows() != ambient_dim || projection.rows() != section.cols())
        throw std::logic_error("subquotient shape mismatch");
    for (Index k = 0; k < dim(); ++k) {
        SVec back = project(section.col(k));
        if (back.size() != 1 || back.entries()[0].first != k || !back.entries()[0].second.is_one())
            throw std::logic_error("projection after section is not the identity");
    }
}

SubquotientSpace SubquotientSpace::whole(Index n, const Field& f) {
    SubquotientSpace s;
    s.kind = Kind::Sub;
    s.ambient_dim = n;
    s.projection = SparseMatrix::identity(n, f);
    s.section = s.projection;
    return s;
}

namespace {

// Subspace of k^n with basis vectors (columns) having 1 at a distinct pivot
// column and 0 at every other pivot column; the projection reads pivot coordinates.
SubquotientSpace from_pivot_basis(Index n, const std::vector<Index>& pivots, std::vector<SVec> basis) {
    SubquotientSpace s;
    s.kind = SubquotientSpace::Kind::Sub;
    s.ambient_dim = n;
    Index k = static_cast<Index>(basis.size());
    s.section = SparseMatrix(n, std::move(basis));
    s.projection = SparseMatrix(k, n);
    for (Index i = 0; i < k; ++i) {
        const Scalar& one = s.section.col(i).get(pivots[i]);
        s.projection.set_col(pivots[i], SVec::unit(i, one));
    }
    return s;
}

Field field_of(const SparseMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j)
        if (!m.col(j).empty()) return m.col(j).entries().front().second.field();
    return Field();
}

}  // namespace

SubquotientSpace kernel(const SparseMatrix& m) {
    Index n = m.cols();
    Echelon e(n);
    auto rows = m.rows_vec();
    std::stable_sort(rows.begin(), rows.end(), [](const SVec& a, const SVec& b) { return a.size() < b.size(); });
    for (const auto& r : rows)
        if (!r.empty()) e.insert(r);
    std::vector<Index> free = e.free_columns();
    std::vector<Index> slot(n, 0);
    for (Index k = 0; k < free.size(); ++k) slot[free[k]] = k;
    std::vector<std::vector<SVec::Entry>> cols(free.size());
    for (Index c : e.pivots()) {
        SVec rr = e.reduced_row(c);
        for (const auto& [j, s] : rr.entries()) {
            if (j == c) continue;
            cols[slot[j]].emplace_back(c, -s);
        }
    }
    Scalar one = field_of(m).one();
    std::vector<SVec> basis;
    basis.reserve(free.size());
    for (Index k = 0; k < free.size(); ++k) {
        cols[k].emplace_back(free[k], one);
        basis.push_back(SVec::from_pairs(std::move(cols[k])));
    }
    return from_pivot_basis(n, free, std::move(basis));
}

SubquotientSpace span_subspace(Index ambient_dim, const std::vector<SVec>& vectors) {
    Echelon e(ambient_dim);
    for (const auto& v : vectors)
        if (!v.empty()) e.insert(v);
    std::vector<Index> piv = e.pivots();
    std::vector<SVec> basis;
    basis.reserve(piv.size());
    for (Index c : piv) basis.push_back(e.reduced_row(c));
    return from_pivot_basis(ambient_dim, piv, std::move(basis));
}

SubquotientSpace image_space(const SparseMatrix& m) {
    std::vector<SVec> cols;
    for (Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return span_subspace(m.rows(), cols);
}

SubquotientSpace quotient_by(Index ambient_dim, const std::vector<SVec>& relations, const Field& f) {
    Echelon e(ambient_dim);
    for (const auto& r : relations)
        if (!r.empty()) e.insert(r);
    std::vector<Index> free = e.free_columns();
    std::vector<int> slot(ambient_dim, -1);
    for (Index k = 0; k < free.size(); ++k) slot[free[k]] = static_cast<int>(k);
    SubquotientSpace s;
    s.kind = SubquotientSpace::Kind::Quotient;
    s.ambient_dim = ambient_dim;
    Index k = static_cast<Index>(free.size());
    s.section = SparseMatrix(ambient_dim, k);
    for (Index i = 0; i < k; ++i) s.section.set_col(i, SVec::unit(free[i], f.one()));
    s.projection = SparseMatrix(k, ambient_dim);
    for (Index j = 0; j < ambient_dim; ++j) {
        if (slot[j] >= 0) {
            s.projection.set_col(j, SVec::unit(static_cast<Index>(slot[j]), f.one()));
            continue;
        }
        SVec red = e.reduce(SVec::unit(j, f.one()));
        SVec col;
        for (const auto& [i, v] : red.entries()) col.push_back(static_cast<Index>(slot[i]), v);
        s.projection.set_col(j, std::move(col));
    }
    return s;
}

SubquotientSpace coequalizer(const SparseMatrix& f, const SparseMatrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) throw std::invalid_argument("coequalizer: shape mismatch");
    SparseMatrix d = f - g;
    std::vector<SVec> rel;
    for (Index j = 0; j < d.cols(); ++j) rel.push_back(d.col(j));
    Field fld;
    for (Index j = 0; j < f.cols(); ++j)
        if (!f.col(j).empty()) {
            fld = f.col(j).entries().front().second.field();
            break;
        }
    for (Index j = 0; j < g.cols() && fld.is_rational(); ++j)
        if (!g.col(j).empty()) {
            fld = g.col(j).entries().front().second.field();
            break;
        }
    return quotient_by(f.rows(), rel, fld);
}

SubquotientSpace equalizer(const SparseMatrix& f, const SparseMatrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) throw std::invalid_argument("equalizer: shape mismatch");
    return kernel(f - g);
}

SVec apply_linear(const AmbientMap& f, const SVec& x) {
    std::vector<SVec::Entry> acc;
    for (const auto& [j, s] : x.entries()) {
        SVec y = f(j);
        for (const auto& [i, t] : y.entries()) acc.emplace_back(i, t * s);
    }
    return SVec::from_pairs(std::move(acc));
}

SparseMatrix induced_map(const AmbientMap& f, const SubquotientSpace& dom, const SubquotientSpace& cod,
                         const std::string& what) {
    using Kind = SubquotientSpace::Kind;
    Index k = dom.dim();
    std::vector<SVec> images(k);
    SparseMatrix out(cod.dim(), k);
    for (Index c = 0; c < k; ++c) {
        images[c] = apply_linear(f, dom.section.col(c));
        if (!cod.contains(images[c]))
            throw DescentError(what + ": image of reduced basis vector " + std::to_string(c) +
                               " escapes the target subspace");
        out.set_col(c, cod.project(images[c]));
    }
    if (dom.kind == Kind::Quotient) {
        // Every ambient basis vector differs from its section-projection by a relation;
        // that relation must map to a relation.
        for (Index j = 0; j < dom.ambient_dim; ++j) {
            const SVec& pj = dom.projection.col(j);
            const SVec& sj = dom.section.col(pj.empty() ? 0 : pj.entries().front().first);
            if (pj.size() == 1 && pj.entries()[0].second.is_one() && sj.size() == 1 && sj.entries()[0].first == j)
                continue;
            SVec w = f(j);
            for (const auto& [c, s] : pj.entries()) w = w.axpy(-s, images[c]);
            if (!cod.is_trivial(w))
                throw DescentError(what + ": relation through ambient basis vector " + std::to_string(j) +
                                   " does not map to a relation");
        }
    }
    return out;
}

SparseMatrix induced_map(const SparseMatrix& f, const SubquotientSpace& dom, const SubquotientSpace& cod,
                         const std::string& what) {
    if (f.cols() != dom.ambient_dim || f.rows() != cod.ambient_dim)
        throw std::invalid_argument(what + ": ambient shape mismatch");
    return induced_map([&f](Index j) { return f.col(j); }, dom, cod, what);
}

Preimage::Preimage(const SparseMatrix& a) : dim_(a.rows()), row_of_(a.rows(), -1) {
    for (Index j = 0; j < a.cols(); ++j) {
        SVec v = a.col(j);
        if (v.empty()) continue;
        SVec combo = SVec::unit(j, v.entries().front().second.field().one());
        while (!v.empty()) {
            Index c = v.entries().front().first;
            if (row_of_[c] < 0) break;
            const Row& r = rows_[static_cast<std::size_t>(row_of_[c])];
            Scalar s = v.entries().front().second;
            v = v.axpy(-s, r.v);
            combo = combo.axpy(-s, r.combo);
        }
        if (v.empty()) continue;
        Scalar inv = v.entries().front().second.inverse();
        row_of_[v.entries().front().first] = static_cast<int>(rows_.size());
        rows_.push_back({v.scaled(inv), combo.scaled(inv)});
    }
}

std::optional<SVec> Preimage::solve(const SVec& b) const {
    SVec v = b;
    SVec x;
    while (!v.empty()) {
        Index c = v.entries().front().first;
        if (c >= dim_) throw std::out_of_range("preimage: vector longer than codomain");
        if (row_of_[c] < 0) return std::nullopt;
        const Row& r = rows_[static_cast<std::size_t>(row_of_[c])];
        Scalar s = v.entries().front().second;
        v = v.axpy(-s, r.v);
        x = x.axpy(s, r.combo);
    }
    return x;
}

TensorIndex::TensorIndex(std::vector<Index> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
    size_ = 1;
    for (std::size_t i = dims_.size(); i-- > 0;) {
        strides_[i] = size_;
        size_ *= dims_[i];
    }
}

Index TensorIndex::encode(const std::vector<Index>& digits) const {
    if (digits.size() != dims_.size()) throw std::invalid_argument("tensor index arity mismatch");
    Index r = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (digits[i] >= dims_[i]) throw std::out_of_range("tensor digit out of range");
        r += digits[i] * strides_[i];
    }
    return r;
}

std::vector<Index> TensorIndex::decode(Index i) const {
    if (i >= size_) throw std::out_of_range("tensor index out of range");
    std::vector<Index> d(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        d[k] = i / strides_[k];
        i %= strides_[k];
    }
    return d;
}

}  // namespace hopfcyc
