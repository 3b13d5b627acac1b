#include "hopfcyc/sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfcyc {

SVec SVec::from_pairs(std::vector<Entry> pairs) {
    std::stable_sort(pairs.begin(), pairs.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SVec v;
    for (auto& [i, s] : pairs) {
        if (!v.e_.empty() && v.e_.back().first == i) {
            v.e_.back().second += s;
            if (v.e_.back().second.is_zero()) v.e_.pop_back();
        } else if (!s.is_zero()) {
            v.e_.emplace_back(i, std::move(s));
        }
    }
    return v;
}

Scalar SVec::get(Index i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, Index k) { return a.first < k; });
    if (it != e_.end() && it->first == i) return it->second;
    return Scalar();
}

SVec SVec::scaled(const Scalar& a) const {
    SVec r;
    if (a.is_zero()) return r;
    r.e_.reserve(e_.size());
    for (const auto& [i, s] : e_) r.e_.emplace_back(i, s * a);
    return r;
}

SVec SVec::axpy(const Scalar& a, const SVec& x) const {
    if (a.is_zero() || x.empty()) return *this;
    SVec r;
    r.e_.reserve(e_.size() + x.e_.size());
    auto p = e_.begin(), pe = e_.end();
    auto q = x.e_.begin(), qe = x.e_.end();
    while (p != pe || q != qe) {
        if (q == qe || (p != pe && p->first < q->first)) {
            r.e_.push_back(*p++);
        } else if (p == pe || q->first < p->first) {
            r.e_.emplace_back(q->first, q->second * a);
            ++q;
        } else {
            Scalar s = p->second + q->second * a;
            if (!s.is_zero()) r.e_.emplace_back(p->first, std::move(s));
            ++p;
            ++q;
        }
    }
    return r;
}

namespace {
SVec merge(const SVec& a, const SVec& b, bool negate) {
    std::vector<SVec::Entry> out;
    const auto& x = a.entries();
    const auto& y = b.entries();
    out.reserve(x.size() + y.size());
    auto p = x.begin(), pe = x.end();
    auto q = y.begin(), qe = y.end();
    while (p != pe || q != qe) {
        if (q == qe || (p != pe && p->first < q->first)) {
            out.push_back(*p++);
        } else if (p == pe || q->first < p->first) {
            out.emplace_back(q->first, negate ? -q->second : q->second);
            ++q;
        } else {
            Scalar s = negate ? p->second - q->second : p->second + q->second;
            if (!s.is_zero()) out.emplace_back(p->first, std::move(s));
            ++p;
            ++q;
        }
    }
    SVec r;
    r.mutable_entries() = std::move(out);
    return r;
}
}  // namespace

SVec SVec::operator+(const SVec& o) const { return merge(*this, o, false); }

SVec SVec::operator-(const SVec& o) const { return merge(*this, o, true); }

SVec SVec::operator-() const {
    SVec r;
    r.e_.reserve(e_.size());
    for (const auto& [i, s] : e_) r.e_.emplace_back(i, -s);
    return r;
}

std::string SVec::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, s] : e_) {
        if (!first) os << ", ";
        first = false;
        os << i << ":" << s;
    }
    os << "}";
    return os.str();
}

SparseMatrix::SparseMatrix(Index rows, std::vector<SVec> cols) : rows_(rows), cols_(std::move(cols)) {
    for (const auto& c : cols_)
        if (!c.empty() && c.entries().back().first >= rows_) throw std::out_of_range("matrix entry row out of range");
}

SparseMatrix SparseMatrix::identity(Index n, const Field& f) {
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.cols_[i] = SVec::unit(i, f.one());
    return m;
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols,
                                         const std::vector<std::tuple<Index, Index, Scalar>>& t) {
    std::vector<std::vector<SVec::Entry>> buckets(cols);
    for (const auto& [r, c, s] : t) {
        if (r >= rows || c >= cols) throw std::out_of_range("triplet out of range");
        buckets[c].emplace_back(r, s);
    }
    SparseMatrix m(rows, cols);
    for (Index c = 0; c < cols; ++c) m.cols_[c] = SVec::from_pairs(std::move(buckets[c]));
    return m;
}

void SparseMatrix::set_col(Index j, SVec v) {
    if (!v.empty() && v.entries().back().first >= rows_) throw std::out_of_range("column entry out of range");
    cols_[j] = std::move(v);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

double SparseMatrix::density() const {
    if (rows_ == 0 || cols_.empty()) return 0.0;
    return static_cast<double>(nnz()) / (static_cast<double>(rows_) * static_cast<double>(cols_.size()));
}

SVec SparseMatrix::apply(const SVec& x) const {
    std::vector<SVec::Entry> acc;
    for (const auto& [j, s] : x.entries()) {
        if (j >= cols_.size()) throw std::out_of_range("vector longer than matrix domain");
        for (const auto& [i, t] : cols_[j].entries()) acc.emplace_back(i, t * s);
    }
    return SVec::from_pairs(std::move(acc));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols() != o.rows()) throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix r(rows_, o.cols());
    for (Index j = 0; j < o.cols(); ++j) r.cols_[j] = apply(o.cols_[j]);
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    SparseMatrix r(rows_, cols());
    for (Index j = 0; j < cols(); ++j) r.cols_[j] = cols_[j] + o.cols_[j];
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw std::invalid_argument("matrix difference shape mismatch");
    SparseMatrix r(rows_, cols());
    for (Index j = 0; j < cols(); ++j) r.cols_[j] = cols_[j] - o.cols_[j];
    return r;
}

SparseMatrix SparseMatrix::scaled(const Scalar& a) const {
    SparseMatrix r(rows_, cols());
    for (Index j = 0; j < cols(); ++j) r.cols_[j] = cols_[j].scaled(a);
    return r;
}

std::vector<SVec> SparseMatrix::rows_vec() const {
    std::vector<std::vector<SVec::Entry>> rr(rows_);
    for (Index j = 0; j < cols(); ++j)
        for (const auto& [i, s] : cols_[j].entries()) rr[i].emplace_back(j, s);
    std::vector<SVec> out(rows_);
    for (Index i = 0; i < rows_; ++i) {
        auto& v = out[i].mutable_entries();
        v = std::move(rr[i]);
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const { return SparseMatrix(cols(), rows_vec()); }

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

std::vector<std::tuple<Index, Index, Scalar>> SparseMatrix::triplets() const {
    std::vector<std::tuple<Index, Index, Scalar>> t;
    for (Index j = 0; j < cols(); ++j)
        for (const auto& [i, s] : cols_[j].entries()) t.emplace_back(i, j, s);
    return t;
}

std::string SparseMatrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols() << " [";
    bool first = true;
    for (const auto& [i, j, s] : triplets()) {
        if (!first) os << ", ";
        first = false;
        os << "(" << i << "," << j << ")=" << s;
    }
    os << "]";
    return os.str();
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index ja = 0; ja < a.cols(); ++ja)
        for (Index jb = 0; jb < b.cols(); ++jb) {
            SVec c;
            for (const auto& [ia, sa] : a.col(ja).entries())
                for (const auto& [ib, sb] : b.col(jb).entries()) c.push_back(ia * b.rows() + ib, sa * sb);
            r.set_col(ja * b.cols() + jb, std::move(c));
        }
    return r;
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks) {
    if (blocks.empty()) return {};
    Index cols = blocks.front().cols();
    Index rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
    }
    SparseMatrix r(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        SVec c;
        Index off = 0;
        for (const auto& b : blocks) {
            for (const auto& [i, s] : b.col(j).entries()) c.push_back(off + i, s);
            off += b.rows();
        }
        r.set_col(j, std::move(c));
    }
    return r;
}

}  // namespace hopfcyc
