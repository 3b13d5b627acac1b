#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

// Incremental row-echelon basis of a subspace of k^dim. Rows are normalized so
// that the entry at their pivot (leading) column is 1. The pivot of an inserted
// vector is its lowest-index column that survives reduction.
class Echelon {
public:
    explicit Echelon(Index dim = 0);

    Index dim() const { return dim_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }

    // Returns true when v enlarged the span.
    bool insert(const SVec& v);
    // Normal form of v modulo the span; the result has no pivot-column entries.
    SVec reduce(const SVec& v) const;
    bool contains(const SVec& v) const { return reduce(v).empty(); }

    bool is_pivot(Index c) const { return row_of_[c] >= 0; }
    const SVec& row(Index pivot) const { return rows_[static_cast<std::size_t>(row_of_[pivot])]; }
    std::vector<Index> pivots() const;  // increasing
    std::vector<Index> free_columns() const;
    // Row for pivot c with every other pivot column eliminated.
    SVec reduced_row(Index c) const;

private:
    SVec reduce_impl(const SVec& v, bool full, Index* lead) const;

    Index dim_;
    std::vector<int> row_of_;
    std::vector<SVec> rows_;
};

Index rank(const SparseMatrix& m, std::optional<Index> upper_bound = std::nullopt);
Index dense_rank(const SparseMatrix& m);

class DescentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A subspace (kind Sub) or quotient (kind Quotient) of k^ambient_dim with
// projection: ambient -> reduced and section: reduced -> ambient.
struct SubquotientSpace {
    enum class Kind { Sub, Quotient };

    Kind kind = Kind::Sub;
    Index ambient_dim = 0;
    SparseMatrix projection;
    SparseMatrix section;

    Index dim() const { return section.cols(); }
    SVec project(const SVec& v) const { return projection.apply(v); }
    SVec lift(const SVec& v) const { return section.apply(v); }
    // Sub: v lies in the subspace. Quotient: always true.
    bool contains(const SVec& v) const;
    // Quotient: v maps to zero. Sub: v == 0.
    bool is_trivial(const SVec& v) const;
    void assert_valid() const;

    static SubquotientSpace whole(Index n, const Field& f);
};

SubquotientSpace kernel(const SparseMatrix& m);
SubquotientSpace image_space(const SparseMatrix& m);
SubquotientSpace span_subspace(Index ambient_dim, const std::vector<SVec>& vectors);
SubquotientSpace quotient_by(Index ambient_dim, const std::vector<SVec>& relations, const Field& f);
SubquotientSpace coequalizer(const SparseMatrix& f, const SparseMatrix& g);
SubquotientSpace equalizer(const SparseMatrix& f, const SparseMatrix& g);

using AmbientMap = std::function<SVec(Index)>;

// cod.projection ∘ f ∘ dom.section with the descent check. f is given on
// ambient basis vectors of dom and returns vectors in the ambient of cod.
SparseMatrix induced_map(const AmbientMap& f, const SubquotientSpace& dom, const SubquotientSpace& cod,
                         const std::string& what = "map");
SparseMatrix induced_map(const SparseMatrix& f, const SubquotientSpace& dom, const SubquotientSpace& cod,
                         const std::string& what = "map");

SVec apply_linear(const AmbientMap& f, const SVec& x);

// Finds some x with a x = b, if one exists.
class Preimage {
public:
    explicit Preimage(const SparseMatrix& a);
    std::optional<SVec> solve(const SVec& b) const;
    Index rank() const { return static_cast<Index>(rows_.size()); }

private:
    struct Row {
        SVec v;
        SVec combo;
    };
    Index dim_;
    std::vector<int> row_of_;
    std::vector<Row> rows_;
};

// Row-major tensor index map for a list of factor dimensions (left factor slowest).
class TensorIndex {
public:
    TensorIndex() = default;
    explicit TensorIndex(std::vector<Index> dims);

    const std::vector<Index>& dims() const { return dims_; }
    Index size() const { return size_; }
    Index encode(const std::vector<Index>& digits) const;
    std::vector<Index> decode(Index i) const;

private:
    std::vector<Index> dims_;
    std::vector<Index> strides_;
    Index size_ = 1;
};

}  // namespace hopfcyc
