#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

using Index = std::uint32_t;

// Sparse vector: strictly increasing indices, no stored zeros.
class SVec {
public:
    using Entry = std::pair<Index, Scalar>;

    SVec() = default;
    static SVec unit(Index i, const Scalar& one) { SVec v; v.e_.emplace_back(i, one); return v; }
    // Builds from arbitrary (index, value) pairs, summing duplicates.
    static SVec from_pairs(std::vector<Entry> pairs);

    const std::vector<Entry>& entries() const { return e_; }
    std::vector<Entry>& mutable_entries() { return e_; }
    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    Scalar get(Index i) const;
    // Appends an entry with index larger than all present ones.
    void push_back(Index i, const Scalar& s) { if (!s.is_zero()) e_.emplace_back(i, s); }

    SVec scaled(const Scalar& a) const;
    // this + a * x
    SVec axpy(const Scalar& a, const SVec& x) const;
    SVec operator+(const SVec& o) const;
    SVec operator-(const SVec& o) const;
    SVec operator-() const;
    bool operator==(const SVec& o) const { return e_ == o.e_; }
    bool operator!=(const SVec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<Entry> e_;
};

// Column-major sparse matrix; column j is the image of the j-th basis vector.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(std::vector<SVec>(cols)) {}
    SparseMatrix(Index rows, std::vector<SVec> cols);

    static SparseMatrix identity(Index n, const Field& f);
    static SparseMatrix zero(Index rows, Index cols) { return SparseMatrix(rows, cols); }
    // entries given as (row, col, value); duplicates are summed.
    static SparseMatrix from_triplets(Index rows, Index cols,
                                      const std::vector<std::tuple<Index, Index, Scalar>>& t);

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(cols_.size()); }
    const SVec& col(Index j) const { return cols_[j]; }
    void set_col(Index j, SVec v);
    std::size_t nnz() const;
    double density() const;
    Scalar at(Index i, Index j) const { return cols_[j].get(i); }

    SVec apply(const SVec& x) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& a) const;
    SparseMatrix transpose() const;
    std::vector<SVec> rows_vec() const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const;
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    // Triplets in canonical (column, row) order.
    std::vector<std::tuple<Index, Index, Scalar>> triplets() const;
    std::string to_string() const;

private:
    Index rows_ = 0;
    std::vector<SVec> cols_;
};

// Kronecker product a ⊗ b in the row-major tensor convention.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
// Vertical stacking of matrices with equal column counts.
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);

}  // namespace hopfcyc
