#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

using Digits = std::vector<Index>;

// A linear map between tensor products of basis spaces, stored as a table from
// the packed input index to a packed output vector.
struct SlotMap {
    std::vector<Index> in_dims;
    std::vector<Index> out_dims;
    std::vector<SVec> table;

    Index in_size() const;
    Index out_size() const;
    // Single-slot map given by a matrix (column j = image of e_j).
    static SlotMap from_matrix(const SparseMatrix& m);
    static SlotMap from_function(std::vector<Index> in_dims, std::vector<Index> out_dims,
                                 const std::function<SVec(Index)>& f);
    SparseMatrix matrix() const;
};

// Element of V_0 ⊗ ... ⊗ V_{k-1} as a list of basis terms.
class Tensor {
public:
    struct Term {
        Digits d;
        Scalar c;
    };

    Tensor() = default;
    explicit Tensor(std::vector<Index> dims) : dims_(std::move(dims)) {}
    static Tensor basis(std::vector<Index> dims, Digits d, const Scalar& one);
    static Tensor from_svec(std::vector<Index> dims, const SVec& v);

    const std::vector<Index>& dims() const { return dims_; }
    std::size_t slots() const { return dims_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const;

    void add(Digits d, const Scalar& c);
    void add(const Tensor& t, const Scalar& c);

    // Replaces slots [first, first + m.in_dims.size()) by the outputs of m.
    Tensor apply(std::size_t first, const SlotMap& m) const;
    // Slot k of the result is slot order[k] of this tensor.
    Tensor permute(const std::vector<std::size_t>& order) const;
    Tensor move_slot(std::size_t from, std::size_t to) const;
    // Inserts a new slot of dimension dim holding v at position pos.
    Tensor insert(std::size_t pos, Index dim, const SVec& v) const;
    // Tensor product: this ⊗ o.
    Tensor outer(const Tensor& o) const;
    Tensor scaled(const Scalar& a) const;

    void canonicalize();
    SVec pack() const;

private:
    std::vector<Index> dims_;
    std::vector<Term> terms_;
};

// A space presented inside the tensor product of basis spaces of the given dims.
struct TensorSpace {
    std::vector<Index> dims;
    SubquotientSpace space;

    Index dim() const { return space.dim(); }
    Index ambient_dim() const;
    static TensorSpace whole(std::vector<Index> dims, const Field& f);
};

using Formula = std::function<Tensor(const Digits&)>;

// Packs a formula into a map on ambient basis indices.
AmbientMap ambient_map(const Formula& f, const std::vector<Index>& dom_dims);

// Matrix of the map induced by f on reduced coordinates, with the descent check.
SparseMatrix descend(const Formula& f, const TensorSpace& dom, const TensorSpace& cod, const std::string& what);

// Formula on a space where the listed slots hold elements of a quotient coalgebra:
// each such slot is replaced by its lift before applying f.
Formula through_lifts(const Formula& f, const std::vector<Index>& lifted_dims,
                      const std::vector<std::size_t>& slots, const SlotMap& lift, const Scalar& one);

// Verifies that f, defined on lifted coordinates, vanishes in cod whenever one of
// the listed slots holds an element of the ideal. Throws DescentError otherwise.
void check_lift_independence(const Formula& f, const std::vector<Index>& lifted_dims,
                             const std::vector<std::size_t>& slots, const std::vector<SVec>& ideal_basis,
                             const TensorSpace& cod, const std::string& what);

// All digit tuples for the given dims in row-major order.
std::vector<Digits> all_digits(const std::vector<Index>& dims);

}  // namespace hopfcyc
