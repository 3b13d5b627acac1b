#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/group.hpp"
#include "hopfcyc/report.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

class HopfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raw structure constants of a finite-dimensional Hopf algebra.
struct HopfData {
    std::string name;
    Field field;
    std::vector<std::string> basis;
    std::vector<SVec> mult;    // index i*dim+j: e_i e_j
    SVec unit;                 // η(1)
    std::vector<SVec> comult;  // index k: Δ(e_k) packed over i*dim+j
    std::vector<Scalar> counit;
    SparseMatrix antipode;
};

class HopfAlgebra {
public:
    HopfAlgebra() = default;
    // Checks shapes and computes S⁻¹ when S is invertible; axioms are left to validate().
    static HopfAlgebra build(HopfData data);

    const HopfData& data() const { return *data_; }
    const std::string& name() const { return data_->name; }
    const Field& field() const { return data_->field; }
    Index dim() const { return static_cast<Index>(data_->basis.size()); }
    const std::vector<std::string>& basis_names() const { return data_->basis; }
    Scalar one_scalar() const { return data_->field.one(); }

    const SlotMap& mult_map() const { return maps_->mult; }          // (d,d) -> (d)
    const SlotMap& unit_map() const { return maps_->unit; }          // () -> (d)
    const SlotMap& comult_map() const { return maps_->comult; }      // (d) -> (d,d)
    const SlotMap& counit_map() const { return maps_->counit; }      // (d) -> ()
    const SlotMap& antipode_map() const { return maps_->antipode; }  // (d) -> (d)
    bool antipode_invertible() const { return maps_->antipode_inv.has_value(); }
    const SlotMap& antipode_inv_map() const;
    const SparseMatrix& antipode() const { return data_->antipode; }
    SparseMatrix antipode_inverse() const { return antipode_inv_map().matrix(); }

    SVec one() const { return data_->unit; }
    SVec basis_vector(Index i) const { return SVec::unit(i, one_scalar()); }
    SVec mul(const SVec& a, const SVec& b) const;
    SVec mul(Index i, Index j) const { return data_->mult[i * dim() + j]; }
    Scalar counit(const SVec& a) const;
    SVec S(const SVec& a) const { return data_->antipode.apply(a); }
    SVec S_inv(const SVec& a) const { return antipode_inverse().apply(a); }
    // Δ^{(k-1)}(a) as a tensor with k slots, splitting the leftmost slot each time.
    Tensor comult_power(const SVec& a, std::size_t pieces) const;
    // Replaces slot b by nothing and slot a by (slot a)·(slot b).
    Tensor mul_slots(const Tensor& t, std::size_t a, std::size_t b) const;
    // Each output slot is the ordered product of the listed slots of t (empty list: 1).
    Tensor assemble(const Tensor& t, const std::vector<std::vector<std::size_t>>& products) const;

    // Slot i of f multiplies slot target[i] of acc from the right (or the left).
    Tensor multiply_into(const Tensor& acc, const Tensor& f, const std::vector<std::size_t>& target,
                         bool from_right = true) const;
    // k slots holding 1.
    Tensor ones(std::size_t k) const;

    bool is_commutative() const;
    bool is_cocommutative() const;

private:
    struct Maps {
        SlotMap mult, unit, comult, counit, antipode;
        std::optional<SlotMap> antipode_inv;
    };
    std::shared_ptr<const HopfData> data_;
    std::shared_ptr<const Maps> maps_;
};

// Axiom report: associativity, unit, coassociativity, counit, bialgebra
// compatibility, antipode identities, invertibility of S. Never throws.
Report validate(const HopfAlgebra& h);

HopfAlgebra group_algebra(const FiniteGroup& g, const Field& f = Field());
HopfAlgebra function_algebra(const FiniteGroup& g, const Field& f = Field());
HopfAlgebra sweedler(const Field& f = Field());
// Built-ins: k, kC2, kC3, kS3, kQ8, OC2, OS3, H4.
HopfAlgebra builtin_hopf(const std::string& name, const Field& f = Field());
std::vector<std::string> builtin_hopf_names();

}  // namespace hopfcyc
