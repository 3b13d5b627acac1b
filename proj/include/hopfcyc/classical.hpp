#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/group.hpp"
#include "hopfcyc/report.hpp"

namespace hopfcyc {

using Tuple = std::vector<int>;

// Finite left G-set: act[g][x] = g·x.
struct GSet {
    int points = 0;
    std::vector<std::vector<int>> act;
    std::vector<std::string> names;

    // Left cosets gH: H itself first, the rest ordered by smallest element.
    static GSet cosets(const FiniteGroup& g, const std::vector<int>& h);
    static GSet point(const FiniteGroup& g);
    Report check(const FiniteGroup& g) const;
};

// Orbit sets with index-table operators, following the cocyclic module layout:
// cofaces[n][i]: X_n → X_{n+1} (0 ≤ i ≤ n+1), codegens[n][j]: X_n → X_{n-1} (0 ≤ j ≤ n-1).
struct CocyclicFiniteSet {
    std::string name;
    int n_max = 0;
    std::vector<std::vector<Tuple>> points;  // lexicographically least representatives, sorted
    std::vector<std::vector<std::vector<int>>> cofaces;
    std::vector<std::vector<std::vector<int>>> codegens;
    std::vector<std::vector<int>> cocyclic;
    // Orbit maps that differ on some raw tuple of the same class, as "op on degree n".
    std::vector<std::string> ill_defined;

    // Every raw tuple of degree n to the index of its class.
    std::vector<std::map<Tuple, int>> classes;

    std::size_t size(int n) const { return points[static_cast<std::size_t>(n)].size(); }
    std::vector<std::int64_t> sizes() const;
    // Throws std::out_of_range for tuples outside the set.
    int class_of(int n, const Tuple& raw) const;
};

// Linear span k[X_n] with the induced maps.
CocyclicModule linear_span(const CocyclicFiniteSet& x, const Field& f = Field());

// Cosimplicial and cocyclic identities, by composing index tables.
Report check_identities(const CocyclicFiniteSet& x);

// Degreewise maps between two cocyclic finite sets.
struct FiniteSetMap {
    std::string name;
    std::vector<std::vector<int>> components;
    // Raw tuples of one class sent to different classes, as "degree n".
    std::vector<std::string> ill_defined;
};
// Intertwining of cofaces, codegeneracies and τ.
Report check_set_map(const FiniteSetMap& f, const CocyclicFiniteSet& source, const CocyclicFiniteSet& target);
Report check_set_inverse(const FiniteSetMap& f, const FiniteSetMap& g, const CocyclicFiniteSet& a,
                         const CocyclicFiniteSet& b);

// Functions on X_n as a cyclic module: faces and degeneracies are pullbacks.
CyclicModule functions(const CocyclicFiniteSet& x, const Field& f = Field());

// Direct picture: fiber powers of G → G/H and (H^{n+1} ×_G pt) × G, tuples written (h₀,…,hₙ,g).
CocyclicFiniteSet fiber_power_set(const FiniteGroup& g, const std::vector<int>& h, int n_max);
CocyclicFiniteSet trivial_product_set(const FiniteGroup& g, const std::vector<int>& h, int n_max);
// Dual picture: G^{n+1}/H^{n+1} and G\(ad(G) × X^{n+1}), tuples written (g̃, x₀,…,xₙ).
CocyclicFiniteSet twisted_quotient_set(const FiniteGroup& g, const std::vector<int>& h, int n_max);
CocyclicFiniteSet ad_orbit_set(const FiniteGroup& g, const GSet& x, int n_max, const std::string& name = "");

Report direct_picture_iso(const FiniteGroup& g, const std::vector<int>& h, int n_max);
Report dual_picture_iso(const FiniteGroup& g, const std::vector<int>& h, int n_max);

// LHS stabilizers in H^{n+1} against RHS stabilizers in G, with their closed forms.
// Exhaustive when |G|^{n+1}·|H|^{n+1} fits the budget, otherwise `sample` seeded random tuples.
Report stabilizer_coincidence(const FiniteGroup& g, const std::vector<int>& h, int n, int sample = 200,
                              std::uint64_t seed = 0);
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

// Orbit representatives (g̃, x₀,…,xₙ) with g̃ fixing every xᵢ.
std::vector<Tuple> extended_quotient(const FiniteGroup& g, const GSet& x, int n);
// The cocyclic operators on G\(ad(G) × X^{•+1}) restrict to the extended quotients; for X = G/H the
// inverse map lands on the classes with every cyclic product of the gᵢ in H.
Report extended_quotient_check(const FiniteGroup& g, const GSet& x, int n_max);
Report extended_quotient_image_check(const FiniteGroup& g, const std::vector<int>& h, int n_max);

// One value per conjugacy class (G-classes, or H-classes for a subgroup, ordered by smallest element).
struct ClassFunction {
    std::vector<Scalar> values;
};
class NotClassFunction : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Conjugacy classes of the subgroup h under its own conjugation.
std::vector<std::vector<int>> subgroup_classes(const FiniteGroup& g, const std::vector<int>& h);
// Per-element values on h (sorted elements) to a class function; throws NotClassFunction.
ClassFunction class_function(const FiniteGroup& g, const std::vector<int>& h, const std::vector<Scalar>& per_element);

// Induced class function as Tr_p ∘ Tr_i on G\(ad(G) × G/H).
ClassFunction frobenius(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& chi);
// Sum over cosets gH with g⁻¹g̃g ∈ H.
ClassFunction induced_by_cosets(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& chi);
// (1/|H|) Σ_{x ∈ G, x⁻¹g̃x ∈ H} χ(x⁻¹g̃x).
ClassFunction induced_classical(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& chi);
// ⟨a, b⟩ = (1/|G|) Σ a(g) b(g⁻¹) over G (or over the subgroup h).
Scalar class_pairing(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& a, const ClassFunction& b);
ClassFunction restrict_to(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& theta);
// The three routes agree, and reciprocity holds against every class indicator of G.
Report frobenius_check(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& chi);

// #classes = #G\ad(G) = dim HH₀(kG).
Report class_function_dim_check(const FiniteGroup& g, const Field& f = Field());

// Throws std::invalid_argument unless char f does not divide |G|.
void require_coprime_characteristic(const FiniteGroup& g, const Field& f);

}  // namespace hopfcyc
