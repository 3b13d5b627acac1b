// Acceptance suite: one line per criterion, runtime limits pinned below.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hopfcyc/classical.hpp"
#include "hopfcyc/cli.hpp"
#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/galois.hpp"
#include "hopfcyc/hopf.hpp"
#include "hopfcyc/iso.hpp"
#include "hopfcyc/sayd.hpp"
#include "hopfcyc/specseq.hpp"

using namespace hopfcyc;
using Dims = std::vector<std::int64_t>;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void require(const Report& r, const std::string& what) {
        if (const Check* c = r.first_failure()) require(false, what + ": " + c->name + ": " + c->detail);
    }
};

std::string dims_str(const Dims& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

// ---- independent Hochschild oracle ----
// Normalized Hochschild complex A ⊗ Ā^{⊗n} for an algebra with integer structure constants and
// e_0 = 1, with ranks taken densely mod a prime that divides none of the torsion in play.

constexpr std::uint64_t kOraclePrime = 1000003;

using Product = std::function<std::vector<std::pair<int, long>>(int, int)>;

std::uint64_t mod(long v) {
    long r = v % static_cast<long>(kOraclePrime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kOraclePrime) : r);
}

std::uint64_t power(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (a %= kOraclePrime; e; e >>= 1, a = a * a % kOraclePrime)
        if (e & 1) r = r * a % kOraclePrime;
    return r;
}

std::size_t dense_rank(const std::vector<std::map<std::size_t, std::uint64_t>>& cols, std::size_t rows) {
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    for (const auto& c : cols) {
        std::vector<std::uint64_t> v(rows, 0);
        for (const auto& [i, x] : c) v[i] = x;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::uint64_t f = v[pivots[k]];
            if (!f) continue;
            for (std::size_t i = 0; i < rows; ++i)
                if (basis[k][i]) v[i] = (v[i] + (kOraclePrime - f) * basis[k][i]) % kOraclePrime;
        }
        std::size_t p = 0;
        while (p < rows && !v[p]) ++p;
        if (p == rows) continue;
        std::uint64_t inv = power(v[p], kOraclePrime - 2);
        for (auto& x : v) x = x * inv % kOraclePrime;
        basis.push_back(std::move(v));
        pivots.push_back(p);
    }
    return basis.size();
}

// dims of HH_0..HH_top; `block` must be constant along the Hochschild boundary.
Dims hochschild_oracle(int dim, const Product& mul, int top, const std::function<int(const std::vector<int>&)>& block) {
    std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(top + 2));
    for (int n = 0; n <= top + 1; ++n) {
        std::vector<int> t(static_cast<std::size_t>(n + 1), 1);
        t[0] = 0;
        while (true) {
            tuples[static_cast<std::size_t>(n)].push_back(t);
            int k = 0;
            while (k <= n) {
                int lo = k == 0 ? 0 : 1;
                if (++t[static_cast<std::size_t>(k)] < dim) break;
                t[static_cast<std::size_t>(k)] = lo;
                ++k;
            }
            if (k > n) break;
        }
    }
    // rank of b_n : C̄_n → C̄_{n-1}, block by block
    auto rank_of = [&](int n) -> std::size_t {
        std::map<int, std::map<std::vector<int>, std::size_t>> row_index;
        for (const auto& t : tuples[static_cast<std::size_t>(n - 1)]) {
            auto& m = row_index[block(t)];
            m.emplace(t, m.size());
        }
        std::map<int, std::vector<std::map<std::size_t, std::uint64_t>>> cols;
        for (const auto& t : tuples[static_cast<std::size_t>(n)]) {
            auto& rows = row_index[block(t)];
            std::map<std::size_t, std::uint64_t> col;
            auto add = [&](const std::vector<int>& u, long c) {
                auto it = rows.find(u);
                if (it == rows.end()) throw std::logic_error("oracle block function is not preserved by b");
                col[it->second] = (col[it->second] + mod(c)) % kOraclePrime;
            };
            for (int j = 0; j < n; ++j) {
                for (const auto& [k, c] : mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j + 1)])) {
                    if (j > 0 && k == 0) continue;
                    std::vector<int> u(t.begin(), t.end());
                    u[static_cast<std::size_t>(j)] = k;
                    u.erase(u.begin() + j + 1);
                    add(u, j % 2 ? -c : c);
                }
            }
            for (const auto& [k, c] : mul(t[static_cast<std::size_t>(n)], t[0])) {
                std::vector<int> u(t.begin(), t.end() - 1);
                u[0] = k;
                add(u, n % 2 ? -c : c);
            }
            for (auto it = col.begin(); it != col.end();) it = it->second ? std::next(it) : col.erase(it);
            cols[block(t)].push_back(std::move(col));
        }
        std::size_t r = 0;
        for (auto& [key, cs] : cols) r += dense_rank(cs, row_index[key].size());
        return r;
    };
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int n = 1; n <= top + 1; ++n) ranks[static_cast<std::size_t>(n)] = rank_of(n);
    Dims hh;
    for (int n = 0; n <= top; ++n)
        hh.push_back(static_cast<std::int64_t>(tuples[static_cast<std::size_t>(n)].size()) -
                     static_cast<std::int64_t>(ranks[static_cast<std::size_t>(n)] + ranks[static_cast<std::size_t>(n + 1)]));
    return hh;
}

// Group algebra from the multiplication table alone, split by the conjugacy class of the product.
Dims group_hochschild_oracle(const std::vector<std::vector<int>>& table, int top) {
    int n = static_cast<int>(table.size());
    for (int x = 0; x < n; ++x)
        if (table[0][x] != x) throw std::logic_error("oracle needs the identity at index 0");
    std::vector<int> inv(static_cast<std::size_t>(n)), cls(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0) inv[a] = b;
    int classes = 0;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        for (int g = 0; g < n; ++g) cls[table[table[g][a]][inv[g]]] = classes;
        ++classes;
    }
    Product mul = [&table](int a, int b) { return std::vector<std::pair<int, long>>{{table[a][b], 1}}; };
    auto block = [&](const std::vector<int>& t) {
        int p = 0;
        for (int x : t) p = table[p][x];
        return cls[p];
    };
    return hochschild_oracle(n, mul, top, block);
}

Dims algebra_hochschild_oracle(const HopfAlgebra& h, int top) {
    if (h.one() != h.basis_vector(0)) throw std::logic_error("oracle needs e_0 = 1");
    Product mul = [&h](int a, int b) {
        std::vector<std::pair<int, long>> out;
        SVec prod = h.mul(static_cast<Index>(a), static_cast<Index>(b));
        for (const auto& [k, c] : prod.entries()) {
            mpq_class q = c.to_mpq();
            if (q.get_den() != 1) throw std::logic_error("oracle needs integer structure constants");
            out.emplace_back(static_cast<int>(k), q.get_num().get_si());
        }
        return out;
    };
    return hochschild_oracle(static_cast<int>(h.dim()), mul, top, [](const std::vector<int>&) { return 0; });
}

// ---- criteria ----

HopfAlgebra mutate(const HopfAlgebra& h, const std::function<void(HopfData&)>& edit) {
    HopfData d = h.data();
    edit(d);
    return HopfAlgebra::build(d);
}

Outcome criterion1() {
    Outcome o;
    int mutants = 0;
    for (const std::string& name : {"kC2", "kC3", "kS3", "OS3", "H4"}) {
        HopfAlgebra h = builtin_hopf(name);
        o.require(validate(h), name);
        Index d = h.dim();
        Scalar one = h.one_scalar();
        std::vector<std::pair<std::string, std::function<void(HopfData&)>>> edits = {
            {"mult", [&](HopfData& x) { x.mult[1 * d + 1] = x.mult[1 * d + 1] + SVec::unit(1, one); }},
            {"unit", [&](HopfData& x) { x.unit = x.unit + SVec::unit(1, one); }},
            {"comult", [&](HopfData& x) { x.comult[1] = x.comult[1] + SVec::unit(1 * d + 1, one); }},
            {"counit", [&](HopfData& x) { x.counit[1] = x.counit[1] + one; }},
            {"antipode", [&](HopfData& x) { x.antipode.set_col(1, x.antipode.col(1) + SVec::unit(0, one)); }},
        };
        for (const auto& [what, edit] : edits) {
            ++mutants;
            Report r = validate(mutate(h, edit));
            const Check* c = r.first_failure();
            o.require(c != nullptr, name + " " + what + " mutant passes validation");
            o.require(c == nullptr || !c->detail.empty(), name + " " + what + " mutant has no witness");
        }
    }
    if (o.ok) o.detail = "5 algebras valid, " + std::to_string(mutants) + " single-constant mutants rejected with witnesses";
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (const std::string& name : {"kS3/kC2", "kS3/kC3", "H4/x"}) {
        GaloisSetup s = builtin_setup(name);
        o.require(same_subspace(coinvariants(takeuchi_B_to_I(s.b)).space(), s.b.space()), name + ": round trip");
        o.require(galois_criterion(s.b, s.c), name);
        o.require(canonical_maps(s.b, s.c, 1).bijective, name + ": can1");
    }
    if (o.ok) o.detail = "kS3/kC2, kS3/kC3, H4/x: coinvariants(B+H) = B, I = B+H, can1 bijective";
    return o;
}

SparseMatrix perturbed(const SparseMatrix& m, const Field& f) {
    SparseMatrix out = m;
    if (m.is_zero()) {
        if (m.rows() > 0 && m.cols() > 0) out.set_col(0, SVec::unit(0, f.one()));
        return out;
    }
    Scalar two = f.from_int(2);
    for (Index j = 0; j < m.cols(); ++j) out.set_col(j, m.col(j).scaled(two));
    return out;
}

// Every single-operator mutant of x must break some identity.
template <class Module>
int operator_mutants(const Module& x, Outcome& o, const std::string& label,
                     const std::vector<std::pair<std::string, std::vector<std::vector<SparseMatrix>> Module::*>>& families,
                     std::vector<SparseMatrix> Module::*rotation) {
    int count = 0;
    for (const auto& [fname, member] : families) {
        const auto& fam = x.*member;
        for (std::size_t n = 0; n < fam.size(); ++n)
            for (std::size_t i = 0; i < fam[n].size(); ++i) {
                Module m = x;
                (m.*member)[n][i] = perturbed(fam[n][i], x.field);
                ++count;
                o.require(!check_identities(m).ok(),
                          label + ": mutant " + fname + "[" + std::to_string(n) + "][" + std::to_string(i) + "] survives");
            }
    }
    const auto& rot = x.*rotation;
    for (std::size_t n = 0; n < rot.size(); ++n) {
        Module m = x;
        (m.*rotation)[n] = perturbed(rot[n], x.field);
        ++count;
        o.require(!check_identities(m).ok(), label + ": mutant rotation[" + std::to_string(n) + "] survives");
    }
    return count;
}

Outcome criterion3() {
    Outcome o;
    int checked = 0;
    for (const auto& name : builtin_setup_names()) {
        GaloisSetup s = builtin_setup(name);
        auto ad = ad_module(s.h);
        auto coad = coad_left_right(s.h);
        const int n_max = 4;
        o.require(check_identities(relative_cyclic(s.b, n_max)), name + " relative");
        o.require(check_identities(coext_cyclic(s.c, n_max)), name + " coext");
        o.require(check_identities(relative_cocyclic_coext(s.c, n_max)), name + " cocyclic coext");
        o.require(check_identities(hopf_cyclic_coalgebra(s.c, ad, n_max)), name + " coalgebra");
        o.require(check_identities(hopf_cocyclic_coalgebra(s.c, ad, n_max)), name + " cocyclic coalgebra");
        o.require(check_identities(hopf_cyclic_comodule_algebra(s.b, coad, n_max)), name + " comodule algebra");
        checked += 6;
    }
    GaloisSetup s = builtin_setup("H4/x");
    const int n_max = 3;
    using CM = CyclicModule;
    using CC = CocyclicModule;
    std::vector<std::pair<std::string, std::vector<std::vector<SparseMatrix>> CM::*>> cyc = {{"face", &CM::faces},
                                                                                            {"degen", &CM::degens}};
    std::vector<std::pair<std::string, std::vector<std::vector<SparseMatrix>> CC::*>> cocyc = {
        {"coface", &CC::cofaces}, {"codegen", &CC::codegens}};
    int mutants = 0;
    mutants += operator_mutants(relative_cyclic(s.b, n_max), o, "relative", cyc, &CM::cyclic);
    mutants += operator_mutants(coext_cyclic(s.c, n_max), o, "coext", cyc, &CM::cyclic);
    mutants += operator_mutants(hopf_cyclic_coalgebra(s.c, ad_module(s.h), n_max), o, "coalgebra", cyc, &CM::cyclic);
    mutants += operator_mutants(hopf_cyclic_comodule_algebra(s.b, coad_left_right(s.h), n_max), o, "comodule algebra",
                                cyc, &CM::cyclic);
    mutants += operator_mutants(relative_cocyclic_coext(s.c, n_max), o, "cocyclic coext", cocyc, &CC::cocyclic);
    mutants += operator_mutants(hopf_cocyclic_coalgebra(s.c, ad_module(s.h), n_max), o, "cocyclic coalgebra", cocyc,
                                &CC::cocyclic);
    if (o.ok)
        o.detail = std::to_string(checked) + " constructions at n_max = 4 pass, " + std::to_string(mutants) +
                   " operator mutants on H4/x all fail";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const std::string& name : {"kS3/kC2", "H4/x"}) {
        GaloisSetup s = builtin_setup(name);
        CyclicModule rel = relative_side(s, 3), co = coalgebra_side(s, 3);
        CyclicMap ph = phi_map(s, rel, co), ps = psi_map(s, co, rel);
        o.require(check_cyclic_map(ph), name + " phi");
        o.require(check_cyclic_map(ps), name + " psi");
        o.require(check_inverse(ph, ps), name + " inverse");
    }
    if (o.ok) o.detail = "kS3/kC2, H4/x: psi, phi inverse and commute with d_i, s_j, t_n for n <= 3";
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (const std::string& name : {"kS3/kC2", "H4/x"}) {
        GaloisSetup s = builtin_setup(name);
        CyclicModule cm = comodule_algebra_side(s, 3), ce = coext_side(s, 3);
        CyclicMap g = gamma_map(s, cm, ce), gi = gamma_inv_map(s, ce, cm);
        o.require(check_cyclic_map(g), name + " gamma");
        o.require(check_cyclic_map(gi), name + " gamma^-1");
        o.require(check_inverse(g, gi), name + " inverse");
    }
    if (o.ok) o.detail = "kS3/kC2, H4/x: gamma, gamma^-1 inverse and commute with all operators for n <= 3";
    return o;
}

Outcome criterion6() {
    Outcome o;
    GaloisSetup s = builtin_setup("kS3/kC3");
    for (int n = 0; n <= 2; ++n) o.require(jara_stefan(s, n).report, "kS3/kC3 n=" + std::to_string(n));
    bool thrown = false;
    try {
        jara_stefan(builtin_setup("kS3/kC2"), 1);
    } catch (const NotHopfIdeal&) {
        thrown = true;
    }
    o.require(thrown, "kS3/kC2 did not take the non-Hopf-ideal path");
    if (o.ok) o.detail = "kS3/kC3: comparison map agrees with phi for n <= 2; kS3/kC2 rejected as non-Hopf ideal";
    return o;
}

Outcome criterion7() {
    Outcome o;
    struct Case {
        std::string name;
        Dims expected;
        Dims oracle;
    };
    const Dims h4_frozen = {2, 1, 1, 1};
    std::vector<Case> cases = {
        {"kC2", {2, 0, 0, 0}, group_hochschild_oracle(FiniteGroup::builtin("C2").table(), 3)},
        {"kS3", {3, 0, 0, 0}, group_hochschild_oracle(FiniteGroup::builtin("S3").table(), 3)},
        {"H4", h4_frozen, algebra_hochschild_oracle(builtin_hopf("H4"), 3)},
    };
    std::string summary;
    for (const auto& c : cases) {
        Report r = corollary36_check(builtin_hopf(c.name), 3);
        o.require(r, c.name);
        Dims hh, tr;
        for (const auto& [t, v] : r.tables()) {
            if (t == "HH") hh = v;
            if (t == "Tor") tr = v;
        }
        o.require(hh == c.expected, c.name + ": HH = " + dims_str(hh) + ", expected " + dims_str(c.expected));
        o.require(tr == c.expected, c.name + ": Tor = " + dims_str(tr) + ", expected " + dims_str(c.expected));
        o.require(c.oracle == c.expected, c.name + ": oracle gives " + dims_str(c.oracle));
        summary += (summary.empty() ? "" : ", ") + c.name + " " + dims_str(hh);
    }
    if (o.ok) o.detail = "HH = Tor: " + summary + "; brute-force mod-p oracle agrees";
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (const std::string& name : {"kS3/kC2", "H4/x"}) {
        GaloisSetup s = builtin_setup(name);
        o.require(theorem35_check(s, 2), name);
        o.require(five_term_check(s), name + " five-term");
    }
    if (o.ok) o.detail = "kS3/kC2, H4/x: E2 bottom row = HH(H|B), H(Tot) = Tor, transposed E2 collapses, five-term exact";
    return o;
}

Outcome criterion9() {
    Outcome o;
    FiniteGroup g = FiniteGroup::builtin("S3");
    std::vector<int> h = g.generated(parse_elements(g, "(12)"));
    o.require(direct_picture_iso(g, h, 2), "direct picture");
    o.require(dual_picture_iso(g, h, 2), "dual picture");
    for (int n = 0; n <= 1; ++n) {
        Report r = stabilizer_coincidence(g, h, n);
        o.require(r, "stabilizers n=" + std::to_string(n));
        std::int64_t tuples = 1;
        for (int i = 0; i <= n; ++i) tuples *= g.order();
        bool exhaustive = false;
        for (const auto& [t, v] : r.tables())
            if (t == "tuples checked") exhaustive = v == Dims{tuples};
        o.require(exhaustive, "stabilizers n=" + std::to_string(n) + " not exhaustive");
    }
    o.require(extended_quotient(g, GSet::cosets(g, h), 0).size() == 2, "|G\\(G/H)| != 2");

    // Coset-sum oracle straight from the multiplication table.
    auto coset_sum = [&](const std::vector<int>& chi_per_element) {
        std::vector<std::int64_t> out;
        for (const auto& cls : g.conjugacy_classes()) {
            int x = cls.front();
            std::int64_t total = 0;
            for (int t = 0; t < g.order(); ++t) {
                int y = g.mul(g.inv(t), g.mul(x, t));
                auto it = std::find(h.begin(), h.end(), y);
                if (it != h.end()) total += chi_per_element[static_cast<std::size_t>(it - h.begin())];
            }
            out.push_back(total / static_cast<std::int64_t>(h.size()));
        }
        return out;
    };
    const Dims triv_expected = {3, 1, 0}, sign_expected = {3, -1, 0};
    o.require(coset_sum({1, 1}) == triv_expected, "coset oracle for trivial");
    o.require(coset_sum({1, -1}) == sign_expected, "coset oracle for sign");

    Field q;
    std::vector<std::pair<ClassFunction, Dims>> chis = {
        {ClassFunction{{q.one(), q.one()}}, triv_expected},
        {ClassFunction{{q.one(), -q.one()}}, sign_expected},
    };
    // Irreducible characters of S3 on the classes {e}, {transpositions}, {3-cycles}.
    std::vector<ClassFunction> irreducibles = {
        {{q.from_int(1), q.from_int(1), q.from_int(1)}},
        {{q.from_int(1), q.from_int(-1), q.from_int(1)}},
        {{q.from_int(2), q.from_int(0), q.from_int(-1)}},
    };
    std::vector<int> everything(static_cast<std::size_t>(g.order()));
    std::iota(everything.begin(), everything.end(), 0);
    for (const auto& [chi, expected] : chis) {
        ClassFunction up = frobenius(g, h, chi);
        Dims got;
        for (const Scalar& v : up.values) got.push_back(v.to_mpq().get_num().get_si());
        o.require(got == expected, "induced " + dims_str(got) + " expected " + dims_str(expected));
        o.require(frobenius_check(g, h, chi), "three routes");
        for (const auto& theta : irreducibles)
            o.require(class_pairing(g, everything, up, theta) == class_pairing(g, h, chi, restrict_to(g, h, theta)),
                      "reciprocity against an irreducible");
    }
    if (o.ok)
        o.detail = "S3/<(12)>: both pictures iso for n <= 2, stabilizers exhaustive n <= 1, |G\\(G/H)| = 2, "
                   "induced (3,1,0) and (3,-1,0), reciprocity for 3 irreducibles";
    return o;
}

const std::vector<std::vector<std::string>> kSuite = {
    {"validate", "kC2"},
    {"validate", "H4"},
    {"galois", "kS3/kC2"},
    {"galois", "H4/x"},
    {"homology", "kS3/kC2", "--theory", "hc", "--max-degree", "2"},
    {"isocheck", "kS3/kC2", "--theorem", "3.4", "--max-degree", "3"},
    {"isocheck", "H4/x", "--theorem", "3.7", "--max-degree", "3"},
    {"isocheck", "kS3/kC3", "--theorem", "jara-stefan", "--max-degree", "2"},
    {"tor", "H4", "--max-degree", "3"},
    {"spectral", "kS3/kC2", "--max-degree", "2"},
    {"classical", "--group", "S3", "--subgroup", "(12)", "--op", "all"},
    {"classical", "--group", "Q8", "--subgroup", "i", "--op", "stabilizers", "--max-degree", "4"},
};

std::string run_suite(std::uint64_t seed, bool& all_zero) {
    std::string bytes;
    all_zero = true;
    for (auto args : kSuite) {
        args.insert(args.end(), {"--format", "json", "--seed", std::to_string(seed)});
        std::ostringstream out, err;
        if (cli::run(args, out, err) != 0) all_zero = false;
        bytes += out.str();
    }
    return bytes;
}

Outcome criterion10() {
    Outcome o;
    bool ok1 = false, ok2 = false;
    std::string a = run_suite(17, ok1), b = run_suite(17, ok2);
    o.require(ok1 && ok2, "a suite command exited non-zero");
    o.require(a == b, "JSON reports differ between runs");
    if (o.ok) o.detail = std::to_string(kSuite.size()) + " commands, " + std::to_string(a.size()) + " bytes, identical";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Hopf axiom suite", 5, criterion1},
        {2, "Takeuchi round trip and Galois criterion", 10, criterion2},
        {3, "cyclic identity suite", 120, criterion3},
        {4, "psi/phi isomorphism", 300, criterion4},
        {5, "gamma isomorphism", 300, criterion5},
        {6, "Jara-Stefan comparison", 60, criterion6},
        {7, "HH = Tor(k, ad H)", 120, criterion7},
        {8, "spectral sequence and five-term sequence", 300, criterion8},
        {9, "classical suite", 60, criterion9},
        {10, "determinism", 300, criterion10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && s > c.limit_s) {
            o.ok = false;
            o.detail = "over the time limit";
        }
        if (!o.ok) ++failed;
        std::printf("criterion %2d %s  %-42s %7.2fs / %4.0fs  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), s,
                    c.limit_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
