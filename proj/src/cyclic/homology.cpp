#include "hopfcyc/cyclic.hpp"

namespace hopfcyc {

namespace {

SparseMatrix power(const SparseMatrix& m, int k, const Field& f) {
    SparseMatrix r = SparseMatrix::identity(m.cols(), f);
    for (int i = 0; i < k; ++i) r = m * r;
    return r;
}

std::string label(const std::string& op, int n) { return op + " on degree " + std::to_string(n); }

// Compares two maps and records the first mismatching column.
void expect_equal(Report& r, const std::string& name, const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        r.fail(name, "shape mismatch");
        return;
    }
    for (Index j = 0; j < a.cols(); ++j)
        if (a.col(j) != b.col(j)) {
            r.fail(name, "column " + std::to_string(j) + ": " + a.col(j).to_string() + " vs " + b.col(j).to_string());
            return;
        }
    r.pass(name);
}

// Aggregates many identity instances into a single check per family.
class Family {
public:
    Family(Report& r, std::string name) : r_(r), name_(std::move(name)) {}
    void expect(const std::string& where, const SparseMatrix& a, const SparseMatrix& b) {
        ++count_;
        if (!failure_.empty()) return;
        Report tmp("");
        expect_equal(tmp, where, a, b);
        if (!tmp.ok()) failure_ = where + ": " + tmp.checks().front().detail;
    }
    ~Family() {
        if (count_ == 0) r_.skip(name_, "no instances in range");
        else if (failure_.empty()) r_.pass(name_, std::to_string(count_) + " instances");
        else r_.fail(name_, failure_);
    }

private:
    Report& r_;
    std::string name_;
    std::string failure_;
    int count_ = 0;
};

SparseMatrix signed_cyclic(const CyclicModule& x, int n) {
    return (n % 2 == 0) ? x.cyclic[n] : x.cyclic[n].scaled(-x.field.one());
}

SparseMatrix norm_operator(const CyclicModule& x, int n) {
    SparseMatrix lam = signed_cyclic(x, n);
    SparseMatrix acc = SparseMatrix::identity(x.dim(n), x.field), p = acc;
    for (int k = 1; k <= n; ++k) {
        p = lam * p;
        acc = acc + p;
    }
    return acc;
}

SparseMatrix extra_degeneracy(const CyclicModule& x, int n) { return x.cyclic[n + 1] * x.degens[n][n]; }

// Block matrix from (row block, col block, matrix) triples.
SparseMatrix assemble_blocks(const std::vector<Index>& row_dims, const std::vector<Index>& col_dims,
                             const std::vector<std::tuple<std::size_t, std::size_t, SparseMatrix>>& parts) {
    std::vector<Index> ro(row_dims.size() + 1, 0), co(col_dims.size() + 1, 0);
    for (std::size_t i = 0; i < row_dims.size(); ++i) ro[i + 1] = ro[i] + row_dims[i];
    for (std::size_t i = 0; i < col_dims.size(); ++i) co[i + 1] = co[i] + col_dims[i];
    std::vector<std::vector<SVec::Entry>> cols(static_cast<std::size_t>(co.back()));
    for (const auto& [rb, cb, m] : parts)
        for (Index j = 0; j < m.cols(); ++j)
            for (const auto& [i, c] : m.col(j).entries()) cols[co[cb] + j].emplace_back(ro[rb] + i, c);
    std::vector<SVec> out;
    out.reserve(cols.size());
    for (auto& c : cols) out.push_back(SVec::from_pairs(std::move(c)));
    return SparseMatrix(ro.back(), std::move(out));
}

// A chain complex in degrees 0..top given by its boundary maps d[k]: X_k → X_{k-1}.
std::vector<std::int64_t> homology_dims(const std::vector<Index>& dims, const std::vector<SparseMatrix>& d, int n) {
    std::vector<Index> ranks(d.size(), 0);
    for (std::size_t k = 1; k < d.size(); ++k) ranks[k] = rank(d[k]);
    std::vector<std::int64_t> out;
    for (int k = 0; k <= n; ++k) out.push_back(dims[k] - ranks[k] - ranks[k + 1]);
    return out;
}

void require(const CyclicModule& x, int n, int slack, const char* what) {
    if (n < 0 || n > x.n_max - slack)
        throw DegreeError(std::string(what) + " up to degree " + std::to_string(n) + " needs n_max ≥ " +
                          std::to_string(n + slack) + " (have " + std::to_string(x.n_max) + ")");
}

// Total complex of the (b, B) bicomplex given b[k]: X_k → X_{k-1} and B[k]: X_k → X_{k+1}.
std::vector<std::int64_t> bicomplex_homology(const std::vector<Index>& dims, const std::vector<SparseMatrix>& b,
                                             const std::vector<SparseMatrix>& bb, int n) {
    auto tot_dims = [&](int m) {
        std::vector<Index> v;
        for (int k = 0; 2 * k <= m; ++k) v.push_back(dims[m - 2 * k]);
        return v;
    };
    std::vector<Index> tdim;
    std::vector<SparseMatrix> d(1);
    for (int m = 0; m <= n + 1; ++m) {
        auto cd = tot_dims(m);
        Index total = 0;
        for (Index v : cd) total += v;
        tdim.push_back(total);
        if (m == 0) continue;
        auto rd = tot_dims(m - 1);
        std::vector<std::tuple<std::size_t, std::size_t, SparseMatrix>> parts;
        for (int k = 0; 2 * k <= m; ++k) {
            int deg = m - 2 * k;
            if (deg >= 1) parts.emplace_back(k, k, b[deg]);
            if (k >= 1) parts.emplace_back(k - 1, k, bb[deg]);
        }
        d.push_back(assemble_blocks(rd, cd, parts));
    }
    return homology_dims(tdim, d, n);
}

}  // namespace

Report check_identities(const CyclicModule& x) {
    Report r("cyclic identities: " + x.name);
    const Field& f = x.field;
    int N = x.n_max;
    auto id = [&](int n) { return SparseMatrix::identity(x.dim(n), f); };
    {
        Family fam(r, "d_i d_j = d_{j-1} d_i (i < j)");
        for (int n = 2; n <= N; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    fam.expect(label("d" + std::to_string(i) + "d" + std::to_string(j), n),
                               x.faces[n - 1][i] * x.faces[n][j], x.faces[n - 1][j - 1] * x.faces[n][i]);
    }
    {
        Family fam(r, "s_i s_j = s_{j+1} s_i (i <= j)");
        for (int n = 0; n + 2 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    fam.expect(label("s" + std::to_string(i) + "s" + std::to_string(j), n),
                               x.degens[n + 1][i] * x.degens[n][j], x.degens[n + 1][j + 1] * x.degens[n][i]);
    }
    {
        Family fam(r, "d_i s_j relations");
        for (int n = 0; n + 1 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    SparseMatrix lhs = x.faces[n + 1][i] * x.degens[n][j];
                    std::string w = label("d" + std::to_string(i) + "s" + std::to_string(j), n);
                    if (i == j || i == j + 1) fam.expect(w, lhs, id(n));
                    else if (i < j) fam.expect(w, lhs, x.degens[n - 1][j - 1] * x.faces[n][i]);
                    else fam.expect(w, lhs, x.degens[n - 1][j] * x.faces[n][i - 1]);
                }
    }
    {
        Family fam(r, "d_i t = t d_{i-1}, d_0 t = d_n");
        for (int n = 1; n <= N; ++n) {
            fam.expect(label("d0 t", n), x.faces[n][0] * x.cyclic[n], x.faces[n][n]);
            for (int i = 1; i <= n; ++i)
                fam.expect(label("d" + std::to_string(i) + " t", n), x.faces[n][i] * x.cyclic[n],
                           x.cyclic[n - 1] * x.faces[n][i - 1]);
        }
    }
    {
        Family fam(r, "s_i t = t s_{i-1}, s_0 t = t^2 s_n");
        for (int n = 0; n + 1 <= N; ++n) {
            fam.expect(label("s0 t", n), x.degens[n][0] * x.cyclic[n],
                       x.cyclic[n + 1] * x.cyclic[n + 1] * x.degens[n][n]);
            for (int i = 1; i <= n; ++i)
                fam.expect(label("s" + std::to_string(i) + " t", n), x.degens[n][i] * x.cyclic[n],
                           x.cyclic[n + 1] * x.degens[n][i - 1]);
        }
    }
    {
        Family fam(r, "t^{n+1} = id");
        for (int n = 0; n <= N; ++n) fam.expect(label("t^{n+1}", n), power(x.cyclic[n], n + 1, f), id(n));
    }
    return r;
}

Report check_identities(const CocyclicModule& x) {
    Report r("cocyclic identities: " + x.name);
    const Field& f = x.field;
    int N = x.n_max;
    auto id = [&](int n) { return SparseMatrix::identity(x.dim(n), f); };
    {
        Family fam(r, "δ_j δ_i = δ_i δ_{j-1} (i < j)");
        for (int n = 0; n + 2 <= N; ++n)
            for (int j = 1; j <= n + 2; ++j)
                for (int i = 0; i < j; ++i)
                    fam.expect(label("δ" + std::to_string(j) + "δ" + std::to_string(i), n),
                               x.cofaces[n + 1][j] * x.cofaces[n][i], x.cofaces[n + 1][i] * x.cofaces[n][j - 1]);
    }
    {
        Family fam(r, "σ_j σ_i = σ_i σ_{j+1} (i <= j)");
        for (int n = 2; n <= N; ++n)
            for (int j = 0; j <= n - 2; ++j)
                for (int i = 0; i <= j; ++i)
                    fam.expect(label("σ" + std::to_string(j) + "σ" + std::to_string(i), n),
                               x.codegens[n - 1][j] * x.codegens[n][i], x.codegens[n - 1][i] * x.codegens[n][j + 1]);
    }
    {
        Family fam(r, "σ_j δ_i relations");
        for (int n = 0; n + 1 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    SparseMatrix lhs = x.codegens[n + 1][j] * x.cofaces[n][i];
                    std::string w = label("σ" + std::to_string(j) + "δ" + std::to_string(i), n);
                    if (i == j || i == j + 1) fam.expect(w, lhs, id(n));
                    else if (i < j) fam.expect(w, lhs, x.cofaces[n - 1][i] * x.codegens[n][j - 1]);
                    else fam.expect(w, lhs, x.cofaces[n - 1][i - 1] * x.codegens[n][j]);
                }
    }
    {
        Family fam(r, "τ δ_i = δ_{i-1} τ, τ δ_0 = δ_n");
        for (int n = 0; n + 1 <= N; ++n) {
            fam.expect(label("τ δ0", n), x.cocyclic[n + 1] * x.cofaces[n][0], x.cofaces[n][n + 1]);
            for (int i = 1; i <= n + 1; ++i)
                fam.expect(label("τ δ" + std::to_string(i), n), x.cocyclic[n + 1] * x.cofaces[n][i],
                           x.cofaces[n][i - 1] * x.cocyclic[n]);
        }
    }
    {
        Family fam(r, "τ σ_i = σ_{i-1} τ, τ σ_0 = σ_n τ^2");
        for (int n = 1; n <= N; ++n) {
            fam.expect(label("τ σ0", n), x.cocyclic[n - 1] * x.codegens[n][0],
                       x.codegens[n][n - 1] * x.cocyclic[n] * x.cocyclic[n]);
            for (int i = 1; i <= n - 1; ++i)
                fam.expect(label("τ σ" + std::to_string(i), n), x.cocyclic[n - 1] * x.codegens[n][i],
                           x.codegens[n][i - 1] * x.cocyclic[n]);
        }
    }
    {
        Family fam(r, "τ^{n+1} = id");
        for (int n = 0; n <= N; ++n) fam.expect(label("τ^{n+1}", n), power(x.cocyclic[n], n + 1, f), id(n));
    }
    return r;
}

SparseMatrix hochschild_boundary(const CyclicModule& x, int n) {
    if (n < 1 || n > x.n_max) throw DegreeError("no boundary on degree " + std::to_string(n));
    SparseMatrix b(x.dim(n - 1), x.dim(n));
    for (int i = 0; i <= n; ++i) b = (i % 2 == 0) ? b + x.faces[n][i] : b - x.faces[n][i];
    return b;
}

std::vector<std::int64_t> hochschild_homology(const CyclicModule& x, int n) {
    require(x, n, 1, "Hochschild homology");
    std::vector<Index> dims;
    std::vector<SparseMatrix> d(1);
    for (int k = 0; k <= n + 1; ++k) {
        dims.push_back(x.dim(k));
        if (k >= 1) d.push_back(hochschild_boundary(x, k));
    }
    return homology_dims(dims, d, n);
}

SparseMatrix connes_boundary(const CyclicModule& x, int n) {
    if (n < 0 || n + 1 > x.n_max) throw DegreeError("no B operator on degree " + std::to_string(n));
    SparseMatrix one_minus = SparseMatrix::identity(x.dim(n + 1), x.field) - signed_cyclic(x, n + 1);
    return one_minus * extra_degeneracy(x, n) * norm_operator(x, n);
}

std::vector<std::int64_t> cyclic_homology(const CyclicModule& x, int n, HcMethod method) {
    require(x, n, 1, "cyclic homology");
    std::vector<Index> dims;
    std::vector<SparseMatrix> b(1), bb;
    if (method == HcMethod::BBicomplex) {
        for (int k = 0; k <= n + 1; ++k) {
            dims.push_back(x.dim(k));
            if (k >= 1) b.push_back(hochschild_boundary(x, k));
            if (k <= n) bb.push_back(connes_boundary(x, k));
        }
        return bicomplex_homology(dims, b, bb, n);
    }
    if (method == HcMethod::NormalizedBBicomplex) {
        std::vector<SubquotientSpace> q;
        for (int k = 0; k <= n + 1; ++k) {
            std::vector<SVec> rel;
            for (int j = 0; k >= 1 && j < k; ++j) {
                const SparseMatrix& s = x.degens[k - 1][j];
                for (Index c = 0; c < s.cols(); ++c)
                    if (!s.col(c).empty()) rel.push_back(s.col(c));
            }
            q.push_back(quotient_by(x.dim(k), rel, x.field));
            dims.push_back(q.back().dim());
        }
        for (int k = 1; k <= n + 1; ++k)
            b.push_back(induced_map(hochschild_boundary(x, k), q[k], q[k - 1], "normalized b"));
        for (int k = 0; k <= n; ++k)
            bb.push_back(induced_map(extra_degeneracy(x, k) * norm_operator(x, k), q[k], q[k + 1], "normalized B"));
        return bicomplex_homology(dims, b, bb, n);
    }
    std::vector<SubquotientSpace> q;
    for (int k = 0; k <= n + 1; ++k) {
        SparseMatrix rel = SparseMatrix::identity(x.dim(k), x.field) - signed_cyclic(x, k);
        std::vector<SVec> cols;
        for (Index c = 0; c < rel.cols(); ++c)
            if (!rel.col(c).empty()) cols.push_back(rel.col(c));
        q.push_back(quotient_by(x.dim(k), cols, x.field));
        dims.push_back(q.back().dim());
    }
    for (int k = 1; k <= n + 1; ++k) b.push_back(induced_map(hochschild_boundary(x, k), q[k], q[k - 1], "Connes b"));
    return homology_dims(dims, b, n);
}

}  // namespace hopfcyc
