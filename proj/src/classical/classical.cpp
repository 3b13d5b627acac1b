#include "hopfcyc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace hopfcyc {

namespace {

using Op = std::function<Tuple(const Tuple&)>;

std::string at_degree(const std::string& op, int n) { return op + " on degree " + std::to_string(n); }

std::vector<int> checked_subgroup(const FiniteGroup& g, std::vector<int> h) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (!g.is_subgroup(h)) throw GroupError("not a subgroup of " + g.name());
    return h;
}

std::vector<bool> membership(const FiniteGroup& g, const std::vector<int>& h) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (int x : h) in[static_cast<std::size_t>(x)] = true;
    return in;
}

// All tuples in S^k.
std::vector<Tuple> powers(const std::vector<int>& s, int k) {
    std::vector<Tuple> out{Tuple{}};
    for (int i = 0; i < k; ++i) {
        std::vector<Tuple> next;
        for (const Tuple& t : out)
            for (int x : s) {
                Tuple u = t;
                u.push_back(x);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<int> all_elements(const FiniteGroup& g) {
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

struct SetModel {
    std::string name;
    std::function<std::vector<Tuple>(int)> raw;
    std::function<std::vector<Op>(int)> gens;
    std::function<Tuple(int, int, const Tuple&)> coface;
    std::function<Tuple(int, int, const Tuple&)> codegen;
    std::function<Tuple(int, const Tuple&)> tau;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

void orbit_classes(CocyclicFiniteSet& x, int n, const std::vector<Tuple>& raws, const std::vector<Op>& gens) {
    std::map<Tuple, int> id;
    for (const Tuple& t : raws) id.emplace(t, static_cast<int>(id.size()));
    std::vector<Tuple> by_id(id.size());
    for (const auto& [t, i] : id) by_id[static_cast<std::size_t>(i)] = t;
    std::vector<int> parent(id.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [t, i] : id)
        for (const Op& op : gens) {
            auto it = id.find(op(t));
            if (it == id.end()) throw std::logic_error(x.name + ": group action leaves the tuple set");
            int a = find_root(parent, i), b = find_root(parent, it->second);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    // ids follow lexicographic order, so each root is the least tuple of its class
    std::map<int, int> root_to_class;
    std::vector<Tuple> reps;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        int r = find_root(parent, static_cast<int>(i));
        if (root_to_class.emplace(r, static_cast<int>(reps.size())).second) reps.push_back(by_id[static_cast<std::size_t>(r)]);
    }
    std::map<Tuple, int> cls;
    for (const auto& [t, i] : id) cls.emplace(t, root_to_class.at(find_root(parent, i)));
    x.points[static_cast<std::size_t>(n)] = std::move(reps);
    x.classes[static_cast<std::size_t>(n)] = std::move(cls);
}

// Table of an orbit map from degree a to degree b, evaluated on representatives and
// compared on every raw tuple.
std::vector<int> table_of(CocyclicFiniteSet& x, int a, int b, const Op& op, const std::string& what) {
    std::vector<int> t;
    for (const Tuple& rep : x.points[static_cast<std::size_t>(a)]) t.push_back(x.class_of(b, op(rep)));
    for (const auto& [raw, c] : x.classes[static_cast<std::size_t>(a)])
        if (x.class_of(b, op(raw)) != t[static_cast<std::size_t>(c)]) {
            x.ill_defined.push_back(what);
            break;
        }
    return t;
}

CocyclicFiniteSet build(const SetModel& m, int n_max) {
    CocyclicFiniteSet x;
    x.name = m.name;
    x.n_max = n_max;
    auto levels = static_cast<std::size_t>(n_max) + 1;
    x.points.resize(levels);
    x.classes.resize(levels);
    x.cofaces.resize(levels);
    x.codegens.resize(levels);
    for (int n = 0; n <= n_max; ++n) orbit_classes(x, n, m.raw(n), m.gens ? m.gens(n) : std::vector<Op>{});
    for (int n = 0; n <= n_max; ++n) {
        if (n < n_max)
            for (int i = 0; i <= n + 1; ++i)
                x.cofaces[n].push_back(table_of(
                    x, n, n + 1, [&](const Tuple& t) { return m.coface(n, i, t); }, at_degree("δ" + std::to_string(i), n)));
        for (int j = 0; j <= n - 1; ++j)
            x.codegens[n].push_back(table_of(
                x, n, n - 1, [&](const Tuple& t) { return m.codegen(n, j, t); }, at_degree("σ" + std::to_string(j), n)));
        x.cocyclic.push_back(table_of(x, n, n, [&](const Tuple& t) { return m.tau(n, t); }, at_degree("τ", n)));
    }
    return x;
}

SparseMatrix span_matrix(const std::vector<int>& table, std::size_t target, const Field& f) {
    std::vector<SVec> cols;
    for (int y : table) cols.push_back(SVec::unit(static_cast<Index>(y), f.one()));
    return SparseMatrix(static_cast<Index>(target), std::move(cols));
}

FiniteSetMap make_map(const std::string& name, const CocyclicFiniteSet& src, const CocyclicFiniteSet& dst,
                      const std::function<Tuple(int, const Tuple&)>& fn) {
    FiniteSetMap f;
    f.name = name;
    for (int n = 0; n <= std::min(src.n_max, dst.n_max); ++n) {
        std::vector<int> comp;
        for (const Tuple& rep : src.points[static_cast<std::size_t>(n)]) comp.push_back(dst.class_of(n, fn(n, rep)));
        for (const auto& [raw, c] : src.classes[static_cast<std::size_t>(n)])
            if (dst.class_of(n, fn(n, raw)) != comp[static_cast<std::size_t>(c)]) {
                f.ill_defined.push_back("degree " + std::to_string(n));
                break;
            }
        f.components.push_back(std::move(comp));
    }
    return f;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : b) out.push_back(a[static_cast<std::size_t>(x)]);
    return out;
}

Tuple insert_at(Tuple t, int pos, int v) {
    t.insert(t.begin() + pos, v);
    return t;
}

Tuple erase_at(Tuple t, int pos) {
    t.erase(t.begin() + pos);
    return t;
}

Tuple rotate_left(Tuple t) {
    std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
}

// Partial products y_i = g_0⋯g_i.
Tuple partials(const FiniteGroup& g, const Tuple& t) {
    Tuple y;
    int acc = g.identity();
    for (int x : t) y.push_back(acc = g.mul(acc, x));
    return y;
}

int coset_rep(const GSet& cosets, const FiniteGroup& g, int x) {
    for (int a = 0; a < g.order(); ++a)
        if (cosets.act[static_cast<std::size_t>(a)][0] == x) return a;
    throw std::logic_error("coset without representative");
}

bool in_conjugate(const FiniteGroup& g, const std::vector<bool>& in_h, int a, int y) {
    return in_h[static_cast<std::size_t>(g.mul(g.mul(g.inv(y), a), y))];
}

std::vector<int> class_lookup(const FiniteGroup& g, const std::vector<std::vector<int>>& classes) {
    std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c]) idx[static_cast<std::size_t>(x)] = static_cast<int>(c);
    return idx;
}

Field field_of(const ClassFunction& chi) {
    if (chi.values.empty()) throw NotClassFunction("empty class function");
    return chi.values.front().field();
}

void expect_length(const ClassFunction& chi, std::size_t n, const std::string& where) {
    if (chi.values.size() != n)
        throw NotClassFunction(where + ": expected " + std::to_string(n) + " class values, got " +
                               std::to_string(chi.values.size()));
}

std::string show(const ClassFunction& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.values.size(); ++i) s += (i ? ", " : "") + c.values[i].to_string();
    return s + ")";
}

}  // namespace

GSet GSet::cosets(const FiniteGroup& g, const std::vector<int>& h_in) {
    auto h = checked_subgroup(g, h_in);
    std::vector<std::vector<int>> cosets;
    for (int a = 0; a < g.order(); ++a) {
        std::vector<int> c;
        for (int x : h) c.push_back(g.mul(a, x));
        std::sort(c.begin(), c.end());
        if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
    }
    std::sort(cosets.begin(), cosets.end());
    std::stable_partition(cosets.begin(), cosets.end(), [&](const std::vector<int>& c) {
        return std::binary_search(c.begin(), c.end(), g.identity());
    });
    GSet s;
    s.points = static_cast<int>(cosets.size());
    auto index = [&](int a) {
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (std::binary_search(cosets[i].begin(), cosets[i].end(), a)) return static_cast<int>(i);
        throw std::logic_error("element outside every coset");
    };
    s.act.assign(static_cast<std::size_t>(g.order()), std::vector<int>(cosets.size()));
    for (int a = 0; a < g.order(); ++a)
        for (std::size_t i = 0; i < cosets.size(); ++i) s.act[static_cast<std::size_t>(a)][i] = index(g.mul(a, cosets[i][0]));
    for (const auto& c : cosets) s.names.push_back(g.element_name(c[0]) + "H");
    return s;
}

GSet GSet::point(const FiniteGroup& g) {
    GSet s;
    s.points = 1;
    s.act.assign(static_cast<std::size_t>(g.order()), std::vector<int>{0});
    s.names = {"pt"};
    return s;
}

Report GSet::check(const FiniteGroup& g) const {
    Report r("G-set over " + g.name());
    bool unit = true, assoc = true;
    for (int x = 0; x < points; ++x) {
        if (act[static_cast<std::size_t>(g.identity())][static_cast<std::size_t>(x)] != x) unit = false;
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                if (act[static_cast<std::size_t>(g.mul(a, b))][static_cast<std::size_t>(x)] !=
                    act[static_cast<std::size_t>(a)][static_cast<std::size_t>(act[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])])
                    assoc = false;
    }
    r.check("e·x = x", unit);
    r.check("(ab)·x = a·(b·x)", assoc);
    return r;
}

std::vector<std::int64_t> CocyclicFiniteSet::sizes() const {
    std::vector<std::int64_t> out;
    for (const auto& p : points) out.push_back(static_cast<std::int64_t>(p.size()));
    return out;
}

int CocyclicFiniteSet::class_of(int n, const Tuple& raw) const {
    const auto& m = classes.at(static_cast<std::size_t>(n));
    auto it = m.find(raw);
    if (it == m.end()) throw std::out_of_range(name + ": tuple outside degree " + std::to_string(n));
    return it->second;
}

CocyclicModule linear_span(const CocyclicFiniteSet& x, const Field& f) {
    CocyclicModule m;
    m.name = "k[" + x.name + "]";
    m.field = f;
    m.n_max = x.n_max;
    auto levels = static_cast<std::size_t>(x.n_max) + 1;
    m.cofaces.resize(levels);
    m.codegens.resize(levels);
    for (int n = 0; n <= x.n_max; ++n) {
        m.spaces.push_back(TensorSpace::whole({static_cast<Index>(x.size(n))}, f));
        for (const auto& t : x.cofaces[n]) m.cofaces[n].push_back(span_matrix(t, x.size(n + 1), f));
        for (const auto& t : x.codegens[n]) m.codegens[n].push_back(span_matrix(t, x.size(n - 1), f));
        m.cocyclic.push_back(span_matrix(x.cocyclic[n], x.size(n), f));
    }
    return m;
}

Report check_identities(const CocyclicFiniteSet& x) {
    Report r("cocyclic set identities: " + x.name);
    if (x.ill_defined.empty()) r.pass("operators well defined on orbits");
    else r.fail("operators well defined on orbits", x.ill_defined.front());
    r.merge(check_identities(linear_span(x)));
    return r;
}

Report check_set_map(const FiniteSetMap& f, const CocyclicFiniteSet& a, const CocyclicFiniteSet& b) {
    Report r("map of cocyclic sets: " + f.name);
    if (f.ill_defined.empty()) r.pass("well defined on orbits");
    else r.fail("well defined on orbits", f.ill_defined.front());
    int top = static_cast<int>(f.components.size()) - 1;
    std::string bad_d, bad_s, bad_t;
    for (int n = 0; n <= top; ++n) {
        const auto& fn = f.components[static_cast<std::size_t>(n)];
        if (n < top)
            for (int i = 0; i <= n + 1 && bad_d.empty(); ++i)
                if (compose(f.components[static_cast<std::size_t>(n) + 1], a.cofaces[n][i]) != compose(b.cofaces[n][i], fn))
                    bad_d = at_degree("δ" + std::to_string(i), n);
        for (int j = 0; j <= n - 1 && bad_s.empty(); ++j)
            if (compose(f.components[static_cast<std::size_t>(n) - 1], a.codegens[n][j]) != compose(b.codegens[n][j], fn))
                bad_s = at_degree("σ" + std::to_string(j), n);
        if (bad_t.empty() && compose(fn, a.cocyclic[n]) != compose(b.cocyclic[n], fn)) bad_t = at_degree("τ", n);
    }
    r.check("commutes with cofaces", bad_d.empty(), bad_d);
    r.check("commutes with codegeneracies", bad_s.empty(), bad_s);
    r.check("commutes with τ", bad_t.empty(), bad_t);
    return r;
}

Report check_set_inverse(const FiniteSetMap& f, const FiniteSetMap& g, const CocyclicFiniteSet& a,
                         const CocyclicFiniteSet& b) {
    Report r(f.name + " and " + g.name + " are inverse");
    std::string left, right;
    for (std::size_t n = 0; n < f.components.size(); ++n) {
        std::vector<int> ida(a.size(static_cast<int>(n))), idb(b.size(static_cast<int>(n)));
        std::iota(ida.begin(), ida.end(), 0);
        std::iota(idb.begin(), idb.end(), 0);
        if (left.empty() && compose(g.components[n], f.components[n]) != ida) left = "degree " + std::to_string(n);
        if (right.empty() && compose(f.components[n], g.components[n]) != idb) right = "degree " + std::to_string(n);
    }
    r.check(g.name + " ∘ " + f.name + " = id", left.empty(), left);
    r.check(f.name + " ∘ " + g.name + " = id", right.empty(), right);
    return r;
}

CyclicModule functions(const CocyclicFiniteSet& x, const Field& f) {
    CocyclicModule span = linear_span(x, f);
    CyclicModule m;
    m.name = "O(" + x.name + ")";
    m.field = f;
    m.n_max = x.n_max;
    m.spaces = span.spaces;
    auto levels = static_cast<std::size_t>(x.n_max) + 1;
    m.faces.resize(levels);
    m.degens.resize(levels);
    for (int n = 0; n <= x.n_max; ++n) {
        if (n >= 1)
            for (const auto& d : span.cofaces[n - 1]) m.faces[n].push_back(d.transpose());
        if (n < x.n_max)
            for (const auto& s : span.codegens[n + 1]) m.degens[n].push_back(s.transpose());
        m.cyclic.push_back(span.cocyclic[n].transpose());
    }
    return m;
}

CocyclicFiniteSet fiber_power_set(const FiniteGroup& g, const std::vector<int>& h_in, int n_max) {
    auto h = checked_subgroup(g, h_in);
    SetModel m;
    m.name = "G×_{G/H}…, G = " + g.name();
    m.raw = [&g, h](int n) {
        std::vector<Tuple> out;
        for (int g0 = 0; g0 < g.order(); ++g0)
            for (const Tuple& hs : powers(h, n)) {
                Tuple t{g0};
                for (int x : hs) t.push_back(g.mul(g0, x));
                out.push_back(std::move(t));
            }
        return out;
    };
    m.coface = [](int n, int i, const Tuple& t) { return i <= n ? insert_at(t, i, t[static_cast<std::size_t>(i)]) : insert_at(t, n + 1, t[0]); };
    m.codegen = [](int, int j, const Tuple& t) { return erase_at(t, j + 1); };
    m.tau = [](int, const Tuple& t) { return rotate_left(t); };
    return build(m, n_max);
}

CocyclicFiniteSet trivial_product_set(const FiniteGroup& g, const std::vector<int>& h_in, int n_max) {
    auto h = checked_subgroup(g, h_in);
    SetModel m;
    m.name = "(H^{•+1}×_G pt)×G, G = " + g.name();
    m.raw = [&g, h](int n) {
        std::vector<Tuple> out;
        for (Tuple hs : powers(h, n)) {
            int p = g.identity();
            for (int x : hs) p = g.mul(p, x);
            hs.push_back(g.inv(p));
            for (int a = 0; a < g.order(); ++a) {
                Tuple t = hs;
                t.push_back(a);
                out.push_back(std::move(t));
            }
        }
        return out;
    };
    m.coface = [&g](int, int i, const Tuple& t) { return insert_at(t, i, g.identity()); };
    m.codegen = [&g](int, int j, const Tuple& t) {
        Tuple u = erase_at(t, j + 1);
        u[static_cast<std::size_t>(j)] = g.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j) + 1]);
        return u;
    };
    m.tau = [&g](int n, const Tuple& t) {
        Tuple u(t.begin() + 1, t.begin() + n + 1);
        u.push_back(t[0]);
        u.push_back(g.mul(t.back(), t[0]));
        return u;
    };
    return build(m, n_max);
}

CocyclicFiniteSet twisted_quotient_set(const FiniteGroup& g, const std::vector<int>& h_in, int n_max) {
    auto h = checked_subgroup(g, h_in);
    SetModel m;
    m.name = "G^{•+1}/H^{•+1}, G = " + g.name();
    m.raw = [&g](int n) { return powers(all_elements(g), n + 1); };
    m.gens = [&g, h](int n) {
        std::vector<Op> ops;
        for (int j = 0; j <= n; ++j)
            for (int s : h) {
                if (s == g.identity()) continue;
                ops.push_back([&g, j, n, s](const Tuple& t) {
                    Tuple u = t;
                    auto sj = static_cast<std::size_t>(j), sk = static_cast<std::size_t>((j + n) % (n + 1));
                    u[sj] = g.mul(g.inv(s), u[sj]);
                    u[sk] = g.mul(u[sk], s);
                    return u;
                });
            }
        return ops;
    };
    m.coface = [&g](int, int i, const Tuple& t) { return insert_at(t, i, g.identity()); };
    m.codegen = [&g](int, int j, const Tuple& t) {
        Tuple u = erase_at(t, j + 1);
        u[static_cast<std::size_t>(j)] = g.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j) + 1]);
        return u;
    };
    m.tau = [](int, const Tuple& t) { return rotate_left(t); };
    return build(m, n_max);
}

CocyclicFiniteSet ad_orbit_set(const FiniteGroup& g, const GSet& x, int n_max, const std::string& name) {
    SetModel m;
    m.name = name.empty() ? "G\\(ad(G)×X^{•+1}), G = " + g.name() : name;
    std::vector<int> pts(static_cast<std::size_t>(x.points));
    std::iota(pts.begin(), pts.end(), 0);
    m.raw = [&g, pts](int n) {
        std::vector<Tuple> out;
        for (int a = 0; a < g.order(); ++a)
            for (const Tuple& xs : powers(pts, n + 1)) {
                Tuple t{a};
                t.insert(t.end(), xs.begin(), xs.end());
                out.push_back(std::move(t));
            }
        return out;
    };
    m.gens = [&g, &x](int) {
        std::vector<Op> ops;
        for (int a = 0; a < g.order(); ++a)
            ops.push_back([&g, &x, a](const Tuple& t) {
                Tuple u{g.conj(a, t[0])};
                for (std::size_t i = 1; i < t.size(); ++i) u.push_back(x.act[static_cast<std::size_t>(a)][static_cast<std::size_t>(t[i])]);
                return u;
            });
        return ops;
    };
    m.coface = [&g, &x](int n, int i, const Tuple& t) {
        // x-coordinates sit at positions 1..n+1
        if (i == 0) return insert_at(t, 1, x.act[static_cast<std::size_t>(g.inv(t[0]))][static_cast<std::size_t>(t[static_cast<std::size_t>(n) + 1])]);
        return insert_at(t, i, t[static_cast<std::size_t>(i)]);
    };
    m.codegen = [](int, int j, const Tuple& t) { return erase_at(t, j + 1); };
    m.tau = [&x](int, const Tuple& t) {
        Tuple u{t[0]};
        u.insert(u.end(), t.begin() + 2, t.end());
        u.push_back(x.act[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[1])]);
        return u;
    };
    return build(m, n_max);
}

Report direct_picture_iso(const FiniteGroup& g, const std::vector<int>& h_in, int n_max) {
    auto h = checked_subgroup(g, h_in);
    Report r("direct picture for " + g.name() + " ⊇ H, |H| = " + std::to_string(h.size()));
    auto lhs = fiber_power_set(g, h, n_max);
    auto rhs = trivial_product_set(g, h, n_max);
    r.table("fiber power sizes", lhs.sizes());
    r.table("(H^{n+1}×_G pt)×G sizes", rhs.sizes());
    r.merge(check_identities(lhs), "fiber power");
    r.merge(check_identities(rhs), "product side");
    auto phi = make_map("φ", rhs, lhs, [&g](int n, const Tuple& t) {
        int a = t.back();
        Tuple u{a};
        for (int i = 0; i < n; ++i) u.push_back(a = g.mul(a, t[static_cast<std::size_t>(i)]));
        return u;
    });
    auto psi = make_map("ψ", lhs, rhs, [&g](int n, const Tuple& t) {
        Tuple u;
        for (int i = 0; i <= n; ++i) u.push_back(g.mul(g.inv(t[static_cast<std::size_t>(i)]), t[static_cast<std::size_t>((i + 1) % (n + 1))]));
        u.push_back(t[0]);
        return u;
    });
    r.merge(check_set_map(phi, rhs, lhs), "φ");
    r.merge(check_set_map(psi, lhs, rhs), "ψ");
    r.merge(check_set_inverse(psi, phi, lhs, rhs));
    return r;
}

namespace {

FiniteSetMap gamma_set_map(const FiniteGroup& g, const GSet& cosets, const CocyclicFiniteSet& lhs,
                           const CocyclicFiniteSet& rhs) {
    return make_map("γ", lhs, rhs, [&g, &cosets](int, const Tuple& t) {
        Tuple y = partials(g, t);
        Tuple u{y.back()};
        for (int v : y) u.push_back(cosets.act[static_cast<std::size_t>(v)][0]);
        return u;
    });
}

Tuple gamma_inverse_tuple(const FiniteGroup& g, const GSet& cosets, int n, const Tuple& t) {
    Tuple reps;
    for (std::size_t i = 1; i < t.size(); ++i) reps.push_back(coset_rep(cosets, g, t[i]));
    Tuple u{g.mul(g.mul(g.inv(reps[static_cast<std::size_t>(n)]), t[0]), reps[0])};
    for (int i = 1; i <= n; ++i)
        u.push_back(g.mul(g.inv(reps[static_cast<std::size_t>(i) - 1]), reps[static_cast<std::size_t>(i)]));
    return u;
}

FiniteSetMap gamma_inverse_set_map(const FiniteGroup& g, const GSet& cosets, const CocyclicFiniteSet& rhs,
                                   const CocyclicFiniteSet& lhs) {
    return make_map("γ⁻¹", rhs, lhs, [&g, &cosets](int n, const Tuple& t) { return gamma_inverse_tuple(g, cosets, n, t); });
}

}  // namespace

Report dual_picture_iso(const FiniteGroup& g, const std::vector<int>& h_in, int n_max) {
    auto h = checked_subgroup(g, h_in);
    Report r("dual picture for " + g.name() + " ⊇ H, |H| = " + std::to_string(h.size()));
    GSet cosets = GSet::cosets(g, h);
    auto lhs = twisted_quotient_set(g, h, n_max);
    auto rhs = ad_orbit_set(g, cosets, n_max, "G\\(ad(G)×(G/H)^{•+1}), G = " + g.name());
    r.table("G^{n+1}/H^{n+1} orbits", lhs.sizes());
    r.table("G\\(ad(G)×(G/H)^{n+1}) orbits", rhs.sizes());
    r.merge(check_identities(lhs), "twisted quotient");
    r.merge(check_identities(rhs), "ad orbits");
    auto gam = gamma_set_map(g, cosets, lhs, rhs);
    auto inv = gamma_inverse_set_map(g, cosets, rhs, lhs);
    r.merge(check_set_map(gam, lhs, rhs), "γ");
    r.merge(check_set_map(inv, rhs, lhs), "γ⁻¹");
    r.merge(check_set_inverse(gam, inv, lhs, rhs));
    return r;
}

Report stabilizer_coincidence(const FiniteGroup& g, const std::vector<int>& h_in, int n, int sample, std::uint64_t seed) {
    auto h = checked_subgroup(g, h_in);
    auto in_h = membership(g, h);
    GSet cosets = GSet::cosets(g, h);
    Report r("stabilizers for " + g.name() + ", n = " + std::to_string(n));
    auto k = static_cast<std::size_t>(n) + 1;
    double work = std::pow(static_cast<double>(g.order()), static_cast<double>(k)) *
                  std::pow(static_cast<double>(h.size()), static_cast<double>(k));
    std::vector<Tuple> tuples;
    if (work <= static_cast<double>(kEnumerationBudget)) {
        tuples = powers(all_elements(g), n + 1);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        for (int s = 0; s < sample; ++s) {
            Tuple t;
            for (std::size_t i = 0; i < k; ++i) t.push_back(pick(rng));
            tuples.push_back(std::move(t));
        }
        r.skip("exhaustive enumeration", "over budget, sampled " + std::to_string(sample) + " tuples");
    }
    auto hk = powers(h, n + 1);
    std::string bad_l, bad_r, bad_c;
    for (const Tuple& t : tuples) {
        Tuple y = partials(g, t);
        int prod = y.back();
        std::set<Tuple> brute_l;
        for (const Tuple& hv : hk) {
            bool fixes = true;
            for (std::size_t i = 0; i < k && fixes; ++i)
                fixes = g.mul(g.mul(g.inv(hv[i]), t[i]), hv[(i + 1) % k]) == t[i];
            if (fixes) brute_l.insert(hv);
        }
        std::set<Tuple> closed_l;
        std::set<int> closed_r, brute_r, projected;
        for (int a = 0; a < g.order(); ++a) {
            bool ok = g.mul(a, prod) == g.mul(prod, a);
            for (int v : y) ok = ok && in_conjugate(g, in_h, a, v);
            if (!ok) continue;
            closed_r.insert(a);
            Tuple hv{a};
            for (std::size_t i = 1; i < k; ++i) hv.push_back(g.mul(g.mul(g.inv(y[i - 1]), a), y[i - 1]));
            closed_l.insert(hv);
        }
        Tuple image{prod};
        for (int v : y) image.push_back(cosets.act[static_cast<std::size_t>(v)][0]);
        for (int a = 0; a < g.order(); ++a) {
            bool fixes = g.conj(a, image[0]) == image[0];
            for (std::size_t i = 1; i < image.size() && fixes; ++i)
                fixes = cosets.act[static_cast<std::size_t>(a)][static_cast<std::size_t>(image[i])] == image[i];
            if (fixes) brute_r.insert(a);
        }
        for (const Tuple& hv : brute_l) projected.insert(hv[0]);
        auto where = [&] {
            std::string s;
            for (int x : t) s += (s.empty() ? "" : ",") + g.element_name(x);
            return "(" + s + ")";
        };
        if (bad_l.empty() && brute_l != closed_l) bad_l = where();
        if (bad_r.empty() && brute_r != closed_r) bad_r = where();
        if (bad_c.empty() && (projected != brute_r || projected.size() != brute_l.size())) bad_c = where();
    }
    r.table("tuples checked", {static_cast<std::int64_t>(tuples.size())});
    r.check("LHS stabilizer matches h₀ ∈ C(y_n) ∩ ⋂ y_i H y_i⁻¹, h_i = y_{i-1}⁻¹ h₀ y_{i-1}", bad_l.empty(), bad_l);
    r.check("RHS stabilizer matches C(g̃) ∩ ⋂ g_i H g_i⁻¹", bad_r.empty(), bad_r);
    r.check("h ↦ h₀ carries the LHS stabilizer onto the RHS stabilizer", bad_c.empty(), bad_c);
    return r;
}

std::vector<Tuple> extended_quotient(const FiniteGroup& g, const GSet& x, int n) {
    std::set<Tuple> reps;
    std::vector<int> pts(static_cast<std::size_t>(x.points));
    std::iota(pts.begin(), pts.end(), 0);
    for (int a = 0; a < g.order(); ++a)
        for (const Tuple& xs : powers(pts, n + 1)) {
            bool fixed = true;
            for (int p : xs) fixed = fixed && x.act[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] == p;
            if (!fixed) continue;
            Tuple best;
            for (int b = 0; b < g.order(); ++b) {
                Tuple u{g.conj(b, a)};
                for (int p : xs) u.push_back(x.act[static_cast<std::size_t>(b)][static_cast<std::size_t>(p)]);
                if (best.empty() || u < best) best = u;
            }
            reps.insert(best);
        }
    return {reps.begin(), reps.end()};
}

namespace {

std::vector<std::set<int>> extended_classes(const GSet& x, const CocyclicFiniteSet& s) {
    std::vector<std::set<int>> out;
    for (int n = 0; n <= s.n_max; ++n) {
        std::set<int> cls;
        for (std::size_t c = 0; c < s.size(n); ++c) {
            const Tuple& t = s.points[static_cast<std::size_t>(n)][c];
            bool fixed = true;
            for (std::size_t i = 1; i < t.size(); ++i)
                fixed = fixed && x.act[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[i])] == t[i];
            if (fixed) cls.insert(static_cast<int>(c));
        }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

Report extended_quotient_check(const FiniteGroup& g, const GSet& x, int n_max) {
    Report r("extended quotients of X^{•+1}, G = " + g.name());
    auto s = ad_orbit_set(g, x, n_max);
    auto ext = extended_classes(x, s);
    std::vector<std::int64_t> sizes, direct;
    for (int n = 0; n <= n_max; ++n) {
        sizes.push_back(static_cast<std::int64_t>(ext[static_cast<std::size_t>(n)].size()));
        direct.push_back(static_cast<std::int64_t>(extended_quotient(g, x, n).size()));
    }
    r.table("extended quotient sizes", sizes);
    r.check("orbit enumeration agrees", sizes == direct);
    auto stays = [&](const std::vector<int>& table, const std::set<int>& from, const std::set<int>& to) {
        for (int c : from)
            if (!to.count(table[static_cast<std::size_t>(c)])) return false;
        return true;
    };
    std::string bad;
    for (int n = 0; n <= n_max && bad.empty(); ++n) {
        const auto& e = ext[static_cast<std::size_t>(n)];
        if (n < n_max)
            for (int i = 0; i <= n + 1; ++i)
                if (!stays(s.cofaces[n][i], e, ext[static_cast<std::size_t>(n) + 1])) bad = at_degree("δ" + std::to_string(i), n);
        for (int j = 0; j <= n - 1; ++j)
            if (!stays(s.codegens[n][j], e, ext[static_cast<std::size_t>(n) - 1])) bad = at_degree("σ" + std::to_string(j), n);
        if (!stays(s.cocyclic[n], e, e)) bad = at_degree("τ", n);
    }
    r.check("operators restrict to extended quotients", bad.empty(), bad);
    return r;
}

Report extended_quotient_image_check(const FiniteGroup& g, const std::vector<int>& h_in, int n_max) {
    auto h = checked_subgroup(g, h_in);
    auto in_h = membership(g, h);
    GSet cosets = GSet::cosets(g, h);
    Report r("extended quotients of (G/H)^{•+1} under γ⁻¹, G = " + g.name());
    auto lhs = twisted_quotient_set(g, h, n_max);
    auto rhs = ad_orbit_set(g, cosets, n_max);
    auto inv = gamma_inverse_set_map(g, cosets, rhs, lhs);
    auto ext = extended_classes(cosets, rhs);
    auto cyclic_products_in_h = [&](const Tuple& t) {
        auto k = t.size();
        for (std::size_t i = 0; i < k; ++i) {
            int p = g.identity();
            for (std::size_t s = 1; s <= k; ++s) p = g.mul(p, t[(i + s) % k]);
            if (!in_h[static_cast<std::size_t>(p)]) return false;
        }
        return true;
    };
    bool invariant = true, equal = true;
    for (int n = 0; n <= n_max; ++n) {
        std::set<int> image, marked;
        for (int c : ext[static_cast<std::size_t>(n)]) image.insert(inv.components[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)]);
        std::vector<int> flag(lhs.size(n), -1);
        for (const auto& [raw, c] : lhs.classes[static_cast<std::size_t>(n)]) {
            int v = cyclic_products_in_h(raw) ? 1 : 0;
            auto& f = flag[static_cast<std::size_t>(c)];
            if (f >= 0 && f != v) invariant = false;
            f = v;
        }
        for (std::size_t c = 0; c < flag.size(); ++c)
            if (flag[c] == 1) marked.insert(static_cast<int>(c));
        if (image != marked) equal = false;
    }
    r.check("cyclic-product condition is constant on orbits", invariant);
    r.check("γ⁻¹ maps extended quotients onto the cyclic-product classes", equal);
    return r;
}

std::vector<std::vector<int>> subgroup_classes(const FiniteGroup& g, const std::vector<int>& h_in) {
    auto h = checked_subgroup(g, h_in);
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (int x : h) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::vector<int> cls;
        for (int a : h) {
            int y = g.conj(a, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

ClassFunction class_function(const FiniteGroup& g, const std::vector<int>& h_in, const std::vector<Scalar>& per_element) {
    auto h = checked_subgroup(g, h_in);
    if (per_element.size() != h.size())
        throw NotClassFunction("expected " + std::to_string(h.size()) + " values, got " + std::to_string(per_element.size()));
    auto pos = [&](int x) { return static_cast<std::size_t>(std::lower_bound(h.begin(), h.end(), x) - h.begin()); };
    ClassFunction out;
    for (const auto& cls : subgroup_classes(g, h)) {
        const Scalar& v = per_element[pos(cls[0])];
        for (int x : cls)
            if (per_element[pos(x)] != v)
                throw NotClassFunction("values differ on the class of " + g.element_name(cls[0]));
        out.values.push_back(v);
    }
    return out;
}

ClassFunction frobenius(const FiniteGroup& g, const std::vector<int>& h_in, const ClassFunction& chi) {
    auto h = checked_subgroup(g, h_in);
    auto in_h = membership(g, h);
    auto hclasses = subgroup_classes(g, h);
    expect_length(chi, hclasses.size(), "frobenius");
    Field f = field_of(chi);
    auto hidx = class_lookup(g, hclasses);
    GSet cosets = GSet::cosets(g, h);
    auto orbits = ad_orbit_set(g, cosets, 0);
    // Tr_i on G\(ad(G) × G/H), evaluated on representatives (g̃, gH)
    std::vector<Scalar> extended;
    for (const Tuple& t : orbits.points[0]) {
        int c = coset_rep(cosets, g, t[1]);
        int y = g.mul(g.mul(g.inv(c), t[0]), c);
        extended.push_back(in_h[static_cast<std::size_t>(y)] ? chi.values[static_cast<std::size_t>(hidx[static_cast<std::size_t>(y)])] : f.zero());
    }
    ClassFunction out;
    for (const auto& cls : subgroup_classes(g, all_elements(g))) {
        Scalar sum = f.zero();
        for (int x = 0; x < cosets.points; ++x) sum += extended[static_cast<std::size_t>(orbits.class_of(0, {cls[0], x}))];
        out.values.push_back(sum);
    }
    return out;
}

ClassFunction induced_by_cosets(const FiniteGroup& g, const std::vector<int>& h_in, const ClassFunction& chi) {
    auto h = checked_subgroup(g, h_in);
    auto in_h = membership(g, h);
    auto hclasses = subgroup_classes(g, h);
    expect_length(chi, hclasses.size(), "induced_by_cosets");
    Field f = field_of(chi);
    auto hidx = class_lookup(g, hclasses);
    GSet cosets = GSet::cosets(g, h);
    ClassFunction out;
    for (const auto& cls : subgroup_classes(g, all_elements(g))) {
        Scalar sum = f.zero();
        for (int x = 0; x < cosets.points; ++x) {
            int c = coset_rep(cosets, g, x);
            int y = g.mul(g.mul(g.inv(c), cls[0]), c);
            if (in_h[static_cast<std::size_t>(y)]) sum += chi.values[static_cast<std::size_t>(hidx[static_cast<std::size_t>(y)])];
        }
        out.values.push_back(sum);
    }
    return out;
}

ClassFunction induced_classical(const FiniteGroup& g, const std::vector<int>& h_in, const ClassFunction& chi) {
    auto h = checked_subgroup(g, h_in);
    auto in_h = membership(g, h);
    auto hclasses = subgroup_classes(g, h);
    expect_length(chi, hclasses.size(), "induced_classical");
    Field f = field_of(chi);
    auto hidx = class_lookup(g, hclasses);
    ClassFunction out;
    for (const auto& cls : subgroup_classes(g, all_elements(g))) {
        Scalar sum = f.zero();
        for (int x = 0; x < g.order(); ++x) {
            int y = g.mul(g.mul(g.inv(x), cls[0]), x);
            if (in_h[static_cast<std::size_t>(y)]) sum += chi.values[static_cast<std::size_t>(hidx[static_cast<std::size_t>(y)])];
        }
        out.values.push_back(sum / f.from_int(static_cast<long long>(h.size())));
    }
    return out;
}

Scalar class_pairing(const FiniteGroup& g, const std::vector<int>& h_in, const ClassFunction& a, const ClassFunction& b) {
    auto h = checked_subgroup(g, h_in);
    auto classes = subgroup_classes(g, h);
    expect_length(a, classes.size(), "class_pairing");
    expect_length(b, classes.size(), "class_pairing");
    Field f = field_of(a);
    auto idx = class_lookup(g, classes);
    Scalar sum = f.zero();
    for (int x : h)
        sum += a.values[static_cast<std::size_t>(idx[static_cast<std::size_t>(x)])] *
               b.values[static_cast<std::size_t>(idx[static_cast<std::size_t>(g.inv(x))])];
    return sum / f.from_int(static_cast<long long>(h.size()));
}

ClassFunction restrict_to(const FiniteGroup& g, const std::vector<int>& h_in, const ClassFunction& theta) {
    auto h = checked_subgroup(g, h_in);
    auto gclasses = subgroup_classes(g, all_elements(g));
    expect_length(theta, gclasses.size(), "restrict_to");
    auto gidx = class_lookup(g, gclasses);
    ClassFunction out;
    for (const auto& cls : subgroup_classes(g, h)) out.values.push_back(theta.values[static_cast<std::size_t>(gidx[static_cast<std::size_t>(cls[0])])]);
    return out;
}

Report frobenius_check(const FiniteGroup& g, const std::vector<int>& h, const ClassFunction& chi) {
    Report r("induction from H to " + g.name());
    Field f = field_of(chi);
    require_coprime_characteristic(g, f);
    auto a = frobenius(g, h, chi), b = induced_by_cosets(g, h, chi), c = induced_classical(g, h, chi);
    r.pass("Tr_p ∘ Tr_i", show(a));
    r.check("coset sum agrees with Tr_p ∘ Tr_i", a.values == b.values, show(b));
    r.check("classical formula agrees with Tr_p ∘ Tr_i", a.values == c.values, show(c));
    std::size_t k = subgroup_classes(g, all_elements(g)).size();
    std::string bad;
    for (std::size_t i = 0; i < k && bad.empty(); ++i) {
        ClassFunction theta{std::vector<Scalar>(k, f.zero())};
        theta.values[i] = f.one();
        if (class_pairing(g, all_elements(g), a, theta) != class_pairing(g, h, chi, restrict_to(g, h, theta)))
            bad = "class indicator " + std::to_string(i);
    }
    r.check("⟨χ↑, θ⟩_G = ⟨χ, θ↓⟩_H for all class functions θ", bad.empty(), bad);
    return r;
}

Report class_function_dim_check(const FiniteGroup& g, const Field& f) {
    require_coprime_characteristic(g, f);
    Report r("class functions on " + g.name());
    auto classes = static_cast<std::int64_t>(g.conjugacy_classes().size());
    auto orbits = static_cast<std::int64_t>(ad_orbit_set(g, GSet::point(g), 0).size(0));
    auto hh0 = hochschild_homology(relative_cyclic(ComoduleSubalgebra::scalars(group_algebra(g, f)), 1), 0)[0];
    r.table("classes, G\\ad(G), HH_0(kG)", {classes, orbits, hh0});
    r.check("#G\\ad(G) = #classes", orbits == classes);
    r.check("dim HH_0(kG) = #classes", hh0 == classes);
    return r;
}

void require_coprime_characteristic(const FiniteGroup& g, const Field& f) {
    auto p = f.characteristic();
    if (p != 0 && static_cast<std::uint64_t>(g.order()) % p == 0)
        throw std::invalid_argument("characteristic " + std::to_string(p) + " divides |" + g.name() + "| = " +
                                    std::to_string(g.order()));
}

}  // namespace hopfcyc
