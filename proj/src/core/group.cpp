#include "hopfcyc/group.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace hopfcyc {

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> names,
                                    std::vector<std::vector<int>> table) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw GroupError("empty multiplication table");
    if (static_cast<int>(names.size()) != n) throw GroupError("element name count differs from table size");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw GroupError("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw GroupError("multiplication table entry out of range");
    }
    FiniteGroup g;
    g.name_ = std::move(name);
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) id = e;
    }
    if (id < 0) throw GroupError("no identity element");
    g.id_ = id;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw GroupError("multiplication is not associative at (" + g.names_[a] + ", " + g.names_[b] + ", " +
                                     g.names_[c] + ")");
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == id && g.mul(b, a) == id) g.inv_[a] = b;
        if (g.inv_[a] < 0) throw GroupError("element " + g.names_[a] + " has no inverse");
    }
    return g;
}

namespace {

using Perm = std::array<int, 3>;

Perm compose(const Perm& s, const Perm& t) {
    Perm r{};
    for (int x = 0; x < 3; ++x) r[x] = s[t[x]];
    return r;
}

template <class T, class Mul>
FiniteGroup from_elements(const std::string& name, const std::vector<std::string>& names, const std::vector<T>& elems,
                          Mul mul) {
    std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            T p = mul(elems[a], elems[b]);
            auto it = std::find(elems.begin(), elems.end(), p);
            table[a][b] = static_cast<int>(it - elems.begin());
        }
    return FiniteGroup::from_table(name, names, table);
}

FiniteGroup cyclic(int n) {
    std::vector<std::string> names{"e"};
    for (int k = 1; k < n; ++k) names.push_back(k == 1 ? "a" : "a" + std::to_string(k));
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_table("C" + std::to_string(n), names, t);
}

FiniteGroup symmetric3() {
    // Permutations of {1,2,3}; (st)(x) = s(t(x)).
    std::vector<Perm> el{Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
    std::vector<std::string> names{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    return from_elements("S3", names, el, compose);
}

FiniteGroup quaternion8() {
    // (sign, unit) with unit in {1, i, j, k}.
    using Q = std::pair<int, int>;
    static const int unit_table[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    auto mul = [](const Q& a, const Q& b) {
        const int* r = unit_table[a.second][b.second];
        return Q{a.first * b.first * r[0], r[1]};
    };
    std::vector<Q> el{{1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {1, 3}, {-1, 3}};
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return from_elements("Q8", names, el, mul);
}

}  // namespace

FiniteGroup FiniteGroup::builtin(const std::string& name) {
    if (name == "trivial" || name == "C1") return from_table("trivial", {"e"}, {{0}});
    if (name == "C2") return cyclic(2);
    if (name == "C3") return cyclic(3);
    if (name == "C4") return cyclic(4);
    if (name == "S3") return symmetric3();
    if (name == "Q8") return quaternion8();
    throw GroupError("unknown built-in group '" + name + "'");
}

std::vector<std::string> FiniteGroup::builtin_names() { return {"trivial", "C2", "C3", "C4", "S3", "Q8"}; }

int FiniteGroup::index_of(const std::string& element) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == element) return static_cast<int>(i);
    throw GroupError("group " + name_ + " has no element '" + element + "'");
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
    std::set<int> s{id_};
    std::vector<int> frontier{id_};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int g : gens) {
                int b = mul(a, g);
                if (s.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return {s.begin(), s.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(id_)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(mul(a, inv(b)))) return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
    std::set<int> s(subgroup.begin(), subgroup.end());
    for (int g = 0; g < order(); ++g)
        for (int h : s)
            if (!s.count(conj(g, h))) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<int> seen(order(), 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < order(); ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int g = 0; g < order(); ++g) cls.insert(conj(g, x));
        for (int y : cls) seen[y] = 1;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

std::vector<int> FiniteGroup::class_index() const {
    std::vector<int> idx(order());
    auto cls = conjugacy_classes();
    for (std::size_t c = 0; c < cls.size(); ++c)
        for (int x : cls[c]) idx[x] = static_cast<int>(c);
    return idx;
}

std::vector<int> parse_elements(const FiniteGroup& g, const std::string& text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char ch : cur)
            if (ch != ' ') t.push_back(ch);
        if (!t.empty()) out.push_back(g.index_of(t));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    return out;
}

}  // namespace hopfcyc
