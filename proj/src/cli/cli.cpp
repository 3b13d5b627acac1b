#include "hopfcyc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hopfcyc/classical.hpp"
#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/galois.hpp"
#include "hopfcyc/hopf.hpp"
#include "hopfcyc/io.hpp"
#include "hopfcyc/iso.hpp"
#include "hopfcyc/sayd.hpp"
#include "hopfcyc/specseq.hpp"

namespace hopfcyc::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxTruncation = 5;

struct Options {
    std::string format = "table";
    std::string field;
    std::uint64_t seed = 0;
    int max_degree = -1;
    bool timing = false;

    std::string input;
    std::string ideal;
    std::string subalgebra;
    std::string theory = "hh";
    std::string module = "relative";
    std::string theorem;
    std::string group;
    std::string subgroup;
    std::string op = "all";
    std::string chi = "trivial";
    int sample = 200;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        auto a = cur.find_first_not_of(' ');
        auto b = cur.find_last_not_of(' ');
        if (a != std::string::npos) out.push_back(cur.substr(a, b - a + 1));
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

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::optional<Field> parse_field(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text == "q" || text == "Q") return Field::rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::string digits = text.substr(3);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 18)
            throw InputError("malformed field '" + text + "'");
        std::uint64_t p = std::stoull(digits);
        if (!is_prime(p)) throw InputError("field modulus " + digits + " is not prime");
        return Field::prime(p);
    }
    throw InputError("field must be q or fp:<prime>, got '" + text + "'");
}

bool is_file(const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

// Positional Hopf argument: spec file, built-in algebra, or built-in setup "H/B".
struct Loaded {
    HopfAlgebra h;
    std::optional<GaloisSetup> setup;
};

Loaded load_input(const std::string& arg, const std::optional<Field>& field) {
    if (arg.empty()) throw InputError("missing Hopf algebra argument");
    if (is_file(arg)) return {hopf_from_json(read_json_file(arg), field), std::nullopt};
    Field f = field.value_or(Field::rationals());
    try {
        if (arg.find('/') != std::string::npos) {
            GaloisSetup s = builtin_setup(arg, f);
            return {s.h, s};
        }
        return {builtin_hopf(arg, f), std::nullopt};
    } catch (const HopfError&) {
        throw InputError("'" + arg + "' is neither a file, a built-in algebra (" + join(builtin_hopf_names(), ", ") +
                         ") nor a built-in setup (" + join(builtin_setup_names(), ", ") + ")");
    }
}

// File with {"generators": ...}, or a comma list of basis names.
std::vector<SVec> load_vectors(const std::string& arg, const HopfAlgebra& h) {
    if (is_file(arg)) return vectors_from_json(read_json_file(arg), h.dim(), h.field());
    std::vector<SVec> out;
    const auto& names = h.basis_names();
    for (const std::string& n : split_commas(arg)) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) throw InputError("'" + n + "' is not a basis element of " + h.name());
        out.push_back(h.basis_vector(static_cast<Index>(it - names.begin())));
    }
    return out;
}

GaloisSetup resolve_setup(const Options& o, const Loaded& in) {
    const HopfAlgebra& h = in.h;
    bool has_b = !o.subalgebra.empty(), has_i = !o.ideal.empty();
    if (!has_b && !has_i) return in.setup ? *in.setup : make_setup(h, ComoduleSubalgebra::scalars(h));
    std::optional<ComoduleSubalgebra> b;
    std::optional<QuotientModuleCoalgebra> c;
    if (has_b) b = ComoduleSubalgebra::generate(h, load_vectors(o.subalgebra, h));
    if (has_i) c = QuotientModuleCoalgebra::from_generators(h, load_vectors(o.ideal, h));
    if (b && !c) return make_setup(h, *b);
    if (!b) b = coinvariants(*c);
    std::string name = h.name() + "/" + (has_b ? "B" : "coinv") + "/" + (has_i ? "I" : "B+H");
    return GaloisSetup{name, h, *b, *c};
}

int degree(const Options& o, int fallback, int offset = 0) {
    int n = o.max_degree < 0 ? fallback : o.max_degree;
    if (n + offset > kMaxTruncation)
        throw InputError("--max-degree " + std::to_string(n) + " needs truncation " + std::to_string(n + offset) +
                         ", above the cap " + std::to_string(kMaxTruncation));
    return n;
}

std::string scalar_list(const std::vector<Scalar>& v) {
    std::vector<std::string> s;
    for (const Scalar& x : v) s.push_back(x.to_string());
    return "(" + join(s, ", ") + ")";
}

std::optional<std::vector<std::int64_t>> integral(const std::vector<Scalar>& v) {
    std::vector<std::int64_t> out;
    for (const Scalar& x : v) {
        if (!x.is_rational()) return std::nullopt;
        mpq_class q = x.to_mpq();
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
        out.push_back(q.get_num().get_si());
    }
    return out;
}

// ---- subcommands ----

using Reports = std::vector<Report>;

bool validated(const HopfAlgebra& h, Reports& out) {
    out.push_back(validate(h));
    return out.back().ok();
}

bool galois_ok(const GaloisSetup& s, Reports& out) {
    Report r = galois_criterion(s.b, s.c);
    bool ok = r.ok();
    if (!ok) out.push_back(r);
    return ok;
}

void cmd_validate(const Options& o, Reports& out) {
    Loaded in = load_input(o.input, parse_field(o.field));
    validated(in.h, out);
}

void cmd_galois(const Options& o, Reports& out) {
    Loaded in = load_input(o.input, parse_field(o.field));
    if (!validated(in.h, out)) return;
    GaloisSetup s = resolve_setup(o, in);
    Report r("galois " + s.name);
    r.table("dims H, B, I, C", {s.h.dim(), s.b.dim(), s.c.ideal_dim(), s.c.dim()});
    Report crit = galois_criterion(s.b, s.c);
    r.merge(crit);
    r.check("coinvariants(B+H) = B", same_subspace(coinvariants(takeuchi_B_to_I(s.b)).space(), s.b.space()),
            "coinvariants of H/B+H differ from B");
    r.check("coinvariants(C)+H = I", same_subspace(takeuchi_B_to_I(coinvariants(s.c)).ideal(), s.c.ideal()),
            "the ideal generated by the coinvariants of C differs from I");
    if (crit.ok()) {
        TranslationMap t = translation_map(s.b, s.c);
        r.check("translation map inverts can on 1⊗C", t.inverse_ok, "can(τ(c)) ≠ 1⊗c");
        CocanonicalMap cc = cocanonical_map(s.b, s.c);
        r.table("dim H□_C H", {cc.cotensor.dim()});
        r.check("cocan bijective", cc.bijective, "cocan: B⊗H → H□_C H is not bijective");
    }
    r.skip("faithful flatness", "not verified; the Galois test is I = B+H together with bijectivity of can1");
    out.push_back(r);
}

CyclicModule side(const std::string& module, const GaloisSetup& s, int n_max) {
    if (module == "relative") return relative_side(s, n_max);
    if (module == "coalgebra") return coalgebra_side(s, n_max);
    if (module == "comodule-algebra") return comodule_algebra_side(s, n_max);
    if (module == "coext") return coext_side(s, n_max);
    throw InputError("--module must be relative, coalgebra, comodule-algebra or coext");
}

void cmd_homology(const Options& o, Reports& out) {
    if (o.theory != "hh" && o.theory != "hc") throw InputError("--theory must be hh or hc");
    int n = degree(o, 3, 1);
    Loaded in = load_input(o.input, parse_field(o.field));
    if (!validated(in.h, out)) return;
    GaloisSetup s = resolve_setup(o, in);
    CyclicModule x = side(o.module, s, n + 1);
    Report r(o.theory + " " + o.module + " " + s.name);
    r.table("chain dims", x.dims());
    r.merge(check_identities(x), "identities");
    r.table(o.theory == "hh" ? "HH" : "HC", o.theory == "hh" ? hochschild_homology(x, n) : cyclic_homology(x, n));
    out.push_back(r);
}

void cmd_isocheck(const Options& o, Reports& out) {
    int n = degree(o, 3);
    Loaded in = load_input(o.input, parse_field(o.field));
    if (!validated(in.h, out)) return;
    GaloisSetup s = resolve_setup(o, in);
    if (!galois_ok(s, out)) return;
    if (o.theorem == "psi-phi" || o.theorem == "3.4") {
        CyclicModule rel = relative_side(s, n), co = coalgebra_side(s, n);
        CyclicMap ph = phi_map(s, rel, co), ps = psi_map(s, co, rel);
        Report r("psi/phi " + s.name);
        r.table("dims C(H|B)", rel.dims());
        r.table("dims C(H/I, ad H)", co.dims());
        r.merge(check_cyclic_map(ph), "phi");
        r.merge(check_cyclic_map(ps), "psi");
        r.merge(check_inverse(ph, ps), "phi/psi");
        out.push_back(r);
    } else if (o.theorem == "gamma" || o.theorem == "3.7") {
        CyclicModule cm = comodule_algebra_side(s, n), ce = coext_side(s, n);
        CyclicMap g = gamma_map(s, cm, ce), gi = gamma_inv_map(s, ce, cm);
        Report r("gamma " + s.name);
        r.table("dims C(B, coad H)", cm.dims());
        r.table("dims C(H|C)", ce.dims());
        r.merge(check_cyclic_map(g), "gamma");
        r.merge(check_cyclic_map(gi), "gamma^-1");
        r.merge(check_inverse(g, gi), "gamma/gamma^-1");
        out.push_back(r);
    } else if (o.theorem == "jara-stefan") {
        Report r("jara-stefan " + s.name);
        std::string why = hopf_ideal_failure(s.c);
        if (!why.empty()) {
            r.fail("I is a Hopf ideal", why);
        } else {
            r.pass("I is a Hopf ideal");
            for (int k = 0; k <= n; ++k) r.merge(jara_stefan(s, k).report, "n=" + std::to_string(k));
        }
        out.push_back(r);
    } else {
        throw InputError("--theorem must be psi-phi (3.4), gamma (3.7) or jara-stefan");
    }
}

void cmd_tor(const Options& o, Reports& out) {
    int n = degree(o, 3);
    Loaded in = load_input(o.input, parse_field(o.field));
    if (!validated(in.h, out)) return;
    Report r("tor " + in.h.name());
    r.merge(bar_resolution(in.h, ad_left(in.h), n + 1).exactness, "bar resolution");
    r.merge(corollary36_check(in.h, n));
    out.push_back(r);
}

void cmd_spectral(const Options& o, Reports& out) {
    int n = degree(o, 2, 1);
    Loaded in = load_input(o.input, parse_field(o.field));
    if (!validated(in.h, out)) return;
    GaloisSetup s = resolve_setup(o, in);
    if (!galois_ok(s, out)) return;
    Report r("spectral " + s.name);
    r.merge(contracting_homotopy_check(s.c, n + 1), "rows");
    r.merge(theorem35_check(s, n));
    r.merge(five_term_check(s), "five-term");
    out.push_back(r);
}

FiniteGroup load_group(const std::string& arg) {
    if (arg.empty()) throw InputError("--group is required");
    if (is_file(arg)) return group_from_json(read_json_file(arg));
    try {
        return FiniteGroup::builtin(arg);
    } catch (const GroupError&) {
        throw InputError("'" + arg + "' is neither a file nor a built-in group (" + join(FiniteGroup::builtin_names(), ", ") +
                         ")");
    }
}

// The character with kernel ⟨squares, commutators⟩ when that subgroup has index 2.
std::vector<Scalar> sign_values(const FiniteGroup& g, const std::vector<int>& h, const Field& f) {
    std::vector<int> gens;
    for (int a : h) {
        gens.push_back(g.mul(a, a));
        for (int b : h) gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
    std::vector<int> k = g.generated(gens);
    if (k.size() * 2 != h.size()) throw InputError("the subgroup has no sign character (no index-2 subgroup above its squares)");
    std::vector<Scalar> v;
    for (int a : h) v.push_back(std::binary_search(k.begin(), k.end(), a) ? f.one() : -f.one());
    return v;
}

ClassFunction parse_chi(const std::string& text, const FiniteGroup& g, const std::vector<int>& h, const Field& f) {
    std::size_t classes = subgroup_classes(g, h).size();
    if (text == "trivial") return ClassFunction{std::vector<Scalar>(classes, f.one())};
    if (text == "sign") return class_function(g, h, sign_values(g, h, f));
    std::vector<Scalar> v;
    try {
        for (const std::string& s : split_commas(text)) v.push_back(f.parse(s));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--chi: ") + e.what());
    }
    if (v.size() == classes) return ClassFunction{v};
    if (v.size() == h.size()) return class_function(g, h, v);
    throw InputError("--chi needs one value per class of the subgroup (" + std::to_string(classes) +
                     ") or per element (" + std::to_string(h.size()) + ")");
}

void cmd_classical(const Options& o, Reports& out) {
    static const std::vector<std::string> ops = {"direct", "dual", "stabilizers", "extended", "frobenius", "all"};
    if (std::find(ops.begin(), ops.end(), o.op) == ops.end())
        throw InputError("--op must be one of " + join(ops, ", "));
    int n = degree(o, 2);
    Field f = parse_field(o.field).value_or(Field::rationals());
    FiniteGroup g = load_group(o.group);
    std::vector<int> h;
    try {
        h = g.generated(parse_elements(g, o.subgroup));
    } catch (const GroupError& e) {
        throw InputError(std::string("--subgroup: ") + e.what());
    }
    std::vector<std::string> hn;
    for (int a : h) hn.push_back(g.element_name(a));
    std::string tag = g.name() + "/{" + join(hn, ",") + "}";
    bool all = o.op == "all";

    if (all || o.op == "direct") out.push_back(direct_picture_iso(g, h, n));
    if (all || o.op == "dual") out.push_back(dual_picture_iso(g, h, n));
    if (all || o.op == "stabilizers") {
        Report r("stabilizers " + tag);
        for (int k = 0; k <= n; ++k)
            r.merge(stabilizer_coincidence(g, h, k, o.sample, o.seed), "n=" + std::to_string(k));
        out.push_back(r);
    }
    if (all || o.op == "extended") {
        GSet x = GSet::cosets(g, h);
        Report r("extended " + tag);
        r.merge(extended_quotient_check(g, x, n));
        r.merge(extended_quotient_image_check(g, h, n));
        out.push_back(r);
    }
    if (all || o.op == "frobenius") {
        require_coprime_characteristic(g, f);
        ClassFunction chi = parse_chi(o.chi, g, h, f);
        ClassFunction up = frobenius(g, h, chi);
        Report r("frobenius " + tag + " chi=" + o.chi);
        r.pass("chi", scalar_list(chi.values));
        r.pass("induced", scalar_list(up.values));
        if (auto iv = integral(up.values)) r.table("induced", *iv);
        r.merge(frobenius_check(g, h, chi));
        r.merge(class_function_dim_check(g, f), "class functions");
        out.push_back(r);
    }
}

// ---- output ----

// Display width in code points; every symbol used in check names is single-width.
std::size_t width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); }

std::string render_table(const std::vector<std::string>& args, const Reports& reports) {
    std::ostringstream os;
    os << "hopfcyc " << join(args, " ") << "\n";
    std::size_t total = 0, failed = 0;
    for (const Report& r : reports) {
        os << "\n[" << r.title() << "]\n";
        std::size_t w = 0;
        for (const Check& c : r.checks()) w = std::max(w, width(c.name));
        for (const auto& t : r.tables()) w = std::max(w, width(t.first));
        for (const Check& c : r.checks()) {
            os << "  " << pad(to_string(c.status), 5) << " ";
            if (c.detail.empty())
                os << c.name;
            else
                os << pad(c.name, w) << "  " << c.detail;
            os << "\n";
            ++total;
            if (c.status == Status::Fail) ++failed;
        }
        for (const auto& [name, values] : r.tables()) {
            os << "  table " << pad(name, w) << " ";
            for (auto v : values) os << " " << v;
            os << "\n";
        }
    }
    os << "\nresult: " << (failed ? "FAIL" : "PASS") << " (" << total << " checks, " << failed << " failed)\n";
    return os.str();
}

std::string render_json(const std::vector<std::string>& args, const Options& o, const Reports& reports, int code,
                        std::optional<double> ms) {
    ordered_json j;
    j["tool"] = "hopfcyc";
    j["command"] = args;
    ordered_json cfg;
    cfg["field"] = o.field.empty() ? "default" : o.field;
    cfg["max_degree"] = o.max_degree;
    cfg["seed"] = o.seed;
    j["config"] = cfg;
    ordered_json rs = ordered_json::array();
    for (const Report& r : reports) rs.push_back(report_to_json(r));
    j["reports"] = rs;
    j["status"] = code == 0 ? "pass" : "fail";
    j["exit_code"] = code;
    if (ms) j["timing_ms"] = *ms;
    return j.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Hopf-cyclic homology of homogeneous coalgebra-Galois extensions"};
    app.name("hopfcyc");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--field", o.field, "q or fp:<p>; defaults to the input's field, else q");
    app.add_option("--seed", o.seed, "seed for sampled checks");
    app.add_option("--max-degree", o.max_degree, "top degree (default 3; 2 for spectral and classical)")->check(CLI::Range(0, kMaxTruncation));
    app.add_flag("--timing", o.timing, "add wall time to JSON output");

    auto hopf_arg = [&](CLI::App* sub) {
        sub->add_option("hopf", o.input, "spec file, built-in algebra or built-in setup H/B")->required();
    };
    auto pair_args = [&](CLI::App* sub) {
        sub->add_option("--ideal", o.ideal, "ideal file or comma list of basis names");
        sub->add_option("--subalgebra", o.subalgebra, "subalgebra file or comma list of basis names");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the Hopf algebra axioms");
    hopf_arg(validate_cmd);
    auto* galois_cmd = app.add_subcommand("galois", "Galois criterion, can and cocan");
    hopf_arg(galois_cmd);
    pair_args(galois_cmd);
    auto* homology_cmd = app.add_subcommand("homology", "Hochschild or cyclic homology dimensions");
    hopf_arg(homology_cmd);
    pair_args(homology_cmd);
    homology_cmd->add_option("--theory", o.theory, "hh or hc");
    homology_cmd->add_option("--module", o.module, "relative, coalgebra, comodule-algebra or coext");
    auto* iso_cmd = app.add_subcommand("isocheck", "operator-by-operator isomorphism checks");
    hopf_arg(iso_cmd);
    pair_args(iso_cmd);
    iso_cmd->add_option("--theorem", o.theorem, "psi-phi (alias 3.4), gamma (alias 3.7) or jara-stefan")->required();
    auto* tor_cmd = app.add_subcommand("tor", "Tor(k, ad H) against HH(H)");
    hopf_arg(tor_cmd);
    auto* spectral_cmd = app.add_subcommand("spectral", "spectral sequence and five-term sequence");
    hopf_arg(spectral_cmd);
    pair_args(spectral_cmd);
    auto* classical_cmd = app.add_subcommand("classical", "finite group pictures");
    classical_cmd->add_option("--group", o.group, "built-in group or group file")->required();
    classical_cmd->add_option("--subgroup", o.subgroup, "comma list of generators");
    classical_cmd->add_option("--op", o.op, "direct, dual, stabilizers, extended, frobenius or all");
    classical_cmd->add_option("--chi", o.chi, "trivial, sign, or comma list of values");
    classical_cmd->add_option("--sample", o.sample, "random tuples per degree beyond the enumeration budget");
    auto* export_cmd = app.add_subcommand("export", "print a built-in Hopf algebra as a spec file");
    hopf_arg(export_cmd);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Reports reports;
    auto start = std::chrono::steady_clock::now();
    try {
        if (*validate_cmd) cmd_validate(o, reports);
        if (*galois_cmd) cmd_galois(o, reports);
        if (*homology_cmd) cmd_homology(o, reports);
        if (*iso_cmd) cmd_isocheck(o, reports);
        if (*tor_cmd) cmd_tor(o, reports);
        if (*spectral_cmd) cmd_spectral(o, reports);
        if (*classical_cmd) cmd_classical(o, reports);
        if (*export_cmd) {
            out << hopf_to_json(load_input(o.input, parse_field(o.field)).h).dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    int code = 0;
    for (const Report& r : reports)
        if (!r.ok()) code = 1;
    if (o.format == "json")
        out << render_json(args, o, reports, code, o.timing ? std::optional<double>(ms) : std::nullopt);
    else
        out << render_table(args, reports);
    if (code != 0)
        for (const Report& r : reports)
            if (const Check* c = r.first_failure()) err << "check failed: " << r.title() << ": " << c->name << ": " << c->detail << "\n";
    return code;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace hopfcyc::cli
