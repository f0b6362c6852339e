// plumbcalc: exact continued-fraction calculus, lens space filling census,
// plumbing/PALF homology checks. Exit codes: 0 ok, 1 verification mismatch,
// 2 usage or schema error, 3 non-admissible continued fraction.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plumbcalc/budding.hpp"
#include "plumbcalc/json_io.hpp"
#include "plumbcalc/lisca.hpp"
#include "plumbcalc/palf.hpp"
#include "plumbcalc/plumbing.hpp"
#include "plumbcalc/section3.hpp"
#include "plumbcalc/verify.hpp"

namespace {

using namespace plumbcalc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotAdmissible = 3;
constexpr long kCensusCap = 400;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw usage_error("not an integer: '" + text + "'");
    return v;
}

CFString parse_entries(const std::string& text) {
    CFString out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty()) throw usage_error("empty entry in '" + text + "'");
            out.push_back(parse_int(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty()) throw usage_error("no entries in '" + text + "'");
    return out;
}

std::string entries_str(const CFString& s, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += s[i].get_str();
    }
    return out;
}

std::string factors_str(const std::vector<Int>& v) {
    if (v.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += "+";
        out += (v[i] == 0) ? "Z" : "Z" + v[i].get_str();
    }
    return out;
}

json factors_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

void print_report(const CheckReport& r) {
    for (const auto& line : r.lines) std::cout << line << "\n";
    std::cout << r.name << ": " << (r.pass ? "ok" : "FAILED") << " (" << r.checks << " checks)\n";
}

// ---- cf ----

int run_cf(const std::string& op, const std::string& arg, bool as_json) {
    json out{{"schema", 1}};
    if (op == "eval") {
        Rational v = cf_eval(parse_entries(arg));
        if (as_json) {
            out["value"] = rational_to_json(v);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << v.str() << "\n";
        }
        return kExitOk;
    }
    CFString result;
    if (op == "expand") {
        auto slash = arg.find('/');
        Rational r = slash == std::string::npos
                         ? Rational(parse_int(arg))
                         : Rational(parse_int(arg.substr(0, slash)), parse_int(arg.substr(slash + 1)));
        result = cf_expand(r);
    } else if (op == "dual") {
        result = cf_dual(parse_entries(arg));
    } else if (op == "reverse") {
        result = cf_reverse(parse_entries(arg));
    } else {
        throw usage_error("unknown cf operation '" + op + "'");
    }
    if (as_json) {
        out["entries"] = cfstring_to_json(result);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << entries_str(result) << "\n";
    }
    return kExitOk;
}

// ---- fillings ----

int run_fillings(const std::string& p_text, const std::string& q_text, const std::string& k_text,
                 bool as_json) {
    LensSpace lens = [&] {
        try {
            return lens_space(parse_int(p_text), parse_int(q_text));
        } catch (const std::domain_error& ex) {
            throw usage_error(ex.what());
        }
    }();
    auto all = fillings(lens);
    if (!k_text.empty()) {
        Int k = parse_int(k_text);
        std::erase_if(all, [&](const Filling& f) { return f.euler != k; });
    }
    if (as_json) {
        json rows = json::array();
        for (const auto& f : all)
            rows.push_back({{"euler", int_to_json(f.euler)}, {"zero", cfstring_to_json(f.zero_string)}});
        json out{{"schema", 1},
                 {"p", int_to_json(lens.p)},
                 {"q", int_to_json(lens.q)},
                 {"dual", cfstring_to_json(cf_expand(Rational(lens.p, lens.p - lens.q)))},
                 {"fillings", rows}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "L(" << lens.p.get_str() << "," << lens.q.get_str() << ") dual "
                  << entries_str(cf_expand(Rational(lens.p, lens.p - lens.q))) << "\n";
        for (const auto& f : all)
            std::cout << "euler=" << f.euler.get_str() << " zero=" << entries_str(f.zero_string)
                      << "\n";
    }
    return kExitOk;
}

// ---- census ----

struct CensusRow {
    Int p, q;
    CFString dual;
    Int min_euler;
    CFString witness;
    int form = 0;
    bool one_replaceable = false;
};

CensusRow census_row(const LensSpace& lens) {
    CensusRow row;
    row.p = lens.p;
    row.q = lens.q;
    row.dual = cf_expand(Rational(lens.p, lens.p - lens.q));
    row.witness = minimal_fillings(lens, &row.min_euler).front();
    if (row.min_euler == 2) {
        for (const auto& w : two_replaceable_witnesses(lens)) {
            if (w.zero_string == row.witness) {
                row.form = w.form;
                break;
            }
        }
    }
    row.one_replaceable = (row.min_euler == 1);
    return row;
}

int run_census(long pmax, const std::string& k_text, const std::string& out_path) {
    if (pmax < 2 || pmax > kCensusCap)
        throw usage_error("census: --pmax must lie in [2, " + std::to_string(kCensusCap) + "]");
    std::optional<Int> only_k;
    if (!k_text.empty()) only_k = parse_int(k_text);

    const std::string tmp_path = out_path + ".tmp";
    std::ofstream out(tmp_path);
    if (!out) {
        std::cerr << "cannot open " << tmp_path << "\n";
        return kExitUsage;
    }
    bool ok = true;
    out << "# schema=1\n";
    out << "p,q,dual,min_euler,witness,form,one_replaceable\n";
    for (long p = 2; p <= pmax && ok; ++p) {
        for (long q = 1; q < p; ++q) {
            Int ip(p), iq(q), g;
            mpz_gcd(g.get_mpz_t(), ip.get_mpz_t(), iq.get_mpz_t());
            if (g != 1) continue;
            CensusRow row = census_row(LensSpace{ip, iq});
            if (only_k && row.min_euler != *only_k) continue;
            out << row.p.get_str() << ',' << row.q.get_str() << ',' << entries_str(row.dual, '-')
                << ',' << row.min_euler.get_str() << ',' << entries_str(row.witness, '-') << ','
                << row.form << ',' << (row.one_replaceable ? 1 : 0) << "\n";
            if (!out) {
                ok = false;
                break;
            }
        }
    }
    out.close();
    if (!ok || !out) {
        std::filesystem::remove(tmp_path);
        std::cerr << "census: write failed, partial file removed\n";
        return kExitUsage;
    }
    std::filesystem::rename(tmp_path, out_path);
    std::cout << "census written to " << out_path << "\n";
    return kExitOk;
}

// ---- tree / abelianize / palf ----

int run_tree(const std::string& path, bool as_json) {
    PlumbingTree t = tree_from_json(load_json_file(path));
    IntMatrix m = intersection_matrix(t);
    Inertia in = signature_exact(m);
    Int det = det_bareiss(m);
    auto h1 = boundary_h1(t);
    if (as_json) {
        json out{{"schema", 1},
                 {"chi", int_to_json(plumbing_euler(t))},
                 {"sigma", in.positive - in.negative},
                 {"det", int_to_json(det)},
                 {"h1", factors_json(h1)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "chi=" << plumbing_euler(t).get_str() << " sigma="
                  << (in.positive - in.negative) << " det=" << det.get_str()
                  << " H1=" << factors_str(h1) << "\n";
    }
    return kExitOk;
}

int run_abelianize(const std::string& path, bool as_json) {
    Presentation p = presentation_from_json(load_json_file(path));
    auto factors = abelianization(p);
    if (as_json) {
        std::cout << json{{"schema", 1}, {"factors", factors_json(factors)}}.dump() << "\n";
    } else {
        std::cout << factors_str(factors) << "\n";
    }
    return kExitOk;
}

int run_palf_check(const std::string& path, bool as_json) {
    auto [c_side, b_side] = factorization_pair_from_json(load_json_file(path));
    KeyPairReport r = key_pair_check(c_side, b_side);
    if (as_json) {
        json out{{"schema", 1},
                 {"holes", r.holes},
                 {"euler_c", r.euler_c},
                 {"euler_b", r.euler_b},
                 {"boundary_c", factors_json(r.boundary_c)},
                 {"boundary_b", factors_json(r.boundary_b)},
                 {"boundary_equal", r.boundary_equal},
                 {"b_h1_total", factors_json(r.b_h1_total)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "holes=" << r.holes << " euler_c=" << r.euler_c << " euler_b=" << r.euler_b
                  << "\n";
        std::cout << "boundary_c=" << factors_str(r.boundary_c)
                  << " boundary_b=" << factors_str(r.boundary_b)
                  << (r.boundary_equal ? " (equal)" : " (MISMATCH)") << "\n";
        std::cout << "b_h1_total=" << factors_str(r.b_h1_total) << "\n";
    }
    return r.boundary_equal ? kExitOk : kExitMismatch;
}

int run_palf_builtin(const std::string& name) {
    auto f = named_factorization(name);
    if (!f) throw usage_error("unknown built-in factorization '" + name + "'");
    std::cout << factorization_to_json(*f).dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continued fractions, lens space fillings, plumbing and PALF homology"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // cf
    auto* cf = app.add_subcommand("cf", "continued fraction operations");
    cf->require_subcommand(1);
    std::string cf_arg;
    for (const char* op : {"eval", "expand", "dual", "reverse"}) {
        auto* sub = cf->add_subcommand(op);
        sub->add_option("entries", cf_arg,
                        op == std::string("expand") ? "rational p/q" : "comma-separated entries")
            ->required();
    }

    // fillings
    auto* fill = app.add_subcommand("fillings", "list Lisca fillings of L(p,q)");
    std::string fp, fq, fk;
    fill->add_option("p", fp)->required();
    fill->add_option("q", fq)->required();
    fill->add_option("--k", fk, "only fillings with this Euler characteristic");

    // census
    auto* census = app.add_subcommand("census", "CSV census over all L(p,q), p <= pmax");
    long pmax = 0;
    std::string ck, cout_path;
    census->add_option("--pmax", pmax, "largest p")->required();
    census->add_option("--k", ck, "only rows with this minimal Euler characteristic");
    census->add_option("--out", cout_path, "output CSV path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    int vmax_len = 6, vmax_entry = 7, vzero_len = 9, vpmax = 400;
    auto* vthm = verify->add_subcommand("theorem1", "classification vs brute-force oracle");
    vthm->add_option("--max-len", vmax_len, "max plumbing length");
    vthm->add_option("--max-entry", vmax_entry, "max framing magnitude");
    auto* vlem = verify->add_subcommand("lemmas", "continued-fraction lemma suite");
    int lmax_len = 6, lmax_entry = 6;
    vlem->add_option("--max-len", lmax_len);
    vlem->add_option("--max-entry", lmax_entry);
    vlem->add_option("--zero-len", vzero_len);
    verify->add_subcommand("palf-seed", "seed factorization oracle");
    verify->add_subcommand("section3", "pairing/abelianization checks and Gram report");
    auto* vch = verify->add_subcommand("casson-harer", "rational ball filling equivalence");
    vch->add_option("--pmax", vpmax);

    // tree / abelianize / palf
    auto* tree = app.add_subcommand("tree", "plumbing tree invariants");
    tree->require_subcommand(1);
    auto* tinv = tree->add_subcommand("invariants", "chi, sigma, det, boundary H1");
    std::string tree_path;
    tinv->add_option("file", tree_path, "tree JSON file")->required();

    auto* abel = app.add_subcommand("abelianize", "abelianize a presentation file");
    std::string abel_path;
    abel->add_option("file", abel_path, "presentation JSON file")->required();

    auto* palf = app.add_subcommand("palf", "factorization utilities");
    palf->require_subcommand(1);
    auto* pcheck = palf->add_subcommand("check", "certify a c-side/b-side pair");
    std::string palf_path;
    pcheck->add_option("file", palf_path, "pair JSON file")->required();
    auto* pbuiltin = palf->add_subcommand("builtin", "print a built-in factorization");
    std::string builtin_name;
    pbuiltin->add_option("name", builtin_name, "seed-x | seed-abcdef | thm2a-bside:<n>")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cf->parsed())
            return run_cf(cf->get_subcommands().front()->get_name(), cf_arg, as_json);
        if (fill->parsed()) return run_fillings(fp, fq, fk, as_json);
        if (census->parsed()) return run_census(pmax, ck, cout_path);
        if (verify->parsed()) {
            auto* sub = verify->get_subcommands().front();
            if (sub->get_name() == "theorem1") {
                Theorem1Report r = verify_theorem1(vmax_len, vmax_entry);
                std::cout << render_theorem1_report(r);
                return r.success() ? kExitOk : kExitMismatch;
            }
            CheckReport r;
            if (sub->get_name() == "lemmas")
                r = lemma_suite(lmax_len, lmax_entry, vzero_len);
            else if (sub->get_name() == "palf-seed")
                r = palf_seed_suite();
            else if (sub->get_name() == "section3")
                r = section3_suite();
            else
                r = casson_harer_suite(vpmax);
            print_report(r);
            return r.pass ? kExitOk : kExitMismatch;
        }
        if (tree->parsed()) return run_tree(tree_path, as_json);
        if (abel->parsed()) return run_abelianize(abel_path, as_json);
        if (palf->parsed()) {
            if (palf->get_subcommands().front()->get_name() == "check")
                return run_palf_check(palf_path, as_json);
            return run_palf_builtin(builtin_name);
        }
    } catch (const not_admissible& ex) {
        std::cerr << ex.what() << "\n";
        return kExitNotAdmissible;
    } catch (const usage_error& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    } catch (const schema_error& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
