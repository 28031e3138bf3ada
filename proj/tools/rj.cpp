#include <future>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rj/checks.hpp"
#include "rj/jones.hpp"
#include "rj/oracle.hpp"
#include "rj/qint.hpp"
#include "rj/quiver.hpp"

using namespace rj;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kMalformed = 2, kReducible = 3, kDomain = 4, kInternal = 5, kOverflow = 6 };

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

Fraction read_fraction(const std::string& s) {
    static const std::regex form(R"(\d+(/\d+)?)");
    if (!std::regex_match(s, form)) throw CliError(kMalformed, "malformed fraction '" + s + "', expected p/q");
    Fraction f;
    try {
        f = parse_fraction(s);
    } catch (const arith_error&) {
        throw CliError(kMalformed, "fraction '" + s + "' does not fit in 64 bits");
    } catch (const std::invalid_argument& e) {
        throw CliError(kReducible, e.what());
    }
    return f;
}

json frac_json(const Fraction& f) { return json::array({f.num(), f.den()}); }

json poly_json(const LaurentPoly& p) {
    json a = json::array();
    for (auto [e, c] : p.terms()) a.push_back(json::array({e, 1, c}));
    return a;
}

json poly_json(const GridPoly& p) {
    json a = json::array();
    for (auto [k, c] : p.terms()) {
        if (k % 4 == 0) a.push_back(json::array({k / 4, 1, c}));
        else if (k % 2 == 0) a.push_back(json::array({k / 2, 2, c}));
        else a.push_back(json::array({k, 4, c}));
    }
    return a;
}

std::string terms_str(const std::vector<i64>& c) {
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

std::string frac_list(const std::vector<Fraction>& v, const char* sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
    return s;
}

json frac_list_json(const std::vector<Fraction>& v) {
    json a = json::array();
    for (const auto& f : v) a.push_back(frac_json(f));
    return a;
}

// both orientations of the input, alpha > 1 and 1/alpha in (0,1)
std::pair<Fraction, Fraction> both_sides(const Fraction& f) {
    if (f.is_zero() || f.is_infinite() || f == Fraction(1, 1))
        throw CliError(kDomain, "need a fraction other than 0, 1 and 1/0, got " + f.str());
    return f > Fraction(1, 1) ? std::pair{f, f.reciprocal()} : std::pair{f.reciprocal(), f};
}

json cmd_jones(const Fraction& f, std::ostream& out, bool text) {
    auto [big, small] = both_sides(f);
    NegativeCF cf = negative_expand(big);
    WritheResult w = writhe_recursive(small);
    LaurentPoly j = jones_normalized(big);
    GridPoly v = jones_original(big, w.wr);
    if (text) {
        out << "alpha = " << big.str() << " = " << terms_str(cf.terms) << "^-\n";
        out << "l = " << cf.l() << ", l' = " << cf.lprime() << ", wr = " << w.wr << "\n";
        out << "J(q) = " << j.str("q") << "\n";
        out << "V(t) = " << v.str("t") << "\n";
    }
    return {{"alpha", frac_json(big)}, {"expansion", cf.terms}, {"l", cf.l()}, {"lprime", cf.lprime()},
            {"wr", w.wr}, {"J", poly_json(j)}, {"V", poly_json(v)}};
}

json cmd_qint(i64 a, i64 b, std::ostream& out, bool text) {
    LaurentPoly p;
    try {
        p = q_pair(a, b);
    } catch (const std::invalid_argument& e) {
        throw CliError(kDomain, e.what());
    }
    if (text) out << "(" << a << "," << b << ")_q = " << p.str("q") << "\n";
    return {{"pair", {a, b}}, {"poly", poly_json(p)}};
}

json cmd_qrational(const Fraction& f, std::ostream& out, bool text) {
    QRational r = q_rational(f);
    if (text) {
        out << "alpha = " << f.str() << "\n";
        out << "N_q = " << r.numerator.str("q") << "\n";
        out << "D_q = " << r.denominator.str("q") << "\n";
    }
    return {{"alpha", frac_json(f)}, {"N", poly_json(r.numerator)}, {"D", poly_json(r.denominator)}};
}

json quads_json(const std::vector<Quadrilateral>& qs) {
    json a = json::array();
    for (const auto& q : qs) a.push_back({{"j", q.j}, {"z", q.z}, {"through_f", q.through_f}, {"t", q.t}});
    return a;
}

void quads_text(const std::vector<Quadrilateral>& qs, std::ostream& out) {
    for (const auto& q : qs)
        out << "  j=" << q.j << " z=" << q.z << (q.through_f ? " via F" : "") << " t=" << q.t << "\n";
}

json cmd_writhe(const Fraction& f, std::ostream& out, bool text) {
    auto [big, small] = both_sides(f);
    WritheResult w = writhe_recursive(small);
    QuadrilateralSplit s = quadrilaterals(build_yat(small));
    if (text) {
        out << "alpha = " << small.str() << " (" << type_name(fraction_type(small)) << " type)\n";
        out << "wr = " << w.wr << "\n";
        quads_text(s.principal, out);
        if (w.wr_pm) {
            out << "wr+- = " << *w.wr_pm << "\n";
            quads_text(s.alternate, out);
        }
    }
    json j = {{"alpha", frac_json(small)}, {"wr", w.wr}, {"quadrilaterals", quads_json(s.principal)}};
    if (w.wr_pm) {
        j["wr_pm"] = *w.wr_pm;
        j["quadrilaterals_pm"] = quads_json(s.alternate);
    }
    return j;
}

json cmd_yat(const Fraction& f, std::ostream& out, bool text) {
    auto [big, small] = both_sides(f);
    YatTree t = build_yat(small);
    auto paths = seifert_paths(t);
    LaurentPoly g = bracket_path_sum(t);
    json tri = json::array();
    for (const auto& x : t.triangles)
        tri.push_back({{"apex", frac_json(x.apex)}, {"left", frac_json(x.left)}, {"right", frac_json(x.right)}});
    json pj = json::array();
    for (const auto& p : paths) pj.push_back(frac_list_json(p.vertices));
    if (text) {
        out << "alpha = " << small.str() << ", 1/alpha = " << terms_str(t.negcf.terms) << "^-\n";
        for (const auto& x : t.triangles)
            out << "  " << x.index << ": " << x.apex.str() << " = " << x.left.str() << " # " << x.right.str() << "\n";
        out << "left side: " << frac_list(t.left_side, ", ") << "\n";
        out << "right side: " << frac_list(t.right_side, ", ") << "\n";
        for (const auto& p : paths)
            out << (p.variant == PathVariant::Principal ? "path: " : "path+-: ") << frac_list(p.vertices, " -> ") << "\n";
        out << "<Gamma> = " << g.str("t") << "\n";
    }
    return {{"alpha", frac_json(small)}, {"triangles", tri}, {"left", frac_list_json(t.left_side)},
            {"right", frac_list_json(t.right_side)}, {"paths", pj}, {"bracket", poly_json(g)}};
}

json cmd_quiver(const Fraction& f, std::ostream& out, bool text) {
    FenceQuiver g = build_quiver(f);
    auto rho = closure_counts(g);
    json arrows = json::array();
    for (auto [u, v] : g.arrows) arrows.push_back({u + 1, v + 1});
    if (text) {
        out << "alpha = " << f.str() << " = " << terms_str(g.blocks) << "\n";
        out << "n = " << g.n << "\n";
        out << "arrows:";
        for (auto [u, v] : g.arrows) out << " " << u + 1 << "->" << v + 1;
        out << "\n";
        for (int i = 0; i <= g.n; ++i) out << "rho_" << i << " = " << rho[i] << "\n";
    }
    return {{"alpha", frac_json(f)}, {"blocks", g.blocks}, {"n", g.n}, {"arrows", arrows}, {"rho", rho}};
}

json cmd_verify(i64 max_sum, std::optional<i64> oracle_max, std::ostream& out, bool text, bool& all_ok) {
    if (max_sum < 2) throw CliError(kDomain, "--max-sum must be at least 2");
    if (oracle_max && (*oracle_max < 1 || *oracle_max > 20))
        throw CliError(kDomain, "--oracle-max must lie in 1..20");
    std::vector<std::future<CheckReport>> jobs;
    auto go = [&](auto f) { jobs.push_back(std::async(std::launch::async, f)); };
    go([] { return check_golden_values(); });
    go([] { return check_21_13_regression(); });
    go([=] { return check_pair_identities(max_sum); });
    go([=] { return check_jones_methods(max_sum); });
    go([=] { return check_writhe_methods(max_sum); });
    if (oracle_max) go([=] { return check_oracle(*oracle_max, max_sum); });
    go([=] { return check_quiver(max_sum, 16); });

    i64 cases = 0, failures = 0;
    json reports = json::array();
    all_ok = true;
    for (auto& j : jobs) {
        CheckReport r = j.get();
        cases += r.checked;
        failures += r.failures;
        all_ok = all_ok && r.ok();
        if (text) {
            out << (r.ok() ? "pass " : "FAIL ") << r.name << ": " << r.checked << " cases, " << r.failures << " failures\n";
            if (!r.ok()) out << "  first counterexample: " << r.first_failure << "\n";
        }
        json rj = {{"name", r.name}, {"cases", r.checked}, {"failures", r.failures}};
        if (!r.first_failure.empty()) rj["first_failure"] = r.first_failure;
        reports.push_back(rj);
    }
    if (text) out << (all_ok ? "OK" : "FAILED") << " (" << cases << " cases, " << failures << " failures)\n";
    return {{"ok", all_ok}, {"cases", cases}, {"failures", failures}, {"checks", reports}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jones polynomials of rational links via q-deformed rationals"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string frac;
    i64 qa = 0, qb = 0, max_sum = 0;
    std::optional<i64> oracle_max;
    auto* jones = app.add_subcommand("jones", "normalized and original Jones polynomial");
    auto* qint = app.add_subcommand("qint", "pair q-integer (a,b)_q");
    auto* qrat = app.add_subcommand("qrational", "N_q and D_q of a fraction >= 1");
    auto* writhe = app.add_subcommand("writhe", "writhe with its quadrilateral decomposition");
    auto* yat = app.add_subcommand("yat", "ancestor triangle, Seifert paths and bracket");
    auto* quiver = app.add_subcommand("quiver", "fence quiver closure counts");
    auto* verify = app.add_subcommand("verify", "exhaustive cross-checks");
    for (auto* c : {jones, qrat, writhe, yat, quiver}) c->add_option("fraction", frac, "p/q")->required();
    qint->add_option("a", qa)->required();
    qint->add_option("b", qb)->required();
    verify->add_option("--max-sum", max_sum, "bound for a + x, denominators and quiver sizes")->required();
    verify->add_option("--oracle-max", oracle_max, "run the oracle up to this many crossings");

    CLI11_PARSE(app, argc, argv);

    bool text = format == "text";
    std::ostringstream out;
    int code = kOk;
    try {
        json j;
        if (jones->parsed()) j = cmd_jones(read_fraction(frac), out, text);
        else if (qint->parsed()) j = cmd_qint(qa, qb, out, text);
        else if (qrat->parsed()) j = cmd_qrational(read_fraction(frac), out, text);
        else if (writhe->parsed()) j = cmd_writhe(read_fraction(frac), out, text);
        else if (yat->parsed()) j = cmd_yat(read_fraction(frac), out, text);
        else if (quiver->parsed()) j = cmd_quiver(read_fraction(frac), out, text);
        else {
            bool ok = true;
            j = cmd_verify(max_sum, oracle_max, out, text, ok);
            if (!ok) code = kCheckFailed;
        }
        if (!text) out << j.dump(2) << "\n";
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const arith_error& e) {
        std::cerr << "error: integer overflow: " << e.what() << "\n";
        return kOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    std::cout << out.str();
    return code;
}
