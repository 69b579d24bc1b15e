#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypnp/charsum.hpp"
#include "hypnp/frobenius.hpp"
#include "hypnp/hodge.hpp"
#include "hypnp/json_io.hpp"
#include "hypnp/params.hpp"
#include "hypnp/polytope.hpp"
#include "hypnp/svg.hpp"
#include "hypnp/verify.hpp"

namespace {

using namespace hypnp;

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoll(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        f << j.dump(2) << "\n";
    }
}

std::int64_t point_log(const SumContext& ctx, std::int64_t point) {
    if (ctx.s == 1) {
        std::int64_t code = ((point % ctx.q) + ctx.q) % ctx.q;
        if (code == 0) throw std::domain_error("fiber must be nonzero");
        return ctx.base.log_of(code);
    }
    // for s > 1 the point is the exponent of the canonical generator
    return ((point % (ctx.q - 1)) + (ctx.q - 1)) % (ctx.q - 1);
}

struct CommonOpts {
    std::uint64_t seed = 0;
    int threads = 1;
    int precision = 0;
    double budget = 0;
    bool debug_padic = false;
};

SumBudgets budgets_from(const CommonOpts& c) {
    SumBudgets b;
    if (c.budget > 0) b.tuple_limit = c.budget;
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypnp: irregular Hodge and Frobenius Newton polygons of hypergeometric connections"};
    app.require_subcommand(1);
    app.fallthrough();
    CommonOpts common;
    app.add_option("--seed", common.seed, "seed for randomized property checks")->capture_default_str();
    app.add_option("--threads", common.threads, "worker threads (accepted for compatibility)")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", common.precision, "pi-adic precision override");
    app.add_option("--budget", common.budget, "summation tuple budget override");
    app.add_flag("--debug-padic", common.debug_padic, "include raw p-adic coefficients in output");

    // hodge
    auto* hodge_cmd = app.add_subcommand("hodge", "irregular Hodge numbers and polygon");
    std::string alpha_s, beta_s, params_file, json_out, svg_out;
    std::int64_t opt_p = 0;
    int opt_s = 1;
    hodge_cmd->add_option("--alpha", alpha_s, "comma list of rationals");
    hodge_cmd->add_option("--beta", beta_s, "comma list of rationals");
    hodge_cmd->add_option("--params", params_file, "JSON file with alpha/beta");
    hodge_cmd->add_option("--p", opt_p, "prime for orbit-averaged polygon");
    hodge_cmd->add_option("--s", opt_s, "field exponent for orbit averaging");
    hodge_cmd->add_option("--json", json_out, "write JSON here instead of stdout");
    hodge_cmd->add_option("--svg", svg_out, "write polygon SVG here");

    // polytope
    auto* poly_cmd = app.add_subcommand("polytope", "facets, weights and basis exponents");
    std::string p_alpha, p_beta, p_json;
    std::int64_t p_d = 0;
    poly_cmd->add_option("--alpha", p_alpha, "comma list of rationals")->required();
    poly_cmd->add_option("--beta", p_beta, "comma list of rationals");
    poly_cmd->add_option("--d", p_d, "denominator scale (default: least common)");
    poly_cmd->add_option("--json", p_json, "write JSON here instead of stdout");

    // sum
    auto* sum_cmd = app.add_subcommand("sum", "evaluate one hypergeometric character sum");
    std::int64_t su_p = 0, su_point = 1;
    int su_s = 1, su_ext = 1;
    std::string su_a, su_b, su_json;
    sum_cmd->add_option("--p", su_p, "prime")->required();
    sum_cmd->add_option("--s", su_s, "base field exponent");
    sum_cmd->add_option("--aexp", su_a, "comma list of chi exponents")->required();
    sum_cmd->add_option("--bexp", su_b, "comma list of rho exponents");
    sum_cmd->add_option("--point", su_point, "fiber a (element for s=1, generator exponent for s>1)");
    sum_cmd->add_option("--ext", su_ext, "extension degree");
    sum_cmd->add_option("--json", su_json, "write JSON here instead of stdout");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "Newton vs Hodge polygon at fibers");
    std::int64_t cm_p = 0, cm_point = 1;
    int cm_s = 1;
    std::string cm_a, cm_b, cm_json, cm_svg;
    bool cm_all = false, cm_expect = false;
    cmp_cmd->add_option("--p", cm_p, "prime")->required();
    cmp_cmd->add_option("--s", cm_s, "base field exponent");
    cmp_cmd->add_option("--aexp", cm_a, "comma list of chi exponents")->required();
    cmp_cmd->add_option("--bexp", cm_b, "comma list of rho exponents");
    cmp_cmd->add_option("--point", cm_point, "fiber a");
    cmp_cmd->add_flag("--all-points", cm_all, "run every fiber in F_q^x");
    cmp_cmd->add_flag("--expect-ordinary", cm_expect, "exit 3 unless every verdict is ordinary");
    cmp_cmd->add_option("--json", cm_json, "write JSON here instead of stdout");
    cmp_cmd->add_option("--svg", cm_svg, "write overlaid polygons SVG here");

    // sweep
    auto* sw_cmd = app.add_subcommand("sweep", "all tuples with orders dividing p-1, CSV verdicts");
    std::int64_t sw_p = 0;
    int sw_nmax = 2, sw_mmax = 1;
    std::string sw_out;
    bool sw_expect = false;
    sw_cmd->add_option("--p", sw_p, "prime")->required();
    sw_cmd->add_option("--nmax", sw_nmax, "maximum n");
    sw_cmd->add_option("--mmax", sw_mmax, "maximum m");
    sw_cmd->add_option("--out", sw_out, "CSV output path (default stdout)");
    sw_cmd->add_flag("--expect-ordinary", sw_expect, "exit 3 unless every verdict is ordinary");

    // selftest
    auto* st_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (hodge_cmd->parsed()) {
            HypParams hp;
            if (!params_file.empty()) {
                std::ifstream f(params_file);
                if (!f) throw std::runtime_error("cannot open " + params_file);
                json j;
                f >> j;
                hp = params_from_json(j);
            } else {
                hp = normalize(parse_rat_list(alpha_s), parse_rat_list(beta_s));
            }
            json out{{"params", params_json(hp)},
                     {"theta", rat_list_json(theta(hp))},
                     {"polygon", polygon_json(irregular_hodge_polygon(hp))}};
            Polygon drawn = irregular_hodge_polygon(hp);
            if (opt_p > 0) {
                AsHodgeResult ah = as_hodge_polygon(hp, Int(opt_p), opt_s);
                json orbits = json::array();
                for (const auto& th : ah.orbit_thetas) orbits.push_back(rat_list_json(th));
                out["as_hodge"] = json{{"p", opt_p},
                                       {"s", opt_s},
                                       {"polygon", polygon_json(ah.polygon)},
                                       {"orbit_thetas", orbits},
                                       {"resonant_warning", ah.resonant_warning},
                                       {"experimental", ah.experimental}};
                drawn = ah.polygon;
            }
            emit(out, json_out);
            if (!svg_out.empty()) write_svg(svg_out, {{drawn, "#1f77b4"}});
        } else if (poly_cmd->parsed()) {
            HypParams hp = normalize(parse_rat_list(p_alpha), parse_rat_list(p_beta));
            std::int64_t d = p_d > 0 ? p_d : static_cast<std::int64_t>(common_denominator(hp));
            FacetSystem fs = build_facets(hp.n, hp.m, d);
            json uf = json::array(), cf = json::array();
            for (const auto& h : fs.upper) uf.push_back(h);
            for (const auto& g : fs.cone) cf.push_back(g);
            json basis = json::array();
            if (hp.alpha[0] == 0 && is_nonresonant(hp))
                for (const auto& be : basis_exponents(hp, d))
                    basis.push_back(json{{"r", be.r},
                                         {"ell", be.ell},
                                         {"point", be.point},
                                         {"weight", rat_str(be.weight)}});
            json out{{"params", params_json(hp)},
                     {"n", hp.n},
                     {"m", hp.m},
                     {"d", d},
                     {"upper_facets", uf},
                     {"cone_facets", cf},
                     {"volume", rat_str(volume(hp.n, hp.m, d))},
                     {"basis_exponents", basis}};
            emit(out, p_json);
        } else if (sum_cmd->parsed()) {
            CharParams cp;
            cp.p = su_p;
            cp.s = su_s;
            cp.a_exps = parse_int_list(su_a);
            cp.b_exps = parse_int_list(su_b);
            HypParams hp = cp.to_hyp_params();
            int M = common.precision > 0 ? common.precision : default_precision(hp, su_p, su_s);
            SumContext ctx = SumContext::make(su_p, su_s, su_ext, M, budgets_from(common));
            std::int64_t la = point_log(ctx, su_point);
            SumValue v = hyp_sum(ctx, cp, la, su_ext);
            json cells = json::array();
            const std::int64_t r = ctx.q - 1;
            for (std::int64_t t = 0; t < ctx.p; ++t)
                for (std::int64_t E = 0; E < r; ++E)
                    if (v.counts[static_cast<size_t>(t * r + E)])
                        cells.push_back(json::array(
                            {t, E, v.counts[static_cast<size_t>(t * r + E)]}));
            json out{{"p", su_p},       {"s", su_s},
                     {"aexps", cp.a_exps}, {"bexps", cp.b_exps},
                     {"point", su_point},  {"ext", su_ext},
                     {"group_ring", cells}};
            out["ord_q"] = is_zero_to_precision(v.padic) ? json(nullptr) : json(rat_str(ord_q(v.padic)));
            if (common.debug_padic) out["padic"] = padic_json(v.padic);
            emit(out, su_json);
        } else if (cmp_cmd->parsed()) {
            CharParams cp;
            cp.p = cm_p;
            cp.s = cm_s;
            cp.a_exps = parse_int_list(cm_a);
            cp.b_exps = parse_int_list(cm_b);
            HypParams hp = cp.to_hyp_params();
            int M = common.precision > 0 ? common.precision : default_precision(hp, cm_p, cm_s);
            SumContext ctx = SumContext::make(cm_p, cm_s, cp.n(), M, budgets_from(common));
            std::vector<std::int64_t> fibers;
            if (cm_all)
                for (std::int64_t la = 0; la < ctx.q - 1; ++la) fibers.push_back(la);
            else
                fibers.push_back(point_log(ctx, cm_point));
            json out = json::array();
            bool all_ordinary = true;
            FrobeniusReport last;
            for (std::int64_t la : fibers) {
                FrobeniusReport rep = compare(ctx, cp, la);
                if (rep.verdict != "ordinary") all_ordinary = false;
                out.push_back(report_json(rep));
                last = rep;
            }
            emit(out.size() == 1 ? out[0] : out, cm_json);
            if (!cm_svg.empty())
                write_svg(cm_svg, {{last.hodge_polygon, "#1f77b4"}, {last.newton_polygon, "#d62728"}});
            if (cm_expect && !all_ordinary) return 3;
        } else if (sw_cmd->parsed()) {
            auto rows = sweep(sw_p, sw_nmax, sw_mmax, budgets_from(common), common.precision);
            std::ostream* os = &std::cout;
            std::ofstream fout;
            if (!sw_out.empty()) {
                fout.open(sw_out);
                if (!fout) throw std::runtime_error("cannot open " + sw_out);
                os = &fout;
            }
            (*os) << report_csv_header() << "\n";
            bool all_ordinary = true;
            for (const auto& r : rows) {
                (*os) << report_csv_row(r) << "\n";
                if (r.verdict != "ordinary") all_ordinary = false;
            }
            if (sw_expect && !all_ordinary) return 3;
        } else if (st_cmd->parsed()) {
            auto results = run_acceptance(common.seed, budgets_from(common));
            bool ok = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
                if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
                std::cout << "\n";
                ok = ok && r.pass;
            }
            if (!ok) return 1;
        }
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
