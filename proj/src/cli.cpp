#include "lattice/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "lattice/bounds.hpp"
#include "lattice/errors.hpp"
#include "lattice/moduli.hpp"
#include "lattice/optimize.hpp"
#include "lattice/parallel.hpp"

namespace lattice {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s, const std::string& flag) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw UsageError(flag + ": not a finite number: '" + s + "'");
    return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& flag, std::size_t want = 0) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_real(item, flag));
    if (!s.empty() && s.back() == ',') throw UsageError(flag + ": trailing comma in '" + s + "'");
    if (want && out.size() != want) {
        throw UsageError(flag + ": expected " + std::to_string(want) + " comma-separated values, got '" + s + "'");
    }
    return out;
}

ModuliPoint parse_point(const std::string& s, const std::string& flag) {
    const auto v = parse_list(s, flag, 2);
    if (!(v[1] > 0)) throw UsageError(flag + ": imaginary part must be positive");
    return ModuliPoint{v[0], v[1]};
}

std::pair<double, double> parse_interval(const std::string& s, const std::string& flag) {
    const auto v = parse_list(s, flag, 2);
    if (!(v[0] < v[1])) throw UsageError(flag + ": needs lo < hi");
    return {v[0], v[1]};
}

struct FunctionalFlags {
    std::string name = "R";
    double alpha = 0.0;
    double beta = 0.0;
    int k = 2;

    void add(CLI::App* sub) {
        sub->add_option("--functional", name, "theta, R, generalized or corollary")->capture_default_str();
        sub->add_option("--alpha", alpha, "decay parameter alpha > 0")->required();
        sub->add_option("--beta", beta, "second decay parameter for corollary (beta > alpha)");
        sub->add_option("--k", k, "power for generalized (k >= 1)")->capture_default_str();
    }

    Functional resolve() const {
        Functional f;
        try {
            f.kind = parse_functional(name);
        } catch (const LatticeError&) {
            throw UsageError("--functional: unknown functional '" + name + "'");
        }
        if (!(alpha > 0) || !std::isfinite(alpha)) throw UsageError("--alpha: must be a positive finite number");
        if (f.kind == FunctionalKind::Generalized && k < 1) throw UsageError("--k: must be >= 1");
        if (f.kind == FunctionalKind::Corollary && !(beta > alpha)) throw UsageError("--beta: must exceed --alpha");
        f.k = k;
        f.beta = beta;
        return f;
    }
};

std::string format_word(const std::vector<Generator>& steps) {
    if (steps.empty()) return "(identity)";
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? " " : "") + std::string(generator_name(steps[i]));
    return s;
}

std::string format_point(const std::vector<std::string>& names, const std::vector<double>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ";" : "") + names[i] + "=" + num(p[i]);
    return s;
}

bool is_usage_error(Errc c) {
    switch (c) {
        case Errc::InvalidPoint:
        case Errc::InvalidArgument:
        case Errc::NonPositiveAlpha:
        case Errc::NonPositiveK:
        case Errc::OrderViolation:
        case Errc::UnknownFunction:
        case Errc::OutOfRegion:
        case Errc::UnknownLemma:
        case Errc::RegionMismatch: return true;
        default: return false;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice theta and energy toolkit"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a functional at z, or a named bound function");
    FunctionalFlags ef;
    std::string ez, efunc, eargs;
    ef.add(eval);
    eval->get_option("--alpha")->required(false);
    eval->add_option("--z", ez, "point x,y with y > 0");
    eval->add_option("--function", efunc, "named bound function (see --list-functions)");
    eval->add_option("--args", eargs, "comma-separated arguments for --function");
    bool list_functions = false;
    eval->add_flag("--list-functions", list_functions, "list bound functions and their arguments");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "map z into the fundamental domain and print the generator word");
    std::string rz;
    reduce->add_option("--z", rz, "point x,y with y > 0")->required();

    // landscape
    auto* land = app.add_subcommand("landscape", "CSV of a functional over a rectangle");
    FunctionalFlags lf;
    std::string xr = "0,0.5", yr = "0.85,2";
    int lres = 50;
    lf.add(land);
    land->add_option("--xrange", xr, "lo,hi")->capture_default_str();
    land->add_option("--yrange", yr, "lo,hi with lo > 0")->capture_default_str();
    land->add_option("--res", lres, "points per axis (>= 2)")->capture_default_str();

    // minimize
    auto* mini = app.add_subcommand("minimize", "locate the minimizer over the fundamental domain");
    FunctionalFlags mf;
    MinimizeOptions mopts;
    bool on_gamma = false;
    mf.add(mini);
    mini->add_flag("--gamma", on_gamma, "search only the line x = 1/2");
    mini->add_option("--grid", mopts.grid, "coarse grid per axis")->capture_default_str();
    mini->add_option("--ymax", mopts.y_max, "upper y clip")->capture_default_str();

    // verify
    auto* ver = app.add_subcommand("verify", "check inequalities over parameter grids");
    std::string lemma = "all", region;
    int vgrid = kDefaultGrid;
    double vtol = kCheckTolerance;
    std::vector<std::string> ranges;
    bool list = false;
    ver->add_option("--lemma", lemma, "check id, 'all' (stated results), 'steps' (intermediate) or 'everything'")
        ->capture_default_str();
    ver->add_option("--grid", vgrid, "points per axis (>= 2)")->capture_default_str();
    ver->add_option("--tolerance", vtol, "allowed negative slack")->capture_default_str();
    ver->add_option("--region", region, "override the region id");
    ver->add_option("--range", ranges, "name=lo,hi to override one parameter range (repeatable)");
    ver->add_flag("--list", list, "list check ids and statements");

    // constants
    auto* cons = app.add_subcommand("constants", "recompute published constants and compare");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*eval) {
            if (list_functions) {
                for (const auto& f : list_region_functions()) {
                    std::string ps;
                    for (const auto& p : f.params) ps += (ps.empty() ? "" : ",") + p;
                    out << f.id << "(" << ps << "): " << f.statement << "\n";
                }
                return kExitOk;
            }
            if (!efunc.empty()) {
                if (!ez.empty()) throw UsageError("--function and --z are exclusive");
                const auto a = eargs.empty() ? std::vector<double>{} : parse_list(eargs, "--args");
                out << num(region_function(efunc, a)) << "\n";
                return kExitOk;
            }
            if (ez.empty()) throw UsageError("eval needs --z (or --function)");
            if (eval->get_option("--alpha")->count() == 0) throw UsageError("--alpha is required");
            const Functional f = ef.resolve();
            out << num(evaluate(f, ef.alpha, parse_point(ez, "--z"))) << "\n";
            return kExitOk;
        }
        if (*reduce) {
            const auto [z, trace] = reduce_to_fundamental(parse_point(rz, "--z"));
            out << "point " << num(z.x) << "," << num(z.y) << "\n";
            out << "word " << format_word(trace.steps) << "\n";
            return kExitOk;
        }
        if (*land) {
            const Functional f = lf.resolve();
            const auto [x0, x1] = parse_interval(xr, "--xrange");
            const auto [y0, y1] = parse_interval(yr, "--yrange");
            if (!(y0 > 0)) throw UsageError("--yrange: lower end must be positive");
            if (lres < 2) throw UsageError("--res: must be >= 2");
            const std::size_t n = static_cast<std::size_t>(lres) * lres;
            std::vector<double> vals(n);
            auto node = [&](std::size_t i) {
                const std::size_t a = i / lres, b = i % lres;
                return ModuliPoint{x0 + (x1 - x0) * a / (lres - 1), y0 + (y1 - y0) * b / (lres - 1)};
            };
            parallel_for(n, [&](std::size_t i) { vals[i] = evaluate(f, lf.alpha, node(i)); });
            out << "x,y,value\n";
            for (std::size_t i = 0; i < n; ++i) {
                const auto z = node(i);
                out << num(z.x) << "," << num(z.y) << "," << num(vals[i]) << "\n";
            }
            return kExitOk;
        }
        if (*mini) {
            const Functional f = mf.resolve();
            if (mopts.grid < 2) throw UsageError("--grid: must be >= 2");
            if (!(mopts.y_max > std::sqrt(3.0) / 2.0)) throw UsageError("--ymax: must exceed sqrt(3)/2");
            if (on_gamma) {
                const auto [y, v] = minimize_on_gamma(f, mf.alpha, mopts);
                out << "functional " << functional_id(f) << "\nalpha " << num(mf.alpha) << "\n";
                out << "argmin 0.5," << num(y) << "\nvalue " << num(v) << "\n";
                return kExitOk;
            }
            const auto r = minimize(f, mf.alpha, mopts);
            out << "functional " << r.functional_id << "\nalpha " << num(r.alpha) << "\n";
            out << "argmin " << num(r.argmin.x) << "," << num(r.argmin.y) << "\nvalue " << num(r.value) << "\n";
            out << "iterations " << r.iterations << "\nconverged " << (r.converged ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (*ver) {
            const auto checks = list_checks();
            if (list) {
                for (const auto& c : checks) {
                    out << c.id << (c.proof_step ? " [step]" : "") << ": " << c.statement << "\n";
                }
                return kExitOk;
            }
            if (vgrid < 2) throw UsageError("--grid: must be >= 2");
            if (!(vtol >= 0) || !std::isfinite(vtol)) throw UsageError("--tolerance: must be a nonnegative number");
            std::vector<std::string> ids;
            for (const auto& c : checks) {
                const bool pick = lemma == "everything" || (lemma == "all" && !c.proof_step) ||
                                  (lemma == "steps" && c.proof_step) || lemma == c.id;
                if (pick) ids.push_back(c.id);
            }
            if (ids.empty()) throw UsageError("--lemma: unknown check '" + lemma + "'");
            std::optional<RegionId> region_override;
            if (!region.empty()) {
                try {
                    region_override = parse_region(region);
                } catch (const LatticeError&) {
                    throw UsageError("--region: unknown region '" + region + "'");
                }
            }
            std::vector<ParamRange> overrides;
            for (const auto& r : ranges) {
                const auto eq = r.find('=');
                if (eq == std::string::npos) throw UsageError("--range: expected name=lo,hi, got '" + r + "'");
                const auto [lo, hi] = parse_interval(r.substr(eq + 1), "--range");
                overrides.push_back({r.substr(0, eq), lo, hi});
            }

            out << "lemma_id,points,min_slack,worst_point,violations\n";
            std::size_t failed = 0;
            long total = 0;
            for (const auto& id : ids) {
                RegionSpec spec = default_region(id, vgrid);
                if (region_override) spec.region_id = *region_override;
                for (const auto& o : overrides) {
                    auto it = std::find_if(spec.param_ranges.begin(), spec.param_ranges.end(),
                                           [&](const ParamRange& p) { return p.name == o.name; });
                    if (it == spec.param_ranges.end()) throw UsageError("--range: check " + id + " has no parameter " + o.name);
                    *it = o;
                }
                const auto rep = check_inequality(id, spec, {}, vtol);
                out << rep.lemma_id << "," << rep.points_tested << "," << num(rep.min_slack) << ","
                    << format_point(rep.param_names, rep.worst_point) << "," << rep.violations.size() << "\n";
                total += rep.points_tested;
                if (!rep.violations.empty()) {
                    ++failed;
                    err << "VIOLATED " << id << ": " << rep.violations.size() << " of " << rep.points_tested
                        << " points, min slack " << num(rep.min_slack) << " at "
                        << format_point(rep.param_names, rep.worst_point) << "\n";
                }
            }
            err << ids.size() << " checks, " << total << " points, " << failed << " violated (tolerance " << num(vtol)
                << ")\n";
            return failed ? kExitViolation : kExitOk;
        }
        if (*cons) {
            out << "name,computed,printed,abs_diff,allowed\n";
            int bad = 0;
            for (const auto& r : reference_constants()) {
                out << r.name << "," << num(r.computed) << "," << num(r.printed) << "," << num(r.abs_diff) << ","
                    << num(r.allowed) << "\n";
                if (!(r.abs_diff <= r.allowed)) {
                    ++bad;
                    err << "MISMATCH " << r.name << ": |" << num(r.computed) << " - " << num(r.printed)
                        << "| = " << num(r.abs_diff) << " > " << num(r.allowed) << "\n";
                }
            }
            return bad ? kExitViolation : kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LatticeError& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? kExitUsage : kExitViolation;
    }
    return kExitUsage;
}

}  // namespace lattice
