#include "lattice/bounds.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "bounds_functions.hpp"
#include "lattice/energy.hpp"
#include "lattice/errors.hpp"
#include "lattice/parallel.hpp"

namespace lattice {

using namespace detail;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
const double kHexY = std::sqrt(3.0) / 2.0;
constexpr double kSmallX = 1.0 / 128.0;
constexpr double kLargeX = 4.0;
constexpr int kMaxK = 6;

bool ge(double a, double b) { return a >= b - 1e-12 * std::max(1.0, std::fabs(b)); }
bool le(double a, double b) { return ge(b, a); }

bool in_Aa(double a, double y) { return ge(y, kHexY) && ge(a, 1.5) && ge(y, a / 2.0); }
bool in_Ab(double a, double y) { return ge(y, 1.0) && ge(a, 2.0 * y) && le(a, 3.0 * y); }
bool in_Ac(double a, double y) { return ge(y, kHexY) && le(y, 1.0) && ge(a, 2.0 * y) && le(a, 3.0 * y); }
bool in_Ad(double a, double y) { return ge(y, kHexY) && ge(a, 3.0 * y); }
bool in_Abcd(double a, double y) { return ge(y, kHexY) && ge(a, 2.0 * y); }
bool in_Omega1(double a, double y) { return ge(a, 1.5) && ge(y, 0.8 * a); }
bool in_Omega2(double a, double y) { return ge(a, 1.5) && ge(y, kHexY) && le(y, 0.8 * a); }
bool in_DG(double x, double y) { return x > 0.0 && x < 0.5 && x * x + y * y > 1.0; }

double fd(const std::function<double(double)>& f, double v, double h = kMonotoneStep) {
    return (f(v + h) - f(v - h)) / (2.0 * h);
}

// ---------------------------------------------------------------- region functions

struct RegionFn {
    std::string name;
    std::string statement;
    std::vector<std::string> params;
    std::function<bool(const std::vector<double>&)> domain;
    std::function<double(const std::vector<double>&, const SeriesTruncation&)> eval;
};

double J_part(int k, double alpha, double y, const SeriesTruncation& tr) {
    return dR_dy_line(alpha, y, tr).second.I_b[k] / (alpha * alpha);
}

const std::vector<RegionFn>& region_table() {
    static const std::vector<RegionFn> table = [] {
        using V = const std::vector<double>&;
        using T = const SeriesTruncation&;
        auto ay = std::vector<std::string>{"alpha", "y"};
        std::vector<RegionFn> t;
        auto Aa = [](V v) { return in_Aa(v[0], v[1]); };
        auto Abcd = [](V v) { return in_Abcd(v[0], v[1]); };
        auto O1 = [](V v) { return in_Omega1(v[0], v[1]); };
        auto O2 = [](V v) { return in_Omega2(v[0], v[1]); };
        auto pos = [](V v) { return v[0] > 0 && v[1] > 0; };
        auto tdom = [](V v) { return ge(v[0], 0.8); };
        auto rt = [](V v) { return ge(v[0], 1.5) && ge(v[1], 0.8); };
        t.push_back({"D1", "lower bound for Phi_A with quotients frozen at X = 1/2", ay, Aa,
                     [](V v, T tr) { return D1(v[0], v[1], tr); }});
        t.push_back({"D2", "lower bound for Phi_A with quotients frozen at X = 1/3", ay,
                     [](V v) { return in_Ab(v[0], v[1]); }, [](V v, T tr) { return D2(v[0], v[1], tr); }});
        t.push_back({"D3", "lower bound for Phi_A using monotonicity in Y", ay,
                     [](V v) { return in_Ac(v[0], v[1]); }, [](V v, T tr) { return D3(v[0], v[1], tr); }});
        t.push_back({"D4", "lower bound for Phi_A from the small-X quotient bounds", ay,
                     [](V v) { return in_Ad(v[0], v[1]); }, [](V v, T tr) { return D4(v[0], v[1], tr); }});
        t.push_back({"psi", "D3(sqrt(3); y)", {"y"}, [](V v) { return ge(v[0], kHexY) && le(v[0], 1.0); },
                     [](V v, T tr) { return D3(std::sqrt(3.0), v[0], tr); }});
        for (int i = 0; i < 3; ++i) {
            t.push_back({"E" + std::to_string(i + 1), "series-side envelope of Phi_B part " + std::to_string(i + 1), ay, Aa,
                         [i](V v, T tr) { return E_envelope(i, v[0], v[1], tr); }});
        }
        for (int i = 0; i < 3; ++i) {
            t.push_back({"Et" + std::to_string(i + 1), "comb-side envelope of Phi_B part " + std::to_string(i + 1), ay, Abcd,
                         [i](V v, T tr) { return Et_envelope(i, v[0], v[1], tr); }});
        }
        t.push_back({"P", "lower-bound polynomial for I_a / (3/8 alpha^2)", ay, O1,
                     [](V v, T tr) { return P_fn(v[0], v[1], tr); }});
        for (int k = 0; k < 4; ++k) {
            t.push_back({"I_a_lower_" + std::to_string(k + 1), "lower bound for I_a part " + std::to_string(k + 1), ay, O1,
                         [k](V v, T tr) { return I_a_lower_parts(v[0], v[1], tr)[k]; }});
        }
        t.push_back({"g", "P lower bound as a function of t = y/alpha", {"t"}, tdom,
                     [](V v, T tr) { return g_fn(v[0], tr); }});
        t.push_back({"h", "r-dependent part of P(r; rt)", {"r", "t"}, rt,
                     [](V v, T tr) { return h_fn(v[0], v[1], eps_bar_frozen(tr)); }});
        for (int k = 0; k < 5; ++k) {
            t.push_back({"eps_bar_" + std::to_string(k), "small sum eps_bar_" + std::to_string(k) + " at t = y/alpha", {"t"},
                         tdom, [k](V v, T tr) {
                             const EpsBar e = eps_bar(v[0], tr);
                             const double vals[5] = {e.e0, e.e1, e.e2, e.e3, e.e4};
                             return vals[k];
                         }});
        }
        for (int k = 0; k < 4; ++k) {
            t.push_back({"J" + std::to_string(k + 1), "alpha^-2 times the |n| >= 2 part " + std::to_string(k + 1) + " of dR/dy",
                         ay, O1, [k](V v, T tr) { return J_part(k, v[0], v[1], tr); }});
        }
        t.push_back({"J1_envelope", "envelope for |J1|", ay, O1, [](V v, T tr) { return J1_envelope(v[0], v[1], tr); }});
        t.push_back({"J2_envelope", "envelope for |J2| in r = alpha, t = y/alpha", {"r", "t"}, rt,
                     [](V v, T tr) { return J2_envelope(v[0], v[1], tr); }});
        t.push_back({"eps_a", "relative error of the first W_d group", ay, O2, [](V v, T tr) { return eps_a(v[0], v[1], tr); }});
        t.push_back({"eps_b", "relative error of the second W_d group", ay, O2, [](V v, T tr) { return eps_b(v[0], v[1], tr); }});
        t.push_back({"eps_c", "relative error of the W_e bound", ay, O2, [](V v, T tr) { return eps_c(v[0], v[1], tr); }});
        t.push_back({"Y", "normalized lower bound for the radial operator", ay, O2, [](V v, T tr) { return Y_fn(v[0], v[1], tr); }});
        t.push_back({"W_a_lower", "few-term lower bound for W_a", ay, pos, [](V v, T) { return W_a_lower(v[0], v[1]); }});
        t.push_back({"W_b_lower", "few-term lower bound for W_b", ay, pos, [](V v, T) { return W_b_lower(v[0], v[1]); }});
        t.push_back({"W_c_lower", "few-term lower bound for W_c", ay, pos, [](V v, T) { return W_c_lower(v[0], v[1]); }});
        t.push_back({"W_d_upper", "upper bound for W_d", ay, pos, [](V v, T tr) { return W_d_upper(v[0], v[1], tr); }});
        t.push_back({"W_e_upper", "upper bound for W_e", ay, pos, [](V v, T tr) { return W_e_upper(v[0], v[1], tr); }});
        auto adom = [](V v) { return ge(v[0], 2.0); };
        t.push_back({"sigma_a1", "tail ratio of the quintic comb sum at Y = 1/2", {"a"}, adom,
                     [](V v, T tr) { return sigma_a1(v[0], tr); }});
        t.push_back({"sigma_a2", "tail ratio of the linear comb sum at Y = 1/2", {"a"}, adom,
                     [](V v, T tr) { return sigma_a2(v[0], tr); }});
        t.push_back({"sigma_ratio", "|(a pi-10)/(a pi-2)| |(1+sigma_a1)/(1+sigma_a2)|", {"a"}, adom,
                     [](V v, T tr) { return sigma_ratio(v[0], tr); }});
        auto xsmall = [](V v) { return v[0] > 0 && le(v[0], 0.5); };
        t.push_back({"xy_remainder_zero", "cross term a1 c2 - a2 c1 of the Y -> 0 bound", {"X"}, xsmall,
                     [](V v, T tr) { return xy_remainder_zero(v[0], tr); }});
        t.push_back({"xy_remainder_half", "cross term pi b2 - 4 X^2 b1 of the Y -> 1/2 bound", {"X"}, xsmall,
                     [](V v, T tr) { return xy_remainder_half(v[0], tr); }});
        t.push_back({"xxy_monotone_remainder", "normalized sign factor of d/dY(theta_XXY/theta_Y)", {"X"},
                     [](V v) { return ge(v[0], 59.0 / 250.0); }, [](V v, T tr) { return xxy_monotone_remainder(v[0], tr); }});
        return t;
    }();
    return table;
}

// ---------------------------------------------------------------- sampling

std::vector<double> axis(double lo, double hi, int res, bool open) {
    std::vector<double> v;
    if (hi < lo) return v;
    if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(hi))) {
        if (!open) v.push_back(lo);
        return v;
    }
    v.reserve(res);
    for (int i = 0; i < res; ++i) {
        v.push_back(open ? lo + (i + 0.5) * (hi - lo) / res : lo + i * (hi - lo) / (res - 1));
    }
    if (!open) v.back() = hi;
    return v;
}

struct Sampler {
    const RegionSpec& spec;
    const std::vector<std::string>& params;

    const ParamRange& range(const std::string& name) const {
        for (const auto& r : spec.param_ranges) {
            if (r.name == name) return r;
        }
        throw LatticeError(Errc::RegionMismatch, "region lacks parameter " + name);
    }
    bool has(const std::string& name) const {
        return std::find(params.begin(), params.end(), name) != params.end();
    }
    int index(const std::string& name) const {
        return static_cast<int>(std::find(params.begin(), params.end(), name) - params.begin());
    }

    std::vector<std::vector<double>> tensor() const {
        std::vector<std::vector<double>> pts{{}};
        for (const auto& name : params) {
            const auto& r = range(name);
            const auto ax = axis(r.lo, r.hi, spec.resolution, false);
            std::vector<std::vector<double>> next;
            next.reserve(pts.size() * ax.size());
            for (const auto& p : pts) {
                for (double v : ax) {
                    next.push_back(p);
                    next.back().push_back(v);
                }
            }
            pts = std::move(next);
        }
        return pts;
    }

    // Appends x midpoints over the open slice of the fundamental domain at height y.
    void push_with_x(std::vector<std::vector<double>>& out, std::vector<double> base, double y) const {
        if (!has("x")) {
            out.push_back(std::move(base));
            return;
        }
        const auto& r = range("x");
        const double lo = std::max(r.lo, std::sqrt(std::max(0.0, 1.0 - y * y)));
        const double hi = std::min(r.hi, 0.5);
        for (double x : axis(lo, hi, spec.resolution, true)) {
            auto p = base;
            p[index("x")] = x;
            out.push_back(std::move(p));
        }
    }

    std::vector<std::vector<double>> alpha_y_region() const {
        if (!has("alpha") || !has("y")) {
            throw LatticeError(Errc::RegionMismatch, std::string("region ") + region_name(spec.region_id) +
                                                         " needs parameters alpha and y");
        }
        const auto& ra = range("alpha");
        const auto& ry = range("y");
        const int res = spec.resolution;
        std::vector<std::vector<double>> out;
        auto emit = [&](double a, double y) {
            std::vector<double> p(params.size(), 0.0);
            p[index("alpha")] = a;
            p[index("y")] = y;
            push_with_x(out, std::move(p), y);
        };
        const double ylo = std::max(ry.lo, kHexY);
        switch (spec.region_id) {
            case RegionId::Aa:
                for (double a : axis(std::max(ra.lo, 1.5), std::min(ra.hi, 2.0 * ry.hi), res, false))
                    for (double y : axis(std::max(ylo, a / 2.0), ry.hi, res, false)) emit(a, y);
                break;
            case RegionId::Ab:
                for (double y : axis(std::max(ry.lo, 1.0), std::min(ry.hi, ra.hi / 2.0), res, false))
                    for (double a : axis(std::max(ra.lo, 2.0 * y), std::min(ra.hi, 3.0 * y), res, false)) emit(a, y);
                break;
            case RegionId::Ac:
                for (double y : axis(ylo, std::min({ry.hi, 1.0, ra.hi / 2.0}), res, false))
                    for (double a : axis(std::max(ra.lo, 2.0 * y), std::min(ra.hi, 3.0 * y), res, false)) emit(a, y);
                break;
            case RegionId::Ad:
                for (double y : axis(ylo, std::min(ry.hi, ra.hi / 3.0), res, false))
                    for (double a : axis(std::max(ra.lo, 3.0 * y), ra.hi, res, false)) emit(a, y);
                break;
            case RegionId::Omega1:
                for (double a : axis(std::max(ra.lo, 1.5), std::min(ra.hi, ry.hi / 0.8), res, false))
                    for (double y : axis(std::max(ry.lo, 0.8 * a), ry.hi, res, false)) emit(a, y);
                break;
            case RegionId::Omega2:
                for (double a : axis(std::max({ra.lo, 1.5, ylo / 0.8}), ra.hi, res, false))
                    for (double y : axis(ylo, std::min(ry.hi, 0.8 * a), res, false)) emit(a, y);
                break;
            case RegionId::Gamma:
                for (double a : axis(std::max(ra.lo, 0.0), ra.hi, res, false))
                    for (double y : axis(ylo, ry.hi, res, false)) emit(a, y);
                break;
            default: break;
        }
        return out;
    }

    std::vector<std::vector<double>> dg_region() const {
        if (!has("x") || !has("y")) {
            throw LatticeError(Errc::RegionMismatch, "region DG needs parameters x and y");
        }
        const auto& ry = range("y");
        std::vector<double> alphas{0.0};
        if (has("alpha")) alphas = axis(range("alpha").lo, range("alpha").hi, spec.resolution, false);
        std::vector<std::vector<double>> out;
        for (double a : alphas) {
            for (double y : axis(std::max(ry.lo, kHexY), ry.hi, spec.resolution, true)) {
                std::vector<double> p(params.size(), 0.0);
                if (has("alpha")) p[index("alpha")] = a;
                p[index("y")] = y;
                push_with_x(out, std::move(p), y);
            }
        }
        return out;
    }

    std::vector<std::vector<double>> sample() const {
        switch (spec.region_id) {
            case RegionId::XYrect:
            case RegionId::custom: return tensor();
            case RegionId::DG: return dg_region();
            default: return alpha_y_region();
        }
    }
};

// ---------------------------------------------------------------- checks

using Point = const double*;
using SlackFn = std::function<double(Point, const SeriesTruncation&)>;

struct Check {
    std::string id;
    std::string statement;
    std::vector<std::string> params;
    std::vector<RegionId> regions;
    std::vector<ParamRange> ranges;
    std::function<bool(Point)> domain;
    SlackFn slack;
    bool proof_step = false;
};

double min_over_k(const std::function<double(int)>& f) {
    double m = INFINITY;
    for (int k = 1; k <= kMaxK; ++k) m = std::min(m, f(k));
    return m;
}

double mu(double X, const SeriesTruncation& tr) { return aux_series(AuxSeries::Mu, X, tr); }
double q1(double X, double Y, const SeriesTruncation& tr) { return theta_quotient(Quotient::XYoverY, X, Y, tr); }
double q2(double X, double Y, const SeriesTruncation& tr) { return theta_quotient(Quotient::XXYoverY, X, Y, tr); }

double phi_B_sum(const EnergyDecompositionX& d) { return d.Phi_B[0] + d.Phi_B[1] + d.Phi_B[2]; }

double phi_ratio_slack(Point p, const SeriesTruncation& tr, double bound) {
    const auto d = dR_dx(p[0], ModuliPoint{p[2], p[1]}, tr).second;
    if (!(d.Phi_A > 0)) return -1.0;
    return bound - std::fabs(phi_B_sum(d)) / d.Phi_A;
}

const std::vector<Check>& check_table() {
    static const std::vector<Check> table = [] {
        using T = const SeriesTruncation&;
        std::vector<Check> c;
        const std::vector<std::string> XY{"X", "Y"};
        const std::vector<RegionId> rect{RegionId::XYrect};
        auto xy_range = [](double lo, double hi, double ylo = 0.0, double yhi = 1.0) {
            return std::vector<ParamRange>{{"X", lo, hi}, {"Y", ylo, yhi}};
        };
        auto xy_dom = [](double lo, double hi, bool lo_open = false) {
            return [=](Point p) { return (lo_open ? p[0] > lo : ge(p[0], lo)) && le(p[0], hi); };
        };
        const double comb_hi = kPi / (kPi + 2.0);

        // Theta quotient bounds.
        c.push_back({"theta_y_ratio_series", "|theta_Y(kY)/theta_Y(Y)| <= k(1+mu)/(1-mu) for X >= 1/5", XY, rect,
                     xy_range(0.2, kLargeX), xy_dom(0.2, 1e300), [](Point p, T tr) {
                         const double m = mu(p[0], tr);
                         return min_over_k([&](int k) {
                             return k * (1.0 + m) / (1.0 - m) - std::fabs(theta_y_ratio(0, k, p[0], p[1], tr));
                         });
                     }});
        c.push_back({"theta_y_ratio_comb", "|theta_Y(kY)/theta_Y(Y)| <= (k/pi) e^{pi/(4X)} for X < pi/(pi+2)", XY, rect,
                     xy_range(kSmallX, comb_hi), xy_dom(0.0, comb_hi, true), [](Point p, T tr) {
                         return min_over_k([&](int k) {
                             return k / kPi * std::exp(kPi / (4.0 * p[0])) - std::fabs(theta_y_ratio(0, k, p[0], p[1], tr));
                         });
                     }});
        c.push_back({"theta_xy_ratio_series", "|theta_XY(kY)/theta_Y(Y)| <= k pi (1+nu)/(1-mu) for X >= 1/5", XY, rect,
                     xy_range(0.2, kLargeX), xy_dom(0.2, 1e300), [](Point p, T tr) {
                         const double b = kPi * (1.0 + aux_series(AuxSeries::Nu, p[0], tr)) / (1.0 - mu(p[0], tr));
                         return min_over_k([&](int k) { return k * b - std::fabs(theta_y_ratio(1, k, p[0], p[1], tr)); });
                     }});
        c.push_back({"theta_xy_quotient_series_abs", "|theta_XY/theta_Y| <= pi (1+nu)/(1+mu) for X >= 1/5", XY, rect,
                     xy_range(0.2, kLargeX), xy_dom(0.2, 1e300), [](Point p, T tr) {
                         return kPi * (1.0 + aux_series(AuxSeries::Nu, p[0], tr)) / (1.0 + mu(p[0], tr)) -
                                std::fabs(q1(p[0], p[1], tr));
                     }});
        c.push_back({"theta_xy_ratio_comb", "|theta_XY(kY)/theta_Y(Y)| <= (3k/2pi) X^-1 (1+pi/6X) e^{pi/(4X)} for X <= 1/2",
                     XY, rect, xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true), [](Point p, T tr) {
                         const double X = p[0];
                         const double b = 3.0 / (2.0 * kPi) / X * (1.0 + kPi / (6.0 * X)) * std::exp(kPi / (4.0 * X));
                         return min_over_k([&](int k) { return k * b - std::fabs(theta_y_ratio(1, k, X, p[1], tr)); });
                     }});
        c.push_back({"theta_xy_quotient_comb_abs", "|theta_XY/theta_Y| <= (3/2) X^-1 (1+pi/6X) for X <= 1/2", XY, rect,
                     xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true), [](Point p, T tr) {
                         const double X = p[0];
                         return 1.5 / X * (1.0 + kPi / (6.0 * X)) - std::fabs(q1(X, p[1], tr));
                     }});
        c.push_back({"theta_xy_quotient_series_bounds",
                     "-pi(1+nu)/(1+mu) <= theta_XY/theta_Y <= -pi(1+nu^)/(1+mu^) for X >= 1/5", XY, rect,
                     xy_range(0.2, kLargeX), xy_dom(0.2, 1e300), [](Point p, T tr) {
                         const double X = p[0];
                         const double q = q1(X, p[1], tr);
                         const double lo = -kPi * (1.0 + aux_series(AuxSeries::Nu, X, tr)) / (1.0 + mu(X, tr));
                         const double hi = -kPi * (1.0 + aux_series(AuxSeries::NuHat, X, tr)) /
                                           (1.0 + aux_series(AuxSeries::MuHat, X, tr));
                         return std::min(q - lo, hi - q);
                     }});
        c.push_back({"theta_xy_quotient_comb_bounds", "c1/c2 <= theta_XY/theta_Y <= pi/(4X^2) for 0 < X <= 1/2", XY, rect,
                     xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true), [](Point p, T tr) {
                         const double X = p[0];
                         const double q = q1(X, p[1], tr);
                         const double e = std::exp(-kPi / X);
                         const double c1 = 0.75 * X * X + 2.0 * kPi2 * e;
                         const double c2 = -0.5 * X * X * X + 2.0 * kPi * X * X * e;
                         return std::min(q - c1 / c2, kPi / (4.0 * X * X) - q);
                     }});
        c.push_back({"theta_xxy_quotient_series_bounds",
                     "pi^2(1+omega^)/(1+mu^) <= theta_XXY/theta_Y <= pi^2(1+omega)/(1+mu) for X >= 59/250", XY, rect,
                     xy_range(59.0 / 250.0, kLargeX), xy_dom(59.0 / 250.0, 1e300), [](Point p, T tr) {
                         const double X = p[0];
                         const double q = q2(X, p[1], tr);
                         const double lo = kPi2 * (1.0 + aux_series(AuxSeries::OmegaHat, X, tr)) /
                                           (1.0 + aux_series(AuxSeries::MuHat, X, tr));
                         const double hi = kPi2 * (1.0 + aux_series(AuxSeries::Omega, X, tr)) / (1.0 + mu(X, tr));
                         return std::min(q - lo, hi - q);
                     }});
        c.push_back({"theta_xxy_quotient_comb_bounds",
                     "(15/4)X^-2 (1 -+ pi/3X -+ pi^2/60X^2) bracket theta_XXY/theta_Y for X <= 1/2", XY, rect,
                     xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true), [](Point p, T tr) {
                         const double X = p[0];
                         const double q = q2(X, p[1], tr);
                         const double s = 3.75 / (X * X);
                         const double d = kPi / (3.0 * X) + kPi2 / (60.0 * X * X);
                         return std::min(q - s * (1.0 - d), s * (1.0 + d) - q);
                     }});
        c.push_back({"theta_xxy_ratio_series", "|theta_XXY(kY)/theta_Y(Y)| <= k pi^2 (1+omega)/(1-mu) for X >= 1/5", XY,
                     rect, xy_range(0.2, kLargeX), xy_dom(0.2, 1e300), [](Point p, T tr) {
                         const double b = kPi2 * (1.0 + aux_series(AuxSeries::Omega, p[0], tr)) / (1.0 - mu(p[0], tr));
                         return min_over_k([&](int k) { return k * b - std::fabs(theta_y_ratio(2, k, p[0], p[1], tr)); });
                     }});
        c.push_back({"theta_xxy_ratio_comb",
                     "|theta_XXY(kY)/theta_Y(Y)| <= (15k/4pi) X^-2 (1+pi/3X+pi^2/60X^2) e^{pi/(4X)} for X <= 1/2", XY, rect,
                     xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true), [](Point p, T tr) {
                         const double X = p[0];
                         const double b = 15.0 / (4.0 * kPi) / (X * X) *
                                          (1.0 + kPi / (3.0 * X) + kPi2 / (60.0 * X * X)) * std::exp(kPi / (4.0 * X));
                         return min_over_k([&](int k) { return k * b - std::fabs(theta_y_ratio(2, k, X, p[1], tr)); });
                     }});
        c.push_back({"theta_xy_quotient_monotone",
                     "d/dY(theta_XY/theta_Y) >= 0 on [0,1/2] and <= 0 on [1/2,1]", XY, rect, xy_range(kSmallX, kLargeX),
                     xy_dom(0.0, 1e300, true), [](Point p, T tr) {
                         const double X = p[0];
                         const double s = p[1] <= 0.5 ? 1.0 : -1.0;
                         return s * fd([&](double Y) { return q1(X, Y, tr); }, p[1]);
                     }});
        c.push_back({"theta_xxy_quotient_monotone", "d/dY(theta_XXY/theta_Y) <= 0 on [0,1/2] for X >= 59/250", XY, rect,
                     xy_range(59.0 / 250.0, kLargeX, 0.0, 0.5),
                     [](Point p) { return ge(p[0], 59.0 / 250.0) && ge(p[1], 0.0) && le(p[1], 0.5); },
                     [](Point p, T tr) {
                         const double X = p[0];
                         return -fd([&](double Y) { return q2(X, Y, tr); }, p[1]);
                     }});
        c.push_back({"comb_cubic_ratio_sup", "|sum u^3 e^{-pi u^2/X} / sum u e^{-pi u^2/X}| <= 1/4 for X <= 1/2", XY, rect,
                     xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true),
                     [](Point p, T tr) { return 0.25 - std::fabs(comb_moment_ratio(3, p[0], p[1], tr)); }});
        c.push_back({"comb_quintic_ratio_sup", "|sum u^5 e^{-pi u^2/X} / sum u e^{-pi u^2/X}| <= 1/16 for X <= 1/2", XY,
                     rect, xy_range(kSmallX, 0.5), xy_dom(0.0, 0.5, true),
                     [](Point p, T tr) { return 1.0 / 16.0 - std::fabs(comb_moment_ratio(5, p[0], p[1], tr)); }});
        c.push_back({"sigma_ratio_bound", "|(a pi-10)/(a pi-2)| |(1+sigma_a1)/(1+sigma_a2)| <= 1 for a >= 2", {"a"},
                     rect, {{"a", 2.0, 1.0 / kSmallX}}, [](Point p) { return ge(p[0], 2.0); },
                     [](Point p, T tr) { return 1.0 - sigma_ratio(p[0], tr); }});
        c.push_back({"xy_remainder_zero_positive", "a1 c2 - a2 c1 >= 0 for 0 < X <= 1/2 (relative to its leading term)",
                     {"X"}, rect, {{"X", kSmallX, 0.5}}, xy_dom(0.0, 0.5, true),
                     [](Point p, T tr) { return xy_remainder_zero(p[0], tr) / xy_remainder_zero_lead(p[0]); }});
        c.push_back({"xy_remainder_half_positive", "pi b2 - 4X^2 b1 >= 0 for 0 < X <= 1/2 (relative to its leading term)",
                     {"X"}, rect, {{"X", kSmallX, 0.5}}, xy_dom(0.0, 0.5, true),
                     [](Point p, T tr) { return xy_remainder_half(p[0], tr) / xy_remainder_half_lead(p[0]); }});
        c.push_back({"xxy_monotone_remainder_positive", "sign factor of d/dY(theta_XXY/theta_Y) >= 0 for X >= 59/250",
                     {"X"}, rect, {{"X", 59.0 / 250.0, kLargeX}}, xy_dom(59.0 / 250.0, 1e300),
                     [](Point p, T tr) { return xxy_monotone_remainder(p[0], tr); }});

        // x-derivative on the fundamental domain.
        const std::vector<std::string> AYX{"alpha", "y", "x"};
        auto ayx_range = [] {
            return std::vector<ParamRange>{{"alpha", 0.5, kGridClip}, {"y", kHexY, kGridClip}, {"x", 0.0, 0.5}};
        };
        auto ayx_dom = [](bool (*region)(double, double)) {
            return [region](Point p) { return region(p[0], p[1]) && in_DG(p[2], p[1]); };
        };
        c.push_back({"C_positive", "theta_Y(y/alpha; x) < 0 so the prefactor C is positive on the fundamental domain",
                     AYX, {RegionId::DG}, {{"alpha", 0.25, kGridClip}, {"y", kHexY, kGridClip}, {"x", 0.0, 0.5}},
                     [](Point p) { return p[0] > 0 && in_DG(p[2], p[1]); }, [](Point p, T tr) {
                         // Normalized by the leading Fourier term so the sign stays visible at large X.
                         const double X = p[1] / p[0];
                         return -theta1({0, 1}, X, p[2], tr) / (4.0 * kPi * std::exp(-kPi * X) * std::sin(2.0 * kPi * p[2]));
                     }});
        c.push_back({"dRdx_negative", "dR/dx < 0 on the fundamental domain for alpha >= 3/2 (as (Phi_A + Phi_B)/Phi_A)",
                     AYX, {RegionId::DG}, {{"alpha", 1.5, kGridClip}, {"y", kHexY, kGridClip}, {"x", 0.0, 0.5}},
                     [](Point p) { return ge(p[0], 1.5) && in_DG(p[2], p[1]); }, [](Point p, T tr) {
                         const auto [v, d] = dR_dx(p[0], ModuliPoint{p[2], p[1]}, tr);
                         return -v / (d.C * std::fabs(d.Phi_A));
                     }});
        struct DCase {
            const char* id;
            RegionId region;
            bool (*in)(double, double);
            double (*D)(double, double, const SeriesTruncation&);
            double floor;
        };
        const DCase dcases[] = {{"Aa", RegionId::Aa, in_Aa, D1, 21.0 / 50.0},
                                {"Ab", RegionId::Ab, in_Ab, D2, 39.0 / 5.0},
                                {"Ac", RegionId::Ac, in_Ac, D3, 109.0 / 10.0},
                                {"Ad", RegionId::Ad, in_Ad, D4, 38.0}};
        int di = 1;
        for (const auto& dc : dcases) {
            const std::string n = std::to_string(di++);
            auto Dfn = dc.D;
            auto in = dc.in;
            c.push_back({"phi_A_ge_D" + n, std::string("Phi_A >= D") + n + " on region " + dc.id, AYX, {dc.region},
                         ayx_range(), ayx_dom(in), [Dfn](Point p, T tr) {
                             return dR_dx(p[0], ModuliPoint{p[2], p[1]}, tr).second.Phi_A - Dfn(p[0], p[1], tr);
                         }});
            const double floor = dc.floor;
            std::ostringstream st;
            st << "D" << n << " >= " << floor << " on region " << dc.id;
            c.push_back({"D" + n + "_lower", st.str(), {"alpha", "y"}, {dc.region},
                         {{"alpha", 0.5, kGridClip}, {"y", kHexY, kGridClip}},
                         [in](Point p) { return in(p[0], p[1]); },
                         [Dfn, floor](Point p, T tr) { return Dfn(p[0], p[1], tr) - floor; }});
        }
        c.push_back({"D1_monotone", "D1 increasing in alpha and in y on region Aa", {"alpha", "y"}, {RegionId::Aa},
                     {{"alpha", 0.5, kGridClip}, {"y", kHexY, kGridClip}}, [](Point p) { return in_Aa(p[0], p[1]); },
                     [](Point p, T tr) {
                         const double a = p[0], y = p[1];
                         return std::min(fd([&](double v) { return D1(v, y, tr); }, a),
                                         fd([&](double v) { return D1(a, v, tr); }, y));
                     }});
        c.push_back({"D3_monotone_alpha", "D3 increasing in alpha on region Ac", {"alpha", "y"}, {RegionId::Ac},
                     {{"alpha", 0.5, kGridClip}, {"y", kHexY, kGridClip}}, [](Point p) { return in_Ac(p[0], p[1]); },
                     [](Point p, T tr) {
                         const double y = p[1];
                         return fd([&](double a) { return D3(a, y, tr); }, p[0]);
                     }});
        c.push_back({"psi_concave", "psi''(y) <= 0 on [sqrt(3)/2, 1]", {"y"}, {RegionId::custom}, {{"y", kHexY, 1.0}},
                     [](Point p) { return ge(p[0], kHexY) && le(p[0], 1.0); }, [](Point p, T tr) {
                         const double h = kMonotoneStep;
                         const double y = std::min(p[0], 1.0 - h);
                         auto psi = [&](double v) { return D3(std::sqrt(3.0), v, tr); };
                         return -(psi(y + h) - 2.0 * psi(y) + psi(y - h)) / (h * h);
                     }});
        c.push_back({"phi_ratio_Aa", "|Phi_B/Phi_A| <= 1/77 on region Aa", AYX, {RegionId::Aa}, ayx_range(), ayx_dom(in_Aa),
                     [](Point p, T tr) { return phi_ratio_slack(p, tr, 1.0 / 77.0); }});
        for (auto [id, region, in] : {std::tuple{"Ab", RegionId::Ab, in_Ab}, std::tuple{"Ac", RegionId::Ac, in_Ac},
                                      std::tuple{"Ad", RegionId::Ad, in_Ad}}) {
            c.push_back({std::string("phi_ratio_") + id, std::string("|Phi_B/Phi_A| <= 1e-3 on region ") + id, AYX, {region},
                         ayx_range(), ayx_dom(in), [](Point p, T tr) { return phi_ratio_slack(p, tr, 1e-3); }});
        }
        c.push_back({"phi_B_envelope_Aa", "|Phi_B part i| <= E_i on region Aa", AYX, {RegionId::Aa}, ayx_range(),
                     ayx_dom(in_Aa), [](Point p, T tr) {
                         const auto d = dR_dx(p[0], ModuliPoint{p[2], p[1]}, tr).second;
                         double m = INFINITY;
                         for (int i = 0; i < 3; ++i) m = std::min(m, E_envelope(i, p[0], p[1], tr) - std::fabs(d.Phi_B[i]));
                         return m;
                     }});
        c.push_back({"E_bounds", "E1 <= 1/235, E2 <= 1/920, E3 <= 1e-4 on region Aa", {"alpha", "y"}, {RegionId::Aa},
                     {{"alpha", 0.5, kGridClip}, {"y", kHexY, kGridClip}}, [](Point p) { return in_Aa(p[0], p[1]); },
                     [](Point p, T tr) {
                         return std::min({1.0 / 235.0 - E_envelope(0, p[0], p[1], tr), 1.0 / 920.0 - E_envelope(1, p[0], p[1], tr),
                                          1e-4 - E_envelope(2, p[0], p[1], tr)});
                     }});
        for (auto [id, region, in] : {std::tuple{"Ab", RegionId::Ab, in_Ab}, std::tuple{"Ac", RegionId::Ac, in_Ac},
                                      std::tuple{"Ad", RegionId::Ad, in_Ad}}) {
            c.push_back({std::string("phi_B_envelope_") + id, std::string("|Phi_B part i| <= Et_i on region ") + id, AYX,
                         {region}, ayx_range(), ayx_dom(in), [](Point p, T tr) {
                             const auto d = dR_dx(p[0], ModuliPoint{p[2], p[1]}, tr).second;
                             double m = INFINITY;
                             for (int i = 0; i < 3; ++i) m = std::min(m, Et_envelope(i, p[0], p[1], tr) - std::fabs(d.Phi_B[i]));
                             return m;
                         }});
        }
        c.push_back({"Et_bounds", "Et1 <= 2e-3, Et2 <= 6e-4, Et3 <= 6e-5 for alpha >= 2y, y >= sqrt(3)/2", {"alpha", "y"},
                     {RegionId::Ab, RegionId::Ac, RegionId::Ad}, {{"alpha", 0.5, kGridClip}, {"y", kHexY, kGridClip}},
                     [](Point p) { return in_Abcd(p[0], p[1]); }, [](Point p, T tr) {
                         return std::min({2e-3 - Et_envelope(0, p[0], p[1], tr), 6e-4 - Et_envelope(1, p[0], p[1], tr),
                                          6e-5 - Et_envelope(2, p[0], p[1], tr)});
                     }});

        // y-derivative on the line x = 1/2.
        const std::vector<std::string> AY{"alpha", "y"};
        const std::vector<ParamRange> ay_range{{"alpha", 1.5, kGridClip}, {"y", kHexY, kGridClip}};
        auto O1 = [](Point p) { return in_Omega1(p[0], p[1]); };
        auto O2 = [](Point p) { return in_Omega2(p[0], p[1]); };
        auto Ia = [](Point p, T tr) {
            const auto d = dR_dy_line(p[0], p[1], tr).second;
            return d.I_a[0] + d.I_a[1] + d.I_a[2] + d.I_a[3];
        };
        c.push_back({"I_a_lower", "I_a >= (3/40) alpha^2 on Omega1", AY, {RegionId::Omega1}, ay_range, O1,
                     [Ia](Point p, T tr) { return Ia(p, tr) / (p[0] * p[0]) - 3.0 / 40.0; }});
        c.push_back({"I_a_parts_lower", "each I_a part >= its closed-form lower bound on Omega1 (scaled by alpha^-2)", AY,
                     {RegionId::Omega1}, ay_range, O1, [](Point p, T tr) {
                         const auto d = dR_dy_line(p[0], p[1], tr).second;
                         const auto lo = I_a_lower_parts(p[0], p[1], tr);
                         double m = INFINITY;
                         for (int k = 0; k < 4; ++k) m = std::min(m, (d.I_a[k] - lo[k]) / (p[0] * p[0]));
                         return m;
                     }});
        c.push_back({"I_a_ge_P", "I_a >= (3/8) alpha^2 P on Omega1", AY, {RegionId::Omega1}, ay_range, O1,
                     [Ia](Point p, T tr) { return Ia(p, tr) / (p[0] * p[0]) - 0.375 * P_fn(p[0], p[1], tr); }});
        c.push_back({"P_lower", "P >= 1/5 on Omega1", AY, {RegionId::Omega1}, ay_range, O1,
                     [](Point p, T tr) { return P_fn(p[0], p[1], tr) - 0.2; }});
        c.push_back({"P_ge_g", "P(alpha; y) >= g(y/alpha) on Omega1", AY, {RegionId::Omega1}, ay_range, O1,
                     [](Point p, T tr) { return P_fn(p[0], p[1], tr) - g_fn(p[1] / p[0], tr); }});
        c.push_back({"g_lower", "g(t) >= 1/5 for t >= 4/5", {"t"}, {RegionId::custom}, {{"t", 0.8, kGridClip}},
                     [](Point p) { return ge(p[0], 0.8); }, [](Point p, T tr) { return g_fn(p[0], tr) - 0.2; }});
        c.push_back({"h_monotone_r", "dh/dr >= 0 for r >= 3/2, t >= 4/5", {"r", "t"}, {RegionId::custom},
                     {{"r", 1.5, kGridClip}, {"t", 0.8, kGridClip}}, [](Point p) { return ge(p[0], 1.5) && ge(p[1], 0.8); },
                     [](Point p, T tr) {
                         const EpsBar e = eps_bar_frozen(tr);
                         const double t = p[1];
                         return fd([&](double r) { return h_fn(r, t, e); }, p[0]);
                     }});
        c.push_back({"eps_bar_bounds", "eps_bar_0 <= 9/50, eps_bar_1,2 <= 1/470, eps_bar_3,4 <= 1/29 on Omega1", AY,
                     {RegionId::Omega1}, ay_range, O1, [](Point p, T tr) {
                         const EpsBar e = eps_bar(p[1] / p[0], tr);
                         return std::min({9.0 / 50.0 - e.e0, 1.0 / 470.0 - e.e1, 1.0 / 470.0 - e.e2, 1.0 / 29.0 - e.e3,
                                          1.0 / 29.0 - e.e4});
                     }});
        c.push_back({"I_b_ratio", "|I_b/I_a| <= 1e-4 on Omega1", AY, {RegionId::Omega1}, ay_range, O1, [](Point p, T tr) {
                         const auto d = dR_dy_line(p[0], p[1], tr).second;
                         const double a = d.I_a[0] + d.I_a[1] + d.I_a[2] + d.I_a[3];
                         const double b = d.I_b[0] + d.I_b[1] + d.I_b[2] + d.I_b[3];
                         if (!(a > 0)) return -1.0;
                         return 1e-4 - std::fabs(b / a);
                     }});
        c.push_back({"J_bounds", "|J1| <= 1e-5, |J2| <= 1e-7, |J3|, |J4| <= 1e-8 on Omega1", AY, {RegionId::Omega1}, ay_range,
                     O1, [](Point p, T tr) {
                         const auto d = dR_dy_line(p[0], p[1], tr).second;
                         const double s = 1.0 / (p[0] * p[0]);
                         return std::min({1e-5 - std::fabs(d.I_b[0] * s), 1e-7 - std::fabs(d.I_b[1] * s),
                                          1e-8 - std::fabs(d.I_b[2] * s), 1e-8 - std::fabs(d.I_b[3] * s)});
                     }});
        c.push_back({"J_envelopes", "|J1| <= E1 <= 1e-5 and |J2| <= E2 <= 1e-7 on Omega1", AY, {RegionId::Omega1}, ay_range,
                     O1, [](Point p, T tr) {
                         const auto d = dR_dy_line(p[0], p[1], tr).second;
                         const double s = 1.0 / (p[0] * p[0]);
                         const double e1 = J1_envelope(p[0], p[1], tr);
                         const double e2 = J2_envelope(p[0], p[1] / p[0], tr);
                         return std::min({e1 - std::fabs(d.I_b[0] * s), e2 - std::fabs(d.I_b[1] * s), 1e-5 - e1, 1e-7 - e2});
                     }});
        c.push_back({"dRdy_nonneg_gamma", "dR/dy(1/2 + iy) >= 0 for alpha >= 3/2, y >= sqrt(3)/2", AY, {RegionId::Gamma},
                     ay_range, [](Point p) { return ge(p[0], 1.5) && ge(p[1], kHexY); },
                     [](Point p, T tr) { return dR_dy_line(p[0], p[1], tr).first; }});

        // Radial operator on Omega2.
        c.push_back({"eps_abc_bounds", "eps_a <= 1/980, eps_b <= 101/2100, eps_c <= 4/5 on Omega2", AY, {RegionId::Omega2},
                     ay_range, O2, [](Point p, T tr) {
                         return std::min({1.0 / 980.0 - eps_a(p[0], p[1], tr), 101.0 / 2100.0 - eps_b(p[0], p[1], tr),
                                          0.8 - eps_c(p[0], p[1], tr)});
                     }});
        c.push_back({"Y_lower", "Y >= 77/200 on Omega2", AY, {RegionId::Omega2}, ay_range, O2,
                     [](Point p, T tr) { return Y_fn(p[0], p[1], tr) - 77.0 / 200.0; }});
        c.push_back({"radial_lower", "radial operator >= (77/50 y^4) e^{-pi alpha/y} on Omega2 (scaled by y^-4 e^{-pi alpha/y})",
                     AY, {RegionId::Omega2}, ay_range, O2, [](Point p, T tr) {
                         const double unit = std::exp(-kPi * p[0] / p[1]) / std::pow(p[1], 4);
                         return radial_operator(p[0], p[1], tr).first / unit - 77.0 / 50.0;
                     }});
        c.push_back({"radial_ge_Y_bound", "radial operator >= (4/y^4) e^{-pi alpha/y} Y on Omega2 (same scaling)", AY,
                     {RegionId::Omega2}, ay_range, O2, [](Point p, T tr) {
                         const double unit = std::exp(-kPi * p[0] / p[1]) / std::pow(p[1], 4);
                         return radial_operator(p[0], p[1], tr).first / unit - 4.0 * Y_fn(p[0], p[1], tr);
                     }});
        c.push_back({"W_closed_forms",
                     "W_a, W_b, W_c above and W_d, W_e below their closed forms on Omega2 (scaled by y^-4 e^{-pi alpha/y})", AY,
                     {RegionId::Omega2}, ay_range, O2, [](Point p, T tr) {
                         const double a = p[0], y = p[1];
                         const auto w = radial_operator(a, y, tr).second;
                         const double unit = std::exp(-kPi * a / y) / std::pow(y, 4);
                         return std::min({w.W_a - W_a_lower(a, y), w.W_b - W_b_lower(a, y), w.W_c - W_c_lower(a, y),
                                          W_d_upper(a, y, tr) - w.W_d, W_e_upper(a, y, tr) - w.W_e}) /
                                unit;
                     }});
        const char* steps[] = {"xy_remainder_zero_positive", "xy_remainder_half_positive",
                               "xxy_monotone_remainder_positive", "phi_A_ge_D1", "phi_A_ge_D2", "phi_A_ge_D3",
                               "phi_A_ge_D4", "phi_B_envelope_Aa", "phi_B_envelope_Ab", "phi_B_envelope_Ac",
                               "phi_B_envelope_Ad", "E_bounds", "Et_bounds", "I_a_parts_lower", "I_a_ge_P", "P_ge_g",
                               "eps_bar_bounds", "J_envelopes", "radial_ge_Y_bound", "W_closed_forms"};
        for (auto& ch : c) {
            ch.proof_step = std::find_if(std::begin(steps), std::end(steps),
                                         [&](const char* s) { return ch.id == s; }) != std::end(steps);
        }
        return c;
    }();
    return table;
}

const Check& find_check(const std::string& id) {
    for (const auto& c : check_table()) {
        if (c.id == id) return c;
    }
    throw LatticeError(Errc::UnknownLemma, "unknown check " + id);
}

std::string format_point(const std::vector<std::string>& names, const std::vector<double>& p) {
    std::ostringstream os;
    os.precision(12);
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << names[i] << "=" << p[i];
    return os.str();
}

}  // namespace

const char* region_name(RegionId id) {
    switch (id) {
        case RegionId::Aa: return "Aa";
        case RegionId::Ab: return "Ab";
        case RegionId::Ac: return "Ac";
        case RegionId::Ad: return "Ad";
        case RegionId::Omega1: return "Omega1";
        case RegionId::Omega2: return "Omega2";
        case RegionId::DG: return "DG";
        case RegionId::Gamma: return "Gamma";
        case RegionId::XYrect: return "XYrect";
        case RegionId::custom: return "custom";
    }
    return "?";
}

RegionId parse_region(const std::string& name) {
    for (auto id : {RegionId::Aa, RegionId::Ab, RegionId::Ac, RegionId::Ad, RegionId::Omega1, RegionId::Omega2,
                    RegionId::DG, RegionId::Gamma, RegionId::XYrect, RegionId::custom}) {
        if (name == region_name(id)) return id;
    }
    throw LatticeError(Errc::InvalidArgument, "unknown region " + name);
}

std::vector<CheckInfo> list_checks() {
    std::vector<CheckInfo> out;
    for (const auto& c : check_table()) out.push_back({c.id, c.statement, c.params, c.proof_step});
    return out;
}

RegionSpec default_region(const std::string& lemma_id, int resolution) {
    const Check& c = find_check(lemma_id);
    return RegionSpec{c.ranges, resolution, c.regions.front()};
}

CheckReport check_inequality(const std::string& lemma_id, const RegionSpec& region, const SeriesTruncation& trunc,
                             double tolerance) {
    const Check& c = find_check(lemma_id);
    validate(trunc);
    if (region.resolution < 2) throw LatticeError(Errc::InvalidArgument, "resolution must be >= 2");
    if (!(tolerance >= 0)) throw LatticeError(Errc::InvalidArgument, "tolerance must be nonnegative");
    if (region.region_id != RegionId::custom &&
        std::find(c.regions.begin(), c.regions.end(), region.region_id) == c.regions.end()) {
        throw LatticeError(Errc::RegionMismatch,
                           std::string("region ") + region_name(region.region_id) + " does not fit check " + lemma_id);
    }
    if (region.param_ranges.size() != c.params.size()) {
        throw LatticeError(Errc::RegionMismatch, "check " + lemma_id + " takes " + std::to_string(c.params.size()) +
                                                     " parameters");
    }
    for (const auto& r : region.param_ranges) {
        if (std::find(c.params.begin(), c.params.end(), r.name) == c.params.end()) {
            throw LatticeError(Errc::RegionMismatch, "check " + lemma_id + " has no parameter " + r.name);
        }
        if (!(r.lo < r.hi)) throw LatticeError(Errc::InvalidArgument, "range for " + r.name + " needs lo < hi");
    }

    const auto points = Sampler{region, c.params}.sample();
    for (const auto& p : points) {
        if (!c.domain(p.data())) {
            throw LatticeError(Errc::RegionMismatch,
                               "point " + format_point(c.params, p) + " lies outside the domain of " + lemma_id);
        }
    }
    std::vector<double> slack(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const double s = c.slack(points[i].data(), trunc);
        slack[i] = std::isnan(s) ? -INFINITY : s;
    });

    CheckReport rep;
    rep.lemma_id = lemma_id;
    rep.param_names = c.params;
    rep.points_tested = static_cast<long>(points.size());
    rep.min_slack = INFINITY;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (slack[i] < rep.min_slack) {
            rep.min_slack = slack[i];
            rep.worst_point = points[i];
        }
        if (slack[i] < -tolerance) rep.violations.push_back({points[i], slack[i]});
    }
    return rep;
}

std::vector<CheckInfo> list_region_functions() {
    std::vector<CheckInfo> out;
    for (const auto& f : region_table()) out.push_back({f.name, f.statement, f.params, false});
    return out;
}

double region_function(const std::string& name, const std::vector<double>& args, const SeriesTruncation& trunc) {
    for (const auto& f : region_table()) {
        if (f.name != name) continue;
        if (args.size() != f.params.size()) {
            throw LatticeError(Errc::InvalidArgument, name + " takes " + std::to_string(f.params.size()) + " arguments");
        }
        for (double v : args) {
            if (!std::isfinite(v)) throw LatticeError(Errc::OutOfRegion, name + " needs finite arguments");
        }
        if (!f.domain(args)) throw LatticeError(Errc::OutOfRegion, name + " evaluated outside its region");
        validate(trunc);
        return f.eval(args, trunc);
    }
    throw LatticeError(Errc::UnknownFunction, "unknown region function " + name);
}

std::vector<ConstantRow> reference_constants(const SeriesTruncation& trunc) {
    auto nu_mu = [&](double X) {
        return (1.0 + aux_series(AuxSeries::Nu, X, trunc)) / (1.0 + aux_series(AuxSeries::Mu, X, trunc));
    };
    auto om_mu = [&](double X) {
        return (1.0 + aux_series(AuxSeries::OmegaHat, X, trunc)) / (1.0 + aux_series(AuxSeries::MuHat, X, trunc));
    };
    // Interior stationary point of g: root of its central-difference slope.
    auto slope = [&](double t) { return fd([&](double s) { return g_fn(s, trunc); }, t, 1e-5); };
    boost::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        slope, 1.2, 2.5, [](double a, double b) { return std::fabs(b - a) < 1e-13; }, iters);
    const double t0 = 0.5 * (bracket.first + bracket.second);

    std::vector<ConstantRow> rows{
        {"(1+nu(1/2))/(1+mu(1/2))", nu_mu(0.5), 1.104299511, 0, 1e-8},
        {"(1+omega_hat(1/2))/(1+mu_hat(1/2))", om_mu(0.5), 0.4435351039, 0, 1e-8},
        {"(1+nu(1/3))/(1+mu(1/3))", nu_mu(1.0 / 3.0), 1.455483937, 0, 1e-8},
        {"(1+omega_hat(1/3))/(1+mu_hat(1/3))", om_mu(1.0 / 3.0), -1.927931130, 0, 1e-8},
        {"psi(sqrt(3)/2)", D3(std::sqrt(3.0), kHexY, trunc), 10.90887470, 0, 1e-6},
        {"t0", t0, 1.781450608, 0, 1e-6},
        {"g(t0)", g_fn(t0, trunc), 0.2141862029, 0, 1e-6},
    };
    for (auto& r : rows) r.abs_diff = std::fabs(r.computed - r.printed);
    return rows;
}

}  // namespace lattice
