#include "holodisc/probe.hpp"

#include "holodisc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace holodisc {

void ProbeConfig::validate() const {
    if (eps_levels < 6 || eps_levels > 300)
        throw std::invalid_argument("eps_levels must lie in [6, 300], got " +
                                    std::to_string(eps_levels));
    if (!(eps_base > 0.0) || !(eps_base < 1.0))
        throw std::invalid_argument("eps_base must lie in (0, 1)");
    if (!(quad_tol > 0.0) || !(quad_tol <= 0.1))
        throw std::invalid_argument("quad_tol must lie in (0, 0.1]");
    if (!(slope_margin > 0.0) || !(slope_margin <= 1.0))
        throw std::invalid_argument("slope_margin must lie in (0, 1]");
    if (!(boundary_margin >= 0.0) || !(boundary_margin <= 1.0))
        throw std::invalid_argument("boundary_margin must lie in [0, 1]");
}

std::string to_string(Convergence c) {
    switch (c) {
        case Convergence::Convergent: return "convergent";
        case Convergence::Divergent: return "divergent";
        case Convergence::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("unknown convergence value");
}

namespace {

// Adaptive Simpson quadrature of (u(2-u))^e, the integrand of
// int (1-t^2)^e dt after the substitution u = 1 - t. The substitution keeps
// the near-singular endpoint at u = 0, where u(2-u) evaluates without
// cancellation; in the t variable, 1-t^2 loses all significant digits there.
class EndpointIntegrand {
public:
    EndpointIntegrand(double e, double tol) : e_(e), tol_(tol) {}

    double integrate(double a, double b) {
        const double fa = eval(a);
        const double m = 0.5 * (a + b);
        const double fm = eval(m);
        const double fb = eval(b);
        const double whole = simpson(a, b, fa, fm, fb);
        // scale the tolerance for huge magnitudes, where an absolute target
        // below one ulp of the result is unreachable
        const double tol = tol_ * std::max(1.0, std::abs(whole));
        return recurse(a, b, fa, fm, fb, whole, tol, kMaxDepth);
    }

private:
    static constexpr int kMaxDepth = 60;
    static constexpr long kBudget = 4'000'000;

    double eval(double u) {
        if (++evals_ > kBudget)
            throw QuadratureFailureError("quadrature exhausted its evaluation budget");
        const double v = std::pow(u * (2.0 - u), e_);
        if (!std::isfinite(v))
            throw QuadratureFailureError("integrand overflowed at u = " + std::to_string(u) +
                                         " with exponent " + std::to_string(e_));
        return v;
    }

    static double simpson(double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = simpson(a, m, fa, flm, fm);
        const double right = simpson(m, b, fm, frm, fb);
        const double err = (left + right - whole) / 15.0;
        if (std::abs(err) <= tol) return left + right + err;
        if (depth == 0)
            throw QuadratureFailureError("quadrature failed to reach its tolerance");
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }

    double e_;
    double tol_;
    long evals_ = 0;
};

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace

ProbeResult classify_exponent(double e, const ProbeConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(e)) throw std::invalid_argument("exponent must be finite");
    ProbeResult result;
    result.exponent = e;
    result.limit_estimate = std::numeric_limits<double>::quiet_NaN();

    const int levels = cfg.eps_levels;
    std::vector<double> eps(levels);
    for (int k = 0; k < levels; ++k) eps[k] = std::pow(cfg.eps_base, k + 1);

    EndpointIntegrand quad(e, cfg.quad_tol);
    result.values.resize(levels);
    std::vector<double> inc(levels - 1);
    result.values[0] = quad.integrate(eps[0], 1.0);
    for (int k = 1; k < levels; ++k) {
        inc[k - 1] = std::max(quad.integrate(eps[k], eps[k - 1]), 0.0);
        result.values[k] = result.values[k - 1] + inc[k - 1];
    }

    // increments into level k+1 scale like eps^{e+1}; fit on the deepest
    // window, where the asymptotic regime has set in
    const int window = std::max(5, levels / 2);
    const int first = static_cast<int>(inc.size()) - window;
    if (first < 0) throw std::logic_error("window exceeds increment count");

    bool any_zero = false, all_zero = true;
    for (int j = first; j < static_cast<int>(inc.size()); ++j) {
        if (inc[j] <= 0.0) any_zero = true;
        else all_zero = false;
    }
    if (all_zero) {
        // the tail vanished below machine precision: converged
        result.classification = Convergence::Convergent;
        result.slope_estimate = std::numeric_limits<double>::infinity();
        result.limit_estimate = result.values[levels - 1];
        return result;
    }

    std::vector<double> xs, ys;
    for (int j = first; j < static_cast<int>(inc.size()); ++j) {
        xs.push_back(std::log(eps[j + 1]));
        ys.push_back(std::log(inc[j] > 0.0 ? inc[j] : std::numeric_limits<double>::min()));
    }
    const double slope = least_squares_slope(xs, ys);
    result.slope_estimate = slope;

    if (slope > cfg.slope_margin && !any_zero) {
        result.classification = Convergence::Convergent;
        const double q = std::pow(cfg.eps_base, slope);
        result.limit_estimate =
            result.values[levels - 1] + inc[levels - 2] * q / (1.0 - q);
        return result;
    }
    if (slope > cfg.slope_margin) {
        // underflowing increments inside the window: converged, but the tail
        // estimate would be noise
        result.classification = Convergence::Convergent;
        result.limit_estimate = result.values[levels - 1];
        return result;
    }
    if (slope < -cfg.slope_margin) {
        result.classification = Convergence::Divergent;
        return result;
    }

    // flat slope: distinguish logarithmic divergence (increment ratios at 1)
    // from a genuinely ambiguous reading
    double ratio_sum = 0.0;
    int ratio_count = 0;
    for (int j = first + 1; j < static_cast<int>(inc.size()); ++j) {
        if (inc[j - 1] > 0.0) {
            ratio_sum += inc[j] / inc[j - 1];
            ++ratio_count;
        }
    }
    const double band = std::abs(1.0 - std::pow(cfg.eps_base, 0.5 * cfg.slope_margin));
    if (ratio_count > 0 && std::abs(ratio_sum / ratio_count - 1.0) <= band)
        result.classification = Convergence::Divergent;
    else
        result.classification = Convergence::Inconclusive;
    return result;
}

std::vector<ExponentEntry> exponent_set(const HermitianStructure& hs, const CascadeResult& cas,
                                        const DomainInvariants& inv, const CriterionInput& input) {
    std::vector<ExponentEntry> entries;
    for (const PerWeightRow& row : per_weight_conditions(hs, cas, inv, input))
        entries.push_back({row.weight, row.index, to_double(row.exponent)});
    return entries;
}

ProbeCriterionReport probe_criterion(const HermitianStructure& hs, const CascadeResult& cas,
                                     const DomainInvariants& inv, const CriterionInput& input,
                                     const ProbeConfig& cfg) {
    cfg.validate();
    ProbeCriterionReport report;
    report.decision = decide(hs, cas, inv, input);

    bool near_boundary = false;
    std::map<double, Convergence> cache;
    for (const PerWeightRow& row : report.decision.per_weight) {
        const double e = to_double(row.exponent);
        if (std::abs(e + 1.0) < cfg.boundary_margin) near_boundary = true;
        auto it = cache.find(e);
        if (it == cache.end())
            it = cache.emplace(e, classify_exponent(e, cfg).classification).first;
        report.entries.push_back({row.weight, row.index, e, it->second});
    }

    bool any_divergent = false, any_inconclusive = false;
    for (const ProbeEntry& entry : report.entries) {
        if (entry.classification == Convergence::Divergent) any_divergent = true;
        if (entry.classification == Convergence::Inconclusive) any_inconclusive = true;
    }

    // the cube integral factorizes, so overall convergence is the
    // conjunction; anything near the integrability boundary is not judged
    if (near_boundary || any_inconclusive)
        report.overall = Convergence::Inconclusive;
    else
        report.overall = any_divergent ? Convergence::Divergent : Convergence::Convergent;

    if (report.overall != Convergence::Inconclusive)
        report.agrees_with_decision =
            (report.overall == Convergence::Convergent) == report.decision.nonzero;
    return report;
}

} // namespace holodisc
