#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "su3census/modcount.hpp"
#include "su3census/numbers.hpp"
#include "su3census/simplex.hpp"

namespace su3census {

/// Inverted-beta (beta-prime) density x^(a-1) (1+x)^(-a-b) / B(a,b),
/// evaluated in log space so large shape parameters cannot overflow.
inline double invbeta_pdf(double x, double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("invbeta_pdf: shape parameters must be positive");
    if (x <= 0.0) return 0.0;
    const double log_norm = std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta);
    return std::exp((alpha - 1.0) * std::log(x) - (alpha + beta) * std::log1p(x) - log_norm);
}

/// A series of exact points (x, y); y is kept as an exact fraction until a
/// fit actually needs a floating value.
struct SeriesPoints {
    struct Point {
        long long x;
        ExactFraction y;
    };
    std::vector<Point> points;
    std::optional<int> residue_class;
    std::string label;
};

/// Optimizer setup recorded with every fit so the result is reproducible.
struct FitConfig {
    std::vector<double> initialization;
    double tolerance = 1e-12;
    int max_iterations = 20000;
};

struct GrowthFit {
    double a = 0.0, b = 0.0, c = 0.0;
    double ssr = 0.0;
    bool converged = false;
    std::string points_used;
    FitConfig config;
};

/// Least squares for y ~ (a/x) exp(b x^c) on log(y): residuals are
/// log y - (log a - log x + b x^c), so the fit is not dominated by the last
/// few points of a series spanning many orders of magnitude.  Parameters are
/// (log a, b, c) with b, c kept positive by an infinite barrier.
inline GrowthFit fit_growth(const SeriesPoints& series) {
    if (series.points.size() < 4)
        throw std::invalid_argument("fit_growth: need at least 4 points");
    std::vector<double> xs, log_ys;
    xs.reserve(series.points.size());
    log_ys.reserve(series.points.size());
    for (const auto& p : series.points) {
        const double y = to_double(p.y);
        if (!(y > 0.0)) throw std::invalid_argument("fit_growth: y values must be positive");
        xs.push_back(static_cast<double>(p.x));
        log_ys.push_back(std::log(y));
    }

    const auto objective = [&](std::span<const double> t) {
        const double log_a = t[0], b = t[1], c = t[2];
        if (!(b > 0.0) || !(c > 0.0) || c >= 5.0) return std::numeric_limits<double>::infinity();
        double ssr = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double r = log_ys[i] - (log_a - std::log(xs[i]) + b * std::pow(xs[i], c));
            ssr += r * r;
        }
        return ssr;
    };

    GrowthFit fit;
    fit.config.initialization = {std::log(0.1), 2.5, 0.5};
    const SimplexResult r = nelder_mead(objective, fit.config.initialization,
                                        {.tolerance = fit.config.tolerance,
                                         .max_iterations = fit.config.max_iterations});
    fit.a = std::exp(r.x[0]);
    fit.b = r.x[1];
    fit.c = r.x[2];
    fit.ssr = r.value;
    fit.converged = r.converged;
    fit.points_used = series.label + " (" + std::to_string(series.points.size()) + " points, x in [" +
                      std::to_string(series.points.front().x) + "," +
                      std::to_string(series.points.back().x) + "]" +
                      (series.residue_class ? ", x = " + std::to_string(*series.residue_class) + " (mod 3)"
                                            : "") +
                      ")";
    return fit;
}

struct InvBetaFit {
    double alpha = 0.0, beta = 0.0, scale = 1.0;
    double ssr = 0.0;
    double delta_f = 0.0;
    bool converged = false;
    std::string points_used;
    FitConfig config;
};

/// Model value at integer N under a fitted inverted beta: the scale
/// parameter stretches the axis while keeping unit total mass.
inline double invbeta_model(const InvBetaFit& fit, long long N) {
    return invbeta_pdf(static_cast<double>(N) / fit.scale, fit.alpha, fit.beta) / fit.scale;
}

/// Mean absolute deviation of a model from the exact weights, averaged over
/// every N in 1..d (absent N count as exact zero).
template <typename Model>
double delta_f(const NssDistribution& dist, const Model& model) {
    double total = 0.0;
    for (long long N = 1; N <= dist.d; ++N)
        total += std::abs(to_double(dist.weight(N)) - model(N));
    return total / static_cast<double>(dist.d);
}

inline double delta_f(const NssDistribution& dist, const InvBetaFit& fit) {
    return delta_f(dist, [&](long long N) { return invbeta_model(fit, N); });
}

namespace detail {

inline InvBetaFit fit_invbeta_impl(const NssDistribution& dist, bool with_scale) {
    long long nonzero = 0;
    for (long long N = 1; N <= dist.d; ++N)
        if (dist.weight(N) != 0) ++nonzero;
    if (nonzero < 5)
        throw std::invalid_argument("fit_invbeta: distribution has fewer than 5 nonzero weights");

    std::vector<double> fv(static_cast<std::size_t>(dist.d) + 1, 0.0);
    double mean = 0.0;
    for (long long N = 1; N <= dist.d; ++N) {
        fv[static_cast<std::size_t>(N)] = to_double(dist.weight(N));
        mean += static_cast<double>(N) * fv[static_cast<std::size_t>(N)];
    }
    double var = 0.0;
    for (long long N = 1; N <= dist.d; ++N)
        var += (static_cast<double>(N) - mean) * (static_cast<double>(N) - mean) *
               fv[static_cast<std::size_t>(N)];

    // Moment start: for a unit-scale inverted beta, mean = a/(b-1) and
    // variance = mean (mean+1) / (b-2).
    const double beta0 = 2.0 + mean * (mean + 1.0) / std::max(var, 1e-9);
    const double alpha0 = mean * (beta0 - 1.0);

    const auto objective = [&](std::span<const double> t) {
        const double alpha = std::exp(t[0]);
        const double beta = std::exp(t[1]);
        const double scale = with_scale ? std::exp(t[2]) : 1.0;
        if (alpha > 1e7 || beta > 1e5 || scale < 1e-3 || scale > 1e3)
            return std::numeric_limits<double>::infinity();
        double ssr = 0.0;
        for (long long N = 1; N <= dist.d; ++N) {
            const double m = invbeta_pdf(static_cast<double>(N) / scale, alpha, beta) / scale;
            const double r = fv[static_cast<std::size_t>(N)] - m;
            ssr += r * r;
        }
        return ssr;
    };

    InvBetaFit fit;
    fit.config.initialization = {std::log(alpha0), std::log(beta0)};
    if (with_scale) fit.config.initialization.push_back(0.0);  // scale starts at 1
    const SimplexResult r = nelder_mead(objective, fit.config.initialization,
                                        {.tolerance = fit.config.tolerance,
                                         .max_iterations = fit.config.max_iterations});
    fit.alpha = std::exp(r.x[0]);
    fit.beta = std::exp(r.x[1]);
    fit.scale = with_scale ? std::exp(r.x[2]) : 1.0;
    fit.ssr = r.value;
    fit.converged = r.converged;
    fit.delta_f = delta_f(dist, fit);
    fit.points_used = "exact component-count distribution for d=" + std::to_string(dist.d) +
                      ", N = 1.." + std::to_string(dist.d);
    return fit;
}

}  // namespace detail

/// Three-parameter fit (alpha, beta, scale) of the exact distribution.
inline InvBetaFit fit_invbeta(const NssDistribution& dist) {
    return detail::fit_invbeta_impl(dist, true);
}

/// Two-parameter fit with the scale pinned to 1, i.e. the density compared
/// directly against the weights.
inline InvBetaFit fit_invbeta_fixed_scale(const NssDistribution& dist) {
    return detail::fit_invbeta_impl(dist, false);
}

/// N maximizing the exact weight; ties break toward smaller N.
inline long long peak_location(const NssDistribution& dist) {
    long long best = 1;
    for (long long N = 2; N <= dist.d; ++N)
        if (dist.weight(N) > dist.weight(best)) best = N;
    return best;
}

/// Exact singlet fractions (D, Mod1/Mod) for D <= D_max in one congruence
/// class of D modulo 3.
inline SeriesPoints singlet_series(const DimensionCensus& census, long long D_max, int residue) {
    if (residue < 0 || residue > 2) throw std::invalid_argument("singlet_series: residue must be 0, 1 or 2");
    if (D_max > census.limit()) throw InsufficientCensusError(D_max, census.limit());
    SeriesPoints series;
    series.residue_class = residue;
    series.label = "singlet fraction series";
    ModCounter counter(census);
    for (long long D = (residue == 0 ? 3 : residue); D <= D_max; D += 3)
        series.points.push_back({D, ExactFraction(counter.with_singlet(D), counter.total(D))});
    return series;
}

/// Exact module totals (D, Mod(D)), optionally restricted to one congruence
/// class of D modulo 3 — the growth fit's input.
inline SeriesPoints mod_series(const DimensionCensus& census, long long D_max,
                               std::optional<int> residue = std::nullopt) {
    if (residue && (*residue < 0 || *residue > 2))
        throw std::invalid_argument("mod_series: residue must be 0, 1 or 2");
    if (D_max > census.limit()) throw InsufficientCensusError(D_max, census.limit());
    SeriesPoints series;
    series.residue_class = residue;
    series.label = "exact module totals";
    ModCounter counter(census);
    for (long long D = 1; D <= D_max; ++D) {
        if (residue && D % 3 != *residue) continue;
        series.points.push_back({D, ExactFraction(counter.total(D))});
    }
    return series;
}

inline nlohmann::ordered_json fit_config_json(const FitConfig& config) {
    return {{"initialization", config.initialization},
            {"tolerance", config.tolerance},
            {"max_iterations", config.max_iterations}};
}

inline nlohmann::ordered_json fit_report(const GrowthFit& fit) {
    return {{"model", "growth"},
            {"parameters", {{"a", fit.a}, {"b", fit.b}, {"c", fit.c}}},
            {"ssr", fit.ssr},
            {"delta_f", nullptr},
            {"points_used", fit.points_used},
            {"config", fit_config_json(fit.config)},
            {"converged", fit.converged}};
}

inline nlohmann::ordered_json fit_report(const InvBetaFit& fit) {
    const bool scaled = fit.config.initialization.size() == 3;
    nlohmann::ordered_json params = {{"alpha", fit.alpha}, {"beta", fit.beta}};
    if (scaled) params["scale"] = fit.scale;
    return {{"model", scaled ? "inverted_beta_scaled" : "inverted_beta"},
            {"parameters", params},
            {"ssr", fit.ssr},
            {"delta_f", fit.delta_f},
            {"points_used", fit.points_used},
            {"config", fit_config_json(fit.config)},
            {"converged", fit.converged}};
}

}  // namespace su3census
