#pragma once

#include <cmath>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace su3census {

/// Young diagram (n1, n2) labeling an irreducible su(3) module, 0 <= n2 <= n1.
struct YoungDiagram {
    long long n1 = 0;
    long long n2 = 0;

    bool valid() const { return n1 >= 0 && n2 >= 0 && n2 <= n1; }
    YoungDiagram conjugate() const { return {n1, n1 - n2}; }
    bool operator==(const YoungDiagram&) const = default;
};

/// Dimension of the irreducible module labeled by the diagram:
/// (n1+2)(n2+1)(n1-n2+1)/2, always a positive integer on valid diagrams.
inline long long weyl_dim(const YoungDiagram& d) {
    return (d.n1 + 2) * (d.n2 + 1) * (d.n1 - d.n2 + 1) / 2;
}

/// A dimension threshold stored exactly as 2*D, so half-integer thresholds
/// (the evaluation points that make the census difference exact) carry no
/// rounding at all.
class RealThreshold {
public:
    static RealThreshold from_halves(long long twice_value) {
        if (twice_value < 1) throw std::invalid_argument("RealThreshold: need 2D >= 1");
        return RealThreshold(twice_value);
    }
    /// d + 1/2
    static RealThreshold above(long long d) { return from_halves(2 * d + 1); }
    /// d - 1/2
    static RealThreshold below(long long d) { return from_halves(2 * d - 1); }

    long long twice_value() const { return twice_; }
    double value() const { return 0.5 * static_cast<double>(twice_); }
    bool is_half_integer() const { return twice_ % 2 != 0; }

private:
    explicit RealThreshold(long long t) : twice_(t) {}
    long long twice_;
};

namespace detail {

using wide_int = __int128;

/// 2 * weyl_dim at fixed x = n1 + 2 as a function of n2: x (n2+1)(x-1-n2).
inline wide_int twice_dim_at(long long x, long long n2) {
    return static_cast<wide_int>(x) * (n2 + 1) * (x - 1 - n2);
}

/// Count integers n2 in [0, x-2] whose dimension is >= the threshold, i.e.
/// x(n2+1)(x-1-n2) >= t with t = 2D.  These n2 form one contiguous band
/// around (x-2)/2 (the product is a downward parabola in n2).  A floating
/// estimate of the band edges is corrected by exact integer tests, so
/// boundary cases cannot flip the count.
inline long long band_count(long long x, long long t) {
    const long long top = x - 2;
    if (top < 0) return 0;
    const double rad = static_cast<double>(x) * x - 4.0 * static_cast<double>(t) / x;
    const double half = 0.5 * std::sqrt(rad > 0 ? rad : 0.0);
    const double mid = 0.5 * (x - 2);

    long long hi = static_cast<long long>(std::floor(mid + half));
    if (hi > top) hi = top;
    if (hi < 0) hi = 0;
    while (hi >= 0 && twice_dim_at(x, hi) < t) --hi;
    while (hi + 1 <= top && twice_dim_at(x, hi + 1) >= t) ++hi;

    long long lo = static_cast<long long>(std::ceil(mid - half));
    if (lo < 0) lo = 0;
    if (lo > top) lo = top;
    while (lo <= top && twice_dim_at(x, lo) < t) ++lo;
    while (lo - 1 >= 0 && twice_dim_at(x, lo - 1) >= t) --lo;

    return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace detail

/// Number of inequivalent irreducible su(3) modules with dimension strictly
/// below the threshold, by the closed form: all diagrams with x = n1+2 up to
/// l (where the row (x, n2=0) still fits) minus, for each x past the cube
/// bound k, the parabolic band of n2 whose dimension reaches the threshold.
inline long long count_irreps_upto(RealThreshold threshold) {
    const long long t = threshold.twice_value();  // 2D

    // largest l with l(l-1) <= 2D
    long long l = static_cast<long long>((1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(t))) / 2.0);
    while (l > 0 && static_cast<detail::wide_int>(l) * (l - 1) > t) --l;
    while (static_cast<detail::wide_int>(l + 1) * l <= t) ++l;

    // largest k with k^3 <= 8D
    long long k = static_cast<long long>(std::cbrt(4.0 * static_cast<double>(t)));
    while (k > 0 && static_cast<detail::wide_int>(k) * k * k > 4 * static_cast<detail::wide_int>(t)) --k;
    while (static_cast<detail::wide_int>(k + 1) * (k + 1) * (k + 1) <= 4 * static_cast<detail::wide_int>(t)) ++k;

    long long total = l * (l - 1) / 2;
    for (long long x = k + 1; x <= l; ++x) total -= detail::band_count(x, t);
    return total;
}

/// Number of inequivalent irreducible su(3) modules of dimension exactly d,
/// as the half-integer difference of the cumulative count.
inline long long xi(long long d) {
    if (d < 1) throw std::invalid_argument("xi: dimension must be >= 1");
    return count_irreps_upto(RealThreshold::above(d)) - count_irreps_upto(RealThreshold::below(d));
}

/// Independent oracle: scan diagrams directly.  The scan stops once the
/// smallest dimension in row n1, namely (n1+1)(n1+2)/2, exceeds d.
inline long long xi_bruteforce(long long d) {
    if (d < 1) throw std::invalid_argument("xi_bruteforce: dimension must be >= 1");
    long long count = 0;
    for (long long n1 = 0; (n1 + 1) * (n1 + 2) / 2 <= d; ++n1)
        for (long long n2 = 0; n2 <= n1; ++n2)
            if (weyl_dim({n1, n2}) == d) ++count;
    return count;
}

/// Immutable table d -> xi(d) for d <= limit, with the support set of
/// achievable dimensions.  Safe to share across threads once built.
class DimensionCensus {
public:
    long long limit() const { return limit_; }

    long long xi(long long d) const {
        if (d < 1 || d > limit_) throw std::out_of_range("DimensionCensus: dimension outside census");
        return counts_[static_cast<std::size_t>(d)];
    }

    /// Achievable dimensions <= limit, ascending.
    const std::vector<long long>& support() const { return support_; }

private:
    friend DimensionCensus build_census(long long limit);
    long long limit_ = 0;
    std::vector<long long> counts_;
    std::vector<long long> support_;
};

/// Build the census by a full diagram sweep, then cross-check every entry
/// against the closed form.  The sweep is authoritative: a disagreement is
/// logged to stderr and the sweep value kept.
inline DimensionCensus build_census(long long limit) {
    if (limit < 1) throw std::invalid_argument("build_census: limit must be >= 1");
    DimensionCensus census;
    census.limit_ = limit;
    census.counts_.assign(static_cast<std::size_t>(limit) + 1, 0);

    for (long long n1 = 0; (n1 + 1) * (n1 + 2) / 2 <= limit; ++n1)
        for (long long n2 = 0; n2 <= n1; ++n2) {
            const long long d = weyl_dim({n1, n2});
            if (d <= limit) ++census.counts_[static_cast<std::size_t>(d)];
        }

    for (long long d = 1; d <= limit; ++d) {
        const long long closed = xi(d);
        if (closed != census.counts_[static_cast<std::size_t>(d)])
            std::cerr << "su3census: closed-form count disagrees with diagram sweep at d=" << d
                      << " (" << closed << " vs " << census.counts_[static_cast<std::size_t>(d)]
                      << "); keeping the sweep value\n";
        if (census.counts_[static_cast<std::size_t>(d)] > 0) census.support_.push_back(d);
    }
    return census;
}

/// CSV export: header `dimension,xi`, one row per achievable dimension.
inline void write_census_csv(const DimensionCensus& census, std::ostream& os) {
    os << "dimension,xi\n";
    for (long long d : census.support()) os << d << ',' << census.xi(d) << '\n';
}

}  // namespace su3census
