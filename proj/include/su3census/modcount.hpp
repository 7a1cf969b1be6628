#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "su3census/irreps.hpp"
#include "su3census/numbers.hpp"
#include "su3census/partitions.hpp"

namespace su3census {

/// A part exceeded the census limit, so xi of it is unknown.
class InsufficientCensusError : public std::runtime_error {
public:
    InsufficientCensusError(long long part, long long limit)
        : std::runtime_error("census limit " + std::to_string(limit) +
                             " cannot resolve part of dimension " + std::to_string(part)) {}
};

/// Multiset coefficient S(n, k) = C(n+k-1, n): unordered length-n selections
/// from k symbols.  S(0,0) = 1 and S(n,0) = 0 for n > 0.
inline BigCount multiset_count(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("multiset_count: negative argument");
    if (k == 0) return n == 0 ? 1 : 0;
    BigCount result = 1;
    for (long long i = 1; i <= n; ++i) {
        result *= k - 1 + i;
        result /= i;  // exact: every prefix is itself a binomial coefficient
    }
    return result;
}

/// Number of inequivalent modules with the given shape: for each distinct
/// part p repeated m times there are S(m, xi(p)) unordered ways to pick the
/// irreducible summands, and choices at distinct parts are independent.
inline BigCount shape_count(const PartitionShape& shape, const DimensionCensus& census) {
    BigCount product = 1;
    for (const auto& e : shape.entries) {
        if (e.part > census.limit()) throw InsufficientCensusError(e.part, census.limit());
        product *= multiset_count(e.multiplicity, census.xi(e.part));
        if (product == 0) break;
    }
    return product;
}

/// Exact module counts over one census.  The recursion runs over the
/// achievable dimensions in descending order, choosing a multiplicity for
/// each and weighting it by the multiset coefficient; memoization on
/// (remaining dimension, part index) makes totals polynomial.  Instances
/// memoize internally, so share one per thread, not across threads.
class ModCounter {
public:
    explicit ModCounter(const DimensionCensus& census)
        : census_(&census), parts_(census.support()) {
        xis_.reserve(parts_.size());
        for (long long p : parts_) xis_.push_back(census.xi(p));
    }

    /// Total number of modules of dimension exactly D.
    BigCount total(long long D) {
        check(D);
        return weighted(D, static_cast<int>(last_index(D)), memo_all_, 0);
    }

    /// Modules of dimension D with no trivial summand (part 1 excluded).
    BigCount total_without_singlets(long long D) {
        check(D);
        return weighted(D, static_cast<int>(last_index(D)), memo_no1_, 1);
    }

    /// Modules of dimension D containing at least one trivial summand.
    /// Computed two ways (complement, and direct sum over the multiplicity
    /// of part 1) which must agree.
    BigCount with_singlet(long long D) {
        check(D);
        const BigCount complement = total(D) - total_without_singlets(D);
        BigCount direct = 0;  // xi(1) = 1, so each multiplicity contributes once
        for (long long m = 1; m <= D; ++m)
            direct += weighted(D - m, static_cast<int>(last_index(D)), memo_no1_, 1);
        if (direct != complement)
            throw std::logic_error("singlet count: complement and direct routes disagree");
        return complement;
    }

    /// counts[N] = number of modules of dimension D with exactly N
    /// irreducible components, N = 0..D.
    std::vector<BigCount> by_components(long long D) {
        check(D);
        const auto& by_n = weighted_by_components(D, static_cast<int>(last_index(D)));
        std::vector<BigCount> counts(static_cast<std::size_t>(D) + 1);
        std::copy(by_n.begin(), by_n.end(), counts.begin());
        return counts;
    }

    const DimensionCensus& census() const { return *census_; }

private:
    void check(long long D) const {
        if (D < 1) throw std::invalid_argument("module counting: dimension must be >= 1");
        if (D > census_->limit()) throw InsufficientCensusError(D, census_->limit());
    }

    std::size_t last_index(long long D) const {
        std::size_t i = parts_.size();
        while (i > 0 && parts_[i - 1] > D) --i;
        return i;  // parts_[0 .. i) are <= D
    }

    // Weighted count of partitions of r into parts_[min_idx .. i), each part
    // p taken with multiplicity m contributing a factor S(m, xi(p)).
    BigCount weighted(long long r, int i, std::map<std::pair<long long, int>, BigCount>& memo,
                      int min_idx) {
        if (r == 0) return 1;
        while (i > min_idx && parts_[static_cast<std::size_t>(i - 1)] > r) --i;
        if (i == min_idx) return 0;
        const auto key = std::make_pair(r, i);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const long long p = parts_[static_cast<std::size_t>(i - 1)];
        const long long k = xis_[static_cast<std::size_t>(i - 1)];
        BigCount sum = 0;
        for (long long m = 0; m * p <= r; ++m)
            sum += multiset_count(m, k) * weighted(r - m * p, i - 1, memo, min_idx);
        return memo.emplace(key, std::move(sum)).first->second;
    }

    // Same recursion with the component count carried along: entry N of the
    // result is the weighted count of partitions of r (parts_[0..i)) with
    // exactly N components.  Memoized on (r, i); the component budget is the
    // vector index.
    const std::vector<BigCount>& weighted_by_components(long long r, int i) {
        while (i > 0 && parts_[static_cast<std::size_t>(i - 1)] > r) --i;
        const auto key = std::make_pair(r, i);
        if (auto it = memo_by_n_.find(key); it != memo_by_n_.end()) return it->second;
        std::vector<BigCount> by_n(static_cast<std::size_t>(r) + 1);
        if (r == 0) {
            by_n[0] = 1;
        } else if (i > 0) {
            const long long p = parts_[static_cast<std::size_t>(i - 1)];
            const long long k = xis_[static_cast<std::size_t>(i - 1)];
            BigCount factor = 1;  // S(m, k), updated incrementally over m
            for (long long m = 0; m * p <= r; ++m) {
                if (m > 0) {
                    factor *= k - 1 + m;
                    factor /= m;
                }
                if (factor == 0) break;
                const auto& sub = weighted_by_components(r - m * p, i - 1);
                for (std::size_t j = 0; j < sub.size(); ++j)
                    if (sub[j] != 0) by_n[j + static_cast<std::size_t>(m)] += factor * sub[j];
            }
        }
        return memo_by_n_.emplace(key, std::move(by_n)).first->second;
    }

    const DimensionCensus* census_;
    std::vector<long long> parts_;
    std::vector<long long> xis_;
    std::map<std::pair<long long, int>, BigCount> memo_all_;
    std::map<std::pair<long long, int>, BigCount> memo_no1_;
    std::map<std::pair<long long, int>, std::vector<BigCount>> memo_by_n_;
};

inline BigCount mod_total(long long D, const DimensionCensus& census) {
    return ModCounter(census).total(D);
}

inline BigCount mod_singlet(long long D, const DimensionCensus& census) {
    return ModCounter(census).with_singlet(D);
}

/// Fraction of dimension-D modules containing a singlet, in lowest terms.
/// Part 1 is always achievable, so the denominator is never zero.
inline ExactFraction singlet_fraction(long long D, const DimensionCensus& census) {
    ModCounter counter(census);
    return ExactFraction(counter.with_singlet(D), counter.total(D));
}

/// Exact distribution of the number of irreducible components over all
/// modules of dimension d.  weights[N] is the fraction of modules whose
/// component count is exactly N; the weights sum to exactly 1.
struct NssDistribution {
    long long d = 0;
    BigCount total;
    std::vector<BigCount> counts;        // index N = 0..d
    std::vector<ExactFraction> weights;  // counts[N] / total

    const ExactFraction& weight(long long N) const { return weights.at(static_cast<std::size_t>(N)); }
};

inline NssDistribution nss_distribution(long long d, const DimensionCensus& census) {
    NssDistribution dist;
    dist.d = d;
    dist.counts = ModCounter(census).by_components(d);
    dist.total = 0;
    for (const BigCount& c : dist.counts) dist.total += c;
    dist.weights.reserve(dist.counts.size());
    ExactFraction sum = 0;
    for (const BigCount& c : dist.counts) {
        dist.weights.emplace_back(c, dist.total);
        sum += dist.weights.back();
    }
    if (sum != 1) throw std::logic_error("nss_distribution: weights do not sum to 1");
    return dist;
}

/// Independent oracle for the counts: coefficient extraction from the
/// product over achievable dimensions p of (1 - y x^p)^(-xi(p)).  Each of
/// the xi(p) factors is one geometric series, realized as a forward
/// knapsack sweep that adds one component (one power of y) per use.  No
/// partitions and no binomials are involved, so this path shares nothing
/// with the counting recursion.
inline std::vector<std::vector<BigCount>> gf_coefficients(const DimensionCensus& census,
                                                          long long Dmax,
                                                          bool include_unit_part = true) {
    if (Dmax < 0) throw std::invalid_argument("gf_coefficients: Dmax must be >= 0");
    if (Dmax > census.limit()) throw InsufficientCensusError(Dmax, census.limit());
    const std::size_t size = static_cast<std::size_t>(Dmax) + 1;
    std::vector<std::vector<BigCount>> table(size);
    for (std::size_t dim = 0; dim < size; ++dim) table[dim].resize(dim + 1);
    table[0][0] = 1;
    for (long long p : census.support()) {
        if (p > Dmax) break;
        if (!include_unit_part && p == 1) continue;
        for (long long copy = 0; copy < census.xi(p); ++copy)
            for (std::size_t dim = static_cast<std::size_t>(p); dim < size; ++dim) {
                const auto& prev = table[dim - static_cast<std::size_t>(p)];
                auto& row = table[dim];
                for (std::size_t N = 1; N <= prev.size(); ++N)
                    if (prev[N - 1] != 0) row[N] += prev[N - 1];
            }
    }
    return table;
}

/// Oracle counts for dimension D only: entry N is the number of modules of
/// dimension D with N irreducible components.
inline std::vector<BigCount> gf_oracle(long long D, const DimensionCensus& census) {
    if (D < 1) throw std::invalid_argument("gf_oracle: dimension must be >= 1");
    auto table = gf_coefficients(census, D);
    return std::move(table[static_cast<std::size_t>(D)]);
}

/// Totals accumulated by literally streaming the restricted partitions and
/// summing shape counts, one partition at a time.
struct EnumeratedModTable {
    BigCount total;
    BigCount with_singlet;
    std::vector<BigCount> by_components;  // index N = 0..D
    std::size_t partitions_seen = 0;
};

inline EnumeratedModTable mod_table_enumerated(long long D, const DimensionCensus& census) {
    if (D < 1) throw std::invalid_argument("mod_table_enumerated: dimension must be >= 1");
    if (D > census.limit()) throw InsufficientCensusError(D, census.limit());
    EnumeratedModTable out;
    out.by_components.assign(static_cast<std::size_t>(D) + 1, BigCount(0));
    const PartSet parts = PartSet::from_values(census.support());
    RestrictedPartitionEnumerator e(D, parts, D);
    while (e.next()) {
        const auto& partition = e.current();
        const BigCount w = shape_count(to_shape(Partition{partition}), census);
        out.total += w;
        if (partition.back() == 1) out.with_singlet += w;  // ordered, so min part is last
        out.by_components[partition.size()] += w;
        ++out.partitions_seen;
    }
    return out;
}

/// One row of the singlet table.
struct ModRow {
    long long D = 0;
    BigCount total;
    BigCount singlet;

    ExactFraction fraction() const { return ExactFraction(singlet, total); }
};

/// CSV export: D,mod_total,mod_singlet,singlet_fraction_exact,singlet_fraction_float
inline void write_mod_csv(std::span<const ModRow> rows, std::ostream& os) {
    os << "D,mod_total,mod_singlet,singlet_fraction_exact,singlet_fraction_float\n";
    for (const ModRow& r : rows) {
        const ExactFraction f = r.fraction();
        os << r.D << ',' << to_decimal(r.total) << ',' << to_decimal(r.singlet) << ','
           << to_fraction_string(f) << ',' << format_float17(to_double(f)) << '\n';
    }
}

/// CSV export: d,N,count,fraction_float — rows for nonzero weights only.
inline void write_nss_csv(const NssDistribution& dist, std::ostream& os) {
    os << "d,N,count,fraction_float\n";
    for (std::size_t N = 1; N < dist.counts.size(); ++N)
        if (dist.counts[N] != 0)
            os << dist.d << ',' << N << ',' << to_decimal(dist.counts[N]) << ','
               << format_float17(to_double(dist.weights[N])) << '\n';
}

}  // namespace su3census
