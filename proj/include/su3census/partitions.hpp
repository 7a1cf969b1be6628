#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "su3census/numbers.hpp"

namespace su3census {

/// Partition in reverse lexicographic order: parts[i] >= parts[i+1].
struct Partition {
    std::vector<long long> parts;

    long long sum() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
    bool ordered() const { return std::is_sorted(parts.rbegin(), parts.rend()); }
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Run-length form: (distinct part, multiplicity) with parts strictly decreasing.
struct PartitionShape {
    struct Entry {
        long long part;
        long long multiplicity;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    long long component_count() const {
        long long n = 0;
        for (const auto& e : entries) n += e.multiplicity;
        return n;
    }
    bool operator==(const PartitionShape&) const = default;
};

inline PartitionShape to_shape(const Partition& p) {
    PartitionShape shape;
    for (long long part : p.parts) {
        if (!shape.entries.empty() && shape.entries.back().part == part)
            ++shape.entries.back().multiplicity;
        else
            shape.entries.push_back({part, 1});
    }
    return shape;
}

/// Immutable set of admissible parts.  Iteration is over the sorted members;
/// membership restricted to [1, n] is finite for any n.
class PartSet {
public:
    static PartSet from_values(std::vector<long long> values) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (!values.empty() && values.front() < 1)
            throw std::invalid_argument("PartSet: parts must be positive");
        PartSet s;
        s.members_ = std::move(values);
        return s;
    }

    /// {1, 2, ..., n} — the unrestricted part set up to n.
    static PartSet consecutive(long long n) {
        std::vector<long long> v(static_cast<std::size_t>(std::max<long long>(n, 0)));
        std::iota(v.begin(), v.end(), 1LL);
        return from_values(std::move(v));
    }

    bool contains(long long p) const {
        return std::binary_search(members_.begin(), members_.end(), p);
    }
    const std::vector<long long>& members() const { return members_; }

    /// Members <= bound, ascending.
    std::vector<long long> members_up_to(long long bound) const {
        auto it = std::upper_bound(members_.begin(), members_.end(), bound);
        return {members_.begin(), it};
    }

private:
    std::vector<long long> members_;
};

/// Streaming reverse-lexicographic enumeration of the partitions of n whose
/// parts all come from the given set and do not exceed max_part.  Each DFS
/// frame tries its admissible parts largest-first and bounds the levels
/// below by the part it placed, so partitions come out largest-first and
/// already ordered.  State is one explicit stack of depth <= n; current()
/// exposes the in-place buffer, no list of partitions is ever materialized.
class RestrictedPartitionEnumerator {
public:
    RestrictedPartitionEnumerator(long long n, const PartSet& parts, long long max_part)
        : n_(n), allowed_(parts.members_up_to(max_part)) {
        if (max_part < 1) throw std::invalid_argument("enumeration: max_part must be >= 1");
        if (n < 0) throw std::invalid_argument("enumeration: n must be >= 0");
    }

    /// Advance to the next partition; false once the stream is exhausted.
    bool next() {
        if (finished_) return false;
        if (!started_) {
            started_ = true;
            if (n_ == 0) return true;  // the single empty partition
            frames_.push_back({n_, count_admissible(n_)});
            return advance();
        }
        if (n_ == 0) {
            finished_ = true;
            return false;
        }
        current_.pop_back();  // retract the deepest placement, then resume the search
        return advance();
    }

    /// The partition reached by the last successful next().
    const std::vector<long long>& current() const { return current_; }

private:
    struct Frame {
        long long remaining;    // amount still to partition at this level
        std::size_t next_idx;   // candidates allowed_[next_idx-1 .. 0] untried
    };

    std::size_t count_admissible(long long bound) const {
        auto it = std::upper_bound(allowed_.begin(), allowed_.end(), bound);
        return static_cast<std::size_t>(it - allowed_.begin());
    }

    // Depth-first search for the next complete partition.  The top frame is
    // the one looking for a placement; every frame below it has placed the
    // corresponding entry of current_.
    bool advance() {
        while (!frames_.empty()) {
            Frame& f = frames_.back();
            if (f.next_idx > 0) {
                const long long part = allowed_[--f.next_idx];
                const long long left = f.remaining - part;
                current_.push_back(part);
                if (left == 0) return true;
                frames_.push_back({left, count_admissible(std::min(left, part))});
                continue;
            }
            frames_.pop_back();
            if (!frames_.empty()) current_.pop_back();  // un-place the parent's part
        }
        finished_ = true;
        return false;
    }

    long long n_;
    std::vector<long long> allowed_;
    std::vector<long long> current_;
    std::vector<Frame> frames_;
    bool started_ = false;
    bool finished_ = false;
};

/// Visit every partition of n with parts from `parts`, largest first.
template <typename Visitor>
void enumerate_restricted(long long n, const PartSet& parts, long long max_part, Visitor&& visit) {
    RestrictedPartitionEnumerator e(n, parts, max_part);
    while (e.next()) visit(e.current());
}

/// Count-only companion of the enumerator: one knapsack pass per admissible
/// part, so cardinalities never require streaming the partitions themselves.
inline BigCount count_restricted(long long n, const PartSet& parts, long long max_part) {
    if (n < 0) throw std::invalid_argument("count_restricted: n must be >= 0");
    std::vector<BigCount> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (long long p : parts.members_up_to(std::min(n, max_part)))
        for (long long r = p; r <= n; ++r)
            ways[static_cast<std::size_t>(r)] += ways[static_cast<std::size_t>(r - p)];
    return ways[static_cast<std::size_t>(n)];
}

/// p(n), the number of unrestricted partitions, by the pentagonal-number
/// recurrence p(m) = sum_k (-1)^(k-1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)].
inline BigCount count_partitions_exact(long long n) {
    if (n < 0) throw std::invalid_argument("count_partitions_exact: n must be >= 0");
    std::vector<BigCount> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (long long m = 1; m <= n; ++m) {
        BigCount total = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            if (k % 2 == 1) {
                if (g1 <= m) total += p[static_cast<std::size_t>(m - g1)];
                if (g2 <= m) total += p[static_cast<std::size_t>(m - g2)];
            } else {
                if (g1 <= m) total -= p[static_cast<std::size_t>(m - g1)];
                if (g2 <= m) total -= p[static_cast<std::size_t>(m - g2)];
            }
        }
        p[static_cast<std::size_t>(m)] = std::move(total);
    }
    return p[static_cast<std::size_t>(n)];
}

/// Hardy-Ramanujan asymptotic: p(n) ~ exp(pi sqrt(2n/3)) / (4 n sqrt(3)).
inline double hardy_ramanujan_estimate(long long n) {
    if (n < 1) throw std::invalid_argument("hardy_ramanujan_estimate: n must be >= 1");
    const double x = static_cast<double>(n);
    return std::exp(M_PI * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

/// One partition per line, parts joined by '+': e.g. "3+1+1+1".
inline std::string format_partition_line(const std::vector<long long>& parts) {
    std::string line;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) line += '+';
        line += std::to_string(parts[i]);
    }
    return line;
}

}  // namespace su3census
