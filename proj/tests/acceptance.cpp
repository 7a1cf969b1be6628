// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is self-contained and carries its runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "su3census/su3census.hpp"

using namespace su3census;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget of ") +
                  std::to_string(budget_seconds) + " s";
    }
    std::printf("%s  %2d: %s [%.2f s]%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

}  // namespace

int main() {
    const DimensionCensus census = build_census(110);

    criterion(1, "exact module counts at D=5 and D=6", 1.0, [&](std::string& detail) {
        ModCounter counter(census);
        const bool ok = counter.total(6) == 8 && counter.with_singlet(6) == 3 &&
                        singlet_fraction(6, census) == ExactFraction(3, 8) &&
                        counter.total(5) == 3 && counter.with_singlet(5) == 3 &&
                        singlet_fraction(5, census) == 1;
        if (!ok) detail = "worked examples do not match";
        return ok;
    });

    criterion(2, "closed-form census equals diagram enumeration up to 5000", 30.0,
              [&](std::string& detail) {
                  for (long long d = 1; d <= 5000; ++d)
                      if (xi(d) != xi_bruteforce(d)) {
                          detail = "mismatch at d=" + std::to_string(d);
                          return false;
                      }
                  if (xi(2) != 0 || xi(4) != 0 || xi(5) != 0) {
                      detail = "gap dimensions 2, 4, 5 are not empty";
                      return false;
                  }
                  const DimensionCensus big = build_census(5000);
                  const std::vector<long long> prefix(big.support().begin(),
                                                      big.support().begin() + 7);
                  if (prefix != std::vector<long long>{1, 3, 6, 8, 10, 15, 21}) {
                      detail = "support prefix differs";
                      return false;
                  }
                  long long running = 0;
                  for (long long L = 1; L <= 5000; ++L) {
                      running += big.xi(L);
                      if (running != count_irreps_upto(RealThreshold::above(L))) {
                          detail = "census completeness fails at L=" + std::to_string(L);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "restricted enumerator reproduces p(n) for n <= 60", 60.0,
              [&](std::string& detail) {
                  if (count_partitions_exact(6) != 11) {
                      detail = "p(6) != 11";
                      return false;
                  }
                  for (long long n = 0; n <= 60; ++n) {
                      const PartSet all = PartSet::consecutive(std::max<long long>(n, 1));
                      BigCount streamed = 0;
                      enumerate_restricted(n, all, std::max<long long>(n, 1),
                                           [&](const std::vector<long long>&) { ++streamed; });
                      if (streamed != count_partitions_exact(n)) {
                          detail = "stream length differs at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "enumeration and generating-function paths agree for D <= 110", 600.0,
              [&](std::string& detail) {
                  const auto gf_start = std::chrono::steady_clock::now();
                  const auto gf = gf_coefficients(census, 110);
                  const auto gf_no1 = gf_coefficients(census, 110, false);
                  const double gf_seconds =
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - gf_start)
                          .count();
                  if (gf_seconds > 5.0) {
                      detail = "gf path alone took " + std::to_string(gf_seconds) + " s";
                      return false;
                  }
                  for (long long D = 1; D <= 110; ++D) {
                      const EnumeratedModTable enumerated = mod_table_enumerated(D, census);
                      BigCount gf_total = 0, gf_without = 0;
                      for (const BigCount& c : gf[static_cast<std::size_t>(D)]) gf_total += c;
                      for (const BigCount& c : gf_no1[static_cast<std::size_t>(D)])
                          gf_without += c;
                      if (enumerated.total != gf_total ||
                          enumerated.with_singlet != gf_total - gf_without) {
                          detail = "totals disagree at D=" + std::to_string(D);
                          return false;
                      }
                      for (std::size_t N = 0; N <= static_cast<std::size_t>(D); ++N)
                          if (enumerated.by_components[N] != gf[static_cast<std::size_t>(D)][N]) {
                              detail = "cell (" + std::to_string(D) + "," + std::to_string(N) +
                                       ") disagrees";
                              return false;
                          }
                  }
                  return true;
              });

    criterion(5, "component-count weights sum to exactly 1 for d <= 110", 120.0,
              [&](std::string& detail) {
                  ModCounter counter(census);
                  for (long long d = 1; d <= 110; ++d) {
                      const auto counts = counter.by_components(d);
                      BigCount total = 0;
                      for (const BigCount& c : counts) total += c;
                      ExactFraction sum = 0;
                      for (const BigCount& c : counts) sum += ExactFraction(c, total);
                      if (sum != 1) {
                          detail = "normalization fails at d=" + std::to_string(d);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "distribution peaks sit near d/5 at d=76 and d=100", 60.0,
              [&](std::string& detail) {
                  const long long p76 = peak_location(nss_distribution(76, census));
                  const long long p100 = peak_location(nss_distribution(100, census));
                  detail = "peaks: " + std::to_string(p76) + " and " + std::to_string(p100);
                  return p76 >= 12 && p76 <= 19 && p100 >= 16 && p100 <= 24;
              });

    criterion(7, "inverted-beta fit of f_100 reaches delta_f <= 1e-3", 10.0,
              [&](std::string& detail) {
                  const InvBetaFit fit = fit_invbeta(nss_distribution(100, census));
                  detail = "delta_f = " + std::to_string(fit.delta_f);
                  return fit.converged && fit.delta_f <= 1.0e-3;
              });

    criterion(8, "growth fit lands in the expected parameter ranges", 120.0,
              [&](std::string& detail) {
                  const GrowthFit fit = fit_growth(mod_series(census, 110, 1));
                  detail = "b = " + std::to_string(fit.b) + ", c = " + std::to_string(fit.c);
                  if (!(fit.converged && fit.c >= 0.40 && fit.c <= 0.52 && fit.b >= 2.2 &&
                        fit.b <= 3.2))
                      return false;
                  SeriesPoints synthetic;
                  synthetic.label = "synthetic";
                  for (long long x = 1; x <= 110; x += 3)
                      synthetic.points.push_back(
                          {x, ExactFraction((0.1 / static_cast<double>(x)) *
                                            std::exp(2.5 * std::sqrt(static_cast<double>(x))))});
                  const GrowthFit recovered = fit_growth(synthetic);
                  const bool exact = std::abs(recovered.a - 0.1) < 0.1 * 1e-6 &&
                                     std::abs(recovered.b - 2.5) < 2.5 * 1e-6 &&
                                     std::abs(recovered.c - 0.5) < 0.5 * 1e-6;
                  if (!exact) detail += "; synthetic recovery beyond 1e-6";
                  return exact;
              });

    criterion(9, "singlet-fraction series split by residue class, exact anchors", 120.0,
              [&](std::string& detail) {
                  ModCounter counter(census);
                  std::size_t total_points = 0;
                  for (int residue : {0, 1, 2}) {
                      const SeriesPoints series = singlet_series(census, 110, residue);
                      total_points += series.points.size();
                      for (const auto& point : series.points) {
                          if (point.x % 3 != residue) {
                              detail = "residue filter leak";
                              return false;
                          }
                          const ExactFraction expected(counter.with_singlet(point.x),
                                                       counter.total(point.x));
                          if (point.y != expected) {
                              detail = "fraction at D=" + std::to_string(point.x) + " not exact";
                              return false;
                          }
                      }
                  }
                  if (total_points != 110) {
                      detail = "expected one point per D <= 110";
                      return false;
                  }
                  const SeriesPoints r2 = singlet_series(census, 5, 2);
                  const SeriesPoints r0 = singlet_series(census, 6, 0);
                  const bool anchors = r2.points.back().x == 5 && r2.points.back().y == 1 &&
                                       r0.points.back().x == 6 &&
                                       r0.points.back().y == ExactFraction(3, 8);
                  if (!anchors) detail = "anchors at D=5, D=6 mismatch";
                  return anchors;
              });

    criterion(10, "restricted streaming never touches the unrestricted partition space", 120.0,
              [&](std::string& detail) {
                  const PartSet parts = PartSet::from_values(census.support());
                  RestrictedPartitionEnumerator e(110, parts, 110);
                  std::size_t streamed = 0;
                  std::size_t max_size = 0, max_capacity = 0;
                  while (e.next()) {
                      ++streamed;
                      max_size = std::max(max_size, e.current().size());
                      max_capacity = std::max(max_capacity, e.current().capacity());
                  }
                  const BigCount counted = count_restricted(110, parts, 110);
                  const BigCount unrestricted = count_partitions_exact(110);
                  detail = "streamed " + std::to_string(streamed) + " partitions vs p(110) = " +
                           unrestricted.str();
                  if (BigCount(streamed) != counted || streamed != 83663) {
                      detail += "; stream length mismatch";
                      return false;
                  }
                  if (max_size > 110 || max_capacity > 220) {
                      detail += "; in-flight state exceeds the O(n) bound";
                      return false;
                  }
                  if (!(BigCount(streamed) * 1000 < unrestricted)) {
                      detail += "; restricted stream is not far below p(n)";
                      return false;
                  }
                  return true;
              });

    if (failures == 0) std::printf("acceptance: all %d criteria passed\n", 10);
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
