// Command-line front end: census, module counts, singlet fractions,
// component distributions and model fits, emitted as CSV or JSON with an
// optional on-disk cache of the exact counts.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "su3census/su3census.hpp"

using namespace su3census;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
    long long dmax = 110;
    long long d = 100;
    std::optional<int> residue;
    std::string format = "csv";
    std::string cache_path;
    std::string out_path;
    bool verify = false;
};

class OutputTarget {
public:
    explicit OutputTarget(const RunConfig& config) {
        if (!config.out_path.empty()) {
            file_.open(config.out_path);
            if (!file_) throw std::runtime_error("cannot open output file: " + config.out_path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (file_.is_open() && !file_) throw std::runtime_error("error writing output file");
    }

private:
    std::ofstream file_;
};

ResultCache open_cache(const RunConfig& config) {
    if (config.cache_path.empty()) return ResultCache();
    return ResultCache::open(config.cache_path);
}

// --- verification passes (oracle cross-checks; exhaustive in the bound) ---

void verify_census(long long dmax) {
    for (long long d = 1; d <= dmax; ++d)
        if (xi(d) != xi_bruteforce(d))
            throw std::runtime_error("verification failed: closed form and diagram scan disagree at d=" +
                                     std::to_string(d));
}

void verify_mod_paths(const DimensionCensus& census, long long dmax) {
    const auto gf = gf_coefficients(census, dmax);
    const auto gf_no1 = gf_coefficients(census, dmax, false);
    ModCounter counter(census);
    for (long long D = 1; D <= dmax; ++D) {
        const EnumeratedModTable enumerated = mod_table_enumerated(D, census);
        BigCount gf_total = 0, gf_without = 0;
        for (const BigCount& c : gf[static_cast<std::size_t>(D)]) gf_total += c;
        for (const BigCount& c : gf_no1[static_cast<std::size_t>(D)]) gf_without += c;
        const bool ok = enumerated.total == gf_total &&
                        enumerated.total == counter.total(D) &&
                        enumerated.with_singlet == gf_total - gf_without &&
                        enumerated.with_singlet == counter.with_singlet(D) &&
                        enumerated.by_components ==
                            std::vector<BigCount>(gf[static_cast<std::size_t>(D)].begin(),
                                                  gf[static_cast<std::size_t>(D)].end());
        if (!ok)
            throw std::runtime_error("verification failed: counting paths disagree at D=" +
                                     std::to_string(D));
    }
}

void verify_partition_stream(long long d, const DimensionCensus& census) {
    const PartSet parts = PartSet::from_values(census.support());
    BigCount seen = 0;
    Partition previous;
    bool first = true;
    enumerate_restricted(d, parts, d, [&](const std::vector<long long>& p) {
        const Partition current{p};
        if (!current.ordered() || current.sum() != d)
            throw std::runtime_error("verification failed: malformed partition emitted");
        for (long long part : p)
            if (!parts.contains(part))
                throw std::runtime_error("verification failed: part outside the admissible set");
        if (!first && !(current < previous))
            throw std::runtime_error("verification failed: stream is not reverse-lexicographic");
        previous = current;
        first = false;
        ++seen;
    });
    if (seen != count_restricted(d, parts, d))
        throw std::runtime_error("verification failed: stream length differs from the counted value");
}

// --- cached accessors ---

ModRow cached_mod_row(long long D, ModCounter& counter, ResultCache& cache, bool verify) {
    const auto hit = cache.lookup_mod(D);
    if (hit && !verify) return *hit;
    const ModRow fresh{D, counter.total(D), counter.with_singlet(D)};
    if (hit && (hit->total != fresh.total || hit->singlet != fresh.singlet))
        std::cerr << "su3census: cached totals for D=" << D
                  << " disagree with recomputation; replacing them\n";
    if (!hit || hit->total != fresh.total || hit->singlet != fresh.singlet) cache.store_mod(fresh);
    return fresh;
}

NssDistribution cached_nss(long long d, const DimensionCensus& census, ResultCache& cache,
                           bool verify) {
    const auto hit = cache.lookup_nss(d);
    if (hit && !verify) {
        NssDistribution dist;
        dist.d = d;
        dist.counts.assign(static_cast<std::size_t>(d) + 1, BigCount(0));
        for (const auto& [N, count] : *hit) dist.counts[static_cast<std::size_t>(N)] = count;
        dist.total = 0;
        for (const BigCount& c : dist.counts) dist.total += c;
        for (const BigCount& c : dist.counts) dist.weights.emplace_back(c, dist.total);
        return dist;
    }
    const NssDistribution dist = nss_distribution(d, census);
    std::vector<std::pair<long long, BigCount>> rows;
    for (long long N = 1; N <= d; ++N)
        if (dist.counts[static_cast<std::size_t>(N)] != 0)
            rows.emplace_back(N, dist.counts[static_cast<std::size_t>(N)]);
    if (hit && *hit != rows)
        std::cerr << "su3census: cached distribution for d=" << d
                  << " disagrees with recomputation; replacing it\n";
    if (!hit || *hit != rows) cache.store_nss(d, rows);
    return dist;
}

// --- subcommands ---

int cmd_xi(const RunConfig& config) {
    if (config.verify) verify_census(config.dmax);
    const DimensionCensus census = build_census(config.dmax);
    OutputTarget out(config);
    if (config.format == "json") {
        ordered_json doc{{"limit", census.limit()}};
        doc["rows"] = ordered_json::array();
        for (long long d : census.support())
            doc["rows"].push_back({{"dimension", d}, {"xi", census.xi(d)}});
        out.stream() << doc.dump(2) << '\n';
    } else {
        write_census_csv(census, out.stream());
    }
    out.finish();
    return 0;
}

int cmd_mod(const RunConfig& config) {
    const DimensionCensus census = build_census(config.dmax);
    if (config.verify) verify_mod_paths(census, config.dmax);
    ResultCache cache = open_cache(config);
    ModCounter counter(census);
    std::vector<ModRow> rows;
    for (long long D = 1; D <= config.dmax; ++D) {
        if (config.residue && D % 3 != *config.residue) continue;
        rows.push_back(cached_mod_row(D, counter, cache, config.verify));
    }
    OutputTarget out(config);
    if (config.format == "json") {
        ordered_json doc{{"dmax", config.dmax}};
        if (config.residue) doc["residue"] = *config.residue;
        doc["rows"] = ordered_json::array();
        for (const ModRow& r : rows) {
            const ExactFraction f = r.fraction();
            doc["rows"].push_back({{"D", r.D},
                                   {"mod_total", to_decimal(r.total)},
                                   {"mod_singlet", to_decimal(r.singlet)},
                                   {"singlet_fraction", to_fraction_string(f)},
                                   {"singlet_fraction_float", to_double(f)}});
        }
        out.stream() << doc.dump(2) << '\n';
    } else {
        write_mod_csv(rows, out.stream());
    }
    out.finish();
    return 0;
}

int cmd_nss(const RunConfig& config) {
    const DimensionCensus census = build_census(config.d);
    if (config.verify) {
        verify_mod_paths(census, config.d);
        const auto row = gf_oracle(config.d, census);
        const auto counts = ModCounter(census).by_components(config.d);
        if (std::vector<BigCount>(row.begin(), row.end()) != counts)
            throw std::runtime_error("verification failed: component counts disagree with the gf oracle");
    }
    ResultCache cache = open_cache(config);
    const NssDistribution dist = cached_nss(config.d, census, cache, config.verify);
    OutputTarget out(config);
    if (config.format == "json") {
        ordered_json doc{{"d", dist.d}, {"mod_total", to_decimal(dist.total)}};
        doc["rows"] = ordered_json::array();
        for (long long N = 1; N <= dist.d; ++N) {
            if (dist.counts[static_cast<std::size_t>(N)] == 0) continue;
            doc["rows"].push_back({{"N", N},
                                   {"count", to_decimal(dist.counts[static_cast<std::size_t>(N)])},
                                   {"fraction", to_fraction_string(dist.weight(N))},
                                   {"fraction_float", to_double(dist.weight(N))}});
        }
        out.stream() << doc.dump(2) << '\n';
    } else {
        write_nss_csv(dist, out.stream());
    }
    out.finish();
    return 0;
}

int cmd_partitions(const RunConfig& config) {
    const DimensionCensus census = build_census(config.d);
    if (config.verify) verify_partition_stream(config.d, census);
    const PartSet parts = PartSet::from_values(census.support());
    OutputTarget out(config);
    if (config.format == "json") {
        ordered_json doc{{"d", config.d}};
        ordered_json list = ordered_json::array();
        enumerate_restricted(config.d, parts, config.d, [&](const std::vector<long long>& p) {
            list.push_back(format_partition_line(p));
        });
        doc["count"] = list.size();
        doc["partitions"] = std::move(list);
        out.stream() << doc.dump(2) << '\n';
    } else {
        enumerate_restricted(config.d, parts, config.d, [&](const std::vector<long long>& p) {
            out.stream() << format_partition_line(p) << '\n';
        });
    }
    out.finish();
    return 0;
}

SeriesPoints cached_mod_series(const DimensionCensus& census, const RunConfig& config, int residue) {
    ResultCache cache = open_cache(config);
    ModCounter counter(census);
    SeriesPoints series;
    series.residue_class = residue;
    series.label = "exact module totals";
    for (long long D = 1; D <= config.dmax; ++D) {
        if (D % 3 != residue) continue;
        series.points.push_back({D, ExactFraction(cached_mod_row(D, counter, cache, config.verify).total)});
    }
    return series;
}

int cmd_fit_growth(const RunConfig& config) {
    const DimensionCensus census = build_census(config.dmax);
    if (config.verify) verify_mod_paths(census, config.dmax);
    std::vector<int> residues = config.residue ? std::vector<int>{*config.residue}
                                               : std::vector<int>{0, 1, 2};
    ordered_json reports = ordered_json::array();
    bool all_converged = true;
    for (int residue : residues) {
        const GrowthFit fit = fit_growth(cached_mod_series(census, config, residue));
        all_converged = all_converged && fit.converged;
        ordered_json report = fit_report(fit);
        report["residue"] = residue;
        reports.push_back(std::move(report));
    }
    OutputTarget out(config);
    out.stream() << (reports.size() == 1 ? reports[0].dump(2) : reports.dump(2)) << '\n';
    out.finish();
    if (!all_converged) {
        std::cerr << "su3census: growth fit did not converge within the iteration budget\n";
        return 1;
    }
    return 0;
}

int cmd_fit_ibeta(const RunConfig& config) {
    const DimensionCensus census = build_census(config.d);
    if (config.verify) verify_mod_paths(census, config.d);
    ResultCache cache = open_cache(config);
    const NssDistribution dist = cached_nss(config.d, census, cache, config.verify);
    const InvBetaFit scaled = fit_invbeta(dist);
    const InvBetaFit fixed = fit_invbeta_fixed_scale(dist);
    ordered_json reports = ordered_json::array({fit_report(scaled), fit_report(fixed)});
    OutputTarget out(config);
    out.stream() << reports.dump(2) << '\n';
    out.finish();
    if (!scaled.converged || !fixed.converged) {
        std::cerr << "su3census: inverted-beta fit did not converge within the iteration budget\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of su(3) module structure: irrep census, singlet fractions, "
                 "component-count distributions, and asymptotic model fits"};
    app.require_subcommand(1);
    RunConfig config;

    const auto add_output = [&](CLI::App* cmd, bool with_format = true) {
        if (with_format)
            cmd->add_option("--format", config.format, "Output format")
                ->check(CLI::IsMember({"csv", "json"}))
                ->capture_default_str();
        cmd->add_option("--out", config.out_path, "Output path (default: stdout)");
        cmd->add_flag("--verify", config.verify, "Run the oracle cross-checks before emitting");
    };
    const auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache", config.cache_path, "Cache file for exact counts");
    };

    CLI::App* xi_cmd = app.add_subcommand("xi", "Irreducible-module counts per dimension");
    xi_cmd->add_option("--dmax", config.dmax, "Largest dimension")->check(CLI::PositiveNumber);
    add_output(xi_cmd);

    CLI::App* mod_cmd = app.add_subcommand("mod", "Module totals and singlet fractions per dimension");
    mod_cmd->add_option("--dmax", config.dmax, "Largest dimension")->check(CLI::PositiveNumber);
    mod_cmd->add_option("--residue", config.residue, "Restrict to one class of D modulo 3")
        ->check(CLI::Range(0, 2));
    add_output(mod_cmd);
    add_cache(mod_cmd);

    CLI::App* nss_cmd = app.add_subcommand("nss", "Component-count distribution in one dimension");
    nss_cmd->add_option("--d", config.d, "Hilbert-space dimension")->check(CLI::PositiveNumber);
    add_output(nss_cmd);
    add_cache(nss_cmd);

    CLI::App* part_cmd = app.add_subcommand("partitions", "Admissible partitions of one dimension");
    part_cmd->add_option("--d", config.d, "Dimension to partition")->check(CLI::PositiveNumber);
    add_output(part_cmd);

    CLI::App* growth_cmd = app.add_subcommand("fit-growth", "Fit (a/n) exp(b n^c) to the exact totals");
    growth_cmd->add_option("--dmax", config.dmax, "Largest dimension")->check(CLI::PositiveNumber);
    growth_cmd->add_option("--residue", config.residue, "Fit a single class of n modulo 3")
        ->check(CLI::Range(0, 2));
    add_output(growth_cmd, false);
    add_cache(growth_cmd);

    CLI::App* ibeta_cmd = app.add_subcommand("fit-ibeta", "Fit an inverted beta to the distribution");
    ibeta_cmd->add_option("--d", config.d, "Hilbert-space dimension")->check(CLI::PositiveNumber);
    add_output(ibeta_cmd, false);
    add_cache(ibeta_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (xi_cmd->parsed()) return cmd_xi(config);
        if (mod_cmd->parsed()) return cmd_mod(config);
        if (nss_cmd->parsed()) return cmd_nss(config);
        if (part_cmd->parsed()) return cmd_partitions(config);
        if (growth_cmd->parsed()) return cmd_fit_growth(config);
        if (ibeta_cmd->parsed()) return cmd_fit_ibeta(config);
    } catch (const std::exception& e) {
        std::cerr << "su3census: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
