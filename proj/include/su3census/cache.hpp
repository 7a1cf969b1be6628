#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "su3census/modcount.hpp"
#include "su3census/numbers.hpp"

namespace su3census {

namespace detail {

inline bool parse_bigcount(const std::string& s, BigCount& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    out = BigCount(s);
    return true;
}

inline bool parse_longlong(const std::string& s, long long& out) {
    if (s.empty() || s.size() > 18) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    out = std::stoll(s);
    return true;
}

}  // namespace detail

/// On-disk result cache: one record per line, exact integers as decimal
/// strings, appended as results arrive.  Records that fail to parse — a torn
/// final line after a crash, stray edits — are dropped at load and simply
/// recomputed.  A later record for the same key wins, so corrections can be
/// appended without rewriting the file.
///
///   mod <D> <total> <singlet>
///   nss <d> <N>:<count>,<N>:<count>,...
class ResultCache {
public:
    ResultCache() = default;

    static ResultCache open(const std::filesystem::path& path) {
        ResultCache cache;
        cache.path_ = path;
        cache.file_backed_ = true;
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (!cache.absorb_line(line)) ++cache.discarded_;
        }
        return cache;
    }

    std::optional<ModRow> lookup_mod(long long D) const {
        if (auto it = mod_.find(D); it != mod_.end()) return it->second;
        return std::nullopt;
    }

    void store_mod(const ModRow& row) {
        mod_[row.D] = row;
        if (file_backed_)
            append_line("mod " + std::to_string(row.D) + " " + to_decimal(row.total) + " " +
                        to_decimal(row.singlet));
    }

    std::optional<std::vector<std::pair<long long, BigCount>>> lookup_nss(long long d) const {
        if (auto it = nss_.find(d); it != nss_.end()) return it->second;
        return std::nullopt;
    }

    void store_nss(long long d, const std::vector<std::pair<long long, BigCount>>& rows) {
        nss_[d] = rows;
        if (file_backed_) {
            std::string line = "nss " + std::to_string(d) + " ";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i) line += ',';
                line += std::to_string(rows[i].first) + ":" + to_decimal(rows[i].second);
            }
            append_line(line);
        }
    }

    std::size_t discarded() const { return discarded_; }

private:
    bool absorb_line(const std::string& line) {
        if (line.empty()) return true;  // blank lines are harmless
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        if (kind == "mod") {
            std::string d_str, total_str, singlet_str, extra;
            if (!(in >> d_str >> total_str >> singlet_str) || (in >> extra)) return false;
            ModRow row;
            if (!detail::parse_longlong(d_str, row.D) || row.D < 1) return false;
            if (!detail::parse_bigcount(total_str, row.total)) return false;
            if (!detail::parse_bigcount(singlet_str, row.singlet)) return false;
            if (row.total == 0 || row.singlet > row.total) return false;
            mod_[row.D] = row;
            return true;
        }
        if (kind == "nss") {
            std::string d_str, payload, extra;
            if (!(in >> d_str >> payload) || (in >> extra)) return false;
            long long d = 0;
            if (!detail::parse_longlong(d_str, d) || d < 1) return false;
            std::vector<std::pair<long long, BigCount>> rows;
            std::istringstream items(payload);
            std::string item;
            long long prev_n = 0;
            while (std::getline(items, item, ',')) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) return false;
                long long n = 0;
                BigCount count;
                if (!detail::parse_longlong(item.substr(0, colon), n)) return false;
                if (!detail::parse_bigcount(item.substr(colon + 1), count)) return false;
                if (n <= prev_n || n > d || count == 0) return false;  // rows ascending in N
                prev_n = n;
                rows.emplace_back(n, std::move(count));
            }
            if (rows.empty()) return false;
            nss_[d] = std::move(rows);
            return true;
        }
        return false;
    }

    void append_line(const std::string& line) {
        std::ofstream out(path_, std::ios::app);
        out << line << '\n';
    }

    std::filesystem::path path_;
    bool file_backed_ = false;
    std::map<long long, ModRow> mod_;
    std::map<long long, std::vector<std::pair<long long, BigCount>>> nss_;
    std::size_t discarded_ = 0;
};

}  // namespace su3census
