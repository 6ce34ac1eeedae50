#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rcgraph/chromatic.hpp"
#include "rcgraph/enumerate.hpp"
#include "rcgraph/graph6.hpp"

namespace rcg {

struct CensusError : Error {
    using Error::Error;
};

/// Enumeration result for one (n, r) cell: class count, chromatic-number
/// histogram, and the witness graphs in canonical order.
struct CensusEntry {
    int n = 0;
    int r = 0;
    long count = 0;
    std::map<int, long> chi_hist;
    std::vector<std::string> graphs;  // graph6, canonical order
    std::vector<int> chi;             // chi per graph, -1 if not yet computed
    bool persisted = false;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string census_row_payload(const CensusEntry& e) {
    std::ostringstream os;
    os << "n=" << e.n << " r=" << e.r << " count=" << e.count << " chi_hist=";
    bool first = true;
    for (auto [chi, cnt] : e.chi_hist) {
        if (!first) os << ",";
        os << chi << ":" << cnt;
        first = false;
    }
    return os.str();
}

inline std::string witness_file(const std::string& path, int n, int r) {
    return path + ".n" + std::to_string(n) + "r" + std::to_string(r) + ".g6";
}

}  // namespace detail

/// In-memory cache of enumerated cells with append-only file persistence.
/// Chromatic values are recomputed lazily after a reload; the stored data is
/// the class count, the chi histogram, and the graph6 witness lists.
class Census {
public:
    bool has(int n, int r) const { return cells_.count({n, r}) > 0; }

    CensusEntry& at(int n, int r) { return cells_.at({n, r}); }
    const CensusEntry& at(int n, int r) const { return cells_.at({n, r}); }

    /// Enumerates the cell if absent. chi is computed per graph and the
    /// histogram filled in.
    CensusEntry& ensure(int n, int r, int jobs = 1) {
        auto it = cells_.find({n, r});
        if (it == cells_.end()) {
            CensusEntry e;
            e.n = n;
            e.r = r;
            auto graphs = enumerate_regular(n, r, jobs);
            e.count = static_cast<long>(graphs.size());
            for (const auto& g : graphs) {
                int chi = chromatic_number(g).chi;
                e.graphs.push_back(encode_graph6(g));
                e.chi.push_back(chi);
                ++e.chi_hist[chi];
            }
            it = cells_.emplace(std::make_pair(n, r), std::move(e)).first;
        }
        CensusEntry& e = it->second;
        if (e.chi.empty() && e.count > 0) fill_chi(e);
        return e;
    }

    void insert(CensusEntry e) { cells_[{e.n, e.r}] = std::move(e); }

    std::size_t size() const { return cells_.size(); }

    /// Appends rows (and witness files) for entries not yet on disk.
    void save(const std::string& path) {
        std::ofstream out(path, std::ios::app);
        if (!out) throw CensusError("cannot open census file for append: " + path);
        for (auto& [key, e] : cells_) {
            if (e.persisted) continue;
            std::string payload = detail::census_row_payload(e);
            char hex[32];
            std::snprintf(hex, sizeof hex, "%016llx",
                          static_cast<unsigned long long>(detail::fnv1a(payload)));
            out << "cell " << payload << " checksum=" << hex << "\n";
            std::ofstream wf(detail::witness_file(path, e.n, e.r));
            if (!wf) throw CensusError("cannot write witness file for cell");
            for (const auto& g6 : e.graphs) wf << g6 << "\n";
            e.persisted = true;
        }
    }

    /// Loads a census file; a missing path yields an empty census. Malformed
    /// or tampered rows fail with the offending line number.
    static Census load(const std::string& path) {
        Census c;
        std::ifstream in(path);
        if (!in) return c;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            auto fail = [&](const std::string& why) -> CensusError {
                return CensusError("census row " + std::to_string(lineno) + ": " + why);
            };
            std::istringstream is(line);
            std::string tag;
            is >> tag;
            if (tag != "cell") throw fail("unknown record '" + tag + "'");
            CensusEntry e;
            std::string field, hist_text, checksum;
            while (is >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) throw fail("malformed field '" + field + "'");
                std::string key = field.substr(0, eq), val = field.substr(eq + 1);
                try {
                    if (key == "n") e.n = std::stoi(val);
                    else if (key == "r") e.r = std::stoi(val);
                    else if (key == "count") e.count = std::stol(val);
                    else if (key == "chi_hist") hist_text = val;
                    else if (key == "checksum") checksum = val;
                    else throw fail("unknown field '" + key + "'");
                } catch (const std::logic_error&) {
                    throw fail("bad value in field '" + field + "'");
                }
            }
            std::istringstream hs(hist_text);
            std::string item;
            while (std::getline(hs, item, ',')) {
                auto colon = item.find(':');
                if (colon == std::string::npos) throw fail("malformed chi_hist");
                try {
                    e.chi_hist[std::stoi(item.substr(0, colon))] =
                        std::stol(item.substr(colon + 1));
                } catch (const std::logic_error&) {
                    throw fail("malformed chi_hist");
                }
            }
            std::string payload = detail::census_row_payload(e);
            char hex[32];
            std::snprintf(hex, sizeof hex, "%016llx",
                          static_cast<unsigned long long>(detail::fnv1a(payload)));
            if (checksum != hex) throw fail("checksum mismatch (row tampered?)");
            long hist_total = 0;
            for (auto [chi, cnt] : e.chi_hist) hist_total += cnt;
            if (hist_total != e.count)
                throw fail("chi_hist totals " + std::to_string(hist_total) +
                           " but count is " + std::to_string(e.count));
            std::ifstream wf(detail::witness_file(path, e.n, e.r));
            if (!wf)
                throw fail("missing witness file " +
                           detail::witness_file(path, e.n, e.r));
            std::string g6;
            while (std::getline(wf, g6))
                if (!g6.empty()) e.graphs.push_back(g6);
            if (static_cast<long>(e.graphs.size()) != e.count)
                throw fail("witness file has " + std::to_string(e.graphs.size()) +
                           " graphs, expected " + std::to_string(e.count));
            e.persisted = true;
            c.cells_[{e.n, e.r}] = std::move(e);
        }
        return c;
    }

private:
    void fill_chi(CensusEntry& e) {
        std::map<int, long> hist;
        for (const auto& g6 : e.graphs) {
            int chi = chromatic_number(decode_graph6(g6)).chi;
            e.chi.push_back(chi);
            ++hist[chi];
        }
        if (hist != e.chi_hist)
            throw CensusError("census cell (" + std::to_string(e.n) + "," +
                              std::to_string(e.r) +
                              "): stored chi_hist disagrees with recomputation");
    }

    std::map<std::pair<int, int>, CensusEntry> cells_;
};

}  // namespace rcg
