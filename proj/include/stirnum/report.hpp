#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "diophantine.hpp"
#include "multiplicity.hpp"

namespace stirnum {

using json = nlohmann::ordered_json;

namespace csv {

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Rows of a comma-separated file; '#' lines are skipped, the mandatory header
// row is validated and dropped.
inline std::vector<std::vector<std::string>> read_file(const std::string& path,
                                                       const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != expected_header)
                throw std::runtime_error(path + ": expected header '" + expected_header + "', got '" +
                                         line + "'");
            header_seen = true;
            continue;
        }
        rows.push_back(split(line));
    }
    if (!header_seen) throw std::runtime_error(path + ": missing header row");
    return rows;
}

}  // namespace csv

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

// One row per distinct value: a,count,positions with positions "n:k;n:k".
// Synthetic 0/1 entries print count "inf" and no positions.
inline void write_scan_csv(std::ostream& os, const ScanSummary& s) {
    os << "a,count,positions\n";
    for (const auto& [a, occ] : s.hits) {
        os << a.str() << ',';
        if (occ.empty() && a <= 1 && s.includes_trivial) {
            os << "inf,";
        } else {
            os << occ.size() << ',';
            for (std::size_t i = 0; i < occ.size(); ++i) {
                if (i) os << ';';
                os << occ[i].n << ':' << occ[i].k;
            }
        }
        os << '\n';
    }
}

struct ParsedScanRow {
    Natural a;
    bool infinite = false;
    std::vector<std::pair<u64, u64>> positions;
};

inline std::vector<ParsedScanRow> parse_scan_csv(std::istream& is) {
    std::vector<ParsedScanRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto f = csv::split(line);
        ParsedScanRow r;
        r.a = Natural(f.at(0));
        if (f.at(1) == "inf") {
            r.infinite = true;
        } else if (!f.at(2).empty()) {
            for (const auto& tok : csv::split(f.at(2), ';')) {
                auto nk = csv::split(tok, ':');
                r.positions.emplace_back(std::stoull(nk.at(0)), std::stoull(nk.at(1)));
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json scan_to_json(const ScanSummary& s) {
    json j;
    j["kind"] = static_cast<int>(s.kind);
    j["lo"] = s.lo.str();
    j["hi"] = s.hi.str();
    j["includes_trivial"] = s.includes_trivial;
    j["distinct_hits"] = s.distinct_hits();
    json hits = json::array();
    for (const auto& [a, occ] : s.hits) {
        json h;
        h["a"] = a.str();
        if (occ.empty() && a <= 1 && s.includes_trivial) {
            h["infinite"] = true;
        } else {
            h["count"] = occ.size();
            json pos = json::array();
            for (const auto& o : occ) pos.push_back({o.n, o.k});
            h["positions"] = std::move(pos);
        }
        hits.push_back(std::move(h));
    }
    j["hits"] = std::move(hits);
    return j;
}

// Cache rows kind,n,k,value sorted by (kind,n,k); a '#' config line pins the
// scan parameters so stale caches are refused.
inline void write_scan_cache(std::ostream& os, const ScanSummary& s) {
    os << "# stirnum scan cache kind=" << static_cast<int>(s.kind) << " lo=" << s.lo.str()
       << " hi=" << s.hi.str() << " trivial=" << (s.includes_trivial ? 1 : 0) << '\n';
    os << "kind,n,k,value\n";
    for (const auto& [a, occ] : s.hits) {
        if (occ.empty()) os << static_cast<int>(s.kind) << ",0,0," << a.str() << '\n';
    }
    std::vector<std::pair<Occurrence, Natural>> rows;
    for (const auto& [a, occ] : s.hits)
        for (const auto& o : occ) rows.emplace_back(o, a);
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [o, a] : rows)
        os << static_cast<int>(s.kind) << ',' << o.n << ',' << o.k << ',' << a.str() << '\n';
}

inline std::optional<ScanSummary> load_scan_cache(const std::string& path, const Natural& lo,
                                                  const Natural& hi, StirlingKind kind,
                                                  TrivialValues trivial) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string config;
    if (!std::getline(in, config)) return std::nullopt;
    std::ostringstream want;
    want << "# stirnum scan cache kind=" << static_cast<int>(kind) << " lo=" << lo.str()
         << " hi=" << hi.str() << " trivial=" << (trivial == TrivialValues::Include ? 1 : 0);
    if (config != want.str()) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "kind,n,k,value") return std::nullopt;
    ScanSummary s{lo, hi, kind, trivial == TrivialValues::Include, {}};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = csv::split(line);
        const u64 n = std::stoull(f.at(1)), k = std::stoull(f.at(2));
        Natural a(f.at(3));
        if (n == 0)
            s.hits.emplace(a, std::vector<Occurrence>{});
        else
            s.hits[a].push_back({kind, n, k});
    }
    return s;
}

// kind,a,n,k rows, one per occurrence (the golden collisions layout).
inline void write_occurrences_csv(std::ostream& os, const std::vector<MultiplicityReport>& reports) {
    os << "kind,a,n,k\n";
    for (const auto& r : reports)
        for (const auto& o : r.occurrences)
            os << static_cast<int>(r.kind) << ',' << r.a.str() << ',' << o.n << ',' << o.k << '\n';
}

inline json multiplicity_to_json(const MultiplicityReport& r) {
    json j;
    j["kind"] = static_cast<int>(r.kind);
    j["a"] = r.a.str();
    j["count"] = r.count();
    json pos = json::array();
    for (const auto& o : r.occurrences) pos.push_back({o.n, o.k});
    j["positions"] = std::move(pos);
    return j;
}

inline void write_sieve_csv(std::ostream& os, const SieveReport& rep) {
    os << "k,n,disposition,witness_prime_or_x\n";
    for (const auto& o : rep.outcomes) {
        os << o.k << ',' << o.n << ',' << disposition_name(o.disposition) << ',';
        if (o.disposition == Disposition::EliminatedByPrime)
            os << o.witness;
        else if (o.disposition == Disposition::Solution)
            os << o.x.str();
        os << '\n';
    }
}

struct ParsedSieveRow {
    u64 k = 0, n = 0;
    std::string disposition;
    std::string witness_or_x;
};

inline std::vector<ParsedSieveRow> parse_sieve_csv(std::istream& is) {
    std::vector<ParsedSieveRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto f = csv::split(line);
        rows.push_back({std::stoull(f.at(0)), std::stoull(f.at(1)), f.at(2), f.at(3)});
    }
    return rows;
}

inline json sieve_to_json(const SieveReport& rep) {
    json j;
    j["kmin"] = rep.kmin;
    j["kmax"] = rep.kmax;
    j["n_max"] = rep.n_max;
    j["primes"] = {{"label", rep.primes.label}, {"values", rep.primes.primes}};
    j["direct_zone_max"] = rep.direct_zone_max;
    j["eliminated_count"] = rep.eliminated_count;
    j["dropped_unit_roots"] = rep.dropped_unit_roots;
    json outs = json::array();
    for (const auto& o : rep.outcomes) {
        json one;
        one["k"] = o.k;
        one["n"] = o.n;
        one["disposition"] = disposition_name(o.disposition);
        if (o.disposition == Disposition::EliminatedByPrime) one["witness"] = o.witness;
        if (o.disposition == Disposition::Solution) one["x"] = o.x.str();
        outs.push_back(std::move(one));
    }
    j["outcomes"] = std::move(outs);
    if (!rep.second_stage.empty()) {
        json ss = json::array();
        for (const auto& s : rep.second_stage) {
            json one;
            one["k"] = s.k;
            one["n"] = s.n;
            if (s.witness)
                one["witness"] = s.witness;
            else
                one["witness"] = nullptr;
            ss.push_back(std::move(one));
        }
        j["second_stage"] = std::move(ss);
    }
    return j;
}

inline void write_solutions_csv(std::ostream& os, const std::vector<SolutionTriple>& sols) {
    os << "k,n,x\n";
    for (const auto& s : sols) os << s.k << ',' << s.n << ',' << s.x.str() << '\n';
}

inline void write_diof1_csv(std::ostream& os, const std::vector<Diof1Solution>& sols) {
    os << "n,m\n";
    for (const auto& s : sols) os << s.n << ',' << s.m.str() << '\n';
}

inline void write_diof2_csv(std::ostream& os, const std::vector<Diof2Solution>& sols) {
    os << "n,m\n";
    for (const auto& s : sols) os << s.n << ',' << s.m.str() << '\n';
}

inline void write_rn_csv(std::ostream& os, const std::vector<RamanujanNagellEntry>& rows) {
    os << "n,value\n";
    for (const auto& r : rows) os << r.n << ',' << r.value.str() << '\n';
}

inline void write_bound_csv(std::ostream& os, const BoundEvaluation& e,
                            std::optional<double> comparator) {
    os << "a,log_a,w_value,b_limit,bound,asymptotic_comparator\n";
    os.precision(17);
    os << e.a.str() << ',' << e.log_a << ',' << e.w_value << ',' << e.b_limit << ',' << e.bound
       << ',';
    if (comparator) os << *comparator;
    os << '\n';
}

inline json bound_to_json(const BoundEvaluation& e, std::optional<double> comparator) {
    json j;
    j["a"] = e.a.str();
    j["log_a"] = e.log_a;
    j["w_value"] = e.w_value;
    j["b_limit"] = e.b_limit;
    j["bound"] = e.bound;
    if (comparator) j["asymptotic_comparator"] = *comparator;
    return j;
}

// ---------------------------------------------------------------------------
// Golden tables
// ---------------------------------------------------------------------------

struct GoldenTable1Row {
    u64 lo = 0, hi = 0;
    u64 second_kind = 0, first_kind = 0;
};

struct GoldenAppendixBlock {
    u64 lo = 0, hi = 0;
    std::vector<Natural> values;  // as printed, duplicates preserved
};

struct GoldenOccurrence {
    int kind = 2;
    Natural a;
    u64 n = 0, k = 0;
};

// One verified correction to a printed table. For survivors, printed/corrected
// hold "k:n" tokens (printed = spurious row to drop, corrected = missing row).
struct ErrataEntry {
    std::string table;
    u64 lo = 0, hi = 0;
    int kind = 0;
    std::string printed;
    std::string corrected;
    std::string note;
};

inline std::vector<GoldenTable1Row> load_golden_table1(const std::string& dir) {
    std::vector<GoldenTable1Row> rows;
    for (const auto& f : csv::read_file(dir + "/table1.csv", "lo,hi,second_kind,first_kind"))
        rows.push_back({std::stoull(f.at(0)), std::stoull(f.at(1)), std::stoull(f.at(2)),
                        std::stoull(f.at(3))});
    return rows;
}

inline std::vector<GoldenAppendixBlock> load_golden_appendix(const std::string& dir,
                                                             StirlingKind kind) {
    const std::string file =
        kind == StirlingKind::SecondKind ? "/appendix_second.csv" : "/appendix_first.csv";
    std::vector<GoldenAppendixBlock> blocks;
    for (const auto& f : csv::read_file(dir + file, "lo,hi,value")) {
        const u64 lo = std::stoull(f.at(0)), hi = std::stoull(f.at(1));
        if (blocks.empty() || blocks.back().lo != lo || blocks.back().hi != hi)
            blocks.push_back({lo, hi, {}});
        blocks.back().values.emplace_back(f.at(2));
    }
    return blocks;
}

inline std::vector<GoldenOccurrence> load_golden_collisions(const std::string& dir) {
    std::vector<GoldenOccurrence> rows;
    for (const auto& f : csv::read_file(dir + "/collisions.csv", "kind,a,n,k"))
        rows.push_back({std::stoi(f.at(0)), Natural(f.at(1)), std::stoull(f.at(2)),
                        std::stoull(f.at(3))});
    return rows;
}

inline std::vector<SolutionTriple> load_golden_solutions(const std::string& dir) {
    std::vector<SolutionTriple> rows;
    for (const auto& f : csv::read_file(dir + "/theorem3_solutions.csv", "k,n,x"))
        rows.push_back({std::stoull(f.at(0)), std::stoull(f.at(1)), Natural(f.at(2))});
    return rows;
}

inline std::vector<std::pair<u64, u64>> load_golden_survivors(const std::string& dir) {
    std::vector<std::pair<u64, u64>> rows;
    for (const auto& f : csv::read_file(dir + "/survivors.csv", "k,n"))
        rows.emplace_back(std::stoull(f.at(0)), std::stoull(f.at(1)));
    return rows;
}

inline std::vector<ErrataEntry> load_golden_errata(const std::string& dir) {
    std::vector<ErrataEntry> rows;
    for (const auto& f : csv::read_file(dir + "/errata.csv", "table,lo,hi,kind,printed,corrected,note"))
        rows.push_back({f.at(0), std::stoull(f.at(1)), std::stoull(f.at(2)), std::stoi(f.at(3)),
                        f.at(4), f.at(5), f.at(6)});
    return rows;
}

// ---------------------------------------------------------------------------
// Golden comparison
// ---------------------------------------------------------------------------

struct DiffReport {
    std::string table;
    u64 matched = 0;
    std::vector<std::string> errata_applied;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline u64 count_distinct_in(const ScanSummary& s, u64 lo, u64 hi) {
    const auto begin = s.hits.lower_bound(Natural(lo));
    const auto end = s.hits.upper_bound(Natural(hi));
    u64 c = 0;
    for (auto it = begin; it != end; ++it) ++c;
    return c;
}

// The as-printed list for one appendix block: each value once per occurrence,
// the symbolic 0/1 entries once each.
inline std::vector<Natural> emitted_block(const ScanSummary& s, u64 lo, u64 hi) {
    std::vector<Natural> out;
    const auto begin = s.hits.lower_bound(Natural(lo));
    const auto end = s.hits.upper_bound(Natural(hi));
    for (auto it = begin; it != end; ++it) {
        const std::size_t copies = it->second.empty() ? 1 : it->second.size();
        for (std::size_t i = 0; i < copies; ++i) out.push_back(it->first);
    }
    return out;
}

}  // namespace detail

inline DiffReport compare_table1(const ScanSummary& second, const ScanSummary& first,
                                 const std::vector<GoldenTable1Row>& golden,
                                 const std::vector<ErrataEntry>& errata, bool errata_on) {
    DiffReport d{"table1", 0, {}, {}};
    for (const auto& row : golden) {
        for (int kind : {2, 1}) {
            u64 expected = kind == 2 ? row.second_kind : row.first_kind;
            const ErrataEntry* fix = nullptr;
            if (errata_on)
                for (const auto& e : errata)
                    if (e.table == "table1" && e.lo == row.lo && e.hi == row.hi && e.kind == kind)
                        fix = &e;
            if (fix) expected = std::stoull(fix->corrected);
            const u64 got =
                detail::count_distinct_in(kind == 2 ? second : first, row.lo, row.hi);
            std::ostringstream cell;
            cell << "kind " << kind << " [" << row.lo << "," << row.hi << "]";
            if (got == expected) {
                ++d.matched;
                if (fix)
                    d.errata_applied.push_back(cell.str() + ": printed " + fix->printed +
                                               " corrected to " + fix->corrected + " (" +
                                               fix->note + ")");
            } else {
                std::ostringstream m;
                m << cell.str() << ": expected " << expected << ", scan found " << got;
                d.mismatches.push_back(m.str());
            }
        }
    }
    return d;
}

inline DiffReport compare_appendix(const ScanSummary& scan,
                                   const std::vector<GoldenAppendixBlock>& golden,
                                   const std::vector<ErrataEntry>& errata, bool errata_on) {
    const std::string table =
        scan.kind == StirlingKind::SecondKind ? "appendix-second" : "appendix-first";
    DiffReport d{table, 0, {}, {}};
    for (const auto& block : golden) {
        std::map<Natural, long> expected;
        for (const auto& v : block.values) ++expected[v];
        if (errata_on) {
            for (const auto& e : errata) {
                if (e.table != table || e.lo != block.lo || e.hi != block.hi) continue;
                const Natural printed(e.printed), corrected(e.corrected);
                auto it = expected.find(printed);
                if (it == expected.end()) {
                    d.mismatches.push_back("errata entry for absent printed value " + e.printed);
                    continue;
                }
                if (--it->second == 0) expected.erase(it);
                ++expected[corrected];
                std::ostringstream msg;
                msg << "[" << block.lo << "," << block.hi << "]: printed " << e.printed
                    << " corrected to " << e.corrected << " (" << e.note << ")";
                d.errata_applied.push_back(msg.str());
            }
        }
        std::map<Natural, long> got;
        for (const auto& v : detail::emitted_block(scan, block.lo, block.hi)) ++got[v];
        bool block_ok = true;
        for (const auto& [v, c] : expected) {
            const long have = got.count(v) ? got.at(v) : 0;
            if (have != c) {
                std::ostringstream m;
                m << "[" << block.lo << "," << block.hi << "] value " << v.str() << ": listed "
                  << c << " time(s), scan found " << have;
                d.mismatches.push_back(m.str());
                block_ok = false;
            }
        }
        for (const auto& [v, c] : got) {
            if (!expected.count(v)) {
                std::ostringstream m;
                m << "[" << block.lo << "," << block.hi << "] value " << v.str()
                  << ": found by scan " << c << " time(s) but not listed";
                d.mismatches.push_back(m.str());
                block_ok = false;
            }
        }
        if (block_ok) ++d.matched;
    }
    return d;
}

inline DiffReport compare_collisions(const std::vector<MultiplicityReport>& second,
                                     const std::vector<MultiplicityReport>& first,
                                     const std::vector<GoldenOccurrence>& golden) {
    DiffReport d{"collisions", 0, {}, {}};
    std::map<std::tuple<int, Natural, u64, u64>, int> expected, got;
    for (const auto& g : golden) ++expected[{g.kind, g.a, g.n, g.k}];
    for (const auto* side : {&second, &first})
        for (const auto& r : *side)
            for (const auto& o : r.occurrences) ++got[{static_cast<int>(r.kind), r.a, o.n, o.k}];
    for (const auto& [key, c] : expected) {
        if (got.count(key) && got.at(key) == c) {
            ++d.matched;
        } else {
            std::ostringstream m;
            m << "kind " << std::get<0>(key) << " a=" << std::get<1>(key).str() << " at ("
              << std::get<2>(key) << "," << std::get<3>(key) << "): listed but not reproduced";
            d.mismatches.push_back(m.str());
        }
    }
    for (const auto& [key, c] : got)
        if (!expected.count(key)) {
            std::ostringstream m;
            m << "kind " << std::get<0>(key) << " a=" << std::get<1>(key).str() << " at ("
              << std::get<2>(key) << "," << std::get<3>(key) << "): found but not listed";
            d.mismatches.push_back(m.str());
        }
    return d;
}

inline DiffReport compare_solutions(const std::vector<SolutionTriple>& got,
                                    const std::vector<SolutionTriple>& golden) {
    DiffReport d{"theorem3-solutions", 0, {}, {}};
    auto key = [](const SolutionTriple& s) { return std::tuple<u64, u64, Natural>{s.k, s.n, s.x}; };
    std::map<std::tuple<u64, u64, Natural>, int> want, have;
    for (const auto& s : golden) ++want[key(s)];
    for (const auto& s : got) ++have[key(s)];
    for (const auto& [t, c] : want) {
        if (have.count(t)) {
            ++d.matched;
        } else {
            std::ostringstream m;
            m << "missing solution (" << std::get<0>(t) << "," << std::get<1>(t) << ","
              << std::get<2>(t).str() << ")";
            d.mismatches.push_back(m.str());
        }
    }
    for (const auto& [t, c] : have)
        if (!want.count(t)) {
            std::ostringstream m;
            m << "unlisted solution (" << std::get<0>(t) << "," << std::get<1>(t) << ","
              << std::get<2>(t).str() << ")";
            d.mismatches.push_back(m.str());
        }
    return d;
}

// Golden rows are filtered to the run's k and n ranges before applying errata,
// so a desk-scale run compares against exactly the in-range expectations.
inline DiffReport compare_survivors(const SieveReport& rep,
                                    const std::vector<std::pair<u64, u64>>& golden,
                                    const std::vector<ErrataEntry>& errata, bool errata_on) {
    DiffReport d{"survivors", 0, {}, {}};
    const auto in_range = [&](u64 k, u64 n) {
        return k >= rep.kmin && k <= rep.kmax && k != 4 && n >= 2 && n <= rep.n_max;
    };
    std::set<std::pair<u64, u64>> expected;
    for (const auto& [k, n] : golden)
        if (in_range(k, n)) expected.insert({k, n});
    if (errata_on) {
        for (const auto& e : errata) {
            if (e.table != "survivors") continue;
            const auto parse = [](const std::string& tok) {
                auto kn = csv::split(tok, ':');
                return std::pair<u64, u64>{std::stoull(kn.at(0)), std::stoull(kn.at(1))};
            };
            if (!e.printed.empty()) {
                const auto pair = parse(e.printed);
                if (in_range(pair.first, pair.second) && expected.erase(pair))
                    d.errata_applied.push_back("dropped printed pair " + e.printed + " (" + e.note +
                                               ")");
            }
            if (!e.corrected.empty()) {
                const auto pair = parse(e.corrected);
                if (in_range(pair.first, pair.second) && expected.insert(pair).second)
                    d.errata_applied.push_back("added missing pair " + e.corrected + " (" + e.note +
                                               ")");
            }
        }
    }
    std::set<std::pair<u64, u64>> got;
    for (const auto& p : rep.not_eliminated()) got.insert(p);
    for (const auto& p : expected) {
        if (got.count(p)) {
            ++d.matched;
        } else {
            std::ostringstream m;
            m << "(" << p.first << "," << p.second << "): expected to survive but was eliminated";
            d.mismatches.push_back(m.str());
        }
    }
    for (const auto& p : got)
        if (!expected.count(p)) {
            std::ostringstream m;
            m << "(" << p.first << "," << p.second << "): survived but is not an expected pair";
            d.mismatches.push_back(m.str());
        }
    return d;
}

inline void print_diff(std::ostream& os, const DiffReport& d) {
    os << "[" << d.table << "] " << (d.ok() ? "MATCH" : "MISMATCH") << " (" << d.matched
       << " matched";
    if (!d.errata_applied.empty()) os << ", " << d.errata_applied.size() << " errata applied";
    if (!d.mismatches.empty()) os << ", " << d.mismatches.size() << " mismatches";
    os << ")\n";
    for (const auto& e : d.errata_applied) os << "  errata: " << e << '\n';
    for (const auto& m : d.mismatches) os << "  mismatch: " << m << '\n';
}

}  // namespace stirnum
