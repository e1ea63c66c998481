// Acceptance suite: every release gate in one binary, one PASS/FAIL line per
// criterion. Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <stirnum/stirnum.hpp>

#include "oracles.hpp"

using namespace stirnum;
using Clock = std::chrono::steady_clock;

namespace {

const std::string golden = STIRNUM_GOLDEN_DIR;
const std::string cli = STIRNUM_CLI_PATH;

int failures = 0;

void report(int num, const std::string& title, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << num << ": " << title;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

}  // namespace

int main() {
    const auto errata = load_golden_errata(golden);

    // ---- criterion 1: Table 1 reproduction -------------------------------
    const auto t1_start = Clock::now();
    const auto scan2 = scan_interval(0, 100000, StirlingKind::SecondKind, TrivialValues::Include);
    const auto scan1 = scan_interval(0, 100000, StirlingKind::FirstKind, TrivialValues::Include);
    const double scan_secs = secs_since(t1_start);
    {
        const auto diff = compare_table1(scan2, scan1, load_golden_table1(golden), errata, true);
        u64 csv_rows = 0;
        {
            namespace fs = std::filesystem;
            const auto tmp = (fs::temp_directory_path() / "stirnum_accept_scan.csv").string();
            const std::string command = cli + " scan --kind=2 --lo=0 --hi=9999 --include-trivial" +
                                        " --format=csv --out=" + tmp + " >/dev/null 2>&1";
            if (std::system(command.c_str()) == 0) {
                std::ifstream in(tmp);
                std::string line;
                std::getline(in, line);  // header
                while (std::getline(in, line))
                    if (!line.empty()) ++csv_rows;
            }
            std::remove(tmp.c_str());
        }
        std::ostringstream detail;
        detail << "20 cells, " << diff.errata_applied.size()
               << " via documented errata (60000-69999 kind 2: 32->31; 10000-19999 kind 1: "
                  "63->65), CLI csv rows " << csv_rows << ", " << fmt_secs(scan_secs);
        report(1, "Table 1 distinct-hit counts across ten intervals, both kinds",
               diff.ok() && diff.errata_applied.size() == 2 && csv_rows == 176 && scan_secs < 60.0,
               detail.str());
    }

    // ---- criterion 2: collision sets --------------------------------------
    {
        const auto c2 = find_collisions(100000, StirlingKind::SecondKind);
        const auto c1 = find_collisions(100000, StirlingKind::FirstKind);
        const auto diff = compare_collisions(c2, c1, load_golden_collisions(golden));
        std::ostringstream detail;
        detail << "second kind {15, 4095, 66066}, first kind {6, 120}, all positions exact";
        report(2, "collision sets and positions up to 100000", diff.ok() && c2.size() == 3 &&
               c1.size() == 2, detail.str());
    }

    // ---- criterion 3: bound validity ---------------------------------------
    {
        bool ok = true;
        u64 checked = 0;
        std::string first_fail;
        for (const auto* scan : {&scan2, &scan1}) {
            for (const auto& [a, occ] : scan->hits) {
                if (a < 2) continue;  // symbolic 0/1
                const auto e = singmaster_bound(a);
                const double residual = std::abs(e.w_value * std::exp(e.w_value) - e.log_a / 2);
                ++checked;
                if (double(occ.size()) > e.bound ||
                    residual > 1e-12 * std::max(1.0, e.log_a / 2)) {
                    ok = false;
                    if (first_fail.empty()) first_fail = a.str();
                }
            }
        }
        std::ostringstream detail;
        detail << checked << " targets with M_i(a) > 0 checked against 2 + 2 ln(a)/W(ln(a)/2)";
        if (!first_fail.empty()) detail << ", first failure at a = " << first_fail;
        report(3, "Lambert-W bound dominates every observed multiplicity", ok, detail.str());
    }

    // ---- criterion 4: near-diagonal/triangular equation --------------------
    {
        const auto t0 = Clock::now();
        const auto sols = solve_diof1(100000);
        const double el = secs_since(t0);
        const bool ok = sols.size() == 1 && sols[0].n == 14 && sols[0].m == 364 && el < 5.0;
        report(4, "unique solution (14, 364) up to n = 100000", ok,
               std::to_string(sols.size()) + " solution(s), " + fmt_secs(el));
    }

    // ---- criterion 5: direct-zone solution triples -------------------------
    {
        std::vector<SolutionTriple> sols;
        for (u64 k = 3; k <= 50; ++k) {
            if (k == 4) continue;
            const auto rep = solve_polygonal_direct(k, 8);
            sols.insert(sols.end(), rep.solutions.begin(), rep.solutions.end());
        }
        const auto diff = compare_solutions(sols, load_golden_solutions(golden));
        report(5, "direct zone yields exactly the seven solution triples",
               diff.ok() && sols.size() == 7,
               "(3,3,3) (3,5,15) (6,3,2) (6,5,8) (9,4,3) (24,4,2) (41,5,3)");
    }

    // ---- criterion 6: sieve at full scale ---------------------------------
    SieveReport full_run;
    {
        const auto t0 = Clock::now();
        SieveOptions opts;
        opts.second_stage = second_stage_primes(12);
        full_run = sieve_polygonal(3, 50, 100000, builtin_primes_19(), opts);
        const double big_el = secs_since(t0);

        const auto diff = compare_survivors(full_run, load_golden_survivors(golden), errata, true);
        const auto not_elim = full_run.not_eliminated();
        const std::set<std::pair<u64, u64>> got(not_elim.begin(), not_elim.end());
        const bool reproduced_pairs = got.count({5, 54545}) && got.count({12, 93137});

        const auto t1 = Clock::now();
        const auto desk = sieve_polygonal(3, 50, 10000, builtin_primes_19(), {});
        const double desk_el = secs_since(t1);
        const auto desk_diff =
            compare_survivors(desk, load_golden_survivors(golden), errata, true);
        const bool desk_ok = desk_diff.ok() && desk_diff.matched == 17 &&
                             desk_diff.errata_applied.empty() && desk_el < 30.0;

        std::ostringstream detail;
        detail << "n <= 1e5 in " << fmt_secs(big_el) << " single-threaded, survivor set matches "
               << "with " << diff.errata_applied.size()
               << " documented corrections (list: 5 printed pairs eliminated by in-set prime "
                  "100019; 7 verified pairs added); desk scale n <= 1e4 in "
               << fmt_secs(desk_el) << " reproduces the 17 small pairs verbatim";
        report(6, "Legendre sieve at full scale and desk scale", diff.ok() && reproduced_pairs &&
               desk_ok && big_el < 600.0, detail.str());
    }

    // ---- criterion 7: witness symbols and second stage ---------------------
    {
        struct Witness { u64 k, n, p; };
        // the six displayed symbols that verify; the seventh displayed one,
        // (17,12797 | 100279), actually evaluates to +1 and is covered by the
        // errata checks below
        const std::vector<Witness> displayed{{5, 54545, 100279},  {12, 93137, 100279},
                                             {28, 78842, 100297}, {33, 53361, 100279},
                                             {35, 92666, 100313}, {38, 11846, 100291}};
        bool six_ok = true;
        for (const auto& w : displayed) six_ok = six_ok && verify_witness(w.k, w.n, w.p) == -1;

        const bool seventh_documented =
            verify_witness(17, 12797, 100279) == 1 && verify_witness(17, 12797, 100019) == -1 &&
            verify_witness(17, 12797, 100291) == -1;

        // each printed large pair is impossible: eliminated in-set or beyond
        bool printeds_die = true;
        for (const auto& [k, n] : {std::pair<u64, u64>{17, 12797}, {28, 78842}, {33, 53361},
                                   {35, 92666}, {38, 11846}})
            printeds_die = printeds_die && verify_witness(k, n, 100019) == -1;

        // the second-stage pass retires every actual large survivor
        bool stage_ok = !full_run.second_stage.empty();
        u64 retired = 0;
        for (const auto& s : full_run.second_stage) {
            stage_ok = stage_ok && s.witness != 0;
            ++retired;
        }
        std::ostringstream detail;
        detail << "6 displayed symbols verify to -1; displayed (17,12797 | 100279) is +1, with "
                  "corrected witnesses 100019 and 100291 (documented erratum); second stage "
                  "retires all "
               << retired << " large survivors";
        report(7, "witness symbols and second-stage elimination",
               six_ok && seventh_documented && printeds_die && stage_ok, detail.str());
    }

    // ---- criterion 8: factorial-triangular and Ramanujan-Nagell ------------
    {
        const auto t0 = Clock::now();
        const auto d2 = solve_diof2(1000);
        const auto rn = ramanujan_nagell(1000);
        const double el = secs_since(t0);
        const bool d2_ok = d2.size() == 3 && d2[0] == Diof2Solution{1, 2} &&
                           d2[1] == Diof2Solution{3, 4} && d2[2] == Diof2Solution{5, 16};
        std::set<Natural> rn_values;
        for (const auto& r : rn) rn_values.insert(r.value);
        const bool rn_ok = rn_values == std::set<Natural>{0, 1, 3, 15, 4095};
        report(8, "factorial-triangular pairs and Ramanujan-Nagell values to n = 1000",
               d2_ok && rn_ok && el < 10.0,
               "{(1,2),(3,4),(5,16)} and {0,1,3,15,4095}, " + fmt_secs(el));
    }

    // ---- criterion 9: identity suites ---------------------------------------
    {
        bool identities = true;
        for (u64 n = 2; n <= 30 && identities; ++n)
            for (u64 k = 1; k < n && identities; ++k)
                for (auto kind : {StirlingKind::SecondKind, StirlingKind::FirstKind})
                    identities = identities && verify_identity(n, k, kind);

        bool oracles = true;
        for (unsigned n = 0; n <= 9 && oracles; ++n) {
            const auto parts = oracle::partition_counts(n);
            const auto cycles = oracle::cycle_counts(n);
            for (unsigned k = 0; k <= n; ++k)
                oracles = oracles && stirling2(n, k) == parts[k] && stirling1(n, k) == cycles[k];
        }

        bool row_sums = true;
        {
            std::vector<Natural> row{Natural(1)};
            Natural fact = 1;
            for (u64 n = 1; n <= 200; ++n) {
                advance_row(row, StirlingKind::FirstKind);
                fact *= n;
                Natural sum = 0;
                for (const auto& v : row) sum += v;
                row_sums = row_sums && sum == fact;
            }
        }

        bool monotone = true;
        for (auto kind : {StirlingKind::SecondKind, StirlingKind::FirstKind}) {
            std::vector<std::vector<Natural>> tri{{Natural(1)}};
            std::vector<Natural> row{Natural(1)};
            for (u64 n = 1; n <= 122; ++n) {
                advance_row(row, kind);
                tri.push_back(row);
            }
            for (u64 i = 1; i <= 60 && monotone; ++i)
                for (u64 j = 1; j <= 60; ++j)
                    monotone = monotone && tri[i + j][i] >= tri[i + j - 1][i - 1] &&
                               tri[i + j][i] >= tri[i + j - 1][i];
            for (u64 n = 1; n <= 60; ++n) monotone = monotone && tri[2 * n][n] < tri[2 * n + 2][n + 1];
        }

        report(9, "identity suites, enumeration oracles, row sums, monotonicity",
               identities && oracles && row_sums && monotone,
               "expansions to n = 30 both kinds; enumeration to n = 9; row sums to 200; "
               "monotonicity to 60");
    }

    // ---- criterion 10: appendix golden comparison ---------------------------
    {
        const auto d2_on =
            compare_appendix(scan2, load_golden_appendix(golden, StirlingKind::SecondKind), errata, true);
        const auto d1_on =
            compare_appendix(scan1, load_golden_appendix(golden, StirlingKind::FirstKind), errata, true);
        const auto d2_off =
            compare_appendix(scan2, load_golden_appendix(golden, StirlingKind::SecondKind), errata, false);
        const bool ok = d2_on.ok() && d1_on.ok() && d2_on.errata_applied.size() == 1 &&
                        d1_on.errata_applied.empty() && !d2_off.ok() &&
                        d2_off.mismatches.size() == 2;  // 31 unmatched + 60031 unlisted
        report(10, "appendix value lists match with the 0031 -> 60031 erratum", ok,
               "all 20 blocks, duplicates preserved; errata off fails as it must");
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
