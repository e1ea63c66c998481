// Batch front end: triangle queries, multiplicity scans, Lambert-W bounds,
// the diophantine searches and the Legendre sieve, with table/CSV/JSON output
// and golden-table comparison (exit 0 match, 1 mismatch, 2 usage error).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <stirnum/stirnum.hpp>

namespace {

using namespace stirnum;

struct OutputOpts {
    std::string format = "table";
    std::string out_path;
};

// Stream the artifact to --out or stdout.
class Sink {
  public:
    explicit Sink(const OutputOpts& o) {
        if (!o.out_path.empty()) {
            file_.open(o.out_path);
            if (!file_) throw std::runtime_error("cannot open output file: " + o.out_path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

StirlingKind kind_of(int k) {
    return k == 1 ? StirlingKind::FirstKind : StirlingKind::SecondKind;
}

PrimeSet resolve_primes(const std::string& source) {
    if (source == "builtin-paper") return builtin_primes_19();
    if (source == "builtin-first20") return builtin_primes_first20();
    return load_prime_file(source);
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_stirling(int kind, u64 n, std::optional<u64> k, const OutputOpts& oo) {
    Sink sink(oo);
    auto& os = sink.os();
    const auto sk = kind_of(kind);
    if (k) {
        const Natural v = stirling(n, *k, sk);
        if (oo.format == "json")
            emit_json(os, json{{"kind", kind}, {"n", n}, {"k", *k}, {"value", v.str()}});
        else if (oo.format == "csv")
            os << "kind,n,k,value\n" << kind << ',' << n << ',' << *k << ',' << v.str() << '\n';
        else
            os << v.str() << '\n';
        return 0;
    }
    const auto row = stirling_row(n, sk);
    if (oo.format == "json") {
        json vals = json::array();
        for (const auto& v : row.values) vals.push_back(v.str());
        emit_json(os, json{{"kind", kind}, {"n", n}, {"values", vals}});
    } else if (oo.format == "csv") {
        os << "kind,n,k,value\n";
        for (u64 i = 0; i < row.values.size(); ++i)
            os << kind << ',' << n << ',' << i << ',' << row.values[i].str() << '\n';
    } else {
        for (u64 i = 0; i < row.values.size(); ++i)
            os << n << ' ' << i << ' ' << row.values[i].str() << '\n';
    }
    return 0;
}

int cmd_scan(int kind, const std::string& lo_s, const std::string& hi_s, bool include_trivial,
             const std::string& cache_path, bool do_compare, const std::string& golden_dir,
             bool errata_on, const OutputOpts& oo) {
    const Natural lo(lo_s), hi(hi_s);
    const auto sk = kind_of(kind);
    const auto trivial = include_trivial ? TrivialValues::Include : TrivialValues::Exclude;

    std::optional<ScanSummary> summary;
    if (!cache_path.empty()) summary = load_scan_cache(cache_path, lo, hi, sk, trivial);
    if (!summary) {
        summary = scan_interval(lo, hi, sk, trivial);
        if (!cache_path.empty()) {
            std::ofstream cache(cache_path);
            if (!cache) throw std::runtime_error("cannot open cache file: " + cache_path);
            write_scan_cache(cache, *summary);
        }
    }

    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json") {
        emit_json(os, scan_to_json(*summary));
    } else if (oo.format == "csv") {
        write_scan_csv(os, *summary);
    } else {
        os << "kind " << kind << " scan [" << lo.str() << ", " << hi.str() << "]: "
           << summary->distinct_hits() << " distinct values\n";
        for (const auto& [a, occ] : summary->hits) {
            os << "  " << a.str();
            if (occ.empty() && a <= 1)
                os << "  (occurs in every row)";
            else {
                os << "  x" << occ.size() << "  at";
                for (const auto& o : occ) os << " (" << o.n << "," << o.k << ")";
            }
            os << '\n';
        }
    }

    if (!do_compare) return 0;
    const auto golden = load_golden_appendix(golden_dir, sk);
    std::vector<GoldenAppendixBlock> selected;
    for (const auto& b : golden)
        if (Natural(b.lo) >= lo && Natural(b.hi) <= hi) selected.push_back(b);
    if (selected.empty()) {
        std::cerr << "error: [" << lo.str() << ", " << hi.str()
                  << "] covers no whole golden block; use the block boundaries\n";
        return 2;
    }
    const auto diff =
        compare_appendix(*summary, selected, load_golden_errata(golden_dir), errata_on);
    print_diff(std::cerr, diff);
    return diff.ok() ? 0 : 1;
}

int cmd_multiplicity(int kind, const std::string& a_s, const OutputOpts& oo) {
    const auto rep = multiplicity(Natural(a_s), kind_of(kind));
    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json")
        emit_json(os, multiplicity_to_json(rep));
    else if (oo.format == "csv")
        write_occurrences_csv(os, {rep});
    else {
        os << "M_" << kind << "(" << rep.a.str() << ") = " << rep.count() << '\n';
        for (const auto& o : rep.occurrences) os << "  (" << o.n << "," << o.k << ")\n";
    }
    return 0;
}

int cmd_collisions(int kind, const std::string& hi_s, bool do_compare,
                   const std::string& golden_dir, const OutputOpts& oo) {
    const Natural hi(hi_s);
    const auto reps = find_collisions(hi, kind_of(kind));
    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json") {
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(multiplicity_to_json(r));
        emit_json(os, arr);
    } else if (oo.format == "csv") {
        write_occurrences_csv(os, reps);
    } else {
        os << "kind " << kind << ", a <= " << hi.str() << ": " << reps.size()
           << " repeated values\n";
        for (const auto& r : reps) {
            os << "  " << r.a.str() << "  x" << r.count() << "  at";
            for (const auto& o : r.occurrences) os << " (" << o.n << "," << o.k << ")";
            os << '\n';
        }
    }
    if (!do_compare) return 0;
    // both kinds participate in the golden table; compare only the scanned side
    auto golden = load_golden_collisions(golden_dir);
    std::erase_if(golden, [&](const GoldenOccurrence& g) {
        return g.kind != kind || g.a > hi;
    });
    const auto diff = compare_collisions(kind == 2 ? reps : std::vector<MultiplicityReport>{},
                                         kind == 1 ? reps : std::vector<MultiplicityReport>{},
                                         golden);
    print_diff(std::cerr, diff);
    return diff.ok() ? 0 : 1;
}

int cmd_bound(const std::string& a_s, const OutputOpts& oo) {
    const Natural a(a_s);
    const auto e = singmaster_bound(a);
    std::optional<double> cmp;
    if (a >= 16) cmp = asymptotic_comparator(a);
    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json")
        emit_json(os, bound_to_json(e, cmp));
    else if (oo.format == "csv")
        write_bound_csv(os, e, cmp);
    else {
        os.precision(15);
        os << "a = " << a.str() << "\nlog a = " << e.log_a << "\nW(log(a)/2) = " << e.w_value
           << "\nb limit = " << e.b_limit << "\nmultiplicity bound = " << e.bound << '\n';
        if (cmp) os << "asymptotic comparator = " << *cmp << '\n';
    }
    return 0;
}

int cmd_dio1(u64 n_max, const OutputOpts& oo) {
    const auto sols = solve_diof1(n_max);
    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json") {
        json arr = json::array();
        for (const auto& s : sols) arr.push_back({{"n", s.n}, {"m", s.m.str()}});
        emit_json(os, json{{"n_max", n_max}, {"solutions", arr}});
    } else if (oo.format == "csv") {
        write_diof1_csv(os, sols);
    } else {
        os << sols.size() << " solution(s) with 6 <= n <= " << n_max << '\n';
        for (const auto& s : sols) os << "  (n,m) = (" << s.n << ", " << s.m.str() << ")\n";
    }
    return 0;
}

int cmd_dio2(u64 n_max, const OutputOpts& oo) {
    const auto sols = solve_diof2(n_max);
    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json") {
        json arr = json::array();
        for (const auto& s : sols) arr.push_back({{"n", s.n}, {"m", s.m.str()}});
        emit_json(os, json{{"n_max", n_max}, {"solutions", arr}});
    } else if (oo.format == "csv") {
        write_diof2_csv(os, sols);
    } else {
        os << sols.size() << " factorial-triangular solution(s) with n <= " << n_max << '\n';
        for (const auto& s : sols) os << "  (n,m) = (" << s.n << ", " << s.m.str() << ")\n";
    }
    return 0;
}

int cmd_rn(u64 n_max, const OutputOpts& oo) {
    const auto rows = ramanujan_nagell(n_max);
    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"value", r.value.str()}});
        emit_json(os, json{{"n_max", n_max}, {"entries", arr}});
    } else if (oo.format == "csv") {
        write_rn_csv(os, rows);
    } else {
        os << rows.size() << " triangular value(s) of 2^n - 1 with n <= " << n_max << '\n';
        for (const auto& r : rows) os << "  n = " << r.n << ": " << r.value.str() << '\n';
    }
    return 0;
}

int cmd_polygonal(u64 kmin, u64 kmax, std::optional<std::string> x_s, u64 n_max,
                  const OutputOpts& oo) {
    Sink sink(oo);
    auto& os = sink.os();
    if (x_s) {
        if (kmin != kmax) throw std::invalid_argument("--x evaluates a single k");
        const Natural v = polygonal(kmin, Natural(*x_s));
        if (oo.format == "json")
            emit_json(os, json{{"k", kmin}, {"x", *x_s}, {"value", v.str()}});
        else if (oo.format == "csv")
            os << "k,x,value\n" << kmin << ',' << *x_s << ',' << v.str() << '\n';
        else
            os << v.str() << '\n';
        return 0;
    }
    std::vector<SolutionTriple> sols;
    u64 dropped = 0;
    for (u64 k = kmin; k <= kmax; ++k) {
        if (k == 4) continue;
        auto rep = solve_polygonal_direct(k, n_max);
        sols.insert(sols.end(), rep.solutions.begin(), rep.solutions.end());
        dropped += rep.dropped_unit_roots;
    }
    if (oo.format == "json") {
        json arr = json::array();
        for (const auto& s : sols)
            arr.push_back({{"k", s.k}, {"n", s.n}, {"x", s.x.str()}});
        emit_json(os, json{{"kmin", kmin},
                           {"kmax", kmax},
                           {"n_max", n_max},
                           {"dropped_unit_roots", dropped},
                           {"solutions", arr}});
    } else if (oo.format == "csv") {
        write_solutions_csv(os, sols);
    } else {
        os << sols.size() << " solution triple(s), k in [" << kmin << "," << kmax << "] \\ {4}, n <= "
           << n_max << '\n';
        for (const auto& s : sols)
            os << "  (k,n,x) = (" << s.k << "," << s.n << "," << s.x.str() << ")\n";
    }
    return 0;
}

int cmd_sieve(u64 kmin, u64 kmax, u64 n_max, const std::string& primes_source, unsigned jobs,
              bool second_stage, std::size_t second_stage_count, u64 direct_zone, bool all_rows,
              bool do_compare, const std::string& golden_dir, bool errata_on,
              const OutputOpts& oo) {
    const PrimeSet primes = resolve_primes(primes_source);
    SieveOptions opts;
    opts.jobs = jobs;
    opts.keep_eliminated = all_rows;
    opts.direct_zone_max = direct_zone;
    if (second_stage)
        opts.second_stage = second_stage_primes(second_stage_count, primes.primes.back());
    const auto rep = sieve_polygonal(kmin, kmax, n_max, primes, opts);

    Sink sink(oo);
    auto& os = sink.os();
    if (oo.format == "json") {
        emit_json(os, sieve_to_json(rep));
    } else if (oo.format == "csv") {
        write_sieve_csv(os, rep);
    } else {
        os << "sieve k in [" << kmin << "," << kmax << "] \\ {4}, 2 <= n <= " << n_max
           << ", primes " << primes.label << " (" << primes.primes.size() << ")\n";
        os << "eliminated " << rep.eliminated_count << " pair(s); the rest:\n";
        for (const auto& o : rep.outcomes) {
            if (o.disposition == Disposition::EliminatedByPrime) continue;
            os << "  (" << o.k << "," << o.n << ") " << disposition_name(o.disposition);
            if (o.disposition == Disposition::Solution) os << " x = " << o.x.str();
            os << '\n';
        }
        for (const auto& s : rep.second_stage) {
            os << "  second stage (" << s.k << "," << s.n << "): ";
            if (s.witness)
                os << "eliminated by " << s.witness << '\n';
            else
                os << "unresolved\n";
        }
    }
    if (!do_compare) return 0;
    const auto diff = compare_survivors(rep, load_golden_survivors(golden_dir),
                                        load_golden_errata(golden_dir), errata_on);
    print_diff(std::cerr, diff);
    return diff.ok() ? 0 : 1;
}

int cmd_verify_identities(u64 n_max, const OutputOpts& oo) {
    Sink sink(oo);
    auto& os = sink.os();
    u64 checked = 0, failed = 0;
    for (u64 n = 2; n <= n_max; ++n)
        for (u64 k = 1; k < n; ++k)
            for (auto kind : {StirlingKind::SecondKind, StirlingKind::FirstKind}) {
                ++checked;
                if (!verify_identity(n, k, kind)) {
                    ++failed;
                    os << "FAILED: kind " << static_cast<int>(kind) << " n=" << n << " k=" << k
                       << '\n';
                }
            }
    os << "checked " << checked << " identity instance(s) up to n = " << n_max << ", " << failed
       << " failure(s)\n";
    return failed == 0 ? 0 : 1;
}

int cmd_compare(const std::string& table, const std::string& golden_dir, bool errata_on,
                unsigned jobs) {
    std::vector<DiffReport> diffs;
    const auto errata = load_golden_errata(golden_dir);

    const auto need_scans = table == "table1" || table == "all";
    if (need_scans || table == "appendix-second" || table == "appendix-first") {
        std::optional<ScanSummary> s2, s1;
        if (need_scans || table == "appendix-second")
            s2 = scan_interval(0, 100000, StirlingKind::SecondKind, TrivialValues::Include);
        if (need_scans || table == "appendix-first")
            s1 = scan_interval(0, 100000, StirlingKind::FirstKind, TrivialValues::Include);
        if (need_scans)
            diffs.push_back(compare_table1(*s2, *s1, load_golden_table1(golden_dir), errata,
                                           errata_on));
        if (table == "appendix-second" || table == "all")
            diffs.push_back(compare_appendix(
                *s2, load_golden_appendix(golden_dir, StirlingKind::SecondKind), errata, errata_on));
        if (table == "appendix-first" || table == "all")
            diffs.push_back(compare_appendix(
                *s1, load_golden_appendix(golden_dir, StirlingKind::FirstKind), errata, errata_on));
    }
    if (table == "collisions" || table == "all") {
        diffs.push_back(compare_collisions(find_collisions(100000, StirlingKind::SecondKind),
                                           find_collisions(100000, StirlingKind::FirstKind),
                                           load_golden_collisions(golden_dir)));
    }
    if (table == "theorem3-solutions" || table == "all") {
        std::vector<SolutionTriple> sols;
        for (u64 k = 3; k <= 50; ++k) {
            if (k == 4) continue;
            auto rep = solve_polygonal_direct(k, 8);
            sols.insert(sols.end(), rep.solutions.begin(), rep.solutions.end());
        }
        diffs.push_back(compare_solutions(sols, load_golden_solutions(golden_dir)));
    }
    if (table == "survivors" || table == "all") {
        SieveOptions opts;
        opts.jobs = jobs;
        const auto rep = sieve_polygonal(3, 50, 100000, builtin_primes_19(), opts);
        diffs.push_back(
            compare_survivors(rep, load_golden_survivors(golden_dir), errata, errata_on));
    }

    bool ok = true;
    for (const auto& d : diffs) {
        print_diff(std::cout, d);
        ok = ok && d.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Stirling-triangle multiplicity scans, Lambert-W multiplicity bounds, and "
                 "factorial-polygonal diophantine searches"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string golden_dir = "data/golden";

    // stirling
    {
        auto* c = app.add_subcommand("stirling", "evaluate a Stirling number or a whole row");
        auto kind = std::make_shared<int>(2);
        auto n = std::make_shared<u64>(0);
        auto k = std::make_shared<std::optional<u64>>();
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--kind", *kind)->check(CLI::IsMember({1, 2}))->required();
        c->add_option("--n", *n)->required();
        c->add_option("--k", *k);
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_stirling(*kind, *n, *k, *oo); });
    }
    // scan
    {
        auto* c = app.add_subcommand("scan", "collect every triangle value inside [lo, hi]");
        auto kind = std::make_shared<int>(2);
        auto lo = std::make_shared<std::string>("2");
        auto hi = std::make_shared<std::string>();
        auto trivial = std::make_shared<bool>(false);
        auto cache = std::make_shared<std::string>();
        auto compare = std::make_shared<std::string>();
        auto errata = std::make_shared<std::string>("on");
        auto gdir = std::make_shared<std::string>(golden_dir);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--kind", *kind)->check(CLI::IsMember({1, 2}))->required();
        c->add_option("--lo", *lo)->capture_default_str();
        c->add_option("--hi", *hi)->required();
        c->add_flag("--include-trivial", *trivial,
                    "record 0 and 1 as single symbolic hits (required when lo < 2)");
        c->add_option("--cache", *cache, "occurrence cache file to reuse or create");
        c->add_option("--compare", *compare)->check(CLI::IsMember({"golden"}));
        c->add_option("--errata", *errata)->check(CLI::IsMember({"on", "off"}));
        c->add_option("--golden-dir", *gdir)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] {
            exit_code = cmd_scan(*kind, *lo, *hi, *trivial, *cache, *compare == "golden", *gdir,
                                 *errata == "on", *oo);
        });
    }
    // multiplicity
    {
        auto* c = app.add_subcommand("multiplicity", "count the occurrences of one value");
        auto kind = std::make_shared<int>(2);
        auto a = std::make_shared<std::string>();
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--kind", *kind)->check(CLI::IsMember({1, 2}))->required();
        c->add_option("--a", *a)->required();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_multiplicity(*kind, *a, *oo); });
    }
    // collisions
    {
        auto* c = app.add_subcommand("collisions", "values appearing at least twice up to hi");
        auto kind = std::make_shared<int>(2);
        auto hi = std::make_shared<std::string>("100000");
        auto compare = std::make_shared<std::string>();
        auto gdir = std::make_shared<std::string>(golden_dir);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--kind", *kind)->check(CLI::IsMember({1, 2}))->required();
        c->add_option("--hi", *hi)->capture_default_str();
        c->add_option("--compare", *compare)->check(CLI::IsMember({"golden"}));
        c->add_option("--golden-dir", *gdir)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] {
            exit_code = cmd_collisions(*kind, *hi, *compare == "golden", *gdir, *oo);
        });
    }
    // bound
    {
        auto* c = app.add_subcommand("bound", "Lambert-W multiplicity bound for a target");
        auto a = std::make_shared<std::string>();
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--a", *a)->required();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_bound(*a, *oo); });
    }
    // dio1
    {
        auto* c = app.add_subcommand("dio1", "near-diagonal/triangular equation search");
        auto nmax = std::make_shared<u64>(100000);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--nmax", *nmax)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_dio1(*nmax, *oo); });
    }
    // dio2
    {
        auto* c = app.add_subcommand("dio2", "factorial-triangular equation search");
        auto nmax = std::make_shared<u64>(1000);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--nmax", *nmax)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_dio2(*nmax, *oo); });
    }
    // polygonal
    {
        auto* c = app.add_subcommand("polygonal",
                                     "evaluate P_k(x) or solve n! = P_k(x) over a k range");
        auto k = std::make_shared<u64>(0);
        auto kmin = std::make_shared<u64>(0);
        auto kmax = std::make_shared<u64>(0);
        auto x = std::make_shared<std::optional<std::string>>();
        auto nmax = std::make_shared<u64>(8);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--k", *k, "single gonality (sets kmin = kmax)");
        c->add_option("--kmin", *kmin);
        c->add_option("--kmax", *kmax);
        c->add_option("--x", *x, "evaluate P_k(x) instead of solving");
        c->add_option("--nmax", *nmax)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] {
            u64 lo = *kmin, hi = *kmax;
            if (*k != 0) lo = hi = *k;
            if (lo == 0 || hi == 0)
                throw CLI::ValidationError("polygonal", "pass --k or both --kmin and --kmax");
            exit_code = cmd_polygonal(lo, hi, *x, *nmax, *oo);
        });
    }
    // sieve
    {
        auto* c = app.add_subcommand("sieve", "Legendre sieve for n! = P_k(x)");
        auto kmin = std::make_shared<u64>(3);
        auto kmax = std::make_shared<u64>(50);
        auto nmax = std::make_shared<u64>(10000);
        auto primes = std::make_shared<std::string>("builtin-paper");
        auto jobs = std::make_shared<unsigned>(1);
        auto second = std::make_shared<bool>(false);
        auto second_count = std::make_shared<std::size_t>(12);
        auto zone = std::make_shared<u64>(8);
        auto all_rows = std::make_shared<bool>(false);
        auto compare = std::make_shared<std::string>();
        auto errata = std::make_shared<std::string>("on");
        auto gdir = std::make_shared<std::string>(golden_dir);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--kmin", *kmin)->capture_default_str();
        c->add_option("--kmax", *kmax)->capture_default_str();
        c->add_option("--nmax", *nmax)->capture_default_str();
        c->add_option("--primes", *primes, "builtin-paper, builtin-first20, or a file path")
            ->capture_default_str();
        c->add_option("--jobs", *jobs)->capture_default_str();
        c->add_flag("--second-stage", *second,
                    "re-test survivors against primes above the sieve set");
        c->add_option("--second-stage-count", *second_count)->capture_default_str();
        c->add_option("--direct-zone", *zone, "largest n resolved exactly when prime-free")
            ->capture_default_str();
        c->add_flag("--all-rows", *all_rows, "emit eliminated pairs too");
        c->add_option("--compare", *compare)->check(CLI::IsMember({"golden"}));
        c->add_option("--errata", *errata)->check(CLI::IsMember({"on", "off"}));
        c->add_option("--golden-dir", *gdir)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] {
            exit_code = cmd_sieve(*kmin, *kmax, *nmax, *primes, *jobs, *second, *second_count,
                                  *zone, *all_rows, *compare == "golden", *gdir, *errata == "on",
                                  *oo);
        });
    }
    // rn
    {
        auto* c = app.add_subcommand("rn", "triangular numbers of the form 2^n - 1");
        auto nmax = std::make_shared<u64>(1000);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--nmax", *nmax)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_rn(*nmax, *oo); });
    }
    // verify-identities
    {
        auto* c = app.add_subcommand("verify-identities",
                                     "check the associated-Stirling expansion identities");
        auto nmax = std::make_shared<u64>(30);
        auto oo = std::make_shared<OutputOpts>();
        c->add_option("--nmax", *nmax)->capture_default_str();
        add_output_opts(c, *oo);
        c->callback([=, &exit_code] { exit_code = cmd_verify_identities(*nmax, *oo); });
    }
    // compare
    {
        auto* c = app.add_subcommand("compare", "recompute a golden table and diff it");
        auto table = std::make_shared<std::string>();
        auto errata = std::make_shared<std::string>("on");
        auto gdir = std::make_shared<std::string>(golden_dir);
        auto jobs = std::make_shared<unsigned>(1);
        c->add_option("--table", *table)
            ->check(CLI::IsMember({"table1", "appendix-second", "appendix-first", "collisions",
                                   "theorem3-solutions", "survivors", "all"}))
            ->required();
        c->add_option("--errata", *errata)->check(CLI::IsMember({"on", "off"}));
        c->add_option("--golden-dir", *gdir)->capture_default_str();
        c->add_option("--jobs", *jobs)->capture_default_str();
        c->callback([=, &exit_code] {
            exit_code = cmd_compare(*table, *gdir, *errata == "on", *jobs);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
