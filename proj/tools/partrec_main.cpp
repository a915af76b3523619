#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "partrec/analytic.hpp"
#include "partrec/cache.hpp"
#include "partrec/errors.hpp"
#include "partrec/fixtures.hpp"
#include "partrec/json_io.hpp"
#include "partrec/modular_forms.hpp"
#include "partrec/partitions.hpp"
#include "partrec/rankin_cohen.hpp"

using nlohmann::json;
using namespace partrec;

namespace {

enum class Format { human, json, tsv };

struct GlobalOpts {
    Format format = Format::human;
    Cache cache;
};

PartitionTable cached_table(const Cache& cache, const std::string& kind, unsigned t,
                            std::size_t n_max) {
    const std::string key =
        "ptable/" + kind + "/t=" + std::to_string(t) + "/N=" + std::to_string(n_max);
    if (auto j = cache.load(key)) return table_from_json(*j);
    PartitionTable table = [&] {
        if (kind == "ordinary") return PartitionTable::ordinary(n_max);
        if (kind == "colored") return PartitionTable::colored(t, n_max);
        if (kind == "regular") return PartitionTable::regular(t, n_max);
        throw std::invalid_argument("unknown kind: " + kind);
    }();
    cache.store(key, table_to_json(table));
    return table;
}

EigenformTable cached_eigenforms(const Cache& cache, unsigned weight, std::size_t order,
                                 long prec) {
    const std::string key = "eigenforms/weight=" + std::to_string(weight) +
                            "/N=" + std::to_string(order) + "/prec=" + std::to_string(prec);
    if (auto j = cache.load(key)) return eigentable_from_json(*j);
    EigenformTable t = eigenforms_numeric(weight, order, prec);
    cache.store(key, eigentable_to_json(t));
    return t;
}

void emit(const GlobalOpts& opts, const json& payload,
          const std::function<void()>& human_printer) {
    if (opts.format == Format::json) {
        std::cout << payload.dump(2) << "\n";
    } else if (opts.format == Format::tsv) {
        // one row per element for arrays, key<TAB>value for objects
        if (payload.is_array()) {
            for (const auto& row : payload) {
                bool first = true;
                for (const auto& [k, v] : row.items()) {
                    (void)k;
                    if (!first) std::cout << '\t';
                    first = false;
                    std::cout << (v.is_string() ? v.get<std::string>() : v.dump());
                }
                std::cout << '\n';
            }
        } else {
            for (const auto& [k, v] : payload.items())
                std::cout << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump())
                          << '\n';
        }
    } else {
        human_printer();
    }
}

int run_pcount(const GlobalOpts& opts, const std::string& kind, unsigned t, std::size_t n_max) {
    unsigned eff_t = t;
    std::string eff_kind = kind;
    if (kind == "ordinary") eff_t = 1;
    if (kind == "colored" && eff_t == 1) eff_kind = "ordinary";  // 1-colored is p(n)
    if (eff_kind == "colored" && eff_t != 2 && eff_t != 3)
        throw CLI::ValidationError("pcount", "colored recurrences cover t = 2 and t = 3");
    if (kind == "regular" && eff_t < 2)
        throw CLI::ValidationError("pcount", "regular partitions need t >= 2");

    const PartitionTable table = cached_table(opts.cache, eff_kind, eff_t, n_max);
    json rows = json::array();
    bool all_match = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Int rec;
        if (eff_kind == "ordinary")
            rec = euler_recurrence(n, table);
        else if (eff_kind == "colored")
            rec = (eff_t == 2) ? p2_recurrence(n, table) : p3_recurrence_v0(n, table);
        else
            rec = pt_regular_recurrence(eff_t, n, table);
        const bool match = (rec == table.at(static_cast<long long>(n)));
        all_match = all_match && match;
        rows.push_back(json{{"n", n},
                            {"oracle", table.at(static_cast<long long>(n)).get_str()},
                            {"recurrence", rec.get_str()},
                            {"match", match}});
    }
    emit(opts, rows, [&] {
        std::cout << "n\toracle\trecurrence\tmatch\n";
        for (const auto& r : rows)
            std::cout << r["n"] << '\t' << r["oracle"].get<std::string>() << '\t'
                      << r["recurrence"].get<std::string>() << '\t'
                      << (r["match"].get<bool>() ? "ok" : "MISMATCH") << '\n';
    });
    return all_match ? 0 : 1;
}

int run_tables(const GlobalOpts& opts) {
    json rows = json::array();
    bool all_match = true;
    for (const auto& e : fixtures::kAlphaOnly) {
        const Rat a = alpha(e.v);
        const bool match = (a == rat_from_string(e.alpha));
        all_match = all_match && match;
        rows.push_back(json{{"v", e.v},
                            {"alpha", to_string(a)},
                            {"beta", nullptr},
                            {"match", match}});
    }
    for (const auto& e : fixtures::kAlphaBeta) {
        const Rat a = alpha(e.v);
        const Rat b = beta(e.v);
        const bool match =
            (a == rat_from_string(e.alpha)) && (b == rat_from_string(e.beta));
        all_match = all_match && match;
        rows.push_back(json{{"v", e.v},
                            {"alpha", to_string(a)},
                            {"beta", to_string(b)},
                            {"match", match}});
    }
    emit(opts, rows, [&] {
        std::cout << "v\talpha\tbeta\tmatch\n";
        for (const auto& r : rows)
            std::cout << r["v"] << '\t' << r["alpha"].get<std::string>() << '\t'
                      << (r["beta"].is_null() ? std::string("-")
                                              : r["beta"].get<std::string>())
                      << '\t' << (r["match"].get<bool>() ? "ok" : "MISMATCH") << '\n';
    });
    return all_match ? 0 : 1;
}

int run_verify(const GlobalOpts& opts, const std::string& theorem, unsigned v, unsigned t,
               std::size_t n_max, const TruncationParams& params) {
    json report;
    bool pass = false;
    if (theorem == "t1" || theorem == "col3v0" || theorem == "t4") {
        const unsigned eff_t = (theorem == "t1") ? 2 : (theorem == "col3v0") ? 3 : t;
        const std::string kind = (theorem == "t4") ? "regular" : "colored";
        const PartitionTable table = cached_table(opts.cache, kind, eff_t, n_max);
        long long first_mismatch = -1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Int rec;
            if (theorem == "t1")
                rec = p2_recurrence(n, table);
            else if (theorem == "col3v0")
                rec = p3_recurrence_v0(n, table);
            else
                rec = pt_regular_recurrence(eff_t, n, table);
            if (rec != table.at(static_cast<long long>(n))) {
                first_mismatch = static_cast<long long>(n);
                break;
            }
        }
        pass = (first_mismatch < 0);
        report = json{{"theorem", theorem},
                      {"t", eff_t},
                      {"n_max", n_max},
                      {"status", pass ? "pass" : "fail"}};
        report["first_mismatch"] = pass ? json(nullptr) : json(first_mismatch);
    } else if (theorem == "t2") {
        const PartitionTable p3 = cached_table(opts.cache, "colored", 3, n_max);
        const Theorem2Report rep = verify_theorem2(v, n_max, p3);
        pass = rep.ok;
        report = theorem2_report_to_json(rep);
        report["theorem"] = "t2";
    } else if (theorem == "t3") {
        const PartitionTable p3 = cached_table(opts.cache, "colored", 3, n_max);
        const Theorem3Report rep = verify_theorem3(v, static_cast<unsigned>(n_max), params, p3);
        pass = rep.below_envelope;
        report = theorem3_report_to_json(rep);
        report["theorem"] = "t3";
    } else {
        throw CLI::ValidationError("verify", "theorem must be one of t1|col3v0|t2|t3|t4");
    }
    emit(opts, report, [&] { std::cout << report.dump(2) << "\n"; });
    return pass ? 0 : 1;
}

int run_dirichlet(const GlobalOpts& opts, unsigned v, const TruncationParams& params) {
    if (!(v == 6 || v >= 8))
        throw CLI::ValidationError("dirichlet", "v must be 6 or >= 8");
    const unsigned long long max_odd = (params.N % 2 == 1) ? params.N : params.N - 1;
    const std::size_t order = static_cast<std::size_t>((max_odd * max_odd - 1) / 8);
    const EigenformTable table = cached_eigenforms(opts.cache, 2 * v, order, params.prec);
    json rows = json::array();
    for (unsigned i = 0; i < table.dim; ++i) {
        const auto& f = table.forms[i];
        const auto norm = petersson_norm(f, 2 * v, params.prec);
        const auto ws = weighted_sum_Df(v, f, norm.value, params);
        rows.push_back(json{{"form", i},
                            {"a2", f.coeff(2, params.prec).to_string(15)},
                            {"weighted_sum", ws.value.to_string(12)},
                            {"tail_bound", ws.tail_bound.to_string(5)},
                            {"norm", norm.value.to_string(20)}});
    }
    emit(opts, rows, [&] {
        std::cout << "form\ta2\tweighted_sum\ttail_bound\tnorm\n";
        for (const auto& r : rows)
            std::cout << r["form"] << '\t' << r["a2"].get<std::string>() << '\t'
                      << r["weighted_sum"].get<std::string>() << '\t'
                      << r["tail_bound"].get<std::string>() << '\t'
                      << r["norm"].get<std::string>() << '\n';
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and high-precision recurrences for colored and regular partitions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts opts;
    bool as_json = false, as_tsv = false;
    std::string cache_dir;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_flag("--tsv", as_tsv, "emit tab-separated rows");
    app.add_option("--cache-dir", cache_dir,
                   "cache directory (default: $PARTREC_CACHE_DIR if set)");

    auto* pcount = app.add_subcommand("pcount", "partition counts: oracle vs recurrence");
    std::string kind = "ordinary";
    unsigned t = 2;
    std::size_t n_max = 20;
    pcount->add_option("--kind", kind, "ordinary|colored|regular")
        ->check(CLI::IsMember({"ordinary", "colored", "regular"}));
    pcount->add_option("--t", t, "number of colors / regularity modulus");
    pcount->add_option("--n-max", n_max, "largest n");

    auto* tables = app.add_subcommand("tables", "alpha_v and beta_v against reference values");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string theorem;
    unsigned ver_v = 6;
    unsigned ver_t = 2;
    std::size_t ver_n_max = 0;
    TruncationParams params;
    verify->add_option("--theorem", theorem, "t1|col3v0|t2|t3|t4")->required();
    verify->add_option("--v", ver_v, "bracket index v (t2/t3)");
    verify->add_option("--t", ver_t, "regularity modulus (t4)");
    verify->add_option("--n-max", ver_n_max, "sweep bound (defaults per theorem)");
    verify->add_option("--M", params.M, "m-sum cutoff (t3)");
    verify->add_option("--N", params.N, "Dirichlet sum cutoff (t3)");
    verify->add_option("--prec", params.prec, "working precision in digits (t3)");

    auto* dirichlet = app.add_subcommand("dirichlet", "truncated weighted Dirichlet sums");
    unsigned dir_v = 6;
    TruncationParams dir_params;
    dirichlet->add_option("--v", dir_v, "bracket index v")->required();
    dirichlet->add_option("--M", dir_params.M, "m-sum cutoff");
    dirichlet->add_option("--N", dir_params.N, "Dirichlet sum cutoff");
    dirichlet->add_option("--prec", dir_params.prec, "working precision in digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    opts.format = as_json ? Format::json : as_tsv ? Format::tsv : Format::human;
    if (cache_dir.empty())
        if (const char* env = std::getenv("PARTREC_CACHE_DIR")) cache_dir = env;
    if (!cache_dir.empty()) opts.cache = Cache(cache_dir);

    try {
        if (pcount->parsed()) return run_pcount(opts, kind, t, n_max);
        if (tables->parsed()) return run_tables(opts);
        if (verify->parsed()) {
            if (ver_n_max == 0)
                ver_n_max = (theorem == "t2") ? 500 : (theorem == "t3") ? 100 : 10000;
            return run_verify(opts, theorem, ver_v, ver_t, ver_n_max, params);
        }
        if (dirichlet->parsed()) return run_dirichlet(opts, dir_v, dir_params);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precision_infeasible& e) {
        std::cerr << "precision infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
