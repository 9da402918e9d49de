// frob: exact computation of p-Frobenius numbers, p-genus, p-Sylvester
// sums, power sums and weighted power sums for numerical semigroups, with
// closed forms for arithmetic triples (a, a+d, a+2d), a generic p-Apery
// engine, a brute-force denumerant oracle, and cross-validation between
// the three paths.

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/apery.hpp"
#include "frob/closed_forms.hpp"
#include "frob/denumerant.hpp"
#include "frob/instance.hpp"
#include "frob/numeric.hpp"

using nlohmann::json;
using namespace frob;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

std::vector<std::uint64_t> parse_uint_list(const std::string& csv,
                                           const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError(std::string(what) + ": bad integer '" + tok +
                              "' in '" + csv + "'");
        }
    }
    if (out.empty()) throw DomainError(std::string(what) + ": empty list");
    return out;
}

struct QueryOpts {
    std::string gens_csv;
    std::string triple_csv;
    std::uint64_t p = 0;
    unsigned mu = 1;
    long lambda = 2;
    bool has_mu = false;
    bool has_lambda = false;
    std::string path;  // "", "closed", "apery", "oracle"
    bool check = false;
    bool force_json = false;
};

bool stdout_is_tty() { return isatty(fileno(stdout)) != 0; }

bool want_json(const QueryOpts& o) { return o.force_json || !stdout_is_tty(); }

Instance resolve_instance(const QueryOpts& o,
                          std::optional<ArithTriple>& triple) {
    if (o.gens_csv.empty() == o.triple_csv.empty())
        throw DomainError("give exactly one of -A/--generators or --triple");
    if (!o.triple_csv.empty()) {
        auto ad = parse_uint_list(o.triple_csv, "--triple");
        if (ad.size() != 2) throw DomainError("--triple wants 'a,d'");
        triple.emplace(ad[0], ad[1]);
        return triple->instance();
    }
    Instance inst(parse_uint_list(o.gens_csv, "--generators"));
    const auto& g = inst.generators();
    if (g.size() == 3 && g[1] - g[0] == g[2] - g[1] && g[0] >= 3)
        triple.emplace(g[0], g[1] - g[0]);
    return inst;
}

json query_echo(const char* op, const Instance& inst, const QueryOpts& o) {
    json q{{"op", op}, {"generators", inst.generators()}, {"p", o.p}};
    if (o.has_mu) q["mu"] = o.mu;
    if (o.has_lambda) q["lambda"] = o.lambda;
    return q;
}

bool weight_ok_for_apery(const QueryOpts& o, std::uint64_t a1) {
    if (!o.has_lambda) return true;
    return !(o.lambda == -1 && a1 % 2 == 0);
}

ZZ eval_closed(QueryKind k, const ArithTriple& T, const QueryOpts& o) {
    switch (k) {
        case QueryKind::gp: return gp_closed(T, o.p);
        case QueryKind::np: return np_closed(T, o.p);
        case QueryKind::sp: return sp_closed(T, o.p);
        case QueryKind::power_sum: return power_sum_closed(T, o.p, o.mu);
        case QueryKind::weighted_sum:
            return weighted_sum_closed(T, o.p, o.lambda, o.mu);
    }
    throw DomainError("unknown query kind");
}

ZZ eval_apery(QueryKind k, DenumerantTable& t, const QueryOpts& o) {
    AperySet S = apery_set(t, o.p);
    switch (k) {
        case QueryKind::gp: return gp_from_apery(S);
        case QueryKind::np: return np_from_apery(S);
        case QueryKind::sp: return sp_from_apery(S);
        case QueryKind::power_sum: return power_sum(S, o.mu);
        case QueryKind::weighted_sum:
            return weighted_power_sum(S, o.lambda, o.mu);
    }
    throw DomainError("unknown query kind");
}

ZZ eval_oracle(QueryKind k, DenumerantTable& t, const QueryOpts& o) {
    switch (k) {
        case QueryKind::gp: return oracle_gp(t, o.p);
        case QueryKind::np: return oracle_np(t, o.p);
        case QueryKind::sp: return oracle_sp(t, o.p);
        case QueryKind::power_sum: return oracle_power_sum(t, o.p, o.mu);
        case QueryKind::weighted_sum:
            return oracle_weighted_sum(t, o.p, o.lambda, o.mu);
    }
    throw DomainError("unknown query kind");
}

// Returns the process exit code (0 ok, 1 check mismatch).
int run_query(QueryKind kind, const QueryOpts& o) {
    auto start = Clock::now();
    std::optional<ArithTriple> triple;
    Instance inst = resolve_instance(o, triple);

    // With 1 among the generators every integer is representable, so at
    // p = 0 no path has anything to report; the quantity is undefined.
    if (inst.least() == 1 && o.p == 0)
        throw EmptySetError("no n has d(n;" + inst.to_string() + ") <= 0");

    const bool closed_ok = triple && o.p <= triple->max_level() &&
                           weight_ok_for_apery(o, triple->a());
    const bool apery_ok = weight_ok_for_apery(o, inst.least());

    std::vector<QueryResult> results;
    DenumerantTable table(inst);
    auto run_path = [&](Provenance prov) {
        QueryResult r;
        r.kind = kind;
        r.provenance = prov;
        r.generators = inst.generators();
        r.p = o.p;
        if (o.has_mu) r.mu = o.mu;
        if (o.has_lambda) r.lambda = o.lambda;
        switch (prov) {
            case Provenance::closed_form:
                r.value = eval_closed(kind, *triple, o);
                break;
            case Provenance::apery:
                r.value = eval_apery(kind, table, o);
                break;
            case Provenance::oracle:
                r.value = eval_oracle(kind, table, o);
                break;
        }
        results.push_back(std::move(r));
    };

    if (!o.path.empty()) {
        if (o.path == "closed") {
            if (!triple)
                throw DomainError(
                    "closed path requires an arithmetic triple "
                    "(a,a+d,a+2d) with a >= 3");
            run_path(Provenance::closed_form);
        } else if (o.path == "apery") {
            run_path(Provenance::apery);
        } else {
            run_path(Provenance::oracle);
        }
    } else if (o.check) {
        if (closed_ok) run_path(Provenance::closed_form);
        if (apery_ok) run_path(Provenance::apery);
        run_path(Provenance::oracle);
    } else {
        if (closed_ok)
            run_path(Provenance::closed_form);
        else if (apery_ok)
            run_path(Provenance::apery);
        else
            run_path(Provenance::oracle);
    }

    bool agree = true;
    for (const QueryResult& r : results)
        agree = agree && r.value == results[0].value;
    const QueryResult& primary = results[0];

    if (want_json(o)) {
        json rec{{"query", query_echo(to_string(kind), inst, o)},
                 {"value", to_decimal(primary.value)},
                 {"provenance", to_string(primary.provenance)}};
        if (o.check) {
            rec["agree"] = agree;
            json paths = json::object();
            for (const QueryResult& r : results)
                paths[to_string(r.provenance)] = to_decimal(r.value);
            rec["paths"] = paths;
        }
        rec["ms"] = elapsed_ms(start);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << to_string(kind) << "(A=" << inst.to_string()
                  << ", p=" << primary.p;
        if (primary.mu) std::cout << ", mu=" << *primary.mu;
        if (primary.lambda) std::cout << ", lambda=" << *primary.lambda;
        std::cout << ") = " << to_decimal(primary.value) << "   ["
                  << to_string(primary.provenance) << ", "
                  << elapsed_ms(start) << " ms]\n";
        if (o.check) {
            std::cout << "  check:";
            for (const QueryResult& r : results)
                std::cout << " " << to_string(r.provenance) << "="
                          << to_decimal(r.value);
            std::cout << (agree ? " -> agree" : " -> MISMATCH") << "\n";
        }
    }
    return agree ? 0 : 1;
}

int run_apery(const QueryOpts& o) {
    auto start = Clock::now();
    std::optional<ArithTriple> triple;
    Instance inst = resolve_instance(o, triple);
    if (o.path == "oracle")
        throw DomainError("apery sets have paths 'closed' and 'apery' only");

    const bool closed_ok = triple && o.p <= triple->max_level();
    std::optional<AperySet> closed_set, scan_set;
    if (o.path == "closed") {
        if (!closed_ok)
            throw DomainError(
                "closed path requires an arithmetic triple with p within "
                "floor(a/2)");
        closed_set = apery_closed(*triple, o.p);
    } else if (o.path == "apery") {
        scan_set = apery_set(inst, o.p);
    } else if (o.check) {
        if (closed_ok) closed_set = apery_closed(*triple, o.p);
        scan_set = apery_set(inst, o.p);
    } else if (closed_ok) {
        closed_set = apery_closed(*triple, o.p);
    } else {
        scan_set = apery_set(inst, o.p);
    }

    const AperySet& primary = closed_set ? *closed_set : *scan_set;
    bool agree = !(closed_set && scan_set) ||
                 closed_set->elements() == scan_set->elements();

    if (want_json(o)) {
        json rec{{"query", query_echo("apery", inst, o)},
                 {"provenance", closed_set ? "closed_form" : "apery"}};
        json elems = json::array();
        for (const ZZ& m : primary.elements()) elems.push_back(to_decimal(m));
        rec["elements"] = elems;
        rec["max"] = to_decimal(primary.max_element());
        if (primary.coords()) {
            json cs = json::array();
            for (const auto& c : *primary.coords())
                cs.push_back(json::array({c.x2, c.x3}));
            rec["coords"] = cs;
        }
        if (o.check) rec["agree"] = agree;
        rec["ms"] = elapsed_ms(start);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "apery(A=" << inst.to_string() << ", p=" << o.p
                  << ") = {";
        const auto& es = primary.elements();
        for (std::size_t i = 0; i < es.size(); ++i)
            std::cout << (i ? ", " : "") << to_decimal(es[i]);
        std::cout << "}   [" << (closed_set ? "closed_form" : "apery") << ", "
                  << elapsed_ms(start) << " ms]\n";
        if (o.check)
            std::cout << "  check: closed vs scan -> "
                      << (agree ? "agree" : "MISMATCH") << "\n";
    }
    return agree ? 0 : 1;
}

int run_gstar(const QueryOpts& o) {
    auto start = Clock::now();
    std::optional<ArithTriple> triple;
    Instance inst = resolve_instance(o, triple);
    DenumerantTable table(inst);
    auto v = g_star(table, o.p);
    std::string value = v ? to_decimal(*v) : "none";
    if (want_json(o)) {
        json rec{{"query", query_echo("gstar", inst, o)},
                 {"value", value},
                 {"provenance", "oracle"},
                 {"ms", elapsed_ms(start)}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "gstar(A=" << inst.to_string() << ", p=" << o.p
                  << ") = " << value << "   [oracle, " << elapsed_ms(start)
                  << " ms]\n";
    }
    return 0;
}

int print_nonrep(const Instance& inst, const QueryOpts& o) {
    auto start = Clock::now();
    DenumerantTable table(inst);
    auto set = nonrep_set_p(table, o.p);
    if (want_json(o)) {
        json elems = json::array();
        for (const ZZ& n : set) elems.push_back(to_decimal(n));
        json rec{{"query", query_echo("nonrep", inst, o)},
                 {"count", set.size()},
                 {"elements", elems},
                 {"provenance", "oracle"},
                 {"ms", elapsed_ms(start)}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "nonrep(A=" << inst.to_string() << ", p=" << o.p
                  << "): " << set.size() << " elements\n  ";
        for (std::size_t i = 0; i < set.size(); ++i)
            std::cout << (i ? " " : "") << to_decimal(set[i]);
        std::cout << "\n";
    }
    return 0;
}

int run_nonrep(const QueryOpts& o) {
    std::optional<ArithTriple> triple;
    Instance inst = resolve_instance(o, triple);
    return print_nonrep(inst, o);
}

// ---------------------------------------------------------------- sweeps

struct SweepOpts {
    std::uint64_t a_min = 3, a_max = 25;
    std::uint64_t d_min = 1, d_max = 15;
    std::uint64_t p_min = 0;
    std::uint64_t p_max = UINT64_MAX;  // clamped to floor(a/2) per a
    unsigned threads = 0;              // 0: hardware default
    bool force_json = false;
};

std::vector<ArithTriple> sweep_triples(const SweepOpts& s) {
    std::vector<ArithTriple> out;
    for (std::uint64_t a = std::max<std::uint64_t>(s.a_min, 3); a <= s.a_max;
         ++a)
        for (std::uint64_t d = std::max<std::uint64_t>(s.d_min, 1);
             d <= s.d_max; ++d)
            if (std::gcd(a, d) == 1) out.emplace_back(a, d);
    return out;
}

unsigned worker_count(const SweepOpts& s, std::size_t tasks) {
    unsigned n = s.threads ? s.threads : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    return static_cast<unsigned>(std::min<std::size_t>(n, tasks ? tasks : 1));
}

// Runs fn(task_index) over [0, tasks) on worker threads; exceptions from
// workers are rethrown on the caller thread.
void parallel_for(std::size_t tasks, unsigned workers,
                  const std::function<void(std::size_t)>& fn) {
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < tasks; i = next++) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct TableOpts : SweepOpts {
    bool csv = false;
    unsigned mu = 0;       // 0: no power column
    long lambda = 0;       // with mu: weighted column (lambda outside {0,1})
    bool has_lambda = false;
};

int run_table(const TableOpts& o) {
    if (o.has_lambda && (o.lambda == 0 || o.lambda == 1))
        throw InvalidWeightError("lambda must differ from 0 and 1");
    if (o.has_lambda && o.mu == 0)
        throw DomainError("--lambda requires --mu");

    auto triples = sweep_triples(o);
    struct Row {
        std::uint64_t a, d, p;
        ZZ g, n, s;
        std::optional<ZZ> power, weighted;
        bool weighted_na = false;
    };
    std::vector<std::vector<Row>> blocks(triples.size());

    parallel_for(triples.size(), worker_count(o, triples.size()),
                 [&](std::size_t i) {
                     const ArithTriple& T = triples[i];
                     const std::uint64_t hi =
                         std::min(o.p_max, T.max_level());
                     for (std::uint64_t p = o.p_min; p <= hi; ++p) {
                         Row r{T.a(), T.d(), p,
                               gp_closed(T, p), np_closed(T, p),
                               sp_closed(T, p), std::nullopt, std::nullopt,
                               false};
                         if (o.mu) r.power = power_sum_closed(T, p, o.mu);
                         if (o.has_lambda) {
                             if (o.lambda == -1 && T.a() % 2 == 0)
                                 r.weighted_na = true;
                             else
                                 r.weighted = weighted_sum_closed(
                                     T, p, o.lambda, o.mu);
                         }
                         blocks[i].push_back(std::move(r));
                     }
                 });

    const bool json_mode = !o.csv && (o.force_json || !stdout_is_tty());
    if (!json_mode) {
        std::cout << "a,d,p,gp,np,sp";
        if (o.mu) std::cout << ",power";
        if (o.has_lambda) std::cout << ",weighted";
        std::cout << "\n";
    }
    for (const auto& block : blocks)
        for (const Row& r : block) {
            if (json_mode) {
                json rec{{"a", r.a},           {"d", r.d},
                         {"p", r.p},           {"gp", to_decimal(r.g)},
                         {"np", to_decimal(r.n)}, {"sp", to_decimal(r.s)}};
                if (o.mu) rec["mu"] = o.mu;
                if (r.power) rec["power"] = to_decimal(*r.power);
                if (o.has_lambda) rec["lambda"] = o.lambda;
                if (r.weighted) rec["weighted"] = to_decimal(*r.weighted);
                if (r.weighted_na) rec["weighted"] = nullptr;
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << r.a << ',' << r.d << ',' << r.p << ','
                          << to_decimal(r.g) << ',' << to_decimal(r.n) << ','
                          << to_decimal(r.s);
                if (o.mu) std::cout << ',' << to_decimal(*r.power);
                if (o.has_lambda)
                    std::cout << ','
                              << (r.weighted_na ? "NA"
                                                : to_decimal(*r.weighted));
                std::cout << "\n";
            }
        }
    return 0;
}

struct VerifyOpts : SweepOpts {
    bool weighted = false;
    std::uint64_t weighted_a_max = 12;
    std::uint64_t weighted_d_max = 7;
    bool nonrep = false;
    std::string gens_csv;
    std::uint64_t p = 0;
};

int run_verify(const VerifyOpts& o) {
    if (o.nonrep) {
        if (o.gens_csv.empty())
            throw DomainError("--nonrep needs -A/--generators");
        QueryOpts q;
        q.p = o.p;
        q.force_json = o.force_json;
        return print_nonrep(Instance(parse_uint_list(o.gens_csv, "-A")), q);
    }

    auto start = Clock::now();
    auto triples = sweep_triples(o);
    struct Outcome {
        std::vector<std::string> mismatches;
        std::uint64_t tuples = 0;
        std::uint64_t checks = 0;
    };
    std::vector<Outcome> outcomes(triples.size());

    parallel_for(triples.size(), worker_count(o, triples.size()),
                 [&](std::size_t i) {
        const ArithTriple& T = triples[i];
        Outcome& out = outcomes[i];
        DenumerantTable table(T.instance());
        auto expect = [&](const char* kind, std::uint64_t p,
                          const ZZ& closed, const ZZ& apery, const ZZ& oracle) {
            ++out.checks;
            if (closed == apery && apery == oracle) return;
            std::ostringstream os;
            os << "MISMATCH " << kind << " a=" << T.a() << " d=" << T.d()
               << " p=" << p << ": closed=" << closed.get_str()
               << " apery=" << apery.get_str()
               << " oracle=" << oracle.get_str();
            out.mismatches.push_back(os.str());
        };
        auto expect_eq = [&](const char* kind, std::uint64_t p, const ZZ& lhs,
                             const ZZ& rhs) {
            ++out.checks;
            if (lhs == rhs) return;
            std::ostringstream os;
            os << "MISMATCH " << kind << " a=" << T.a() << " d=" << T.d()
               << " p=" << p << ": " << lhs.get_str()
               << " != " << rhs.get_str();
            out.mismatches.push_back(os.str());
        };

        for (std::uint64_t p = 0; p <= T.max_level(); ++p) {
            ++out.tuples;
            AperySet scan = apery_set(table, p);
            AperySet closed = apery_closed(T, p);

            expect("gp", p, gp_closed(T, p), gp_from_apery(scan),
                   oracle_gp(table, p));
            expect("np", p, np_closed(T, p), np_from_apery(scan),
                   oracle_np(table, p));
            expect("sp", p, sp_closed(T, p), sp_from_apery(scan),
                   oracle_sp(table, p));

            // structural: closed enumeration equals the scan set, its sum
            // matches the standalone polynomial, minimality holds, the
            // level increment is a+2d, and mu=1 reduces to the plain sum
            ++out.checks;
            if (closed.elements() != scan.elements()) {
                std::ostringstream os;
                os << "MISMATCH apery-set a=" << T.a() << " d=" << T.d()
                   << " p=" << p;
                out.mismatches.push_back(os.str());
            }
            ZZ elem_sum(0);
            for (const ZZ& m : closed.elements()) elem_sum += m;
            expect_eq("apery-sum", p, elem_sum, apery_sum_closed(T, p));
            ++out.checks;
            for (const ZZ& m : closed.elements()) {
                bool member = table.count(m.get_ui()) > p;
                bool minimal =
                    m < T.a() || !(table.count(m.get_ui() - T.a()) > p);
                if (!member || !minimal) {
                    std::ostringstream os;
                    os << "MISMATCH apery-minimality a=" << T.a()
                       << " d=" << T.d() << " p=" << p
                       << " element=" << m.get_str();
                    out.mismatches.push_back(os.str());
                    break;
                }
            }
            if (p > 0)
                expect_eq("gp-increment", p,
                          gp_closed(T, p) - gp_closed(T, p - 1),
                          ZZ(static_cast<unsigned long>(T.a() + 2 * T.d())));
            expect_eq("power-mu1", p, power_sum_closed(T, p, 1),
                      sp_closed(T, p));

            if (o.weighted && T.a() <= o.weighted_a_max &&
                T.d() <= o.weighted_d_max) {
                for (unsigned mu = 1; mu <= 3; ++mu) {
                    expect("power", p, power_sum_closed(T, p, mu),
                           power_sum(scan, mu),
                           oracle_power_sum(table, p, mu));
                    std::vector<long> lambdas{-2, 2, 3};
                    if (T.a() % 2 == 1) lambdas.push_back(-1);
                    for (long lam : lambdas)
                        expect("weighted", p,
                               weighted_sum_closed(T, p, lam, mu),
                               weighted_power_sum(scan, lam, mu),
                               oracle_weighted_sum(table, p, lam, mu));
                }
            }
        }
    });

    std::uint64_t tuples = 0, checks = 0, bad = 0;
    const bool json_mode = o.force_json || !stdout_is_tty();
    for (const auto& out : outcomes) {
        tuples += out.tuples;
        checks += out.checks;
        bad += out.mismatches.size();
        for (const auto& line : out.mismatches) {
            if (json_mode)
                std::cout << json{{"mismatch", line}}.dump() << "\n";
            else
                std::cout << line << "\n";
        }
    }
    if (json_mode) {
        json rec{{"verify",
                  {{"instances", triples.size()},
                   {"tuples", tuples},
                   {"checks", checks},
                   {"mismatches", bad},
                   {"ms", elapsed_ms(start)}}}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "verified " << tuples << " (a,d,p) tuples over "
                  << triples.size() << " instances, " << checks
                  << " checks: " << bad << " mismatches ("
                  << elapsed_ms(start) / 1000.0 << " s)\n";
    }
    return bad ? 1 : 0;
}

void add_instance_flags(CLI::App* cmd, QueryOpts& o) {
    cmd->add_option("-A,--generators", o.gens_csv,
                    "generator list a1,a2,...,ak (strictly increasing, "
                    "gcd 1)");
    cmd->add_option("-T,--triple", o.triple_csv,
                    "arithmetic triple shorthand a,d for (a,a+d,a+2d)");
    cmd->add_option("-p,--level", o.p, "representation level p (default 0)");
    cmd->add_flag("--json", o.force_json, "JSON-lines output");
}

void add_path_flags(CLI::App* cmd, QueryOpts& o) {
    cmd->add_option("--path", o.path, "force one path")
        ->check(CLI::IsMember({"closed", "apery", "oracle"}));
    cmd->add_flag("--check", o.check,
                  "compute every applicable path and compare");
}

void add_sweep_flags(CLI::App* cmd, SweepOpts& s) {
    cmd->add_option("--a-min", s.a_min, "smallest a (default 3)");
    cmd->add_option("--a-max", s.a_max, "largest a (default 25)");
    cmd->add_option("--d-min", s.d_min, "smallest d (default 1)");
    cmd->add_option("--d-max", s.d_max, "largest d (default 15)");
    cmd->add_option("--threads", s.threads,
                    "worker threads (default: hardware)");
    cmd->add_flag("--json", s.force_json, "JSON-lines output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "frob: exact p-Frobenius numbers, p-genus, p-Sylvester/power/"
        "weighted sums for numerical semigroups, with closed forms for "
        "arithmetic triples and oracle cross-validation"};
    app.require_subcommand(1);

    QueryOpts q;
    TableOpts t;
    VerifyOpts v;
    std::function<int()> action;

    auto add_query = [&](const char* name, const char* desc, QueryKind kind) {
        auto* cmd = app.add_subcommand(name, desc);
        add_instance_flags(cmd, q);
        add_path_flags(cmd, q);
        if (kind == QueryKind::power_sum || kind == QueryKind::weighted_sum) {
            cmd->add_option("--mu", q.mu, "power exponent mu >= 1")
                ->required();
        }
        if (kind == QueryKind::weighted_sum) {
            cmd->add_option("--lambda", q.lambda,
                            "integer weight base, outside {0,1}")
                ->required();
        }
        cmd->callback([&, kind] {
            q.has_mu = kind == QueryKind::power_sum ||
                       kind == QueryKind::weighted_sum;
            q.has_lambda = kind == QueryKind::weighted_sum;
            action = [&, kind] { return run_query(kind, q); };
        });
        return cmd;
    };

    add_query("gp", "largest n with at most p representations",
              QueryKind::gp);
    add_query("np", "count of n with at most p representations",
              QueryKind::np);
    add_query("sp", "sum of n with at most p representations", QueryKind::sp);
    add_query("power", "sum of n^mu over n with at most p representations",
              QueryKind::power_sum);
    add_query("weighted",
              "sum of lambda^n * n^mu over n with at most p representations",
              QueryKind::weighted_sum);

    auto* ap = app.add_subcommand("apery",
                                  "p-Apery set (least element per residue "
                                  "class mod a1 with > p representations)");
    add_instance_flags(ap, q);
    add_path_flags(ap, q);
    ap->callback([&] { action = [&] { return run_apery(q); }; });

    auto* gs = app.add_subcommand(
        "gstar", "largest n with exactly p representations, if any");
    add_instance_flags(gs, q);
    gs->callback([&] { action = [&] { return run_gstar(q); }; });

    auto* nr = app.add_subcommand(
        "nonrep", "the set of n with at most p representations");
    add_instance_flags(nr, q);
    nr->callback([&] { action = [&] { return run_nonrep(q); }; });

    auto* tb = app.add_subcommand(
        "table", "closed-form sweep over arithmetic triples (a,d,p)");
    add_sweep_flags(tb, t);
    tb->add_option("--p-min", t.p_min, "smallest p (default 0)");
    tb->add_option("--p-max", t.p_max,
                   "largest p (default: floor(a/2) per instance)");
    tb->add_option("--mu", t.mu, "add a power-sum column with this mu");
    tb->add_option("--lambda", t.lambda,
                   "add a weighted-sum column (requires --mu)")
        ->each([&](const std::string&) { t.has_lambda = true; });
    tb->add_flag("--csv", t.csv, "CSV output");
    tb->callback([&] { action = [&] { return run_table(t); }; });

    auto* vf = app.add_subcommand(
        "verify",
        "cross-validate closed forms, Apery engine and oracle over a sweep");
    add_sweep_flags(vf, v);
    vf->add_flag("--weighted", v.weighted,
                 "also cross-validate power/weighted sums (a <= 12, d <= 7, "
                 "mu <= 3, lambda in {-2,2,3} plus -1 for odd a)");
    vf->add_flag("--nonrep", v.nonrep,
                 "print the nonrepresentable-set listing for -A and -p");
    vf->add_option("-A,--generators", v.gens_csv, "generators for --nonrep");
    vf->add_option("-p,--level", v.p, "level for --nonrep");
    vf->callback([&] { action = [&] { return run_verify(v); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
