// Command-line surface: integral ext computations with self-auditing
// verdicts, the signed surjection calculus, rational tables, and the
// verification suite.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 resource refusal.

#include "extgr/homological.hpp"
#include "extgr/serialization.hpp"
#include "extgr/surjection_prop.hpp"
#include "extgr/tables.hpp"
#include "extgr/verification.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace extgr;
using nlohmann::json;

constexpr long kDefaultBudget = 5000000;

long budget_from_env(long fallback)
{
    if (const char *env = std::getenv("EXTGR_BUDGET")) {
        try {
            return std::stol(env);
        } catch (...) {
            return fallback;
        }
    }
    return fallback;
}

struct OutputSink {
    std::string path;
    void emit(const std::string &text) const
    {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            out << text;
        }
    }
};

std::pair<long, long> parse_window(const std::string &w)
{
    auto colon = w.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--window", "expected a:b");
    long a = std::stol(w.substr(0, colon));
    long b = std::stol(w.substr(colon + 1));
    if (a < 0 || b < a) throw CLI::ValidationError("--window", "need 0 <= a <= b");
    return {a, b};
}

int tensor_exponent(const std::string &spec)
{
    FunctorKind k = parse_functor_kind(spec);
    if (k.kind != PowerKind::Tensor)
        throw CLI::ValidationError("functor", "integral computations take tensor powers T^n");
    return k.exponent;
}

// ---- ext ------------------------------------------------------------------

int cmd_ext(const std::string &source, const std::string &target, const std::string &window_arg,
            const std::string &format, const OutputSink &sink, long budget, bool traces)
{
    int n = tensor_exponent(source);
    int m = tensor_exponent(target);
    if (n < 1) {
        std::cerr << "error: the source tensor exponent must be at least 1\n";
        return 2;
    }

    long lo = 0, hi = std::max<long>(m - n + 1, 1);
    if (!window_arg.empty()) std::tie(lo, hi) = parse_window(window_arg);

    long long estimate = estimate_diff_entries(n, static_cast<unsigned>(m), hi + 1);
    if (estimate > budget) {
        std::cerr << "refused: estimated " << estimate << " matrix entries exceed the budget of "
                  << budget << " (raise --budget or EXTGR_BUDGET)\n";
        return 3;
    }

    MultiComplex mc(MultiComplexSpec(n, static_cast<unsigned>(m), hi + 1));
    mc.complex().validate();

    Int predicted_rank = (n <= m) ? factorial(n) * stirling2(m, n) : Int(0);
    bool match = true;
    json groups = json::array();
    std::ostringstream table;
    table << "Ext(" << source << ", " << target << ") over degrees [" << lo << ", " << hi << "]\n";
    table << "degree  computed          predicted         verdict\n";
    for (long k = lo; k <= hi; ++k) {
        auto h = mc.complex().cohomology_unchecked(k);
        FgAbelianGroup want(k == m - n && n <= m ? predicted_rank.get_si() : 0, {});
        bool ok = h == want;
        match = match && ok;
        json tors = json::array();
        for (const auto &d : h.torsion) tors.push_back(d.get_str());
        groups.push_back(json{{"degree", k}, {"free_rank", h.free_rank}, {"torsion", tors}});
        std::ostringstream c1, c2;
        c1 << h.to_string();
        c2 << want.to_string();
        table << "  " << k << "     " << c1.str() << std::string(std::max<long>(18 - (long)c1.str().size(), 1), ' ')
              << c2.str() << std::string(std::max<long>(18 - (long)c2.str().size(), 1), ' ')
              << (ok ? "MATCH" : "MISMATCH") << "\n";
    }

    json doc{{"source", source}, {"target", target}, {"window", json::array({lo, hi})},
             {"groups", groups}, {"verdict", match ? "MATCH" : "MISMATCH"}};

    if (traces) {
        json tr = json::array();
        long k = m - n;
        if (k >= lo && k <= hi && n <= m) {
            for (const auto &sigma : all_permutations(m)) {
                Rat t = target_action_trace(mc, sigma, k);
                tr.push_back(json{{"group", "Sm"}, {"element", cycle_notation(sigma)},
                                  {"degree", k}, {"trace", to_string(t)}});
            }
            for (const auto &tau : all_permutations(n)) {
                Rat t = source_action_trace(mc, tau, k);
                tr.push_back(json{{"group", "Sn"}, {"element", cycle_notation(tau)},
                                  {"degree", k}, {"trace", to_string(t)}});
            }
        }
        doc["traces"] = tr;
    }

    if (format == "json")
        sink.emit(doc.dump(2));
    else
        sink.emit(table.str());
    return match ? 0 : 1;
}

// ---- prop -----------------------------------------------------------------

SignedSurjSum sum_from_arg(const std::string &arg)
{
    json j = json::parse(arg);
    if (j.is_array()) {
        Surjection f = surjection_from_json(j);
        return SignedSurjSum::basis(f);
    }
    return signed_sum_from_json(j);
}

int cmd_prop(const std::string &sub, const std::vector<std::string> &operands, const std::string &side,
             const OutputSink &sink)
try {
    if (sub == "decompose") {
        if (operands.size() != 1) throw CLI::ValidationError("prop", "decompose takes one surjection");
        Surjection f = surjection_from_json(json::parse(operands[0]));
        auto dec = canonical_decomposition(f);
        json out{{"f", f.values}, {"s", dec.s.values}, {"alpha", dec.alpha}};
        sink.emit(out.dump(2));
        return 0;
    }
    if (sub == "compose") {
        if (operands.size() != 2) throw CLI::ValidationError("prop", "compose takes two operands");
        auto g = sum_from_arg(operands[0]);
        auto f = sum_from_arg(operands[1]);
        sink.emit(to_json(yoneda(g, f)).dump(2));
        return 0;
    }
    if (sub == "external") {
        if (operands.size() != 2) throw CLI::ValidationError("prop", "external takes two operands");
        auto x = sum_from_arg(operands[0]);
        auto y = sum_from_arg(operands[1]);
        sink.emit(to_json(external_product(x, y)).dump(2));
        return 0;
    }
    if (sub == "act") {
        if (operands.size() != 2) throw CLI::ValidationError("prop", "act takes a permutation and an operand");
        json pj = json::parse(operands[0]);
        Perm p = pj.get<Perm>();
        if (!is_permutation(p)) throw CLI::ValidationError("prop", "first operand must be a permutation");
        auto x = sum_from_arg(operands[1]);
        SignedSurjSum out = side == "left" ? left_action_general(p, x) : right_action(x, p);
        sink.emit(to_json(out).dump(2));
        return 0;
    }
    throw CLI::ValidationError("prop", "unknown subcommand");
} catch (const std::invalid_argument &e) {
    std::ostringstream os;
    os << e.what() << "; operands:";
    for (const auto &s : operands) os << " " << s;
    throw std::invalid_argument(os.str());
}

// ---- table ----------------------------------------------------------------

std::string render_csv(const std::vector<ExtTableEntry> &rows)
{
    std::ostringstream os;
    os << "source,target,degree,dimension\n";
    for (const auto &e : rows)
        os << e.source.to_string() << "," << e.target.to_string() << "," << e.degree << ","
           << e.dimension << "\n";
    return os.str();
}

std::string render_markdown(const std::vector<ExtTableEntry> &rows)
{
    std::ostringstream os;
    os << "| source | target | degree | dimension |\n|---|---|---|---|\n";
    for (const auto &e : rows)
        os << "| " << e.source.to_string() << " | " << e.target.to_string() << " | " << e.degree
           << " | " << e.dimension << " |\n";
    return os.str();
}

json rows_to_json(const std::vector<ExtTableEntry> &rows)
{
    json out = json::array();
    for (const auto &e : rows) out.push_back(to_json(e));
    return out;
}

int cmd_table(const std::string &kind, int max, const std::string &format, const OutputSink &sink,
              int jobs)
{
    if (max > 8) {
        std::cerr << "refused: --max is capped at 8\n";
        return 3;
    }
    std::vector<ExtTableEntry> rows;
    if (kind == "rational-ext" || kind == "rational-tor") {
        using K = PowerKind;
        std::vector<std::pair<K, K>> cases = {{K::Exterior, K::Exterior},  {K::Symmetric, K::Symmetric},
                                              {K::Exterior, K::Symmetric}, {K::Symmetric, K::Exterior},
                                              {K::Exterior, K::Tensor},    {K::Symmetric, K::Tensor},
                                              {K::Tensor, K::Symmetric},   {K::Tensor, K::Exterior}};
        std::vector<std::tuple<K, K, int, int>> cells;
        for (auto [ks, kt] : cases) {
            const bool product_case = ks != K::Tensor && kt != K::Tensor;
            int bound = std::min(max, product_case ? 5 : 8);
            for (int n = 0; n <= bound; ++n)
                for (int m2 = 0; m2 <= bound; ++m2) cells.emplace_back(ks, kt, n, m2);
        }
        std::vector<ExtTableEntry> results(cells.size());
        const int workers = std::max(1, jobs);
        std::vector<std::future<void>> futs;
        std::atomic<size_t> next{0};
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&] {
                for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                    auto [ks, kt, n, m2] = cells[i];
                    results[i] = kind == "rational-ext"
                                     ? rational_ext(FunctorKind{ks, n}, FunctorKind{kt, m2})
                                     : rational_tor(FunctorKind{ks, n}, FunctorKind{kt, m2});
                }
            }));
        for (auto &f : futs) f.get();
        rows = std::move(results);
    } else if (kind == "stable-homology") {
        using K = PowerKind;
        for (K k : {K::Tensor, K::Exterior, K::Symmetric})
            for (int d = 0; d <= max; ++d)
                for (const auto &[deg, dim] : stable_homology(FunctorKind{k, d})) {
                    ExtTableEntry e;
                    e.source = FunctorKind{K::Exterior, 0}; // unused in this table
                    e.target = FunctorKind{k, d};
                    e.degree = deg;
                    e.dimension = dim;
                    rows.push_back(e);
                }
        // stable-homology table renders target + degree + dimension
        std::ostringstream os;
        if (format == "json") {
            json out = json::array();
            for (const auto &e : rows)
                out.push_back(json{{"coefficients", e.target.to_string()}, {"degree", e.degree},
                                   {"dimension", e.dimension}});
            sink.emit(out.dump(2));
        } else if (format == "csv") {
            os << "coefficients,degree,dimension\n";
            for (const auto &e : rows)
                os << e.target.to_string() << "," << e.degree << "," << e.dimension << "\n";
            sink.emit(os.str());
        } else {
            os << "| coefficients | degree | dimension |\n|---|---|---|\n";
            for (const auto &e : rows)
                if (e.dimension != 0)
                    os << "| " << e.target.to_string() << " | " << e.degree << " | " << e.dimension
                       << " |\n";
            sink.emit(os.str());
        }
        return 0;
    } else {
        throw CLI::ValidationError("table", "unknown table kind");
    }

    if (format == "json")
        sink.emit(rows_to_json(rows).dump(2));
    else if (format == "csv")
        sink.emit(render_csv(rows));
    else
        sink.emit(render_markdown(rows));
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string &level_arg, unsigned seed, long budget)
{
    using namespace extgr::verification;
    Level level = level_arg == "quick" ? Level::Quick : Level::Full;
    auto results = run_all(level, seed, budget);
    bool ok = true;
    int idx = 0;
    for (const auto &r : results) {
        ++idx;
        std::printf("[%s] %2d. %s (%ld checks, %.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", idx,
                    r.name.c_str(), r.checked, r.seconds, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact Ext computations between tensor powers of the abelianization of free "
                 "groups, cross-validated against the signed surjection calculus"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    long budget = budget_from_env(kDefaultBudget);
    unsigned seed = 20240817;
    int jobs = 1;
    std::string format = "table", out_path;

    app.add_option("--budget", budget, "matrix entry budget for integral computations");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--jobs", jobs, "worker threads for independent table cells");
    app.add_option("--format", format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // ext (functors as positionals or as --source/--target flags)
    auto *ext = app.add_subcommand("ext", "integral Ext groups with a predicted-vs-computed verdict");
    std::string source, target, window;
    bool traces = false;
    ext->add_option("src", source, "source functor, e.g. T^2");
    ext->add_option("tgt", target, "target functor, e.g. T^3");
    ext->add_option("--source", source, "source functor (flag form)");
    ext->add_option("--target", target, "target functor (flag form)");
    ext->add_option("--window", window, "degree window a:b (default 0:max(m-n+1,1))");
    ext->add_flag("--traces", traces, "include symmetric group action traces in JSON output");

    // prop: operands are raw JSON strings, taken from the unparsed remainder
    // so that bracketed arrays survive untouched
    auto *prop = app.add_subcommand("prop", "signed surjection calculus operations");
    std::string prop_sub, side = "right";
    prop->add_option("op", prop_sub, "compose | act | external | decompose")->required();
    prop->add_option("--side", side, "act on the left or the right")
        ->check(CLI::IsMember({"left", "right"}));
    prop->allow_extras();
    app.allow_extras();

    // table
    auto *table = app.add_subcommand("table", "rational ext/tor and stable homology tables");
    std::string table_kind;
    int max = 3;
    table->add_option("kind", table_kind, "rational-ext | rational-tor | stable-homology")->required();
    table->add_option("--max", max, "largest exponent (capped at 8)");

    // verify
    auto *verify = app.add_subcommand("verify", "run the verification checks");
    std::string level_arg = "quick";
    verify->add_option("level", level_arg, "quick | full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    std::vector<std::string> operands = prop->remaining();
    for (const auto &s : app.remaining()) operands.push_back(s);
    if (!app.got_subcommand(prop) && !operands.empty()) {
        std::cerr << "usage error: unexpected arguments\n";
        return 2;
    }

    OutputSink sink{out_path};
    try {
        if (app.got_subcommand(ext)) {
            if (source.empty() || target.empty()) {
                std::cerr << "usage error: ext needs a source and a target functor\n";
                return 2;
            }
            return cmd_ext(source, target, window, format, sink, budget, traces);
        }
        if (app.got_subcommand(prop)) return cmd_prop(prop_sub, operands, side, sink);
        if (app.got_subcommand(table)) return cmd_table(table_kind, max, format, sink, jobs);
        if (app.got_subcommand(verify)) return cmd_verify(level_arg, seed, budget);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "usage error: bad JSON operand: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
