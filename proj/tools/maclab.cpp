// maclab: command-line front end.
//
// Every subcommand emits either a math object or a verification report, as
// text or JSON. Exit status: 0 when every requested check passed (or a
// plain object was printed), 1 on a failed or unstabilized check, 2 on a
// configuration or usage error, 3 when a preview-mode check agreed at sample points.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "maclab/cache.hpp"
#include "maclab/checks.hpp"

using namespace maclab;

namespace {

struct Config {
    std::string output = "text";
    int workers = 1;
    std::string cache_dir;
    std::string equality = "exact";
    bool timing = false;
};

Config cfg;
std::optional<Cache> cache;
std::chrono::steady_clock::time_point started;

Cache* cache_ptr() { return cache ? &*cache : nullptr; }
bool as_json() { return cfg.output == "json"; }
EqualityMode equality_mode() { return cfg.equality == "exact" ? EqualityMode::Exact : EqualityMode::Preview; }

double elapsed() { return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count(); }

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument(what + ": '" + s + "' is not a comma-separated list of integers");
        }
    }
    if (out.empty()) throw InvalidArgument(what + " is empty");
    return out;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidArgument(msg);
}

GLWeight weight_arg(int n, const std::string& s) {
    require(n >= 2, "--n must be at least 2");
    auto l = parse_ints(s, "--weight");
    require(static_cast<int>(l.size()) == n - 1, "--weight needs N-1 = " + std::to_string(n - 1) + " entries");
    return GLWeight::from_l(n, l);
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << " " << r.parameters.dump() << ": " << status_name(r.status) << "\n";
    std::size_t shown = 0;
    for (const auto& w : r.witnesses) {
        if (++shown > 20) {
            os << "  ... " << r.witnesses.size() - 20 << " more witnesses\n";
            break;
        }
        os << "  at " << w.index << ": expected " << w.expected << ", got " << w.actual << "\n";
    }
    if (!r.details.empty()) os << "  details " << r.details.dump() << "\n";
    return os.str();
}

int exit_for(Status s) {
    switch (s) {
        case Status::Passed:
            return 0;
        case Status::Preview:
            return 3;
        default:
            return 1;
    }
}

void print(Json j, const std::string& text) {
    if (cfg.timing) j["wall_time_s"] = elapsed();
    if (as_json()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
        if (cfg.timing) std::cout << "wall time " << elapsed() << " s\n";
    }
}

int emit(const VerificationReport& r) {
    print(r.to_json(), report_text(r));
    return exit_for(r.status);
}

int emit_object(const Json& j, const std::string& text) {
    print(j, text);
    return 0;
}

void preview_only_for(const std::string& what) {
    require(cfg.equality == "exact", "--equality probabilistic-preview is only supported by " + what);
}

// ---- cached intermediates ----

RationalFunction cached_P(const Partition& lam, int n) {
    Json payload = cached(cache_ptr(), "macdonald_P", {{"n", n}, {"lambda", lam.parts()}},
                          [&] { return to_json(macdonald_P(lam, n).value()); });
    return rational_function_from_json(payload);
}

QTSeries cached_J_alpha(int n, const MultiIndex& a, int order) {
    Json payload = cached(cache_ptr(), "J_alpha", {{"n", n}, {"alpha", a}, {"order", order}},
                          [&] { return to_json(J_alpha(n, a, order)); });
    return series_from_json(payload);
}

std::string series_text(const QTSeries& s) { return s.poly().to_string() + " + O(" + std::to_string(s.order() + 1) + ")"; }

Json series_json(const QTSeries& s) { return to_json(s); }

// ---- commands ----

int cmd_macdonald(int n, const std::string& lambda, bool oracle) {
    require(n >= 1, "--n must be positive");
    Partition lam(parse_ints(lambda, "--lambda"));
    require(static_cast<int>(lam.length()) <= n, "--lambda has more than N nonzero parts");
    SymmetricPolynomial p = oracle ? macdonald_P_oracle(lam, n) : SymmetricPolynomial(n, cached_P(lam, n));
    auto m = p.m_expansion();
    Json terms = Json::array();
    std::ostringstream os;
    os << "P" << lam.to_string() << " in " << n << " variables (parameters q, s):\n";
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        terms.push_back({{"partition", it->first.parts()}, {"coefficient", to_json(it->second)}});
        os << "  m" << it->first.to_string() << ": " << it->second.to_string() << "\n";
    }
    Json j = {{"object", "macdonald_P"}, {"n", n}, {"lambda", lam.parts()}, {"method", oracle ? "oracle" : "tableau"},
              {"m_expansion", terms}};
    return emit_object(j, os.str());
}

int cmd_baker(int n, int d, const std::string& specialize) {
    require(n >= 1 && d >= 0, "--n must be positive and --truncation nonnegative");
    if (!specialize.empty()) {
        Partition lam(parse_ints(specialize, "--specialize"));
        require(static_cast<int>(lam.length()) <= n, "--specialize has more than N nonzero parts");
        VerificationReport r = specialization_case(lam, n);
        r.check = "specialization";
        r.parameters = {{"n", n}, {"lambda", lam.parts()}};
        return emit(r);
    }
    XSeries f = f_N_series(n, d);
    Json cs = Json::array();
    std::ostringstream os;
    os << "f_N coefficients, N=" << n << ", x-degree <= " << d << ":\n";
    for (const auto& [a, c] : f.coefficients()) {
        FactoredRational v = c.to_factored();
        cs.push_back({{"alpha", a}, {"value", to_json(v)}});
        os << "  x^" << alpha_string(a) << ": " << v.to_string() << "\n";
    }
    return emit_object({{"object", "f_N"}, {"n", n}, {"truncation", d}, {"coefficients", cs}}, os.str());
}

int cmd_laumon_j(int n, int d) {
    require(n >= 1 && d >= 0, "--n must be positive and --degree nonnegative");
    Json payload = cached(cache_ptr(), "J_series", {{"n", n}, {"degree", d}}, [&] {
        Json cs = Json::array();
        XSeries j = J_series(n, d);
        for (const auto& [a, c] : j.coefficients()) cs.push_back({{"alpha", a}, {"value", to_json(c)}});
        return cs;
    });
    Json cs = Json::array();
    std::ostringstream os;
    os << "J coefficients, N=" << n << ", x-degree <= " << d << ":\n";
    for (const auto& e : payload) {
        FactoredRational v = rational_function_from_json(e["value"]).to_factored();
        MultiIndex a = e["alpha"].get<MultiIndex>();
        cs.push_back({{"alpha", a}, {"value", to_json(v)}});
        os << "  x^" << alpha_string(a) << ": " << v.to_string() << "\n";
    }
    return emit_object({{"object", "J"}, {"n", n}, {"degree", d}, {"coefficients", cs}}, os.str());
}

int cmd_laumon_alpha(int n, const std::string& alpha, int order) {
    require(n >= 2 && order >= 0, "--n must be at least 2 and --order nonnegative");
    auto v = parse_ints(alpha, "--alpha");
    require(static_cast<int>(v.size()) == n - 1, "--alpha needs N-1 entries");
    for (int x : v) require(x >= 0, "--alpha entries must be nonnegative");
    MultiIndex a(v.begin(), v.end());
    QTSeries s = cached_J_alpha(n, a, order);
    return emit_object({{"object", "J_alpha"}, {"n", n}, {"alpha", a}, {"series", series_json(s)}},
                       "J_" + alpha_string(a) + " = " + series_text(s) + "\n");
}

int cmd_laumon_limit(int n, int order) {
    require(n >= 1 && order >= 0, "--n must be positive and --order nonnegative");
    Json payload = cached(cache_ptr(), "J_infinity", {{"n", n}, {"order", order}}, [&] { return to_json(J_infinity(n, order)); });
    QTSeries s = series_from_json(payload);
    return emit_object({{"object", "J_infinity"}, {"n", n}, {"series", series_json(s)}}, "J_infinity = " + series_text(s) + "\n");
}

ShirVariant shir_variant(const std::string& s) { return s == "printed" ? ShirVariant::Printed : ShirVariant::Derived; }

std::vector<MultiIndex> schedule_for(int n, int points) {
    require(points >= 2, "the schedule needs at least 2 points");
    return sector_schedule(n, points);
}

int cmd_global_h(int n, const std::string& weight, int order, int alpha_max) {
    GLWeight c = weight_arg(n, weight);
    require(order >= 0, "--order must be nonnegative");
    auto sched = schedule_for(n, alpha_max);
    Json payload = cached(cache_ptr(), "H_limit", {{"n", n}, {"weight", c.l()}, {"order", order}, {"alpha_max", alpha_max}}, [&] {
        HLimitResult h = H_limit(c, sched, order);
        return Json{{"series", to_json(h.series)}, {"report", h.report.to_json()}};
    });
    QTSeries s = series_from_json(payload["series"]);
    Json rep = payload["report"];
    Json sj = Json::array();
    for (const auto& a : sched) sj.push_back(a);
    Json j = {{"object", "H_limit"}, {"n", n}, {"weight", c.l()}, {"components", c.components()}, {"order", order},
              {"schedule", sj}, {"series", series_json(s)}, {"report", rep}};
    std::string status = rep["status"];
    std::ostringstream os;
    os << "H" << c.to_string() << " = " << series_text(s) << "\n" << "stabilization: " << status;
    if (rep.contains("details") && rep["details"].contains("stable_from")) os << ", stable from " << rep["details"]["stable_from"].dump();
    os << "\n";
    print(j, os.str());
    return status == "PASSED" ? 0 : 1;
}

int cmd_global_euler(int n, const std::string& weight, const std::string& alpha) {
    GLWeight c = weight_arg(n, weight);
    auto v = parse_ints(alpha, "--alpha");
    require(static_cast<int>(v.size()) == n - 1, "--alpha needs N-1 entries");
    for (int x : v) require(x >= 0, "--alpha entries must be nonnegative");
    MultiIndex a(v.begin(), v.end());
    FactoredRational e = euler_char_global(a, c);
    return emit_object({{"object", "euler_characteristic"}, {"n", n}, {"alpha", a}, {"weight", c.l()}, {"value", to_json(e)}},
                       "chi" + alpha_string(a) + c.to_string() + " = " + e.to_string() + "\n");
}

int cmd_global_closed(int n, const std::string& weight, int order) {
    GLWeight c = weight_arg(n, weight);
    require(c.is_dominant(), "the closed form needs a dominant weight");
    HEqualsP h = h_equals_p(c);
    QTSeries s = expand(h.value(), order);
    return emit_object({{"object", "H_closed"},
                        {"n", n},
                        {"weight", c.l()},
                        {"prefactor", to_json(h.prefactor)},
                        {"P", to_json(h.P)},
                        {"series", series_json(s)}},
                       "prefactor = " + h.prefactor.to_string() + "\nP = " + h.P.to_string() + "\nexpansion = " + series_text(s) + "\n");
}

// Single weight when --weight is given, the default range otherwise.
int cmd_global_verify(const std::string& which, int n, const std::string& weight, int order, int alpha_max) {
    if (which != "cordiff" && which != "pieri") preview_only_for("'global verify cordiff' and 'global verify pieri'");
    if (weight.empty()) {
        if (which == "cordiff") return emit(check_cordiff(2, equality_mode()));
        if (which == "pieri") return emit(check_pieri(2, equality_mode()));
        if (which == "hp") return emit(check_hp(2, order, alpha_max));
        if (which == "chibq") return emit(check_chibq(order));
        if (which == "h0") return emit(check_h0(8, 4, order, alpha_max));
        return emit(check_vanishing(order, alpha_max));
    }
    GLWeight c = weight_arg(n, weight);
    if (which == "cordiff") return emit(verify_cor_diff(c, WeightReading::Reversed, equality_mode()));
    if (which == "pieri") return emit(verify_pieri(c, equality_mode()));
    if (which == "hp") return emit(verify_h_equals_p(c, schedule_for(n, alpha_max), order));
    if (which == "chibq") return emit(verify_chi_bQ(c, order));
    require(which == "vanishing", "'global verify h0' takes no --weight");
    HLimitResult h = H_limit(c, schedule_for(n, alpha_max), order);
    VerificationReport r;
    r.check = "vanishing";
    r.parameters = {{"n", n}, {"weight", c.l()}, {"order", order}};
    r.absorb(h.report);
    for (const auto& b : series_differences(h.series, QTSeries(Poly(rings::laumon(n)), order), order))
        r.fail({bidegree_string(b), "0", to_string_coef(h.series, b)});
    return emit(r);
}

}  // namespace

int main(int argc, char** argv) {
    started = std::chrono::steady_clock::now();
    CLI::App app{"Exact Macdonald polynomial and Laumon space computations"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-j,--parallelism", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $MACLAB_CACHE_DIR, unset disables)");
    app.add_option("--equality", cfg.equality, "exact or probabilistic-preview")
        ->check(CLI::IsMember({"exact", "probabilistic-preview"}));
    app.add_flag("--timing", cfg.timing, "attach wall time to the output");

    std::function<int()> action;
    int n = 0, d = 0, order = 2, points = 6, rank = 1, max_size = 5, max_n = 4, max_entry = 2;
    std::string lambda, specialize, weight, alpha, op = "derived";
    bool oracle = false;

    auto* mac = app.add_subcommand("macdonald", "m-expansion of P_lambda");
    mac->add_option("--n", n, "number of variables")->required();
    mac->add_option("--lambda", lambda, "partition, e.g. 2,1")->required();
    mac->add_flag("--oracle", oracle, "use the eigen-solve oracle instead of the tableau sum");
    mac->callback([&] { action = [&] { return cmd_macdonald(n, lambda, oracle); }; });

    auto* baker = app.add_subcommand("baker", "coefficients of the series f_N, or its specialization");
    baker->add_option("--n", n)->required();
    baker->add_option("--truncation", d, "x-degree bound")->default_val(2);
    baker->add_option("--specialize", specialize, "partition lambda: check that f_N specializes to P_lambda");
    baker->callback([&] { action = [&] { return cmd_baker(n, d, specialize); }; });

    auto* laumon = app.add_subcommand("laumon", "localization series J");
    laumon->require_subcommand(1);
    auto* lj = laumon->add_subcommand("j", "exact coefficients of J up to x-degree D");
    lj->add_option("--n", n)->required();
    lj->add_option("--degree", d)->required();
    lj->callback([&] { action = [&] { return cmd_laumon_j(n, d); }; });
    auto* la = laumon->add_subcommand("alpha", "graded piece J_alpha expanded to (q,t)-order M");
    la->add_option("--n", n)->required();
    la->add_option("--alpha", alpha)->required();
    la->add_option("--order", order);
    la->callback([&] { action = [&] { return cmd_laumon_alpha(n, alpha, order); }; });
    auto* ll = laumon->add_subcommand("limit", "infinite-product limit J_infinity to order M");
    ll->add_option("--n", n)->required();
    ll->add_option("--order", order);
    ll->callback([&] { action = [&] { return cmd_laumon_limit(n, order); }; });
    auto* lv = laumon->add_subcommand("verify", "checks on J");
    lv->require_subcommand(1);

    auto add_shir = [&](CLI::App* parent) {
        auto* s = parent->add_subcommand("shir", "difference operator annihilates J - sum z_i");
        s->add_option("--n", n)->required();
        s->add_option("--degree", d)->required();
        s->add_option("--operator", op, "derived or printed")->check(CLI::IsMember({"derived", "printed"}));
        s->callback([&] { action = [&] {
            preview_only_for("'global verify cordiff' and 'global verify pieri'");
            return emit(verify_shir(n, d, shir_variant(op)));
        }; });
    };
    add_shir(lv);
    auto* lvj = lv->add_subcommand("junichi", "J_alpha stabilizes to J_infinity along the sector");
    lvj->add_option("--n", n)->required();
    lvj->add_option("--order", order);
    lvj->add_option("--points", points, "schedule length");
    lvj->callback([&] { action = [&] { return emit(verify_junichi(n, order, schedule_for(n, points))); }; });
    auto* lva = lv->add_subcommand("ansum", "A_n lattice sum equals the positive-root product");
    lva->add_option("--rank", rank)->required();
    lva->add_option("--order", order);
    lva->callback([&] { action = [&] { return emit(an_summation_check(rank, order)); }; });
    auto* lvs = lv->add_subcommand("substitution", "J at s = qt matches the coefficients of f_N");
    lvs->add_option("--n", n)->required();
    lvs->add_option("--degree", d)->required();
    lvs->callback([&] { action = [&] { return emit(substitution_check(n, d)); }; });

    auto* ver = app.add_subcommand("verify", "range checks");
    ver->require_subcommand(1);
    add_shir(ver);
    auto* vm = ver->add_subcommand("macdonald", "tableau sum equals the eigen-solve oracle");
    vm->add_option("--max-size", max_size);
    vm->add_option("--max-n", max_n);
    vm->callback([&] { action = [&] { return emit(check_macdonald_oracle(max_size, max_n)); }; });
    auto* ve = ver->add_subcommand("eigen", "D1_N eigen identity");
    ve->add_option("--max-size", max_size);
    ve->add_option("--max-n", max_n);
    ve->callback([&] { action = [&] { return emit(check_macdonald_eigen(max_size, max_n)); }; });
    auto* vc = ver->add_subcommand("cn", "closed forms and printed examples of c_N against the recursion");
    vc->add_option("--max-entry", max_entry);
    vc->add_option("--max-n", max_n);
    vc->callback([&] { action = [&] { return emit(check_c_N(max_entry, max_n)); }; });
    auto* vs = ver->add_subcommand("specialize", "f_N specializes to P_lambda");
    vs->add_option("--max-size", max_size)->default_val(4);
    vs->add_option("--max-n", max_n)->default_val(3);
    vs->callback([&] { action = [&] { return emit(check_specialization(max_size, max_n)); }; });
    auto* vd = ver->add_subcommand("daiichi", "f_N is an eigenfunction of D1_N");
    vd->add_option("--n", n)->required();
    vd->add_option("--truncation", d)->required();
    vd->callback([&] { action = [&] { return emit(verify_dai_ichi(n, d)); }; });

    auto* glob = app.add_subcommand("global", "global Laumon spaces");
    glob->require_subcommand(1);
    auto* gh = glob->add_subcommand("h", "stable limit H of the Weyl sums");
    gh->add_option("--n", n)->required();
    gh->add_option("--weight", weight, "l_1,...,l_{N-1}; use --weight=-1,0 for negative entries")->required();
    gh->add_option("--order", order);
    gh->add_option("--alpha-max", points, "number of sector points")->default_val(6);
    gh->callback([&] { action = [&] { return cmd_global_h(n, weight, order, points); }; });
    auto* ge = glob->add_subcommand("euler", "exact Euler characteristic at a finite degree");
    ge->add_option("--n", n)->required();
    ge->add_option("--weight", weight)->required();
    ge->add_option("--alpha", alpha)->required();
    ge->callback([&] { action = [&] { return cmd_global_euler(n, weight, alpha); }; });
    auto* gc = glob->add_subcommand("closed", "closed form H_0 * prefactor * P");
    gc->add_option("--n", n)->required();
    gc->add_option("--weight", weight)->required();
    gc->add_option("--order", order);
    gc->callback([&] { action = [&] { return cmd_global_closed(n, weight, order); }; });
    auto* gv = glob->add_subcommand("verify", "checks on H");
    gv->require_subcommand(1);
    for (std::string which : {"cordiff", "pieri", "hp", "chibq", "h0", "vanishing"}) {
        auto* s = gv->add_subcommand(which);
        s->add_option("--n", n);
        s->add_option("--weight", weight, "omit to run the default range");
        s->add_option("--order", order);
        s->add_option("--alpha-max", points)->default_val(6);
        s->callback([&, which] { action = [&, which] {
            require(weight.empty() || n >= 2, "--weight needs --n");
            return cmd_global_verify(which, n, weight, order, points);
        }; });
    }

    for (auto* sub : {mac, baker, laumon, lj, la, ll, lv, ver, glob, gh, ge, gc, gv}) sub->fallthrough();
    for (auto* sub : lv->get_subcommands({})) sub->fallthrough();
    for (auto* sub : ver->get_subcommands({})) sub->fallthrough();
    for (auto* sub : gv->get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        set_parallelism(cfg.workers);
        cache = Cache::open(cfg.cache_dir);
        int rc = action();
        if (cache) {
            auto st = cache->stats();
            std::cerr << "cache " << cache->dir().string() << ": " << st.hits << " hits, " << st.misses << " misses, "
                      << st.rewrites << " rewrites\n";
        }
        return rc;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
