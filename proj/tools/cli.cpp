#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "linrel/linrel.hpp"

namespace linrel::cli {
namespace {

using nlohmann::json;

struct Config {
    std::string family;
    std::string lambda, alpha, beta;
    std::string scales;
    std::string degrees;
    int max_degree = 3;
    int factors = 3;
    std::string suite = "all";
    std::string format = "json";
    int threads = 0;
    double rtol = kDefaultRtol;
    double atol = kDefaultAtol;
    std::string method = "closed";
    bool inject_failure = false;
};

// Parse and domain problems both end in exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Setup {
    FamilySpec fam;                // base family used for recurrences and weights
    std::vector<Rat> scales;       // per-factor scales, scaled Laguerre only
    json params = json::object();  // parameters as exact strings
    std::string name;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<int> parse_degrees(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split(text)) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size() || v < 0)
            throw ParseError("invalid degree '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("no degrees given");
    return out;
}

Rat need(const std::string& value, const char* flag, const std::string& family) {
    if (value.empty()) throw UsageError(family + " needs " + flag);
    return Rat::parse(value);
}

Setup resolve_family(const Config& cfg) {
    Setup s;
    s.name = cfg.family;
    if (cfg.family == "gegenbauer") {
        const Rat l = need(cfg.lambda, "--lambda", cfg.family);
        s.fam = FamilySpec::gegenbauer(l);
        s.params["lambda"] = l.str();
    } else if (cfg.family == "hermite") {
        s.fam = FamilySpec::hermite();
    } else if (cfg.family == "jacobi") {
        const Rat a = need(cfg.alpha, "--alpha", cfg.family), b = need(cfg.beta, "--beta", cfg.family);
        s.fam = FamilySpec::jacobi(a, b);
        s.params["alpha"] = a.str();
        s.params["beta"] = b.str();
    } else if (cfg.family == "laguerre") {
        const Rat a = need(cfg.alpha, "--alpha", cfg.family);
        s.fam = FamilySpec::laguerre(a);
        s.params["alpha"] = a.str();
    } else if (cfg.family == "scaled-laguerre") {
        const Rat a = need(cfg.alpha, "--alpha", cfg.family);
        if (cfg.scales.empty()) throw UsageError("scaled-laguerre needs --scales a,b");
        std::vector<Rat> given;
        for (const auto& item : split(cfg.scales)) given.push_back(Rat::parse(item));
        if (given.size() == 3 && given[0] == Rat(1)) given.erase(given.begin());
        if (given.size() != 2) throw UsageError("--scales takes a,b (the first factor is unscaled)");
        s.fam = FamilySpec::laguerre(a);
        s.scales = {Rat(1), given[0], given[1]};
        s.params["alpha"] = a.str();
        s.params["a"] = given[0].str();
        s.params["b"] = given[1].str();
    } else {
        throw UsageError("unknown family '" + cfg.family + "'");
    }
    return s;
}

bool is_scaled(const Setup& s) { return !s.scales.empty(); }

EvalMethod parse_method(const std::string& m) {
    if (m == "closed") return EvalMethod::closed;
    if (m == "oracle") return EvalMethod::oracle;
    throw UsageError("unknown method '" + m + "'");
}

unsigned resolve_thread_count(const Config& cfg) {
    if (cfg.threads > 0) return static_cast<unsigned>(cfg.threads);
    if (const char* env = std::getenv("LINREL_THREADS"); env != nullptr && *env != '\0') {
        int v = 0;
        const std::string text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size() || v <= 0)
            throw UsageError("LINREL_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return resolve_threads(0);
}

std::string degrees_text(const std::vector<int>& d, char sep) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(d[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generic tuple checks for the non-contiguous suites

struct Check {
    std::string kind;
    std::vector<int> degrees;
    // nullopt on success, a witness otherwise
    std::function<std::optional<Witness>()> run;
};

SuiteReport run_checks(const std::string& suite, const std::string& evaluator, const std::vector<Check>& checks,
                       unsigned threads, bool inject) {
    SuiteReport rep;
    rep.suite = suite;
    rep.evaluator_id = evaluator;
    rep.rows.resize(checks.size());
    parallel_for(checks.size(), threads, [&](std::size_t i) {
        const Check& c = checks[i];
        TupleRow row;
        row.degrees = c.degrees;
        row.kind = c.kind;
        row.relations = 1;
        try {
            auto w = c.run();
            if (inject && i == 0 && !w) w = Witness{c.degrees, 0, 0, Rat(1), "injected failure"};
            if (w) {
                row.status = TupleStatus::failed;
                row.witness = std::move(w);
            }
        } catch (const FormulaPole& e) {
            row.status = TupleStatus::skipped;
            row.witness = Witness{c.degrees, 0, 0, Rat(0), e.what()};
        } catch (const DenominatorPole& e) {
            row.status = TupleStatus::skipped;
            row.witness = Witness{c.degrees, 0, 0, Rat(0), e.what()};
        } catch (const Error& e) {
            row.status = TupleStatus::failed;
            row.witness = Witness{c.degrees, 0, 0, Rat(0), e.what()};
        }
        rep.rows[i] = std::move(row);
    });
    for (const auto& row : rep.rows) {
        if (row.status == TupleStatus::passed) ++rep.passed;
        if (row.status == TupleStatus::skipped) ++rep.skipped;
        if (row.status == TupleStatus::failed) {
            ++rep.failed;
            if (rep.witnesses.size() < 10) rep.witnesses.push_back(*row.witness);
        }
    }
    return rep;
}

std::optional<Witness> compare(const std::vector<int>& degs, const Rat& closed, const Rat& reference) {
    if (closed == reference) return std::nullopt;
    return Witness{degs, 0, 0, closed - reference, "closed " + closed.str() + " != oracle " + reference.str()};
}

std::optional<Witness> compare(const std::vector<int>& degs, const LinExpansion& closed, const LinExpansion& ref) {
    if (closed == ref) return std::nullopt;
    int top = 0;
    if (!closed.coeffs.empty()) top = std::max(top, closed.coeffs.rbegin()->first);
    if (!ref.coeffs.empty()) top = std::max(top, ref.coeffs.rbegin()->first);
    for (int k = 0; k <= top; ++k)
        if (closed.at(k) != ref.at(k))
            return Witness{degs, 0, 0, closed.at(k) - ref.at(k),
                           "coefficient of degree " + std::to_string(k) + ": closed " + closed.at(k).str() +
                               " != oracle " + ref.at(k).str()};
    return std::nullopt;
}

std::vector<Check> oracle_checks(const Setup& s, int max_degree) {
    std::vector<Check> out;
    const FamilySpec fam = s.fam;
    if (is_scaled(s)) {
        const Rat al = fam.alpha, a = s.scales[1], b = s.scales[2];
        const auto scales = s.scales;
        for (const auto& d : degree_grid(3, max_degree))
            out.push_back({"scaled-integral", d, [d, al, a, b, scales] {
                               return compare(d, scaled_lag_integral_ratio(d[0], d[1], d[2], al, a, b),
                                              oracle_scaled_integral_ratio(al, d, scales));
                           }});
        return out;
    }
    const bool three_lin = fam.kind == FamilyKind::gegenbauer || fam.kind == FamilyKind::hermite;
    for (const auto& d : degree_grid(2, max_degree))
        out.push_back({"linearize", d, [d, fam] {
                           return compare(d, linearize_closed_form(fam, d), oracle_linearize(fam, d));
                       }});
    if (three_lin)
        for (const auto& d : degree_grid(3, max_degree))
            out.push_back({"linearize", d, [d, fam] {
                               return compare(d, linearize_closed_form(fam, d), oracle_linearize(fam, d));
                           }});
    for (const auto& d : degree_grid(3, max_degree))
        out.push_back({"integral", d, [d, fam] {
                           return compare(d, integral_ratio_closed_form(fam, d), oracle_integral_ratio(fam, d));
                       }});
    if (three_lin)
        for (const auto& d : degree_grid(4, max_degree))
            out.push_back({"integral", d, [d, fam] {
                               return compare(d, integral_ratio_closed_form(fam, d), oracle_integral_ratio(fam, d));
                           }});
    return out;
}

std::vector<Check> quad_checks(const Setup& s, int max_degree, double rtol, double atol) {
    std::vector<Check> out;
    const FamilySpec fam = s.fam;
    const auto scales = s.scales;
    const double h0 = h0_numeric(fam);
    for (const auto& d : degree_grid(3, max_degree)) {
        out.push_back({"quadrature", d, [=] () -> std::optional<Witness> {
                           const Rat exact = scales.empty()
                                                 ? integral_ratio_closed_form(fam, d)
                                                 : scaled_lag_integral_ratio(d[0], d[1], d[2], fam.alpha, scales[1],
                                                                             scales[2]);
                           const QuadValue numeric = quad_product_value(fam, d, scales);
                           if (cross_check(exact, numeric, h0, rtol, atol)) return std::nullopt;
                           std::ostringstream msg;
                           msg.precision(17);
                           msg << "exact*h0 = " << exact.to_double() * h0 << ", quadrature = " << numeric.value;
                           return Witness{d, 0, 0, exact, msg.str()};
                       }});
    }
    return out;
}

std::vector<Check> x1_checks(const Setup& s, int max_degree) {
    std::vector<Check> out;
    const Rat l = s.fam.lambda;
    for (int p = 0; p <= max_degree; ++p)
        for (int m = p; m <= max_degree; ++m)
            for (int n = m; n <= max_degree; ++n) {
                std::vector<int> d{p, m, n};
                out.push_back({"x1-identity", d, [d, l] () -> std::optional<Witness> {
                                   const Rat r = geg_x1_identity_residual(d[0], d[1], d[2], l);
                                   if (r.is_zero()) return std::nullopt;
                                   return Witness{d, 0, 0, r, "nonzero residual"};
                               }});
            }
    return out;
}

std::vector<Check> genfun_checks(const Setup& s, int max_degree) {
    std::vector<Check> out;
    if (max_degree < 0) return out;
    if (max_degree > kDefaultGenfunBudget)
        throw UsageError("genfun suite: --max-degree above the truncation budget of " +
                         std::to_string(kDefaultGenfunBudget));
    const FamilySpec fam = s.fam;
    std::vector<int> d{max_degree};
    out.push_back({"generating-function", d, [fam, max_degree, d] () -> std::optional<Witness> {
                       if (genfun_truncation_check(fam, max_degree)) return std::nullopt;
                       return Witness{d, 0, 0, Rat(0), "truncated generating function disagrees with the oracle"};
                   }});
    return out;
}

bool suite_applies(const std::string& suite, const Setup& s) {
    if (suite == "genfun") return !is_scaled(s) && (s.fam.kind == FamilyKind::hermite || s.fam.kind == FamilyKind::laguerre);
    if (suite == "x1") return s.fam.kind == FamilyKind::gegenbauer;
    return true;
}

json witness_json(const std::string& suite, const std::string& kind, const Witness& w) {
    json j{{"suite", suite}, {"kind", kind}, {"degrees", w.degrees}, {"residual", w.residual.str()},
           {"message", w.message}};
    if (w.j > 0) j["pair"] = {w.j, w.k};
    return j;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Setup s = resolve_family(cfg);
    s.fam.require_orthogonality();
    const EvalMethod method = parse_method(cfg.method);
    const unsigned threads = resolve_thread_count(cfg);
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("unknown format '" + cfg.format + "'");
    const int factors = is_scaled(s) ? 3 : cfg.factors;
    if (factors != 3 && factors != 4) throw UsageError("--factors must be 3 or 4");

    static const std::vector<std::string> kAll{"contiguous", "oracle", "quad", "genfun", "x1"};
    std::vector<std::string> suites;
    if (cfg.suite == "all") {
        for (const auto& name : kAll)
            if (suite_applies(name, s)) suites.push_back(name);
    } else if (std::find(kAll.begin(), kAll.end(), cfg.suite) != kAll.end()) {
        if (!suite_applies(cfg.suite, s)) throw UsageError("suite " + cfg.suite + " does not apply to " + s.name);
        suites.push_back(cfg.suite);
    } else {
        throw UsageError("unknown suite '" + cfg.suite + "'");
    }

    std::vector<SuiteReport> reports;
    bool inject = cfg.inject_failure;
    for (const auto& name : suites) {
        if (name == "contiguous") {
            VerifyOptions opt;
            opt.factors = static_cast<std::size_t>(factors);
            opt.scales = s.scales;
            opt.threads = threads;
            opt.inject_failure = inject;
            const auto eval = make_evaluator(s.fam, opt.factors, method, s.scales);
            reports.push_back(verify_suite(s.fam, cfg.max_degree, eval, opt));
        } else if (name == "oracle") {
            reports.push_back(run_checks(name, "closed vs oracle", oracle_checks(s, cfg.max_degree), threads, inject));
        } else if (name == "quad") {
            reports.push_back(run_checks(name, "closed vs gauss quadrature",
                                         quad_checks(s, cfg.max_degree, cfg.rtol, cfg.atol), threads, inject));
        } else if (name == "genfun") {
            reports.push_back(run_checks(name, "generating function", genfun_checks(s, cfg.max_degree), threads, inject));
        } else if (name == "x1") {
            reports.push_back(run_checks(name, "x=1 identity", x1_checks(s, cfg.max_degree), threads, inject));
        }
        inject = false;
    }

    long passed = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
        passed += r.passed;
        failed += r.failed;
        skipped += r.skipped;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (cfg.format == "csv") {
        out << "suite,kind,degrees,status,residual,message\n";
        for (const auto& r : reports)
            for (const auto& row : r.rows) {
                out << r.suite << ',' << row.kind << ',' << degrees_text(row.degrees, ' ') << ','
                    << to_string(row.status) << ',' << (row.witness ? row.witness->residual.str() : "0") << ','
                    << csv_field(row.witness ? row.witness->message : "") << '\n';
            }
    } else {
        json j;
        j["version"] = kReportVersion;
        j["command"] = "verify";
        j["suite"] = cfg.suite;
        j["family"] = s.name;
        j["params"] = s.params;
        json grid{{"max_degree", cfg.max_degree}, {"factors", factors}};
        if (is_scaled(s)) {
            json sc = json::array();
            for (const auto& v : s.scales) sc.push_back(v.str());
            grid["scales"] = sc;
        }
        j["grid"] = grid;
        j["method"] = cfg.method;
        j["threads"] = threads;
        j["passed"] = passed;
        j["failed"] = failed;
        j["skipped"] = skipped;
        json witnesses = json::array();
        json per_suite = json::array();
        for (const auto& r : reports) {
            per_suite.push_back({{"suite", r.suite},
                                 {"evaluator", r.evaluator_id},
                                 {"tuples", r.rows.size()},
                                 {"passed", r.passed},
                                 {"failed", r.failed},
                                 {"skipped", r.skipped}});
            for (const auto& row : r.rows)
                if (row.status == TupleStatus::failed && witnesses.size() < 10)
                    witnesses.push_back(witness_json(r.suite, row.kind, *row.witness));
        }
        j["suites"] = per_suite;
        j["witnesses"] = witnesses;
        j["wall_time_ms"] = elapsed;
        out << j.dump(2) << '\n';
    }
    return failed == 0 ? kExitOk : kExitFailure;
}

struct CoeffEntry {
    int k;
    int degree;
    Rat value;
};

std::vector<CoeffEntry> closed_coefficients(const FamilySpec& fam, const std::vector<int>& d) {
    std::vector<CoeffEntry> out;
    const auto count = d.size();
    const bool gh = fam.kind == FamilyKind::gegenbauer || fam.kind == FamilyKind::hermite;
    const bool geg = fam.kind == FamilyKind::gegenbauer;
    if (gh && count == 2) {
        const int m = std::min(d[0], d[1]), n = std::max(d[0], d[1]);
        for (int k = 0; k <= m; ++k)
            out.push_back({k, m + n - 2 * k, geg ? geg_B(k, m, n, fam.lambda) : herm_b(k, m, n)});
    } else if (gh && count == 3) {
        const int N = d[0] + d[1] + d[2];
        for (int k = 0; k <= N / 2; ++k)
            out.push_back({k, N - 2 * k, geg ? geg_F(k, d[0], d[1], d[2], fam.lambda) : herm_f(k, d[0], d[1], d[2])});
    } else if (fam.kind == FamilyKind::jacobi && count == 2) {
        const int m = std::min(d[0], d[1]), n = std::max(d[0], d[1]);
        for (int k = 0; k <= 2 * m; ++k) out.push_back({k, k + n - m, jac_a(k, m, n, fam.alpha, fam.beta)});
    } else if (fam.kind == FamilyKind::laguerre && count == 2) {
        const int m = std::min(d[0], d[1]), n = std::max(d[0], d[1]);
        for (int k = n - m; k <= n + m; ++k) out.push_back({k, k, lag_lin_coeff(k, m, n, fam.alpha)});
    } else {
        throw UsageError("coeff: no closed form for " + std::to_string(count) + " " + fam.name() + " factors");
    }
    return out;
}

int cmd_coeff(const Config& cfg, std::ostream& out) {
    const Setup s = resolve_family(cfg);
    if (is_scaled(s)) throw UsageError("coeff: scaled-laguerre has no linearization formula; use quad");
    if (cfg.degrees.empty()) throw UsageError("coeff needs --degrees");
    const auto degrees = parse_degrees(cfg.degrees);
    const EvalMethod method = parse_method(cfg.method);
    auto entries = closed_coefficients(s.fam, degrees);
    if (method == EvalMethod::oracle) {
        const auto ref = oracle_linearize(s.fam, degrees);
        for (auto& e : entries) e.value = ref.at(e.degree);
    }
    if (cfg.format == "csv") {
        out << "k,degree,value\n";
        for (const auto& e : entries) out << e.k << ',' << e.degree << ',' << e.value.str() << '\n';
    } else if (cfg.format == "json") {
        json coeffs = json::array();
        for (const auto& e : entries) coeffs.push_back({{"k", e.k}, {"degree", e.degree}, {"value", e.value.str()}});
        json j{{"version", kReportVersion}, {"command", "coeff"}, {"family", s.name}, {"params", s.params},
               {"degrees", degrees},        {"method", cfg.method}, {"coefficients", coeffs}};
        out << j.dump(2) << '\n';
    } else {
        throw UsageError("unknown format '" + cfg.format + "'");
    }
    return kExitOk;
}

int cmd_quad(const Config& cfg, std::ostream& out) {
    const Setup s = resolve_family(cfg);
    s.fam.require_orthogonality();
    if (cfg.degrees.empty()) throw UsageError("quad needs --degrees");
    const auto degrees = parse_degrees(cfg.degrees);
    Rat exact;
    if (is_scaled(s)) {
        if (degrees.size() != 3) throw UsageError("quad: scaled-laguerre takes three degrees");
        exact = scaled_lag_integral_ratio(degrees[0], degrees[1], degrees[2], s.fam.alpha, s.scales[1], s.scales[2]);
    } else {
        exact = parse_method(cfg.method) == EvalMethod::oracle ? oracle_integral_ratio(s.fam, degrees)
                                                                : integral_ratio_closed_form(s.fam, degrees);
    }
    const QuadValue qv = quad_product_value(s.fam, degrees, s.scales);
    const double numeric = qv.value;
    const double h0 = h0_numeric(s.fam);
    const bool agree = cross_check(exact, qv, h0, cfg.rtol, cfg.atol);
    int total = 0;
    for (int d : degrees) total += d;
    if (cfg.format == "csv") {
        out << "degrees,exact,h0,numeric,agree\n";
        out << degrees_text(degrees, ' ') << ',' << exact.str() << ',' << h0 << ',' << numeric << ','
            << (agree ? "true" : "false") << '\n';
    } else if (cfg.format == "json") {
        json j{{"version", kReportVersion},
               {"command", "quad"},
               {"family", s.name},
               {"params", s.params},
               {"degrees", degrees},
               {"order", quad_order_for(total)},
               {"exact_ratio", exact.str()},
               {"h0", h0},
               {"exact_times_h0", exact.to_double() * h0},
               {"numeric", numeric},
               {"magnitude", qv.magnitude},
               {"rtol", cfg.rtol},
               {"atol", cfg.atol},
               {"agree", agree}};
        out << j.dump(2) << '\n';
    } else {
        throw UsageError("unknown format '" + cfg.format + "'");
    }
    return agree ? kExitOk : kExitFailure;
}

void add_family_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--family", cfg.family, "gegenbauer | hermite | jacobi | laguerre | scaled-laguerre")->required();
    cmd->add_option("--lambda", cfg.lambda, "Gegenbauer parameter, exact rational p/q");
    cmd->add_option("--alpha", cfg.alpha, "Jacobi/Laguerre alpha, exact rational p/q");
    cmd->add_option("--beta", cfg.beta, "Jacobi beta, exact rational p/q");
    cmd->add_option("--scales", cfg.scales, "scaled-laguerre argument scales a,b");
    cmd->add_option("--format", cfg.format, "json | csv");
    cmd->add_option("--method", cfg.method, "closed | oracle");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact linearization coefficients and contiguous-relation checks"};
    app.require_subcommand(1);

    auto* coeff = app.add_subcommand("coeff", "print linearization coefficients");
    add_family_options(coeff, cfg);
    coeff->add_option("--degrees", cfg.degrees, "comma-separated degrees, e.g. 1,2");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_family_options(verify, cfg);
    verify->add_option("--suite", cfg.suite, "contiguous | oracle | quad | genfun | x1 | all");
    verify->add_option("--max-degree", cfg.max_degree, "bound on every degree in the grid (-1: empty grid)");
    verify->add_option("--factors", cfg.factors, "number of factors for the contiguous suite (3 or 4)");
    verify->add_option("--threads", cfg.threads, "worker threads (default: LINREL_THREADS, else all cores)");
    verify->add_option("--rtol", cfg.rtol, "relative tolerance for the quadrature suite");
    verify->add_option("--atol", cfg.atol, "absolute tolerance for the quadrature suite");
    verify->add_flag("--inject-failure", cfg.inject_failure)->group("");

    auto* quad = app.add_subcommand("quad", "compare an exact integral with Gauss quadrature");
    add_family_options(quad, cfg);
    quad->add_option("--degrees", cfg.degrees, "comma-separated degrees");
    quad->add_option("--rtol", cfg.rtol, "relative tolerance");
    quad->add_option("--atol", cfg.atol, "absolute tolerance");

    std::vector<const char*> argv{"linrel"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    try {
        if (coeff->parsed()) return cmd_coeff(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (quad->parsed()) return cmd_quad(cfg, out);
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitFailure;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const EigenFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const Error& e) {
        // parse, domain, pole and index errors
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitDomain;
}

}  // namespace linrel::cli
