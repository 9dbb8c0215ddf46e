// Command-line front end: exact tables of probabilistic (degenerate)
// Stirling numbers, verification suites, and Euler-basis expansion.

#include "probstirling/euler_basis.hpp"
#include "probstirling/errors.hpp"
#include "probstirling/prob_stirling.hpp"
#include "probstirling/table_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace probstirling;

constexpr int kDefaultOrder = 12;
constexpr int kOrderCap = 24;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

int default_order() {
    if (const char* env = std::getenv("PROB_STIRLING_ORDER")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("PROB_STIRLING_ORDER must be a nonnegative integer");
    }
    return kDefaultOrder;
}

void check_order_cap(int order, bool unsafe) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    if (order > kOrderCap && !unsafe)
        throw std::invalid_argument("order " + std::to_string(order) + " exceeds the cap of " +
                                    std::to_string(kOrderCap) +
                                    " (rational bit growth); pass --unsafe-order to override");
}

std::vector<RVSpec> builtin_grid() {
    return {
        parse_rv("constant:c=1"),      parse_rv("bernoulli:p=1/2"),
        parse_rv("binomial:m=3,p=1/3"), parse_rv("poisson:alpha=1"),
        parse_rv("geometric:p=1/3"),   parse_rv("exponential:alpha=2"),
        parse_rv("gamma:alpha=2,beta=3"), parse_rv("normal:mu=1,sigma2=2"),
        parse_rv("uniform:a=0,b=1"),
    };
}

struct VerifyOptions {
    std::vector<RVSpec> rvs;
    std::vector<Rational> lambdas;
    int order = kDefaultOrder;
    int polys = 10;
    int terms = 40;
};

class CaseLog {
public:
    void pass(const std::string& what) { lines_.push_back("ok: " + what); }
    void fail(const std::string& what, const std::string& detail) {
        lines_.push_back("FAIL: " + what + ": " + detail);
        if (!first_failure_) first_failure_ = what + ": " + detail;
        ++failures_;
    }
    void report(const VerifyReport& r, const std::string& what) {
        if (r.ok) pass(what);
        else fail(what, r.detail);
    }

    int flush(std::ostream& os) const {
        for (const auto& l : lines_) os << l << "\n";
        if (failures_) {
            os << failures_ << " case(s) failed; first failure: " << *first_failure_ << "\n";
            return kExitVerifyFailure;
        }
        os << "all " << lines_.size() << " case(s) passed\n";
        return 0;
    }

private:
    std::vector<std::string> lines_;
    std::optional<std::string> first_failure_;
    int failures_ = 0;
};

std::string case_id(const std::string& suite, const RVSpec& rv, const Rational& lambda) {
    return suite + " " + to_string(rv) + " lambda=" + lambda.str();
}

void run_orthogonality(CaseLog& log, const VerifyOptions& opt) {
    for (const auto& rv : opt.rvs)
        for (const auto& lam : opt.lambdas)
            log.report(verify_orthogonality(rv, lam, opt.order),
                       case_id("orthogonality", rv, lam));
}

void run_vanishing(CaseLog& log, const VerifyOptions& opt) {
    const int max_k = std::min(opt.order, 8);
    for (const auto& rv : opt.rvs) {
        if (!std::holds_alternative<GeometricRV>(rv) && !std::holds_alternative<GammaRV>(rv) &&
            !std::holds_alternative<NormalRV>(rv) && !std::holds_alternative<UniformRV>(rv))
            continue;
        for (const auto& lam : opt.lambdas)
            log.report(verify_vanishing(rv, lam, max_k), case_id("vanishing", rv, lam));
    }
}

void run_closed_forms(CaseLog& log, const VerifyOptions& opt) {
    const int max_n = std::min(opt.order, 8);
    for (const auto& rv : opt.rvs)
        for (const auto& lam : opt.lambdas) {
            bool any = false;
            for (const StirlingKind kind : {StirlingKind::S2Y, StirlingKind::S1Y,
                                            StirlingKind::S2YL, StirlingKind::S1YL}) {
                if (!closed_form_available(rv, kind)) continue;
                const bool degenerate =
                    kind == StirlingKind::S2YL || kind == StirlingKind::S1YL;
                if (degenerate && lam.is_zero()) continue; // covered by the plain kinds
                any = true;
                const std::string id = case_id("closed-forms", rv, lam) + " kind=" +
                                       (kind == StirlingKind::S2Y    ? "S2Y"
                                        : kind == StirlingKind::S1Y  ? "S1Y"
                                        : kind == StirlingKind::S2YL ? "S2YL"
                                                                     : "S1YL");
                const bool infinite_case =
                    std::holds_alternative<NormalRV>(rv) && kind == StirlingKind::S1YL;
                const int bound = infinite_case ? std::min(max_n, 4) : max_n;
                const Triangle t =
                    kind == StirlingKind::S2Y    ? s2y_triangle(rv, bound)
                    : kind == StirlingKind::S1Y  ? s1y_triangle(rv, bound)
                    : kind == StirlingKind::S2YL ? s2y_degen_triangle(rv, lam, bound)
                                                 : s1y_degen_triangle(rv, lam, bound);
                bool ok = true;
                for (int n = 0; n <= bound && ok; ++n)
                    for (int k = 0; k <= n && ok; ++k) {
                        const ClosedFormValue v = closed_form(rv, kind, lam, n, k, opt.terms);
                        if (v.exact) {
                            if (*v.exact != t.at(n, k)) {
                                std::ostringstream os;
                                os << "(n=" << n << ", k=" << k << "): closed form " << *v.exact
                                   << " != series value " << t.at(n, k);
                                log.fail(id, os.str());
                                ok = false;
                            }
                        } else {
                            const double diff = std::abs(*v.partial - t.at(n, k).to_double());
                            if (!(diff < 1e-9)) {
                                std::ostringstream os;
                                os << "(n=" << n << ", k=" << k << "): partial sum " << *v.partial
                                   << " differs from series value " << t.at(n, k).to_double()
                                   << " by " << diff;
                                log.fail(id, os.str());
                                ok = false;
                            }
                        }
                    }
                if (ok) log.pass(id);
            }
            if (!any)
                log.pass(case_id("closed-forms", rv, lam) + " (no closed forms cataloged)");
        }
}

void run_oracle(CaseLog& log, const VerifyOptions& opt) {
    const int max_n = std::min(opt.order, 8);
    for (const auto& rv : opt.rvs)
        for (const auto& lam : opt.lambdas) {
            const std::string id = case_id("oracle", rv, lam);
            bool ok = true;

            const Triangle t2 = lam.is_zero() ? s2y_triangle(rv, max_n)
                                              : s2y_degen_triangle(rv, lam, max_n);
            for (int n = 0; n <= max_n && ok; ++n)
                for (int k = 0; k <= n && ok; ++k) {
                    const Rational m = lam.is_zero()
                                           ? s2y_via_moments(rv, n, k)
                                           : s2y_degen_via_moments(rv, lam, n, k);
                    if (m != t2.at(n, k)) {
                        std::ostringstream os;
                        os << "moment oracle (n=" << n << ", k=" << k << "): " << m
                           << " != " << t2.at(n, k);
                        log.fail(id, os.str());
                        ok = false;
                    }
                }

            if (ok && !mean(rv).is_zero()) {
                const EgfSeries t = EgfSeries::identity(opt.order);
                const EgfSeries ey = degen_mgf_series(rv, lam, opt.order) - Rational(1);
                const EgfSeries ey_bar = reversion(ey);
                if (compose(ey, ey_bar) != t || compose(ey_bar, ey) != t) {
                    log.fail(id, "compositional inverse of e_Y does not round-trip");
                    ok = false;
                }
                const EgfSeries fbar = lam.is_zero()
                                           ? fy_bar_series(rv, opt.order)
                                           : fy_bar_degen_series(rv, lam, opt.order);
                const EgfSeries f = reversion(fbar);
                if (ok && (compose(fbar, f) != t || compose(f, fbar) != t)) {
                    log.fail(id, "compositional inverse of log-mgf does not round-trip");
                    ok = false;
                }
            }

            if (ok && lam.is_zero()) {
                const CumulantSequence kappa = cumulants(rv, max_n);
                const EgfSeries fbar = fy_bar_series(rv, max_n);
                for (int n = 1; n <= max_n && ok; ++n)
                    if (kappa.at(n) != fbar[n]) {
                        std::ostringstream os;
                        os << "cumulant formula at n=" << n << ": " << kappa.at(n)
                           << " != log-series coefficient " << fbar[n];
                        log.fail(id, os.str());
                        ok = false;
                    }
            }

            if (ok) log.pass(id);
        }
}

Poly random_poly(std::mt19937_64& gen, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    const int d = deg(gen);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = Rational(num(gen), den(gen));
    return Poly(std::move(c));
}

void run_euler_roundtrip(CaseLog& log, const VerifyOptions& opt) {
    const int max_deg = std::min(opt.order, 8);
    std::mt19937_64 gen(20240607);
    for (const auto& rv : opt.rvs)
        for (const auto& lam : opt.lambdas) {
            const std::string id = case_id("euler-roundtrip", rv, lam);
            bool ok = true;

            std::vector<Poly> basis;
            for (int r = 0; r <= max_deg; ++r) basis.push_back(euler_poly(rv, r, lam));

            for (int trial = 0; trial < opt.polys && ok; ++trial) {
                const Poly q = random_poly(gen, max_deg);
                const auto a = expand_in_euler_basis(rv, q, lam);
                const auto a_pt =
                    expand_in_euler_basis(rv, q, lam, EulerExpandFormula::PointEvaluation);
                const auto a_dv =
                    expand_in_euler_basis(rv, q, lam, EulerExpandFormula::Derivative);
                if (a != a_pt || a != a_dv) {
                    log.fail(id, "the three coefficient formulas disagree");
                    ok = false;
                    break;
                }
                Poly back;
                for (size_t r = 0; r < a.size(); ++r)
                    back = back + a[r] * basis[r];
                if (!(back == q)) {
                    std::ostringstream os;
                    os << "round trip is not the identity: " << q << " -> " << back;
                    log.fail(id, os.str());
                    ok = false;
                }
            }

            const int add_n = std::min(opt.order, 6);
            for (int n = 0; n <= add_n && ok; ++n) {
                const VerifyReport r = verify_euler_addition(rv, n, lam);
                if (!r.ok) {
                    log.fail(id, r.detail);
                    ok = false;
                }
            }
            if (ok) log.pass(id);
        }
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt) {
    CaseLog log;
    if (suite == "orthogonality") run_orthogonality(log, opt);
    else if (suite == "closed-forms") run_closed_forms(log, opt);
    else if (suite == "vanishing") run_vanishing(log, opt);
    else if (suite == "euler-roundtrip") run_euler_roundtrip(log, opt);
    else if (suite == "oracle") run_oracle(log, opt);
    else if (suite == "all") {
        run_orthogonality(log, opt);
        run_closed_forms(log, opt);
        run_vanishing(log, opt);
        run_euler_roundtrip(log, opt);
        run_oracle(log, opt);
    } else {
        throw std::invalid_argument("unknown verify suite '" + suite + "'");
    }
    return log.flush(std::cout);
}

Poly parse_poly(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(Rational::parse(item));
    if (c.empty()) throw std::invalid_argument("poly: empty coefficient list");
    return Poly(std::move(c));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact probabilistic (degenerate) Stirling numbers, their "
                 "verification suites, and probabilistic Euler-basis expansion"};
    app.require_subcommand(1);

    std::string rv_text, kind_text, lambda_text = "0", format = "json";
    int order = default_order();
    bool with_float = false, unsafe_order = false;

    CLI::App* table = app.add_subcommand("table", "Print one exact table as JSON or CSV");
    table->add_option("--rv", rv_text, "random variable, e.g. geometric:p=1/3")->required();
    table->add_option("--kind", kind_text,
                      "S2Y|S1Y|S2YL|S1YL|CUMULANTS|EULER|ADELL_BENYI")->required();
    table->add_option("--lambda", lambda_text, "degenerate parameter (degenerate kinds only)");
    table->add_option("--order", order, "truncation order N");
    table->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_flag("--float", with_float, "add a decimal column next to the exact values");
    table->add_flag("--unsafe-order", unsafe_order, "lift the order cap of 24");

    std::string suite;
    VerifyOptions vopt;
    std::string verify_rv_text, verify_lambda_text;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite,
                       "orthogonality|closed-forms|vanishing|euler-roundtrip|oracle|all")
        ->required();
    verify->add_option("--rv", verify_rv_text, "restrict to one random variable");
    verify->add_option("--lambda", verify_lambda_text, "restrict to one degenerate parameter");
    verify->add_option("--order", order, "truncation order N");
    verify->add_option("--polys", vopt.polys, "random polynomials per Euler round-trip case");
    verify->add_option("--terms", vopt.terms, "terms for the truncated infinite sum");
    verify->add_flag("--unsafe-order", unsafe_order, "lift the order cap of 24");

    std::string poly_text, expand_lambda_text = "0";
    std::string expand_rv_text;
    CLI::App* expand = app.add_subcommand(
        "expand", "Expand a polynomial in the probabilistic Euler basis");
    expand->add_option("--rv", expand_rv_text, "random variable with nonzero mean")->required();
    expand->add_option("--poly", poly_text,
                       "comma-separated rational coefficients, lowest degree first")
        ->required();
    expand->add_option("--lambda", expand_lambda_text, "degenerate parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (table->parsed()) {
        check_order_cap(order, unsafe_order);
        const RVSpec rv = parse_rv(rv_text);
        const TableKind kind = parse_table_kind(kind_text);
        const Rational lambda = Rational::parse(lambda_text);
        if (!lambda.is_zero() && !table_kind_is_degenerate(kind))
            throw std::invalid_argument("--lambda applies only to the degenerate kinds "
                                        "S2YL and S1YL");
        const TableDocument doc = build_table(rv, kind, lambda, order);
        std::cout << (format == "csv" ? to_csv(doc, with_float) : to_json(doc, with_float));
        if (format == "json") std::cout << "\n";
        return 0;
    }

    if (verify->parsed()) {
        check_order_cap(order, unsafe_order);
        vopt.order = order;
        vopt.rvs = verify_rv_text.empty() ? builtin_grid()
                                          : std::vector<RVSpec>{parse_rv(verify_rv_text)};
        if (verify_lambda_text.empty())
            vopt.lambdas = {Rational(0), Rational(1, 2)};
        else
            vopt.lambdas = {Rational::parse(verify_lambda_text)};
        return cmd_verify(suite, vopt);
    }

    // expand
    const RVSpec rv = parse_rv(expand_rv_text);
    const Poly q = parse_poly(poly_text);
    const Rational lambda = Rational::parse(expand_lambda_text);
    const auto a = expand_in_euler_basis(rv, q, lambda);
    Poly back;
    for (size_t r = 0; r < a.size(); ++r)
        back = back + a[r] * euler_poly(rv, static_cast<int>(r), lambda);
    for (size_t r = 0; r < a.size(); ++r) {
        if (r) std::cout << ", ";
        std::cout << a[r];
    }
    std::cout << "\n";
    if (back == q) {
        std::cout << "reconstruction: exact\n";
        return 0;
    }
    std::cout << "reconstruction: FAILED\n";
    return kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const probstirling::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const probstirling::NotAvailableError& e) {
        std::cerr << "not available: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
