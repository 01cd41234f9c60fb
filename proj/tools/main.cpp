// tdes: exact inner-product values, verification suites and tables.
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

#include "suites.hpp"

#include "tdes/errors.hpp"
#include "tdes/exact.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;
using tdes::cli::Check;

constexpr int kOk = 0, kUsage = 1, kFailed = 2;

struct Options {
    std::string format = "json";
    tdes::Truncation tr;
};

json truncation_json(const tdes::Truncation& tr) {
    return {{"c_max", tr.c_max}, {"n_max", tr.n_max},     {"det_max", tr.det_max},
            {"entry_max", tr.entry_max}, {"x_samples", tr.x_samples}, {"y", tr.y}};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

int emit_checks(const std::string& suite, const std::vector<Check>& checks, const Options& opt) {
    bool ok = true;
    for (const auto& c : checks)
        ok = ok && c.pass;
    if (opt.format == "json") {
        json results = json::array();
        json tolerances = json::object();
        for (const auto& c : checks) {
            results.push_back({{"check", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
                               {"pass", c.pass}, {"detail", c.detail}});
            tolerances[c.name] = c.tolerance;
        }
        json out = {{"command", "verify"},
                    {"params", {{"suite", suite}, {"truncation", truncation_json(opt.tr)},
                                {"F_predicate", "3/2 < Re s < k-2 and 3/2 < Re w < k-2"}}},
                    {"results", results},
                    {"tolerances", tolerances},
                    {"status", ok ? "pass" : "fail"}};
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "check,value,tolerance,pass\n";
        for (const auto& c : checks)
            std::cout << c.name << "," << fmt(c.value) << "," << fmt(c.tolerance) << ","
                      << (c.pass ? "true" : "false") << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  value=" << fmt(c.value)
                      << "  tol=" << fmt(c.tolerance);
            if (!c.detail.empty())
                std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (ok ? "status: pass" : "status: fail") << "\n";
    }
    return ok ? kOk : kFailed;
}

int cmd_rationality(int k, int s, int w, const Options& opt) {
    const tdes::ParityPoint p{k, s, w};
    if (!p.k_valid())
        throw tdes::DomainError("k must be even and >= 6");
    if (s < 2 || w < 2 || s > k - 2 || w > k - 2)
        throw tdes::DomainError("require 2 <= s, w <= k-2");
    if (!p.opposite_parity())
        throw tdes::DomainError("opposite parity required");

    const tdes::BigRational value = tdes::inner_product_rational(p);
    json result = {{"exact", tdes::to_string(value)},
                   {"numerator", value.get_num().get_str()},
                   {"denominator", value.get_den().get_str()}};
    const double tol = 1e-6;
    bool ok = true;
    const tdes::DomainPoint pt = tdes::to_domain_point(p);
    if (pt.in_D() && pt.in_F()) {
        const double exact = tdes::to_double(tdes::c1_exact(p)) * 0.5 * std::pow(2.0 * M_PI, k + 1.0 - w);
        const tdes::CoeffValue c = tdes::c1_series(pt, opt.tr);
        const double dev = tdes::cli::rel_dev(c.value, exact, tdes::continuation_terms(pt).scale);
        result["numeric_dev"] = dev;
        ok = dev <= tol;
    }

    if (opt.format == "json") {
        json out = {{"command", "rationality"},
                    {"params", {{"k", k}, {"s", s}, {"w", w}}},
                    {"results", json::array({result})},
                    {"tolerances", {{"numeric_dev", tol}}},
                    {"status", ok ? "pass" : "fail"}};
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "k,s,w,numerator,denominator\n"
                  << k << "," << s << "," << w << "," << result["numerator"].get<std::string>() << ","
                  << result["denominator"].get<std::string>() << "\n";
    } else {
        std::cout << "k=" << k << " s=" << s << " w=" << w << "  value=" << result["exact"].get<std::string>();
        if (result.contains("numeric_dev"))
            std::cout << "  numeric_dev=" << fmt(result["numeric_dev"].get<double>());
        std::cout << "\n";
    }
    return ok ? kOk : kFailed;
}

int cmd_table(int k, int lo, int hi, const Options& opt) {
    if (k < 6 || k % 2 != 0)
        throw tdes::DomainError("k must be even and >= 6");
    if (lo > hi)
        throw tdes::ArgumentError("empty range: --min exceeds --max");
    const int a = std::max(lo, 2), b = std::min(hi, k - 2);
    json rows = json::array();
    std::ostringstream csv;
    csv << "k,s,w,numerator,denominator\n";
    for (int s = a; s <= b; ++s)
        for (int w = a; w <= b; ++w) {
            if ((s + w) % 2 == 0)
                continue;
            const tdes::BigRational v = tdes::inner_product_rational({k, s, w});
            const std::string num = v.get_num().get_str(), den = v.get_den().get_str();
            csv << k << "," << s << "," << w << "," << num << "," << den << "\n";
            rows.push_back({{"k", k}, {"s", s}, {"w", w}, {"numerator", num}, {"denominator", den}});
        }
    if (opt.format == "json") {
        json out = {{"command", "table"},
                    {"params", {{"k", k}, {"min", lo}, {"max", hi}}},
                    {"results", rows},
                    {"tolerances", json::object()},
                    {"status", "pass"}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << csv.str();
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const Options& opt) {
    std::vector<Check> checks;
    auto add = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (suite == "specfun" || suite == "all")
        add(tdes::cli::suite_specfun());
    if (suite == "identity" || suite == "all")
        add(tdes::cli::suite_identity(opt.tr));
    if (suite == "spectral" || suite == "all")
        add(tdes::cli::suite_spectral(opt.tr));
    if (suite == "oracle" || suite == "all")
        add(tdes::cli::suite_oracle(opt.tr));
    return emit_checks(suite, checks, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted double Eisenstein series: exact inner products and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--c-max", opt.tr.c_max, "Largest c in the pair sum")->capture_default_str();
    app.add_option("--n-max", opt.tr.n_max, "Terms of the literal n-sum")->capture_default_str();
    app.add_option("--det-max", opt.tr.det_max, "Largest determinant in the matrix sum")->capture_default_str();
    app.add_option("--entry-max", opt.tr.entry_max, "Largest matrix entry in the matrix sum")
        ->capture_default_str();
    app.add_option("--x-samples", opt.tr.x_samples, "Samples of the Fourier integral")->capture_default_str();
    app.add_option("--y", opt.tr.y, "Height of the Fourier integral")->capture_default_str();

    int k = 12, s = 5, w = 2;
    auto* rat = app.add_subcommand("rationality", "Exact inner-product value with a numeric cross-check");
    rat->add_option("--k", k, "Weight")->required();
    rat->add_option("--s", s, "First parameter")->required();
    rat->add_option("--w", w, "Second parameter")->required();

    std::string suite;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "specfun | identity | oracle | spectral | all")
        ->required()
        ->check(CLI::IsMember({"specfun", "identity", "oracle", "spectral", "all"}));

    int tk = 12, lo = 2, hi = 1000;
    auto* tab = app.add_subcommand("table", "Exact values over all opposite-parity pairs for one weight");
    tab->add_option("--k", tk, "Weight")->required();
    tab->add_option("--min", lo, "Smallest s and w")->capture_default_str();
    tab->add_option("--max", hi, "Largest s and w")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*rat)
            return cmd_rationality(k, s, w, opt);
        if (*ver)
            return cmd_verify(suite, opt);
        if (*tab) {
            // Tables default to CSV unless a format was requested.
            if (app.get_option("--format")->count() == 0)
                opt.format = "csv";
            return cmd_table(tk, lo, hi, opt);
        }
    } catch (const tdes::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const tdes::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const tdes::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
