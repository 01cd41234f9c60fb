// Acceptance runner: prints one PASS/FAIL line per criterion, followed by
// the individual measurements. Exit status is nonzero if any criterion fails.

#include "suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using tdes::cli::Check;

struct Criterion {
    int id;
    const char* title;
    double time_budget_s;
    std::function<std::vector<Check>()> run;
};

template <class... V>
std::vector<Check> join(V... parts) {
    std::vector<Check> out;
    (out.insert(out.end(), parts.begin(), parts.end()), ...);
    return out;
}

std::vector<Criterion> criteria() {
    namespace c = tdes::cli;
    const tdes::Truncation tr;
    return {
        {1, "rationality sweep k = 6..20", 30.0, [] { return std::vector<Check>{c::check_rationality_sweep()}; }},
        {2, "exact c(1) equals the series value", 900.0, [tr] { return c::checks_series_vs_exact(tr); }},
        {3, "remainder vanishes on integer points of F and D", 1800.0, [tr] { return c::checks_residual(tr); }},
        {4, "2F1 closed form at 1/2 is exact", 60.0, [] { return c::checks_closed_form(); }},
        {5, "special-function identities", 60.0, [] { return c::suite_specfun(); }},
        {6, "series coefficients match the matrix-sum oracle", 600.0, [tr] { return c::suite_oracle(tr); }},
        {7, "functional equation w <-> k - w", 60.0, [] { return c::checks_functional_equation(); }},
        {8, "spectral constancy at k = 12", 300.0,
         [tr] { return join(c::checks_tau(), c::checks_petersson(tr)); }},
    };
}

bool run(const Criterion& cr) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
        checks = cr.run();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = error.empty() && !checks.empty();
    double worst = 0.0;
    for (const Check& ch : checks) {
        ok = ok && ch.pass;
        worst = std::max(worst, ch.tolerance > 0.0 ? ch.value / ch.tolerance : ch.value);
    }
    const bool in_time = secs <= cr.time_budget_s;
    std::printf("%s criterion %d: %s  [%zu checks, worst value/tol = %.3g, %.1f s of %.0f s budget]\n",
                ok && in_time ? "PASS" : "FAIL", cr.id, cr.title, checks.size(), worst, secs, cr.time_budget_s);
    for (const Check& ch : checks)
        std::printf("    %s %s: %.6g (tol %.3g)%s%s\n", ch.pass ? "ok  " : "FAIL", ch.name.c_str(), ch.value,
                    ch.tolerance, ch.detail.empty() ? "" : "  ", ch.detail.c_str());
    if (!error.empty())
        std::printf("    error: %s\n", error.c_str());
    return ok && in_time;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int which = 0;
    app.add_option("--criterion", which, "Criterion number, 0 for all")->check(CLI::Range(0, 8));
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    for (const Criterion& cr : criteria())
        if (which == 0 || which == cr.id)
            ok = run(cr) && ok;
    return ok ? 0 : 1;
}
