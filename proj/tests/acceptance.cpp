// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   maclab_acceptance                 all criteria
//   maclab_acceptance -c 3 -c 12      selected criteria
//   maclab_acceptance --json          full reports on stdout

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "maclab/checks.hpp"

using namespace maclab;

namespace {

struct Outcome {
    bool passed;
    std::string summary;
    Json report;
};

std::string first_witness(const VerificationReport& r) {
    if (r.witnesses.empty()) return "";
    const auto& w = r.witnesses.front();
    std::string s = w.index + " expected " + w.expected + " got " + w.actual;
    if (s.size() > 160) s = s.substr(0, 157) + "...";
    return s;
}

Outcome run_one(const Criterion& c, int workers) {
    set_parallelism(workers);
    VerificationReport r = c.run();
    std::string s = status_name(r.status);
    s += ", " + std::to_string(r.details.value("cases", 0)) + " cases";
    if (!r.passed()) s += ", " + std::to_string(r.witnesses.size()) + " witnesses, first: " + first_witness(r);
    return {r.passed(), s, r.to_json()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> selected;
    bool json = false;
    int workers = 8;
    app.add_option("-c,--criterion", selected, "criterion number (1-12), repeatable")->check(CLI::Range(1, 12));
    app.add_flag("--json", json, "print full JSON reports");
    app.add_option("-j,--parallelism", workers, "worker count for criteria 1-11")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::set<int> want(selected.begin(), selected.end());
    if (want.empty())
        for (int i = 1; i <= 12; ++i) want.insert(i);
    bool determinism = want.count(12) > 0;

    auto all = criteria();
    bool ok = true;
    Json out = Json::array();
    std::vector<std::string> mismatched;
    for (const auto& c : all) {
        if (!want.count(c.number) && !determinism) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome a = run_one(c, determinism ? 1 : workers);
        if (determinism) {
            Outcome b = run_one(c, 8);
            if (a.report.dump() != b.report.dump()) mismatched.push_back(std::to_string(c.number));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!want.count(c.number)) continue;
        ok = ok && a.passed;
        std::cout << "criterion " << c.number << ": " << (a.passed ? "PASS" : "FAIL") << "  " << c.title << "  [" << a.summary
                  << "] (" << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
        out.push_back({{"criterion", c.number}, {"report", a.report}});
    }
    if (determinism) {
        bool same = mismatched.empty();
        ok = ok && same;
        std::string which;
        for (const auto& m : mismatched) which += (which.empty() ? "" : ",") + m;
        std::cout << "criterion 12: " << (same ? "PASS" : "FAIL")
                  << "  reports for criteria 1-11 are byte-identical at parallelism 1 and 8"
                  << (same ? "" : "  [differs: " + which + "]") << std::endl;
    }
    if (json) std::cout << out.dump(2) << std::endl;
    return ok ? 0 : 1;
}
