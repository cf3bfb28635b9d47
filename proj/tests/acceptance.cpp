// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden_examples.hpp"
#include "psp/classes.hpp"
#include "psp/maps.hpp"
#include "psp/verify.hpp"

using namespace psp;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

void take_report(Outcome& o, const VerificationReport& r) {
    if (r.pass) return;
    std::string what = r.check + " failed";
    if (!r.counterexamples.empty()) {
        what += " (first at n=" + std::to_string(r.counterexamples.front().n) + ": " + r.counterexamples.front().detail + ")";
    }
    o.require(false, what);
}

bool has_counterexample_at(const VerificationReport& r, int n) {
    return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                       [&](const Counterexample& c) { return c.n == n; });
}

Outcome exact_counts() {
    Outcome o;
    struct Row {
        const char* id;
        int n;
        std::uint64_t value;
    };
    const Row rows[] = {{"ed_ou", 6, 8}, {"eu_od", 4, 3}, {"ou_ed", 4, 3}, {"ou_eu", 2, 2}, {"eu_ou", 2, 2},
                        {"ed_od", 7, 4}, {"od_eu", 7, 3}, {"eu_od", 1, 1}, {"od_eu", 1, 1}, {"ed_ou", 1, 1},
                        {"ou_eu", 1, 1}};
    for (const auto& r : rows) {
        const auto got = count_class(r.n, parse_class_id(r.id));
        o.require(got == r.value, std::string(r.id) + "(" + std::to_string(r.n) + ") = " + std::to_string(got) +
                                      ", expected " + std::to_string(r.value));
    }
    return o;
}

Outcome golden_examples() {
    Outcome o;
    int checked = 0;
    for (const auto& g : psp_test::golden_forward()) {
        ++checked;
        try {
            const auto r = apply(g.map, parse_partition(g.input));
            const bool ok = r.image == parse_partition(g.output) && r.trace.case_label == g.case_label &&
                            (!g.k || r.trace.k == g.k);
            o.require(ok, std::string(map_token(g.map)) + "(" + std::string(g.input) + ") = " + to_string(r.image) +
                              " [" + r.trace.case_label + "]");
        } catch (const std::exception& e) {
            o.require(false, std::string(map_token(g.map)) + "(" + std::string(g.input) + "): " + e.what());
        }
    }
    for (const auto& g : psp_test::golden_inverse()) {
        ++checked;
        try {
            const auto pre = invert(g.map, parse_partition(g.image));
            o.require(pre == parse_partition(g.preimage),
                      std::string(map_token(g.map)) + "^-1(" + std::string(g.image) + ") = " + to_string(pre));
        } catch (const std::exception& e) {
            o.require(false, std::string(map_token(g.map)) + "^-1(" + std::string(g.image) + "): " + e.what());
        }
    }
    o.notes.insert(o.notes.begin(), std::to_string(checked) + " examples");
    return o;
}

Outcome roundtrips() {
    Outcome o;
    std::vector<std::future<VerificationReport>> jobs;
    for (MapId m : all_maps()) {
        const bool fifty = m == MapId::phi1_dd || m == MapId::phi1_uu || m == MapId::phi3 || m == MapId::phi5 ||
                           m == MapId::psi;
        jobs.push_back(std::async(std::launch::async, [m, fifty] { return check_roundtrip(m, fifty ? 50 : 40); }));
    }
    for (auto& j : jobs) take_report(o, j.get());
    return o;
}

Outcome image_exactness() {
    Outcome o;
    std::vector<std::future<VerificationReport>> jobs;
    for (MapId m : {MapId::phi1_dd, MapId::phi1_uu, MapId::phi2, MapId::phi3, MapId::phi4, MapId::phi5}) {
        jobs.push_back(std::async(std::launch::async, [m] { return check_image(m, 36); }));
    }
    for (auto& j : jobs) take_report(o, j.get());
    return o;
}

Outcome chain() {
    Outcome o;
    const auto c = check_chain(50);
    take_report(o, c);
    o.require(c.empirical_threshold.has_value(), "no simultaneous threshold up to 50");
    if (c.empirical_threshold) o.notes.insert(o.notes.begin(), "simultaneous threshold " + std::to_string(*c.empirical_threshold));

    const std::vector<std::pair<std::string, int>> claimed{
        {"od_ed < ed_od", 11}, {"ou_eu < eu_ou", 3}, {"eu_od < ou_ed", 5}, {"od_eu < ed_ou", 2}, {"ed_od < od_eu", 8}};
    const auto specs = proved_inequality_specs();
    for (const auto& [name, n0] : claimed) {
        const auto it = std::find_if(specs.begin(), specs.end(), [&](const InequalitySpec& s) { return s.name == name; });
        if (it == specs.end()) {
            o.require(false, "missing " + name);
            continue;
        }
        const auto r = check_inequality(*it, 50);
        take_report(o, r);
        o.require(r.empirical_threshold == n0,
                  name + " threshold " + (r.empirical_threshold ? std::to_string(*r.empirical_threshold) : "none") +
                      ", expected " + std::to_string(n0));
        if (name == "eu_od < ou_ed") o.require(has_counterexample_at(r, 4), "no equality at n=4");
        if (name == "ed_od < od_eu") o.require(has_counterexample_at(r, 7), "no reversal at n=7");
        if (name == "od_ed < ed_od") o.require(has_counterexample_at(r, 10), "no equality at n=10");
    }
    o.require(count_class(4, classes::eu_od()) == count_class(4, classes::ou_ed()), "eu_od(4) != ou_ed(4)");
    o.require(count_class(7, classes::ed_od()) > count_class(7, classes::od_eu()), "ed_od(7) <= od_eu(7)");
    o.require(count_class(10, classes::od_ed()) == count_class(10, classes::ed_od()), "od_ed(10) != ed_od(10)");
    return o;
}

Outcome excess() {
    Outcome o;
    take_report(o, check_excess(50));
    for (int n = 11; n <= 50; ++n) {
        const auto w = excess_family_witness(n);
        if (!w) {
            o.require(false, "no family witness at n=" + std::to_string(n));
            continue;
        }
        const auto all = excess_witnesses(n);
        o.require(std::find(all.begin(), all.end(), *w) != all.end(), "family witness missing at n=" + std::to_string(n));
    }
    return o;
}

Outcome conjecture() {
    Outcome o;
    const auto r = check_conjecture(30);
    take_report(o, r);
    o.require(r.empirical_threshold.has_value() && *r.empirical_threshold <= 3, "direct count fails for some n in [3, 30]");
    for (int n = 3; n <= 30; ++n) {
        o.require(count_class(2 * n, classes::bar_ou_eu()) < count_class(2 * n + 1, classes::bar_eu_ou()),
                  "count fails at n=" + std::to_string(n));
    }
    return o;
}

Outcome psi_and_monotone() {
    Outcome o;
    for (const auto& r : check_monotone(50)) take_report(o, r);
    for (int k = 0; k <= 25; ++k) {
        o.require(count_class(2 * k, classes::ou_eu()) == count_class(2 * k + 1, classes::ou_eu()),
                  "ou_eu(2k) != ou_eu(2k+1) at k=" + std::to_string(k));
    }
    take_report(o, check_roundtrip(MapId::psi, 50));
    take_report(o, check_image(MapId::psi, 51));
    take_report(o, check_roundtrip(MapId::f_shift, 50));
    take_report(o, check_image(MapId::f_shift, 50));
    take_report(o, check_roundtrip(MapId::bcn_append1, 50));
    take_report(o, check_image(MapId::bcn_append1, 50));
    return o;
}

Outcome nd() {
    Outcome o;
    take_report(o, check_nd_identities(40));
    std::string thresholds;
    for (const auto& r : check_nd_inequalities(50)) {
        take_report(o, r);
        thresholds += (thresholds.empty() ? "" : ", ") + r.check + " from " +
                      (r.empirical_threshold ? std::to_string(*r.empirical_threshold) : std::string("none"));
        o.require(r.empirical_threshold.has_value(), r.check + " has no empirical threshold up to 50");
    }
    o.notes.insert(o.notes.begin(), thresholds);
    return o;
}

Outcome oracle() {
    Outcome o;
    take_report(o, check_classes_oracle(30));
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact small counts", 1.0, exact_counts},
        {2, "worked examples reproduce", 1.0, golden_examples},
        {3, "round trip identity for all nine maps", 120.0, roundtrips},
        {4, "image exactness up to weight 36", 300.0, image_exactness},
        {5, "inequality chain and thresholds", 60.0, chain},
        {6, "excess formula and witness families", 60.0, excess},
        {7, "overline inequality for 3 <= n <= 30", 60.0, conjecture},
        {8, "psi equality and monotonicity", 60.0, psi_and_monotone},
        {9, "nd identities and inequalities", 60.0, nd},
        {10, "class enumeration vs oracle", 60.0, oracle},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) {
            o.require(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
        }
        if (!o.pass) ++failures;

        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2f s)", secs);
        line << buf;
        std::cout << line.str() << '\n';
        for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
