#include "psp/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <unordered_map>
#include <unordered_set>

namespace psp {

namespace {

class Recorder {
public:
    explicit Recorder(VerificationReport& r) : report_(r) {}

    // Records a violation; `fatal` decides whether it fails the check.
    void add(int n, std::string detail, bool fatal = true) {
        if (fatal) report_.pass = false;
        if (report_.counterexamples.size() < kMaxCounterexamples) {
            report_.counterexamples.push_back({n, std::move(detail)});
        }
    }

private:
    VerificationReport& report_;
};

bool admits(ParityFilter f, int n) {
    switch (f) {
        case ParityFilter::all: return true;
        case ParityFilter::even: return n % 2 == 0;
        case ParityFilter::odd: return n % 2 != 0;
    }
    return false;
}

bool holds(Relation rel, std::uint64_t a, std::uint64_t b) {
    switch (rel) {
        case Relation::less: return a < b;
        case Relation::less_equal: return a <= b;
        case Relation::equal: return a == b;
    }
    return false;
}

std::string_view symbol(Relation rel) {
    switch (rel) {
        case Relation::less: return "<";
        case Relation::less_equal: return "<=";
        case Relation::equal: return "=";
    }
    return "?";
}

InequalitySpec strict(std::string_view lhs, std::string_view rhs, std::optional<int> n0 = std::nullopt) {
    InequalitySpec s;
    s.name = std::string(lhs) + " < " + std::string(rhs);
    s.lhs = parse_class_id(lhs);
    s.rhs = parse_class_id(rhs);
    s.relation = Relation::less;
    s.claimed_threshold = n0;
    return s;
}

std::string count_detail(const InequalitySpec& s, int n, std::uint64_t a, std::uint64_t b) {
    return to_string(s.lhs) + "(" + std::to_string(n) + ")=" + std::to_string(a) + " vs " +
           to_string(s.rhs) + "(" + std::to_string(n + s.rhs_shift) + ")=" + std::to_string(b) +
           ", expected " + std::string(symbol(s.relation));
}

// Sorted so that counterexamples at one weight follow the enumeration order.
struct PendingCex {
    Partition key;
    std::string detail;
};

void flush(Recorder& rec, int n, std::vector<PendingCex>& pending) {
    std::sort(pending.begin(), pending.end(),
              [](const PendingCex& a, const PendingCex& b) { return a.key > b.key; });
    for (auto& p : pending) rec.add(n, std::move(p.detail));
    pending.clear();
}

bool disjointness_checked(MapId m) {
    return m == MapId::phi2 || m == MapId::phi4 || m == MapId::phi5;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
    return out;
}

int max_n(std::optional<int> override_n, int fallback) { return override_n.value_or(fallback); }

}  // namespace

VerificationReport check_inequality(const InequalitySpec& spec, int n_max) {
    VerificationReport rep;
    rep.check = spec.name;
    rep.n_hi = n_max;
    Recorder rec(rep);
    std::optional<int> first;
    std::optional<int> last_bad;
    for (int n = 0; n <= n_max; ++n) {
        if (!admits(spec.parity, n)) continue;
        if (!first) first = n;
        const auto a = count_class(n, spec.lhs);
        const auto b = count_class(n + spec.rhs_shift, spec.rhs);
        if (holds(spec.relation, a, b)) continue;
        last_bad = n;
        const bool fatal = spec.claimed_threshold && n >= *spec.claimed_threshold;
        std::string detail = count_detail(spec, n, a, b);
        if (!fatal && spec.claimed_threshold) detail += " (below claimed range)";
        rec.add(n, std::move(detail), fatal);
    }
    rep.n_lo = first.value_or(0);
    if (!last_bad) {
        rep.empirical_threshold = first;
    } else {
        for (int n = *last_bad + 1; n <= n_max; ++n) {
            if (admits(spec.parity, n)) {
                rep.empirical_threshold = n;
                break;
            }
        }
    }
    return rep;
}

std::vector<InequalitySpec> chain_specs() {
    const std::vector<std::string_view> chain{"od_ed", "ed_od", "eu_od", "od_eu",
                                              "ou_ed", "ou_eu", "ed_ou", "eu_ou"};
    std::vector<InequalitySpec> out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back(strict(chain[i], chain[i + 1]));
    return out;
}

std::vector<InequalitySpec> proved_inequality_specs() {
    return {
        strict("od_ed", "ed_od", 11),
        strict("ou_eu", "eu_ou", 3),
        strict("eu_od", "ou_ed", 5),
        strict("od_eu", "ed_ou", 2),
        strict("ed_od", "od_eu", 8),
    };
}

ChainSummary chain_summary(int n_max) {
    ChainSummary s;
    bool all_have = true;
    int worst = 0;
    for (const auto& spec : chain_specs()) {
        s.adjacent.push_back(check_inequality(spec, n_max));
        const auto& t = s.adjacent.back().empirical_threshold;
        if (!t) all_have = false;
        else worst = std::max(worst, *t);
    }
    if (all_have) s.simultaneous_threshold = worst;
    return s;
}

VerificationReport check_chain(int n_max) {
    VerificationReport rep;
    rep.check = "chain: seven adjacent strict relations simultaneously";
    rep.n_hi = n_max;
    const auto specs = chain_specs();
    std::vector<std::vector<std::uint64_t>> counts;
    counts.push_back(count_sequence(specs.front().lhs, n_max));
    for (const auto& s : specs) counts.push_back(count_sequence(s.rhs, n_max));
    Recorder rec(rep);
    std::optional<int> last_bad;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::string> failing;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const auto a = counts[i][static_cast<std::size_t>(n)];
            const auto b = counts[i + 1][static_cast<std::size_t>(n)];
            if (a >= b) failing.push_back(specs[i].name + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
        }
        if (failing.empty()) continue;
        last_bad = n;
        rec.add(n, join(failing), false);
    }
    const int t = last_bad ? *last_bad + 1 : 0;
    if (t <= n_max) rep.empirical_threshold = t;
    rep.pass = rep.empirical_threshold.has_value();
    return rep;
}

VerificationReport check_roundtrip(MapId m, int n_max) {
    VerificationReport rep;
    rep.check = "roundtrip " + std::string(map_name(m));
    rep.n_hi = n_max;
    Recorder rec(rep);
    std::optional<int> first;
    const ClassSpec dom = domain_class(m);
    const ClassSpec cod = codomain_class(m);
    const int delta = weight_shift(m);
    for (int n = 0; n <= n_max; ++n) {
        if (!domain_admits_weight(m, n)) continue;
        if (!first) first = n;
        for_each_member(n, dom, [&](const Partition& lam) {
            try {
                const MapResult r = apply(m, lam);
                if (r.image.weight() != n + delta) {
                    rec.add(n, to_string(lam) + " -> " + to_string(r.image) + ": weight shift is not " +
                                   std::to_string(delta));
                    return;
                }
                if (!is_member(r.image, cod)) {
                    rec.add(n, to_string(lam) + " -> " + to_string(r.image) + ": outside " + to_string(cod));
                    return;
                }
                const Partition back = invert(m, r.image);
                if (back != lam) {
                    rec.add(n, to_string(lam) + " -> " + to_string(r.image) + " -> " + to_string(back) + " (" +
                                   r.trace.case_label + ")");
                }
            } catch (const std::exception& e) {
                rec.add(n, to_string(lam) + ": " + e.what());
            }
        });
    }
    rep.n_lo = first.value_or(0);
    return rep;
}

VerificationReport check_image(MapId m, int n_max) {
    VerificationReport rep;
    rep.check = "image " + std::string(map_name(m));
    rep.n_hi = n_max;
    Recorder rec(rep);
    std::optional<int> first;
    const ClassSpec dom = domain_class(m);
    const ClassSpec cod = codomain_class(m);
    const int delta = weight_shift(m);
    for (int n = 0; n <= n_max; ++n) {
        if (!domain_admits_weight(m, n)) continue;
        if (!first) first = n;
        const int target = n + delta;
        std::vector<PendingCex> pending;

        std::unordered_map<Partition, Partition> forward;
        for_each_member(n, dom, [&](const Partition& lam) {
            const Partition mu = apply(m, lam).image;
            const auto [it, fresh] = forward.emplace(mu, lam);
            if (!fresh) {
                pending.push_back({mu, "not injective: " + to_string(it->second) + " and " + to_string(lam) +
                                           " both map to " + to_string(mu)});
            }
        });

        std::unordered_set<Partition> characterized;
        for_each_member(target, cod, [&](const Partition& mu) {
            const auto comps = image_components(m, mu);
            if (!comps.empty()) characterized.insert(mu);
            if (disjointness_checked(m) && comps.size() > 1) {
                pending.push_back({mu, to_string(mu) + " lies in several components: " + join(comps)});
            }
            if (m == MapId::phi4) {
                const bool in_union = std::any_of(comps.begin(), comps.end(),
                                                  [](const std::string& c) { return c.rfind("C5", 0) == 0; });
                if (in_union != phi4_c5_aggregate(mu)) {
                    pending.push_back({mu, to_string(mu) + ": C5 subcases and aggregate C5 disagree"});
                }
            }
            if (!comps.empty() && forward.count(mu) == 0) {
                pending.push_back({mu, to_string(mu) + " satisfies " + comps.front() + " but is not an image"});
            }
        });
        for (const auto& [mu, lam] : forward) {
            if (characterized.count(mu) == 0) {
                pending.push_back({mu, to_string(lam) + " -> " + to_string(mu) + " (" +
                                           apply(m, lam).trace.case_label + ") is outside the characterization"});
            }
        }
        for (const auto& w : non_image_witnesses(m, target)) {
            if (!is_member(w, cod)) {
                pending.push_back({w, "witness " + to_string(w) + " is not in " + to_string(cod)});
            } else if (characterized.count(w) != 0 || forward.count(w) != 0) {
                pending.push_back({w, "witness " + to_string(w) + " is in the image"});
            }
        }
        flush(rec, target, pending);
    }
    rep.n_lo = first.value_or(0) + delta;
    rep.n_hi = n_max + delta;
    return rep;
}

VerificationReport check_excess(int n_max) {
    VerificationReport rep;
    rep.check = "excess ed_od - od_ed";
    rep.n_hi = n_max;
    Recorder rec(rep);
    for (int n = 0; n <= n_max; ++n) {
        const auto big = static_cast<std::int64_t>(count_class(n, classes::ed_od()));
        const auto small = static_cast<std::int64_t>(count_class(n, classes::od_ed()));
        const auto witnesses = excess_witnesses(n);
        if (big - small != static_cast<std::int64_t>(witnesses.size())) {
            rec.add(n, "difference " + std::to_string(big - small) + " but " + std::to_string(witnesses.size()) +
                           " witnesses");
        }
        if (const auto fam = excess_family_witness(n)) {
            if (std::find(witnesses.begin(), witnesses.end(), *fam) == witnesses.end()) {
                rec.add(n, "family witness " + to_string(*fam) + " is missing");
            }
        }
    }
    return rep;
}

VerificationReport check_conjecture(int n_max) {
    VerificationReport rep;
    rep.check = "bar-ou_eu(2n) < bar-eu_ou(2n+1)";
    rep.n_lo = 1;
    rep.n_hi = n_max;
    Recorder rec(rep);
    std::optional<int> last_bad;
    for (int n = 1; n <= n_max; ++n) {
        const auto a = count_class(2 * n, classes::bar_ou_eu());
        const auto b = count_class(2 * n + 1, classes::bar_eu_ou());
        const bool asserted = n >= 3;
        if (a >= b) {
            last_bad = n;
            rec.add(n, "counts " + std::to_string(a) + " vs " + std::to_string(b) +
                           (asserted ? "" : " (outside asserted range)"),
                    asserted);
        }
        if (!asserted) continue;

        // Injection whose image lies in the characterization...
        std::unordered_set<Partition> images;
        bool structural = true;
        for_each_member(2 * n, classes::bar_ou_eu(), [&](const Partition& lam) {
            const Partition mu = apply(MapId::phi5, lam).image;
            if (!images.insert(mu).second) {
                structural = false;
                rec.add(n, "phi5 is not injective at " + to_string(mu));
            }
            if (!image_membership(MapId::phi5, mu).in_image()) {
                structural = false;
                rec.add(n, to_string(lam) + " -> " + to_string(mu) + " is outside E1-E3");
            }
        });
        // ...and a codomain member outside both.
        const auto ws = non_image_witnesses(MapId::phi5, 2 * n + 1);
        const bool witnessed =
            std::any_of(ws.begin(), ws.end(), [&](const Partition& w) {
                return is_member(w, classes::bar_eu_ou()) && !image_membership(MapId::phi5, w).in_image() &&
                       images.count(w) == 0;
            });
        if (!witnessed) rec.add(n, "no complement witness outside the image");
        if (structural && witnessed && images.size() >= b) {
            rec.add(n, "structural argument inconsistent with counts");
        }
    }
    rep.empirical_threshold = last_bad ? *last_bad + 1 : 1;
    if (*rep.empirical_threshold > n_max) rep.empirical_threshold.reset();
    return rep;
}

VerificationReport check_nd_identities(int n_max) {
    struct Identity {
        std::string_view total, part, rest;
    };
    static constexpr Identity ids[] = {
        {"eu_ou", "eu_od", "eu_ond"}, {"ou_eu", "od_eu", "ond_eu"}, {"ou_eu", "ou_ed", "ou_end"},
        {"eu_od", "ed_od", "end_od"}, {"ou_ed", "od_ed", "ond_ed"}, {"od_eu", "od_ed", "od_end"},
        {"eu_ou", "ed_ou", "end_ou"},
    };
    VerificationReport rep;
    rep.check = "nd difference identities";
    rep.n_hi = n_max;
    Recorder rec(rep);
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& id : ids) {
            const auto t = count_class(n, parse_class_id(id.total));
            const auto p = count_class(n, parse_class_id(id.part));
            const auto r = count_class(n, parse_class_id(id.rest));
            if (t != p + r) {
                rec.add(n, std::string(id.total) + " - " + std::string(id.part) + " = " +
                               std::to_string(t - p) + " but " + std::string(id.rest) + " = " + std::to_string(r));
            }
        }
    }
    return rep;
}

std::vector<InequalitySpec> nd_inequality_specs() {
    return {
        strict("ou_end", "ond_eu"),
        strict("ond_eu", "eu_ond"),
        strict("end_od", "od_end"),
        strict("od_end", "ond_ed"),
    };
}

std::vector<VerificationReport> check_nd_inequalities(int n_max) {
    std::vector<VerificationReport> out;
    for (const auto& s : nd_inequality_specs()) out.push_back(check_inequality(s, n_max));
    return out;
}

std::vector<InequalitySpec> monotone_specs() {
    std::vector<InequalitySpec> out;
    InequalitySpec plus_two = strict("ou_eu", "ou_eu", 1);
    plus_two.name = "ou_eu(n) < ou_eu(n+2)";
    plus_two.rhs_shift = 2;
    out.push_back(plus_two);

    InequalitySpec successor = strict("ed_ou", "ed_ou", 2);
    successor.name = "ed_ou(n) < ed_ou(n+1)";
    successor.rhs_shift = 1;
    out.push_back(successor);

    InequalitySpec odd_even = strict("ou_eu", "ou_eu", 1);
    odd_even.name = "ou_eu(2k-1) < ou_eu(2k)";
    odd_even.rhs_shift = 1;
    odd_even.parity = ParityFilter::odd;
    out.push_back(odd_even);

    InequalitySpec psi_eq = strict("ou_eu", "ou_eu", 0);
    psi_eq.name = "ou_eu(2k) = ou_eu(2k+1)";
    psi_eq.relation = Relation::equal;
    psi_eq.rhs_shift = 1;
    psi_eq.parity = ParityFilter::even;
    out.push_back(psi_eq);
    return out;
}

std::vector<VerificationReport> check_monotone(int n_max) {
    std::vector<VerificationReport> out;
    for (const auto& s : monotone_specs()) out.push_back(check_inequality(s, n_max));
    return out;
}

VerificationReport check_classes_oracle(int n_max) {
    VerificationReport rep;
    rep.check = "class enumeration vs filtered oracle";
    rep.n_hi = n_max;
    Recorder rec(rep);
    const auto specs = all_class_specs();
    for (int n = 0; n <= n_max; ++n) {
        const auto everything = enumerate_all(n);
        for (const auto& c : specs) {
            std::vector<Partition> filtered;
            for (const auto& p : everything) {
                if (is_member(p, c)) filtered.push_back(p);
            }
            const auto direct = enumerate_class(n, c);
            if (direct == filtered) continue;
            const bool ordered = std::is_sorted(direct.begin(), direct.end(), std::greater<>());
            rec.add(n, to_string(c) + ": direct " + std::to_string(direct.size()) + " vs oracle " +
                           std::to_string(filtered.size()) + (ordered ? "" : " (direct output out of order)"));
        }
    }
    return rep;
}

VerificationReport check_class_relations(int n_max) {
    VerificationReport rep;
    rep.check = "class inclusions and overline parity";
    rep.n_hi = n_max;
    Recorder rec(rep);
    const std::pair<ClassSpec, ClassSpec> inclusions[] = {
        {classes::ed_od(), classes::eu_od()},
        {classes::ou_ed(), classes::ou_eu()},
        {classes::ed_ou(), classes::eu_ou()},
    };
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& [sub, sup] : inclusions) {
            for_each_member(n, sub, [&](const Partition& p) {
                if (!is_member(p, sup)) rec.add(n, to_string(p) + " in " + to_string(sub) + " but not " + to_string(sup));
            });
        }
        if (n % 2 == 1 && count_class(n, classes::bar_ou_eu()) != 0) rec.add(n, "bar-ou_eu nonzero at odd weight");
        if (n % 2 == 0 && count_class(n, classes::bar_eu_ou()) != 0) rec.add(n, "bar-eu_ou nonzero at even weight");
        if (n % 2 == 1 && n >= 3) {
            for_each_member(n, classes::bar_eu_ou(), [&](const Partition& p) {
                if (p.length() % 2 != 0) rec.add(n, to_string(p) + " in bar-eu_ou has odd length");
            });
        }
    }
    return rep;
}

std::vector<std::string_view> suite_names() {
    return {"all", "chain", "images", "roundtrips", "conjecture", "nd", "monotone", "classes"};
}

bool is_suite(std::string_view name) {
    const auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerificationReport> run_suite(std::string_view suite, std::optional<int> n_max) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
    using Task = std::function<std::vector<VerificationReport>()>;
    std::vector<Task> tasks;
    const auto one = [](auto f) { return Task([f] { return std::vector<VerificationReport>{f()}; }); };
    const bool all = suite == "all";

    if (all || suite == "classes") {
        tasks.push_back(one([=] { return check_classes_oracle(max_n(n_max, Defaults::oracle)); }));
        tasks.push_back(one([=] { return check_class_relations(max_n(n_max, Defaults::maps)); }));
    }
    if (all || suite == "chain") {
        for (const auto& s : proved_inequality_specs()) {
            tasks.push_back(one([=] { return check_inequality(s, max_n(n_max, Defaults::counts)); }));
        }
        tasks.push_back(one([=] { return check_chain(max_n(n_max, Defaults::counts)); }));
        tasks.push_back(one([=] { return check_excess(max_n(n_max, Defaults::counts)); }));
    }
    if (all || suite == "roundtrips") {
        for (MapId m : all_maps()) {
            const bool cheap = m == MapId::phi1_dd || m == MapId::phi1_uu || m == MapId::phi3 ||
                               m == MapId::phi5 || m == MapId::psi;
            const int d = cheap ? Defaults::cheap_roundtrips : Defaults::maps;
            tasks.push_back(one([=] { return check_roundtrip(m, max_n(n_max, d)); }));
        }
    }
    if (all || suite == "images") {
        for (MapId m : {MapId::phi1_dd, MapId::phi1_uu, MapId::phi2, MapId::phi3, MapId::phi4, MapId::phi5}) {
            tasks.push_back(one([=] { return check_image(m, max_n(n_max, Defaults::images)); }));
        }
    }
    if (all || suite == "conjecture") {
        tasks.push_back(one([=] { return check_conjecture(max_n(n_max, Defaults::conjecture)); }));
    }
    if (all || suite == "nd") {
        tasks.push_back(one([=] { return check_nd_identities(max_n(n_max, Defaults::nd_identities)); }));
        tasks.push_back([=] { return check_nd_inequalities(max_n(n_max, Defaults::counts)); });
    }
    if (all || suite == "monotone") {
        tasks.push_back([=] { return check_monotone(max_n(n_max, Defaults::counts)); });
    }

    std::vector<std::future<std::vector<VerificationReport>>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
    std::vector<VerificationReport> out;
    for (auto& f : futures) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

}  // namespace psp
