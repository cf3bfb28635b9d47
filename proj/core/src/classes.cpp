#include "psp/classes.hpp"

#include <algorithm>
#include <array>

namespace psp {

namespace {

constexpr std::string_view kBarPrefix = "bar-";

bool parity_of(Part x, Parity parity) {
    return (x % 2 == 0) == (parity == Parity::even);
}

BlockSpec parse_block(std::string_view token, std::string_view whole) {
    if (token.size() < 2) {
        throw ClassIdError("invalid class id \"" + std::string(whole) + "\"");
    }
    BlockSpec b;
    switch (token.front()) {
        case 'o': b.parity = Parity::odd; break;
        case 'e': b.parity = Parity::even; break;
        default: throw ClassIdError("invalid class id \"" + std::string(whole) + "\": bad parity");
    }
    const std::string_view rest = token.substr(1);
    if (rest == "u") b.restriction = Restriction::unrestricted;
    else if (rest == "d") b.restriction = Restriction::distinct;
    else if (rest == "nd") b.restriction = Restriction::not_distinct;
    else throw ClassIdError("invalid class id \"" + std::string(whole) + "\": bad restriction");
    return b;
}

std::string block_token(const BlockSpec& b) {
    std::string s(1, b.parity == Parity::odd ? 'o' : 'e');
    switch (b.restriction) {
        case Restriction::unrestricted: s += "u"; break;
        case Restriction::distinct: s += "d"; break;
        case Restriction::not_distinct: s += "nd"; break;
    }
    return s;
}

bool block_ok(const std::vector<Frequency>& block, Restriction r) {
    switch (r) {
        case Restriction::unrestricted:
            return true;
        case Restriction::distinct:
            return std::all_of(block.begin(), block.end(),
                               [](const Frequency& f) { return f.multiplicity == 1; });
        case Restriction::not_distinct:
            return std::any_of(block.begin(), block.end(),
                               [](const Frequency& f) { return f.multiplicity > 1; });
    }
    return false;
}

bool overline_ok(const std::vector<Frequency>& freq, Overline o) {
    const auto first_of = [&](bool even) {
        return std::find_if(freq.begin(), freq.end(),
                            [&](const Frequency& f) { return (f.value % 2 == 0) == even; });
    };
    const auto largest_even = first_of(true);
    const auto largest_odd = first_of(false);
    if (o == Overline::low_variant) {
        for (auto it = freq.begin(); it != freq.end(); ++it) {
            const bool want_odd = (it == largest_even);
            if ((it->multiplicity % 2 == 1) != want_odd) return false;
        }
        return true;
    }
    if (largest_even == freq.end() || largest_odd == freq.end()) return false;
    for (auto it = freq.begin(); it != freq.end(); ++it) {
        const bool want_odd = (it == largest_even || it == largest_odd);
        if ((it->multiplicity % 2 == 1) != want_odd) return false;
    }
    return true;
}

// Value-by-value generator. Values are chosen strictly decreasing, each with a
// multiplicity; high-parity values must all precede low-parity ones. Trying
// larger values first and, for a fixed value, larger multiplicities first yields
// reverse-lexicographic order on the part vectors.
class ClassGenerator {
public:
    ClassGenerator(const ClassSpec& c, const std::function<void(const Partition&)>& visit)
        : spec_(c), visit_(visit) {}

    void run(int n) {
        parts_.clear();
        State s;
        s.remaining = n;
        s.bound = n + 1;
        descend(s);
    }

private:
    struct State {
        int remaining = 0;
        int bound = 0;          // next value must be < bound
        bool in_low = false;    // a low-parity value has been placed
        bool high_repeat = false;
        bool low_repeat = false;
        bool seen_even = false;
        bool seen_odd = false;
    };

    bool multiplicity_allowed(const State& s, Part v, int m, bool low_block) const {
        const BlockSpec& block = low_block ? spec_.low : spec_.high;
        if (block.restriction == Restriction::distinct && m != 1) return false;
        const bool even = v % 2 == 0;
        switch (spec_.overline) {
            case Overline::none:
                return true;
            case Overline::low_variant:
                // Largest even part odd multiplicity, everything else even.
                return (even && !s.seen_even) ? (m % 2 == 1) : (m % 2 == 0);
            case Overline::high_variant: {
                const bool first_of_parity = even ? !s.seen_even : !s.seen_odd;
                return first_of_parity ? (m % 2 == 1) : (m % 2 == 0);
            }
        }
        return false;
    }

    bool complete_ok(const State& s) const {
        if (spec_.high.restriction == Restriction::not_distinct && !s.high_repeat) return false;
        if (spec_.low.restriction == Restriction::not_distinct && !s.low_repeat) return false;
        if (spec_.overline == Overline::high_variant && !(s.seen_even && s.seen_odd)) return false;
        return true;
    }

    void emit() {
        // parts_ is already non-increasing.
        visit_(Partition::from_parts(parts_));
    }

    void descend(const State& s) {
        if (s.remaining == 0) {
            if (complete_ok(s)) emit();
            return;
        }
        for (Part v = std::min(s.remaining, s.bound - 1); v >= 1; --v) {
            const bool low_block = parity_of(v, spec_.low.parity);
            if (!low_block && s.in_low) continue;  // high values may not follow low ones
            for (int m = s.remaining / v; m >= 1; --m) {
                if (!multiplicity_allowed(s, v, m, low_block)) continue;
                State next = s;
                next.remaining -= v * m;
                next.bound = v;
                next.in_low = s.in_low || low_block;
                if (m > 1) (low_block ? next.low_repeat : next.high_repeat) = true;
                (v % 2 == 0 ? next.seen_even : next.seen_odd) = true;
                parts_.insert(parts_.end(), static_cast<std::size_t>(m), v);
                descend(next);
                parts_.resize(parts_.size() - static_cast<std::size_t>(m));
            }
        }
    }

    const ClassSpec& spec_;
    const std::function<void(const Partition&)>& visit_;
    std::vector<Part> parts_;
};

void validate(const ClassSpec& c, std::string_view id) {
    if (c.high.parity == c.low.parity) {
        throw ClassIdError("invalid class id \"" + std::string(id) + "\": blocks need different parities");
    }
    if (c.overline != Overline::none) {
        const bool unrestricted = c.high.restriction == Restriction::unrestricted &&
                                  c.low.restriction == Restriction::unrestricted;
        const bool matches = (c.overline == Overline::low_variant && c.high.parity == Parity::odd) ||
                             (c.overline == Overline::high_variant && c.high.parity == Parity::even);
        if (!unrestricted || !matches) {
            throw ClassIdError("invalid class id \"" + std::string(id) +
                               "\": bar- applies only to ou_eu and eu_ou");
        }
    }
}

}  // namespace

ClassSpec parse_class_id(std::string_view id) {
    std::string_view body = id;
    bool bar = false;
    if (body.substr(0, kBarPrefix.size()) == kBarPrefix) {
        bar = true;
        body.remove_prefix(kBarPrefix.size());
    }
    const auto sep = body.find('_');
    if (sep == std::string_view::npos) {
        throw ClassIdError("invalid class id \"" + std::string(id) + "\": expected HIGH_LOW");
    }
    ClassSpec c;
    c.high = parse_block(body.substr(0, sep), id);
    c.low = parse_block(body.substr(sep + 1), id);
    if (bar) {
        c.overline = c.high.parity == Parity::odd ? Overline::low_variant : Overline::high_variant;
    }
    validate(c, id);
    return c;
}

std::string to_string(const ClassSpec& c) {
    std::string s = c.overline == Overline::none ? "" : std::string(kBarPrefix);
    return s + block_token(c.high) + "_" + block_token(c.low);
}

std::vector<ClassSpec> all_class_specs() {
    std::vector<ClassSpec> out;
    constexpr std::array restrictions{Restriction::unrestricted, Restriction::distinct,
                                      Restriction::not_distinct};
    for (Parity high : {Parity::odd, Parity::even}) {
        const Parity low = high == Parity::odd ? Parity::even : Parity::odd;
        for (Restriction hr : restrictions) {
            for (Restriction lr : restrictions) {
                out.push_back(ClassSpec{{high, hr}, {low, lr}, Overline::none});
            }
        }
    }
    out.push_back(classes::bar_ou_eu());
    out.push_back(classes::bar_eu_ou());
    return out;
}

bool is_member(const Partition& p, const ClassSpec& c) {
    std::vector<Frequency> high;
    std::vector<Frequency> low;
    const auto freq = frequencies(p);
    for (const auto& f : freq) {
        (parity_of(f.value, c.high.parity) ? high : low).push_back(f);
    }
    // Frequencies run largest first: high.back() is the smallest high part.
    if (!high.empty() && !low.empty() && high.back().value <= low.front().value) return false;
    if (!block_ok(high, c.high.restriction) || !block_ok(low, c.low.restriction)) return false;
    if (c.overline != Overline::none && !overline_ok(freq, c.overline)) return false;
    return true;
}

void for_each_member(int n, const ClassSpec& c, const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    ClassGenerator(c, visit).run(n);
}

std::vector<Partition> enumerate_class(int n, const ClassSpec& c) {
    std::vector<Partition> out;
    for_each_member(n, c, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_class(int n, const ClassSpec& c) {
    std::uint64_t count = 0;
    for_each_member(n, c, [&](const Partition&) { ++count; });
    return count;
}

std::vector<std::uint64_t> count_sequence(const ClassSpec& c, int n_max) {
    std::vector<std::uint64_t> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(count_class(n, c));
    return out;
}

namespace classes {
ClassSpec od_ed() { return {{Parity::odd, Restriction::distinct}, {Parity::even, Restriction::distinct}}; }
ClassSpec ed_od() { return {{Parity::even, Restriction::distinct}, {Parity::odd, Restriction::distinct}}; }
ClassSpec eu_od() { return {{Parity::even, Restriction::unrestricted}, {Parity::odd, Restriction::distinct}}; }
ClassSpec od_eu() { return {{Parity::odd, Restriction::distinct}, {Parity::even, Restriction::unrestricted}}; }
ClassSpec ou_ed() { return {{Parity::odd, Restriction::unrestricted}, {Parity::even, Restriction::distinct}}; }
ClassSpec ou_eu() { return {{Parity::odd, Restriction::unrestricted}, {Parity::even, Restriction::unrestricted}}; }
ClassSpec ed_ou() { return {{Parity::even, Restriction::distinct}, {Parity::odd, Restriction::unrestricted}}; }
ClassSpec eu_ou() { return {{Parity::even, Restriction::unrestricted}, {Parity::odd, Restriction::unrestricted}}; }
ClassSpec bar_ou_eu() {
    return {{Parity::odd, Restriction::unrestricted}, {Parity::even, Restriction::unrestricted}, Overline::low_variant};
}
ClassSpec bar_eu_ou() {
    return {{Parity::even, Restriction::unrestricted}, {Parity::odd, Restriction::unrestricted}, Overline::high_variant};
}
}  // namespace classes

}  // namespace psp
