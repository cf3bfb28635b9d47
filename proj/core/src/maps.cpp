#include <algorithm>
#include <array>
#include <stdexcept>

#include "maps_internal.hpp"

namespace psp {

namespace detail {

View::View(const Partition& part) : p(part), freq(frequencies(part)) {
    for (Part x : part.parts()) (x % 2 == 0 ? even : odd).push_back(x);
    for (auto it = freq.rbegin(); it != freq.rend(); ++it) {
        if (it->multiplicity > 1) repeated.push_back(it->value);
    }
}

std::size_t View::mult(Part v) const {
    for (const auto& f : freq) {
        if (f.value == v) return f.multiplicity;
    }
    return 0;
}

Partition from(std::vector<Part> parts) { return Partition::from_parts(std::move(parts)); }

Partition parity_shift(const View& v, int sign) {
    std::vector<Part> x = v.p.part_vector();
    const std::size_t lm = std::min(v.ell_o(), v.ell_e());
    for (std::size_t i = 0; i < lm; ++i) {
        x[i] += sign;
        x[x.size() - 1 - i] -= sign;
    }
    return from(std::move(x));
}

MapResult dispatch(MapId m, const MapDef& def, const Partition& p) {
    const View v(p);
    const CaseDef* hit = nullptr;
    for (const auto& c : def.cases) {
        if (!c.applies(v)) continue;
        if (hit != nullptr) {
            throw std::logic_error(std::string(map_name(m)) + ": cases \"" + std::string(hit->label) +
                                   "\" and \"" + std::string(c.label) + "\" both hold for " +
                                   to_string(p));
        }
        hit = &c;
    }
    if (hit == nullptr) {
        throw std::logic_error(std::string(map_name(m)) + ": no case holds for " + to_string(p));
    }
    MapResult out;
    out.trace.map = m;
    out.trace.case_label = std::string(hit->label);
    out.image = hit->run(v, out.trace);
    return out;
}

}  // namespace detail

namespace {

using detail::MapDef;
using detail::View;

struct MapInfo {
    MapId id;
    std::string_view name;
    std::string_view token;
    ClassSpec (*domain)();
    ClassSpec (*codomain)();
    int shift;
    const MapDef& (*def)();
};

const std::array<MapInfo, 9>& table() {
    static const std::array<MapInfo, 9> t{{
        {MapId::phi1_dd, "phi1_dd", "phi1dd", classes::od_ed, classes::ed_od, 0, detail::phi1_dd_def},
        {MapId::phi1_uu, "phi1_uu", "phi1uu", classes::ou_eu, classes::eu_ou, 0, detail::phi1_uu_def},
        {MapId::phi2, "phi2", "phi2", classes::eu_od, classes::ou_ed, 0, detail::phi2_def},
        {MapId::phi3, "phi3", "phi3", classes::od_eu, classes::ed_ou, 0, detail::phi3_def},
        {MapId::phi4, "phi4", "phi4", classes::ed_od, classes::od_eu, 0, detail::phi4_def},
        {MapId::phi5, "phi5", "phi5", classes::bar_ou_eu, classes::bar_eu_ou, 1, detail::phi5_def},
        {MapId::psi, "psi", "psi", classes::ou_eu, classes::ou_eu, 1, detail::psi_def},
        {MapId::f_shift, "f_shift", "f", classes::ou_eu, classes::ou_eu, 2, detail::f_def},
        {MapId::bcn_append1, "bcn_append1", "append1", classes::ed_ou, classes::ed_ou, 1, detail::append1_def},
    }};
    return t;
}

const MapInfo& info(MapId m) { return table()[static_cast<std::size_t>(m)]; }

bool codomain_admits_weight(MapId m, Weight n) {
    return n >= weight_shift(m) && domain_admits_weight(m, n - weight_shift(m));
}

void require_codomain(MapId m, const Partition& mu) {
    if (!is_member(mu, codomain_class(m)) || !codomain_admits_weight(m, mu.weight())) {
        throw NotInImageError(std::string(kNotInImage) + ": " + to_string(mu) + " is not in the codomain of " +
                              std::string(map_name(m)));
    }
}

}  // namespace

std::vector<MapId> all_maps() {
    std::vector<MapId> out;
    for (const auto& i : table()) out.push_back(i.id);
    return out;
}

std::string_view map_name(MapId m) { return info(m).name; }
std::string_view map_token(MapId m) { return info(m).token; }

MapId parse_map_id(std::string_view text) {
    for (const auto& i : table()) {
        if (text == i.token || text == i.name) return i.id;
    }
    throw MapIdError("unknown map \"" + std::string(text) + "\"");
}

ClassSpec domain_class(MapId m) { return info(m).domain(); }
ClassSpec codomain_class(MapId m) { return info(m).codomain(); }
int weight_shift(MapId m) { return info(m).shift; }

bool domain_admits_weight(MapId m, Weight n) {
    switch (m) {
        case MapId::phi4: return n >= 8;
        case MapId::phi5: return n >= 6 && n % 2 == 0;
        case MapId::psi: return n >= 0 && n % 2 == 0;
        case MapId::f_shift: return n >= 1;
        default: return n >= 0;
    }
}

bool in_domain(MapId m, const Partition& p) {
    return domain_admits_weight(m, p.weight()) && is_member(p, domain_class(m));
}

MapResult apply(MapId m, const Partition& p) {
    if (!in_domain(m, p)) {
        throw DomainError(to_string(p) + " is not in the domain of " + std::string(map_name(m)) + " (" +
                          to_string(domain_class(m)) + (m == MapId::phi4   ? ", weight >= 8"
                                                        : m == MapId::phi5 ? ", even weight >= 6"
                                                        : m == MapId::psi  ? ", even weight"
                                                        : m == MapId::f_shift ? ", nonempty"
                                                                              : "") +
                          ")");
    }
    return detail::dispatch(m, info(m).def(), p);
}

std::vector<std::string> matching_cases(MapId m, const Partition& p) {
    const View v(p);
    std::vector<std::string> out;
    for (const auto& c : info(m).def().cases) {
        if (c.applies(v)) out.emplace_back(c.label);
    }
    return out;
}

std::vector<std::string> image_component_ids(MapId m) {
    std::vector<std::string> out;
    for (const auto& c : info(m).def().components) out.emplace_back(c.id);
    return out;
}

std::vector<std::string> image_components(MapId m, const Partition& mu) {
    std::vector<std::string> out;
    if (!is_member(mu, codomain_class(m)) || !codomain_admits_weight(m, mu.weight())) return out;
    const View v(mu);
    for (const auto& c : info(m).def().components) {
        if (c.holds(v)) out.emplace_back(c.id);
    }
    return out;
}

ImageWitness image_membership(MapId m, const Partition& mu) {
    ImageWitness w{m, std::string(kNotInImage)};
    if (!is_member(mu, codomain_class(m)) || !codomain_admits_weight(m, mu.weight())) return w;
    const View v(mu);
    for (const auto& c : info(m).def().components) {
        if (c.holds(v)) {
            w.component = std::string(c.id);
            break;
        }
    }
    return w;
}

Partition invert(MapId m, const Partition& mu) {
    require_codomain(m, mu);
    const View v(mu);
    for (const auto& c : info(m).def().components) {
        if (!c.holds(v)) continue;
        Partition pre;
        try {
            pre = c.inverse(v);
        } catch (const PartitionError& e) {
            throw NotInImageError(std::string(kNotInImage) + ": " + to_string(mu) + " satisfies " +
                                  std::string(c.id) + " of " + std::string(map_name(m)) +
                                  " but the inverse formula fails (" + e.what() + ")");
        }
        if (!in_domain(m, pre) || apply(m, pre).image != mu) {
            throw NotInImageError(std::string(kNotInImage) + ": " + to_string(mu) + " satisfies " +
                                  std::string(c.id) + " of " + std::string(map_name(m)) +
                                  " but the inverse formula gives " + to_string(pre) +
                                  ", which does not map back");
        }
        return pre;
    }
    throw NotInImageError(std::string(kNotInImage) + ": " + to_string(mu) + " under " +
                          std::string(map_name(m)));
}

std::vector<Partition> excess_witnesses(int n) {
    std::vector<Partition> out;
    for_each_member(n, classes::ed_od(), [&](const Partition& p) {
        const View v(p);
        if (!v.odd.empty() && !v.even.empty() && v.even.back() - v.odd.front() == 1) out.push_back(p);
    });
    return out;
}

std::optional<Partition> excess_family_witness(int n) {
    if (n < 11) return std::nullopt;
    if (n == 13) return Partition{6, 4, 3};
    if (n == 17) return Partition{10, 4, 3};
    const int k = n / 4;
    switch (n % 4) {
        case 0: return Partition{2 * k, 2 * k - 1, 1};
        case 1: return Partition{2 * k - 2, 2 * k - 3, 5, 1};
        case 2: return Partition{2 * k, 2 * k - 1, 3};
        default: return Partition{2 * k + 2, 2 * k + 1};
    }
}

std::vector<Partition> non_image_witnesses(MapId m, int n) {
    std::vector<Partition> out;
    switch (m) {
        case MapId::phi1_dd:
            if (auto w = excess_family_witness(n)) out.push_back(*w);
            break;
        case MapId::phi1_uu:
            if (n >= 3) out.push_back(with_copies(Partition{2}, 1, static_cast<std::size_t>(n - 2)));
            break;
        case MapId::phi2:
            if (n >= 5) out.push_back(Partition{n - 2, 2});
            break;
        case MapId::phi3:
            if (n == 2) out.push_back(Partition{1, 1});
            else if (n >= 3 && n % 2 == 1) out.push_back(Partition{n - 1, 1});
            else if (n >= 4) out.push_back(Partition{n - 2, 1, 1});
            break;
        case MapId::phi4:
            if (n >= 8 && n % 2 == 0) out.push_back(Partition{n - 4, 2, 2});
            else if (n >= 9 && n % 4 == 1) out.push_back(Partition{(n - 1) / 2 + 1, (n - 1) / 2});
            else if (n >= 11 && n % 4 == 3) out.push_back(Partition{(n - 3) / 2 + 1, (n - 3) / 2, 2});
            break;
        case MapId::phi5:
            if (n >= 9 && n % 4 == 1) out.push_back(with_copies(Partition{n - 5}, 1, 5));
            else if (n >= 7 && n % 4 == 3) out.push_back(with_copies(Partition{n - 3}, 1, 3));
            break;
        case MapId::f_shift:
            if (n >= 3) out.push_back(with_copies(Partition{}, 1, static_cast<std::size_t>(n)));
            break;
        case MapId::bcn_append1:
            if (n >= 3) out.push_back(Partition{n});
            break;
        default:
            break;
    }
    return out;
}

}  // namespace psp
