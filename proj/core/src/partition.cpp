#include "psp/partition.hpp"

#include <algorithm>
#include <numeric>

namespace psp {

namespace {

Weight sum_parts(const std::vector<Part>& parts) {
    return std::accumulate(parts.begin(), parts.end(), Weight{0});
}

void require_positive(const std::vector<Part>& parts) {
    for (Part x : parts) {
        if (x < 1) {
            throw PartitionError("partition parts must be positive, got " + std::to_string(x));
        }
    }
}

}  // namespace

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(from_parts(std::vector<Part>(parts))) {}

Partition Partition::from_parts(std::vector<Part> parts) {
    require_positive(parts);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const Weight w = sum_parts(parts);
    return Partition(Canonical{}, std::move(parts), w);
}

PartitionBuilder::PartitionBuilder(const Partition& seed)
    : parts_(seed.part_vector()) {}

PartitionBuilder& PartitionBuilder::add(Part value, std::size_t count) {
    parts_.insert(parts_.end(), count, value);
    return *this;
}

PartitionBuilder& PartitionBuilder::add_all(std::span<const Part> values) {
    parts_.insert(parts_.end(), values.begin(), values.end());
    return *this;
}

Partition PartitionBuilder::build() const {
    return Partition::from_parts(parts_);
}

Partition odd_sub(const Partition& p) {
    std::vector<Part> out;
    std::copy_if(p.parts().begin(), p.parts().end(), std::back_inserter(out),
                 [](Part x) { return x % 2 != 0; });
    return Partition::from_parts(std::move(out));
}

Partition even_sub(const Partition& p) {
    std::vector<Part> out;
    std::copy_if(p.parts().begin(), p.parts().end(), std::back_inserter(out),
                 [](Part x) { return x % 2 == 0; });
    return Partition::from_parts(std::move(out));
}

std::vector<Frequency> frequencies(const Partition& p) {
    std::vector<Frequency> out;
    for (Part x : p.parts()) {
        if (!out.empty() && out.back().value == x) {
            ++out.back().multiplicity;
        } else {
            out.push_back({x, 1});
        }
    }
    return out;
}

PartitionStats stats(const Partition& p) {
    PartitionStats s;
    s.ell = p.length();
    for (Part x : p.parts()) {
        if (x % 2 != 0) {
            ++s.ell_odd;
            if (!s.largest_odd) s.largest_odd = x;
            s.smallest_odd = x;
        } else {
            ++s.ell_even;
            if (!s.largest_even) s.largest_even = x;
            s.smallest_even = x;
        }
    }
    if (s.ell_odd > 0 && s.ell_even > 0) {
        s.ell_min = std::min(s.ell_odd, s.ell_even);
    }
    // Frequencies run largest value first; walk backwards for the smallest repeats.
    const auto freq = frequencies(p);
    for (auto it = freq.rbegin(); it != freq.rend(); ++it) {
        if (it->multiplicity < 2) continue;
        if (!s.smallest_repeated) {
            s.smallest_repeated = it->value;
        } else {
            s.second_smallest_repeated = it->value;
            break;
        }
    }
    return s;
}

std::size_t multiplicity(const Partition& p, Part j) {
    return static_cast<std::size_t>(std::count(p.parts().begin(), p.parts().end(), j));
}

std::size_t count_greater(const Partition& p, Part j) {
    return static_cast<std::size_t>(
        std::count_if(p.parts().begin(), p.parts().end(), [j](Part x) { return x > j; }));
}

std::size_t count_at_least(const Partition& p, Part j) {
    return static_cast<std::size_t>(
        std::count_if(p.parts().begin(), p.parts().end(), [j](Part x) { return x >= j; }));
}

std::optional<Part> next_larger(const Partition& p, Part j) {
    std::optional<Part> best;
    for (Part x : p.parts()) {
        if (x > j) best = x;  // non-increasing, so the last hit is the smallest
        else break;
    }
    return best;
}

bool is_distinct(const Partition& p) {
    return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

bool contains(const Partition& p, Part j) {
    return std::find(p.parts().begin(), p.parts().end(), j) != p.parts().end();
}

Partition msunion(const Partition& a, const Partition& b) {
    return PartitionBuilder(a).add_all(b.parts()).build();
}

Partition msdiff(const Partition& a, const Partition& b) {
    std::vector<Part> rest;
    rest.reserve(a.length());
    // Both sequences are non-increasing; walk them like a merge.
    auto bi = b.parts().begin();
    const auto be = b.parts().end();
    for (Part x : a.parts()) {
        if (bi != be && *bi > x) {
            throw PartitionError("msdiff: not a sub-multiset (missing part " +
                                 std::to_string(*bi) + ")");
        }
        if (bi != be && *bi == x) {
            ++bi;
            continue;
        }
        rest.push_back(x);
    }
    if (bi != be) {
        throw PartitionError("msdiff: not a sub-multiset (missing part " +
                             std::to_string(*bi) + ")");
    }
    return Partition::from_parts(std::move(rest));
}

Partition with_copies(const Partition& p, Part value, std::size_t count) {
    return PartitionBuilder(p).add(value, count).build();
}

Partition without_copies(const Partition& p, Part value, std::size_t count) {
    return msdiff(p, PartitionBuilder().add(value, count).build());
}

std::string render_ferrers(const Partition& p, char glyph) {
    std::string out;
    out.reserve(static_cast<std::size_t>(p.weight()) + p.length());
    for (Part x : p.parts()) {
        out.append(static_cast<std::size_t>(x), glyph);
        out.push_back('\n');
    }
    return out;
}

}  // namespace psp
