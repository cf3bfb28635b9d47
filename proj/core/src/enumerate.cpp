#include "psp/classes.hpp"

namespace psp {

// Successor rule on the reverse-lexicographic order: find the rightmost part
// greater than 1, decrease it by one, and refill the tail (that part's former
// trailing ones plus the unit just removed) greedily with parts no larger than
// the decreased value.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<Part> a{n};
    for (;;) {
        visit(Partition::from_parts(a));
        std::size_t ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) return;
        const Part v = --a.back();
        int rest = static_cast<int>(ones) + 1;
        while (rest > 0) {
            const Part take = std::min(v, rest);
            a.push_back(take);
            rest -= take;
        }
    }
}

std::vector<Partition> enumerate_all(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace psp
