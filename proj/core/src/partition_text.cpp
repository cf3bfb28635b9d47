#include "psp/partition.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace psp {

namespace {

long long parse_number(std::string_view token, std::string_view whole) {
    long long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw PartitionError("cannot parse partition \"" + std::string(whole) +
                             "\": bad number \"" + std::string(token) + "\"");
    }
    return value;
}

}  // namespace

std::string to_string(const Partition& p) {
    if (p.empty()) return "()";
    std::string out;
    for (const auto& f : frequencies(p)) {
        if (f.multiplicity > 2) {
            if (!out.empty()) out.push_back(' ');
            out += std::to_string(f.value) + "^" + std::to_string(f.multiplicity);
            continue;
        }
        for (std::size_t i = 0; i < f.multiplicity; ++i) {
            if (!out.empty()) out.push_back(' ');
            out += std::to_string(f.value);
        }
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::string_view body = text;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    body = trim(body);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') {
            throw PartitionError("cannot parse partition \"" + std::string(text) +
                                 "\": unbalanced parenthesis");
        }
        body = trim(body.substr(1, body.size() - 2));
    }

    constexpr long long kMaxTotal = 1'000'000;
    std::vector<Part> parts;
    long long total = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() &&
               (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ',')) {
            ++pos;
        }
        if (pos >= body.size()) break;
        std::size_t end = pos;
        while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end])) &&
               body[end] != ',') {
            ++end;
        }
        const std::string_view token = body.substr(pos, end - pos);
        pos = end;

        long long value = 0;
        long long count = 1;
        if (const auto caret = token.find('^'); caret != std::string_view::npos) {
            value = parse_number(token.substr(0, caret), text);
            count = parse_number(token.substr(caret + 1), text);
            if (count < 1) {
                throw PartitionError("cannot parse partition \"" + std::string(text) +
                                     "\": multiplicity must be positive");
            }
        } else {
            value = parse_number(token, text);
        }
        if (value < 1) {
            throw PartitionError("partition parts must be positive, got " + std::to_string(value));
        }
        total += value * count;
        if (value > kMaxTotal || count > kMaxTotal || total > kMaxTotal) {
            throw PartitionError("partition weight exceeds the supported bound of 1000000");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(count), static_cast<Part>(value));
    }
    return Partition::from_parts(std::move(parts));
}

}  // namespace psp
