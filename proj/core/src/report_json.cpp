#include "json.hpp"

#include "psp/verify.hpp"

namespace psp {

namespace {

using nlohmann::ordered_json;

ordered_json report_doc(const VerificationReport& r) {
    ordered_json j;
    j["check"] = r.check;
    j["range"] = ordered_json::array({r.n_lo, r.n_hi});
    j["status"] = r.pass ? "pass" : "fail";
    j["empirical_threshold"] = r.empirical_threshold ? ordered_json(*r.empirical_threshold) : ordered_json(nullptr);
    j["counterexamples"] = ordered_json::array();
    for (const auto& c : r.counterexamples) {
        j["counterexamples"].push_back(ordered_json{{"n", c.n}, {"detail", c.detail}});
    }
    return j;
}

template <typename T>
ordered_json optional_value(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) { return report_doc(report).dump(indent); }

std::string to_json(std::string_view suite, const std::vector<VerificationReport>& reports, int indent) {
    ordered_json j;
    j["suite"] = std::string(suite);
    j["status"] = all_pass(reports) ? "pass" : "fail";
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_doc(r));
    return j.dump(indent);
}

std::string to_json(const CaseTrace& trace, int indent) {
    ordered_json j;
    j["map"] = std::string(map_token(trace.map));
    j["case"] = trace.case_label;
    j["k"] = optional_value(trace.k);
    j["q"] = optional_value(trace.q);
    j["r"] = optional_value(trace.r);
    j["eta"] = trace.eta ? ordered_json(to_string(*trace.eta)) : ordered_json(nullptr);
    return j.dump(indent);
}

}  // namespace psp
