#include "psp/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "psp/classes.hpp"
#include "psp/maps.hpp"
#include "psp/partition.hpp"
#include "psp/verify.hpp"

namespace psp::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string class_id;
    std::string map_id;
    std::string partition;
    std::string format;
    std::string suite = "all";
    int n = 0;
    int nmax = 0;
    char glyph = '#';
};

ordered_json parts_json(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (Part x : p.parts()) a.push_back(x);
    return a;
}

int cmd_count(const Options& o, std::ostream& out) {
    out << count_class(o.n, parse_class_id(o.class_id)) << '\n';
    return ok;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const ClassSpec c = parse_class_id(o.class_id);
    const bool json = o.format == "json";
    for_each_member(o.n, c, [&](const Partition& p) {
        if (json) {
            out << ordered_json{{"n", o.n}, {"parts", parts_json(p)}}.dump() << '\n';
        } else {
            out << to_string(p) << '\n';
        }
    });
    return ok;
}

int cmd_apply(const Options& o, std::ostream& out) {
    const MapId m = parse_map_id(o.map_id);
    const MapResult r = apply(m, parse_partition(o.partition));
    out << to_string(r.image) << '\n' << to_json(r.trace) << '\n';
    return ok;
}

int cmd_invert(const Options& o, std::ostream& out, std::ostream& err) {
    const MapId m = parse_map_id(o.map_id);
    const Partition mu = parse_partition(o.partition);
    try {
        out << to_string(invert(m, mu)) << '\n';
    } catch (const NotInImageError& e) {
        out << kNotInImage << '\n';
        err << e.what() << '\n';
        return domain_error;
    }
    return ok;
}

int cmd_member(const Options& o, std::ostream& out) {
    const ClassSpec c = parse_class_id(o.class_id);
    out << (is_member(parse_partition(o.partition), c) ? "true" : "false") << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::optional<int> nmax, std::ostream& out) {
    const auto reports = run_suite(o.suite, nmax);
    out << to_json(o.suite, reports) << '\n';
    return all_pass(reports) ? ok : verification_failed;
}

int cmd_sequence(const Options& o, std::ostream& out) {
    const ClassSpec c = parse_class_id(o.class_id);
    const auto counts = count_sequence(c, o.nmax);
    if (o.format == "json") {
        out << ordered_json{{"class", to_string(c)}, {"counts", counts}}.dump() << '\n';
        return ok;
    }
    out << "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) out << n << ',' << counts[n] << '\n';
    return ok;
}

int cmd_render(const Options& o, std::ostream& out) {
    out << render_ferrers(parse_partition(o.partition), o.glyph);
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Partitions with parts separated by parity: enumeration, injections, verification", "psp"};
    app.require_subcommand(1);

    const auto nonneg = CLI::NonNegativeNumber;

    auto* count = app.add_subcommand("count", "Number of members of a class of weight n");
    count->add_option("--class", o.class_id, "Class id, e.g. ed_ou or bar-ou_eu")->required();
    count->add_option("--n", o.n, "Weight")->required()->check(nonneg);

    auto* enumerate = app.add_subcommand("enumerate", "Members of a class, reverse-lexicographic");
    enumerate->add_option("--class", o.class_id, "Class id")->required();
    enumerate->add_option("--n", o.n, "Weight")->required()->check(nonneg);
    enumerate->add_option("--format", o.format, "text or json (one object per line)")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));

    auto* apply_cmd = app.add_subcommand("apply", "Apply a map; prints the image and its case trace");
    apply_cmd->add_option("--map", o.map_id, "phi1dd phi1uu phi2 phi3 phi4 phi5 psi f append1")->required();
    apply_cmd->add_option("--partition", o.partition, "Parts, e.g. \"9 7 1^6\"")->required();

    auto* invert_cmd = app.add_subcommand("invert", "Preimage under a map, or \"not in image\"");
    invert_cmd->add_option("--map", o.map_id, "Map token")->required();
    invert_cmd->add_option("--partition", o.partition, "Parts")->required();

    auto* member = app.add_subcommand("member", "Class membership test");
    member->add_option("--class", o.class_id, "Class id")->required();
    member->add_option("--partition", o.partition, "Parts")->required();

    std::vector<std::string> suites;
    for (auto s : suite_names()) suites.emplace_back(s);
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print the JSON report");
    verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
    auto* nmax_opt = verify->add_option("--nmax", o.nmax, "Replaces every per-check default range")
                         ->check(nonneg);

    auto* sequence = app.add_subcommand("sequence", "Counts for n = 0..nmax");
    sequence->add_option("--class", o.class_id, "Class id")->required();
    sequence->add_option("--nmax", o.nmax, "Largest weight")->default_val(Defaults::counts)->check(nonneg);
    sequence->add_option("--format", o.format, "csv or json")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* render = app.add_subcommand("render", "ASCII Ferrers diagram");
    render->add_option("--partition", o.partition, "Parts")->required();
    render->add_option("--glyph", o.glyph, "Cell character")->default_val('#');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return parse_error;
    }

    try {
        if (*count) return cmd_count(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
        if (*apply_cmd) return cmd_apply(o, out);
        if (*invert_cmd) return cmd_invert(o, out, err);
        if (*member) return cmd_member(o, out);
        if (*verify) return cmd_verify(o, nmax_opt->count() > 0 ? std::optional<int>(o.nmax) : std::nullopt, out);
        if (*sequence) return cmd_sequence(o, out);
        if (*render) return cmd_render(o, out);
    } catch (const PartitionError& e) {
        err << "invalid partition: " << e.what() << '\n';
        return parse_error;
    } catch (const ClassIdError& e) {
        err << e.what() << '\n';
        return parse_error;
    } catch (const MapIdError& e) {
        err << e.what() << '\n';
        return parse_error;
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return domain_error;
    } catch (const NotInImageError& e) {
        err << e.what() << '\n';
        return domain_error;
    }
    return parse_error;
}

}  // namespace psp::cli
