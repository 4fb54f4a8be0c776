#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cylq/bijection.hpp"
#include "cylq/enumerate.hpp"
#include "cylq/identities.hpp"
#include "cylq/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotInImage = 3;

std::optional<cylq::Profile> parse_profile(const std::string& text, std::string& error) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            entries.push_back(v);
        } catch (const std::exception&) {
            error = "bad profile entry \"" + item + "\"";
            return std::nullopt;
        }
    }
    try {
        return cylq::Profile(entries);
    } catch (const std::invalid_argument& e) {
        error = e.what();
        return std::nullopt;
    }
}

int fail_input(const std::string& reason) {
    std::cerr << "error: " << reason << "\n";
    return kExitInvalidInput;
}

std::optional<cylq::Json> read_json_input(const std::string& path, std::string& error) {
    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            error = "cannot open " + path;
            return std::nullopt;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto doc = cylq::Json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        error = "input is not valid JSON";
        return std::nullopt;
    }
    return doc;
}

cylq::PartFilter parse_filter(const std::string& name) {
    if (name == "distinct") return cylq::PartFilter::Distinct;
    if (name == "odd") return cylq::PartFilter::Odd;
    return cylq::PartFilter::None;
}

struct Options {
    std::string profile_text;
    std::string filter = "none";
    std::string flavor;
    std::string name;
    std::string format = "json";
    std::string input;
    std::vector<std::string> checks;
    long long weight = 0;
    int max_weight = 0;
    int order = -1;
    bool refined = false;
    bool trace = false;
    bool list_checks = false;
};

int run_enumerate(const Options& opt) {
    std::string err;
    auto profile = parse_profile(opt.profile_text, err);
    if (!profile) return fail_input(err);
    const auto all =
        cylq::enumerate_cylindric(*profile, opt.weight, parse_filter(opt.filter));
    if (opt.format == "text") {
        for (const auto& cp : all) {
            std::string line;
            for (std::size_t i = 0; i < cp.rows.size(); ++i) {
                if (i) line += " | ";
                for (std::size_t j = 0; j < cp.rows[i].parts().size(); ++j)
                    line += (j ? " " : "") + std::to_string(cp.rows[i].parts()[j]);
            }
            std::cout << line << "\n";
        }
    } else {
        for (const auto& cp : all) std::cout << cylq::to_json(cp).dump() << "\n";
    }
    std::cerr << all.size() << " cylindric partition(s) of weight " << opt.weight << "\n";
    return kExitOk;
}

int run_count(const Options& opt) {
    std::string err;
    auto profile = parse_profile(opt.profile_text, err);
    if (!profile) return fail_input(err);
    const auto filter = parse_filter(opt.filter);
    if (opt.refined) {
        const auto table = cylq::refined_counts(*profile, opt.max_weight, filter);
        cylq::Json out{{"profile", profile->entries()},
                       {"max_weight", opt.max_weight},
                       {"refined", cylq::refined_to_json(table)}};
        std::cout << out.dump() << "\n";
    } else {
        const auto counts = cylq::count_sequence(*profile, opt.max_weight, filter);
        if (opt.format == "text") {
            for (std::size_t n = 0; n < counts.size(); ++n)
                std::cout << n << "\t" << counts[n] << "\n";
        } else {
            cylq::Json out{{"profile", profile->entries()}, {"counts", counts}};
            std::cout << out.dump() << "\n";
        }
    }
    return kExitOk;
}

int run_series(const Options& opt) {
    const int N = opt.order >= 0 ? opt.order : 20;
    cylq::Json payload;
    std::string variable;

    if (opt.name == "borodin") {
        std::string err;
        auto profile = parse_profile(opt.profile_text, err);
        if (!profile) return fail_input(err);
        payload = cylq::to_json(cylq::borodin_series(*profile, N));
    } else if (opt.name == "f11") {
        payload = cylq::to_json(cylq::f11_closed(N));
    } else if (opt.name == "f20") {
        payload = cylq::to_json(cylq::f20_closed(N));
    } else if (opt.name == "f11z") {
        payload = cylq::to_json(cylq::f11_bivariate(N));
        variable = "z";
    } else if (opt.name == "d11") {
        payload = cylq::to_json(cylq::d11_series(N));
    } else if (opt.name == "d20") {
        payload = cylq::to_json(cylq::d20_series(N));
    } else if (opt.name == "d11t") {
        payload = cylq::to_json(cylq::d11_bivariate(N));
        variable = "t";
    } else if (opt.name == "d20t") {
        payload = cylq::to_json(cylq::d20_bivariate(N));
        variable = "t";
    } else if (opt.name == "oc") {
        payload = cylq::to_json(cylq::oc_two_sum(N));
    } else {
        return fail_input("unknown series name \"" + opt.name + "\"");
    }

    if (opt.format == "text") {
        std::cout << payload.dump() << "\n";
    } else {
        cylq::Json out{{"name", opt.name}, {"order", N}, {"coefficients", payload}};
        if (!variable.empty()) out["variable"] = variable;
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

int run_map(const Options& opt) {
    std::string err;
    std::optional<cylq::Profile> profile;
    if (!opt.profile_text.empty()) {
        profile = parse_profile(opt.profile_text, err);
        if (!profile) return fail_input(err);
    }
    auto doc = read_json_input(opt.input, err);
    if (!doc) return fail_input(err);
    auto parsed = cylq::cylindric_from_json(*doc, profile);
    if (!parsed.value) return fail_input(parsed.error);
    const auto& cp = *parsed.value;

    const auto entries = cp.profile.entries();
    cylq::Json out;
    cylq::MoveTrace trace;
    if (opt.flavor == "odd") {
        if (entries != std::vector<int>{1, 1})
            return fail_input("the odd flavor requires profile (1,1)");
        auto res = cylq::forward_odd_11(cp);
        if (!res.in_image()) {
            std::cerr << "not-in-image: " << res.not_in_image_reason << "\n";
            return kExitNotInImage;
        }
        out = cylq::to_json(*res.pair);
        trace = std::move(res.trace);
    } else if (entries == std::vector<int>{1, 1}) {
        auto [pair, t] = cylq::forward_11(cp);
        out = cylq::to_json(pair);
        trace = std::move(t);
    } else if (entries == std::vector<int>{2, 0}) {
        auto [pair, t] = cylq::forward_20(cp);
        out = cylq::to_json(pair);
        trace = std::move(t);
    } else {
        return fail_input("no correspondence for profile " + cp.profile.to_string());
    }
    if (opt.trace) out["trace"] = cylq::to_json(trace);
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_unmap(const Options& opt) {
    std::string err;
    auto doc = read_json_input(opt.input, err);
    if (!doc) return fail_input(err);
    if (!opt.flavor.empty()) {
        // command-line flavor overrides/sets the document's
        const std::string full = opt.flavor == "odd" ? "doubled-odd" : opt.flavor;
        auto parsed = cylq::flavor_from_name(full);
        if (!parsed) return fail_input("unknown flavor \"" + opt.flavor + "\"");
        (*doc)["flavor"] = full;
    }
    auto parsed = cylq::pair_from_json(*doc);
    if (!parsed.value) return fail_input(parsed.error);

    try {
        cylq::MoveTrace trace;
        cylq::CylindricPartition cp = [&] {
            switch (parsed.value->flavor) {
                case cylq::PairFlavor::DistinctOdd:
                    return cylq::inverse_11(*parsed.value, false, &trace);
                case cylq::PairFlavor::DistinctEven:
                    return cylq::inverse_20(*parsed.value, false, &trace);
                case cylq::PairFlavor::DoubledOdd:
                default:
                    return cylq::inverse_odd_11(*parsed.value, false, false, &trace);
            }
        }();
        cylq::Json out = cylq::to_json(cp);
        if (opt.trace) out["trace"] = cylq::to_json(trace);
        std::cout << out.dump() << "\n";
        return kExitOk;
    } catch (const cylq::Error& e) {
        return fail_input(e.what());
    }
}

int run_verify(const Options& opt) {
    const auto& known = cylq::verify_check_names();
    if (opt.list_checks) {
        for (const auto& name : known) std::cout << name << "\n";
        return kExitOk;
    }

    std::vector<std::string> selected = opt.checks;
    if (selected.empty() || (selected.size() == 1 && selected[0] == "all"))
        selected = known;
    // reject unknown names before any computation starts
    for (const auto& name : selected)
        if (std::find(known.begin(), known.end(), name) == known.end())
            return fail_input("unknown check \"" + name + "\"");

    std::optional<int> override_order;
    if (opt.order >= 0) override_order = opt.order;

    bool all_pass = true;
    for (const auto& name : selected) {
        if (name == "oc-table" && opt.format != "json") {
            // show the table itself in text mode
            const auto rows = cylq::oc_vs_enumeration(
                override_order.value_or(cylq::VerifyConfig{}.oc_table));
            std::cout << cylq::format_oc_table(rows);
            continue;
        }
        auto rep = cylq::run_check(name, {}, override_order);
        if (!rep) return fail_input("unknown check \"" + name + "\"");
        all_pass = all_pass && rep->pass;
        if (opt.format == "text") {
            std::cout << (rep->pass ? "PASS" : "FAIL") << " " << rep->identity << " (order "
                      << rep->order << ", " << rep->millis << " ms)";
            if (!rep->pass)
                std::cout << " first diff at q^" << rep->first_diff << ": " << rep->lhs
                          << " vs " << rep->rhs;
            if (!rep->note.empty()) std::cout << " [" << rep->note << "]";
            std::cout << "\n";
        } else {
            std::cout << cylq::to_json(*rep).dump() << "\n";
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cylq — exact cylindric-partition combinatorics and q-series toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* enumerate = app.add_subcommand("enumerate", "List cylindric partitions of a weight");
    enumerate->add_option("--profile", opt.profile_text, "profile, e.g. 1,1")->required();
    enumerate->add_option("--weight", opt.weight, "exact weight")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--filter", opt.filter, "none|distinct|odd")
        ->check(CLI::IsMember({"none", "distinct", "odd"}));
    enumerate->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* count = app.add_subcommand("count", "Count cylindric partitions by weight");
    count->add_option("--profile", opt.profile_text, "profile, e.g. 1,1")->required();
    count->add_option("--max-weight", opt.max_weight, "weight bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--filter", opt.filter, "none|distinct|odd")
        ->check(CLI::IsMember({"none", "distinct", "odd"}));
    count->add_flag("--refined", opt.refined, "table refined by largest part");
    count->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* series = app.add_subcommand("series", "Expand a named generating function");
    series->add_option("--name", opt.name, "borodin|f11|f20|f11z|d11|d20|d11t|d20t|oc")
        ->required()
        ->check(CLI::IsMember({"borodin", "f11", "f20", "f11z", "d11", "d20", "d11t",
                               "d20t", "oc"}));
    series->add_option("--profile", opt.profile_text, "profile (borodin only)");
    series->add_option("--order", opt.order, "truncation order")
        ->envname("CYLQ_ORDER")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* map = app.add_subcommand("map", "Forward correspondence on a cylindric partition");
    map->add_option("--profile", opt.profile_text, "profile of the input");
    map->add_option("--flavor", opt.flavor, "odd for the all-odd doubled variant")
        ->check(CLI::IsMember({"odd"}));
    map->add_option("--input", opt.input, "JSON file ('-' = stdin)");
    map->add_flag("--trace", opt.trace, "include the move log");

    auto* unmap = app.add_subcommand("unmap", "Inverse correspondence on a (mu, beta) pair");
    unmap->add_option("--flavor", opt.flavor, "distinct-odd|distinct-even|doubled-odd|odd");
    unmap->add_option("--input", opt.input, "JSON file ('-' = stdin)");
    unmap->add_flag("--trace", opt.trace, "include the move log");

    auto* verify = app.add_subcommand("verify", "Verify the generating-function identities");
    verify->add_option("--check", opt.checks, "check name (repeatable; default all)");
    verify->add_option("--order", opt.order, "override the default order")
        ->envname("CYLQ_ORDER")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--list", opt.list_checks, "list known check names");
    verify->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(opt);
        if (count->parsed()) return run_count(opt);
        if (series->parsed()) return run_series(opt);
        if (map->parsed()) return run_map(opt);
        if (unmap->parsed()) return run_unmap(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const cylq::Error& e) {
        return fail_input(e.what());
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    }
    return kExitInvalidInput;
}
