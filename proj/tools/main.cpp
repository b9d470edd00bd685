#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "contspec/algebraic_realization.hpp"
#include "contspec/figure.hpp"
#include "contspec/json_io.hpp"
#include "contspec/line_realization.hpp"

using namespace contspec;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kWindowExhausted = 3;
constexpr int kVerificationFailure = 4;

bool verbose() { return std::getenv("CONTSPEC_VERBOSE") != nullptr; }

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    if (text.empty())
        return out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw input_error("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw input_error("not an integer: '" + token + "'");
        out.push_back(value);
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw input_error("cannot write " + out_path);
    file << text;
}

std::string witness_line(const Witness& w) {
    std::ostringstream line;
    line << "    column " << w.column << ", x=" << w.point.str()
         << (w.side == Side::Left ? " (left)" : " (right)") << ": value (" << w.value_column << ","
         << w.value_ordinate.str() << ") vs limit (" << w.limit_column << ","
         << w.limit_ordinate.str() << ")";
    return line.str();
}

struct SubmonoidOptions {
    std::string generators;
    long long n = 0;
    std::string format = "json";
    std::string out;
};

int run_submonoid(const SubmonoidOptions& opt) {
    const auto gens = parse_int_list(opt.generators);
    const auto canon = canonicalize(gens);
    const auto members = canon.window(opt.n);
    if (opt.format == "json") {
        json doc{{"generators", gens},
                 {"canonical", canon},
                 {"members", members},
                 {"negation_closed", canon.negation_closed()}};
        emit(doc.dump(2) + "\n", opt.out);
    } else {
        std::ostringstream text;
        text << "canonical: " << json(canon).dump() << "\n";
        text << "members in [-" << opt.n << "," << opt.n << "]: " << json(members).dump() << "\n";
        text << "negation-closed: " << (canon.negation_closed() ? "yes" : "no") << "\n";
        emit(text.str(), opt.out);
    }
    return kOk;
}

struct RealizeLineOptions {
    std::string generators;
    long long n = 0;
    long long w = 0; // 0: pick 2N+1
    std::string format = "json";
    std::string out;
};

int run_realize_line(const RealizeLineOptions& opt) {
    const auto gens = parse_int_list(opt.generators);
    const auto canon = canonicalize(gens);
    const long long w = opt.w == 0 ? 2 * opt.n + 1 : opt.w;
    if (opt.n < 1)
        throw input_error("N must be >= 1");
    if (w < 2 * opt.n)
        throw input_error("W must be >= 2N (got W=" + std::to_string(w) + ", need >= " +
                          std::to_string(2 * opt.n) + ")");

    const auto report = spectrum_report(canon, opt.n, w);
    const auto members = report.members();
    const auto expected = canon.window(opt.n);
    const bool match = members == expected;

    if (opt.format == "svg" || opt.format == "dot") {
        const auto space = build_line_space(canon, opt.n + 1);
        const auto map = build_line_map(canon, opt.n + 1);
        const auto base = is_continuous(map, space);
        emit(opt.format == "svg" ? render_svg(space, map, base.witnesses)
                                 : render_dot(space, map),
             opt.out);
    } else if (opt.format == "json") {
        json iterates = json::array();
        for (const auto& it : report.iterates) {
            json entry{{"n", it.n}, {"continuous", it.continuity.continuous}};
            if (!it.continuity.continuous)
                entry["witnesses"] = it.continuity.witnesses;
            iterates.push_back(std::move(entry));
        }
        json doc{{"canonical", canon}, {"N", opt.n},      {"W", w},
                 {"spectrum", members}, {"expected", expected}, {"match", match},
                 {"iterates", iterates}};
        emit(doc.dump(2) + "\n", opt.out);
    } else {
        std::ostringstream text;
        text << "spectrum in [-" << opt.n << "," << opt.n << "]: " << json(members).dump() << "\n";
        text << "membership window:    " << json(expected).dump() << "\n";
        text << "match: " << (match ? "yes" : "NO") << "\n";
        if (verbose()) {
            for (const auto& it : report.iterates) {
                if (it.continuity.continuous)
                    continue;
                text << "  n=" << it.n << " discontinuous\n";
                for (const Witness& witness : it.continuity.witnesses)
                    text << witness_line(witness) << "\n";
            }
        }
        emit(text.str(), opt.out);
    }
    return match ? kOk : kVerificationFailure;
}

struct TopologiesOptions {
    int n = 0;
    std::string format = "json";
    std::string out;
};

int run_topologies(const TopologiesOptions& opt) {
    if (opt.n > 4)
        throw input_error("n exceeds exhaustive cap (max 4)");
    const auto labeled = enumerate_topologies(opt.n);
    const auto classes = classify_topologies(opt.n);
    if (opt.format == "json") {
        json doc{{"n", opt.n},
                 {"labeled", labeled.size()},
                 {"classes", classes.size()},
                 {"table", classes}};
        emit(doc.dump(2) + "\n", opt.out);
    } else {
        std::ostringstream text;
        text << labeled.size() << " labeled topologies, " << classes.size()
             << " homeomorphism classes on " << opt.n << " points\n";
        for (const auto& row : classes) {
            json opens = json::array();
            for (std::uint32_t s : row.representative.open_sets())
                opens.push_back(subset_points(s, opt.n));
            text << "  class " << row.class_id << ": opens " << opens.dump() << ", group "
                 << row.group_type << " (order " << row.group_order << ", " << row.labeled_count
                 << " labelings)\n";
        }
        emit(text.str(), opt.out);
    }
    return kOk;
}

struct GroupOptions {
    std::string builtin;
    std::string table_path;
    std::string subset;
    std::string variant = "open";
    std::string format = "json";
    std::string out;
};

ElementSubset parse_subset(const CayleyTable& table, const std::string& text) {
    std::vector<int> ids;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (const auto id = table.id_of(token)) {
            ids.push_back(*id);
            continue;
        }
        if (token == "e") { // identity alias for tables without names
            ids.push_back(table.identity);
            continue;
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw input_error("unknown element: '" + token + "'");
        }
        if (used != token.size())
            throw input_error("unknown element: '" + token + "'");
        ids.push_back(value);
    }
    return subset_from_ids(table.size, ids);
}

int run_group(const GroupOptions& opt) {
    CayleyTable table;
    if (!opt.builtin.empty()) {
        const auto found = builtin_table(opt.builtin);
        if (!found)
            throw input_error("unknown builtin table: " + opt.builtin);
        table = *found;
    } else {
        std::ifstream file(opt.table_path);
        if (!file)
            throw input_error("cannot read " + opt.table_path);
        json doc;
        try {
            doc = json::parse(file);
        } catch (const json::exception& e) {
            throw input_error(std::string("bad table JSON: ") + e.what());
        }
        table = doc.get<CayleyTable>();
    }

    const auto subset = parse_subset(table, opt.subset);
    Realization real;
    if (opt.variant == "open")
        real = build_group_realization(table, subset);
    else if (opt.variant == "monoid")
        real = build_monoid_realization(table, subset);
    else
        real = build_compact_realization(table, subset);

    const auto members = family_spectrum(real);
    const bool match = members == subset;
    const bool law = verify_composition_law(real);

    std::vector<std::string> non_bijective;
    for (int n = 0; n < table.size; ++n) {
        if (!is_bijection(real.family[static_cast<std::size_t>(n)], real.space))
            non_bijective.push_back(table.name_of(n));
    }

    const auto names_of = [&](const ElementSubset& s) {
        std::vector<std::string> names;
        for (int id : subset_ids(s))
            names.push_back(table.name_of(id));
        return names;
    };

    if (opt.format == "json") {
        json doc{{"variant", opt.variant},
                 {"size", table.size},
                 {"subset", subset_ids(subset)},
                 {"subset_names", names_of(subset)},
                 {"spectrum", subset_ids(members)},
                 {"spectrum_names", names_of(members)},
                 {"match", match},
                 {"composition_law", law},
                 {"bijective_family", non_bijective.empty()}};
        if (!non_bijective.empty())
            doc["non_bijective"] = non_bijective;
        if (opt.variant == "compact")
            doc["inverse_closed"] = inverse_closed(table, members);
        emit(doc.dump(2) + "\n", opt.out);
    } else {
        std::ostringstream text;
        text << "spectrum: " << json(names_of(members)).dump() << "\n";
        text << "matches subset: " << (match ? "yes" : "NO") << "\n";
        text << "composition law: " << (law ? "ok" : "VIOLATED") << "\n";
        if (!non_bijective.empty())
            text << "non-bijective maps: " << json(non_bijective).dump() << "\n";
        if (opt.variant == "compact")
            text << "inverse-closed: " << (inverse_closed(table, members) ? "yes" : "NO") << "\n";
        if (verbose()) {
            for (int n = 0; n < table.size; ++n) {
                const auto report = is_continuous(real.family[static_cast<std::size_t>(n)], real.space);
                if (report.continuous)
                    continue;
                text << "  f_" << table.name_of(n) << " discontinuous\n";
                for (const Witness& witness : report.witnesses)
                    text << witness_line(witness) << "\n";
            }
        }
        emit(text.str(), opt.out);
    }
    return match && law ? kOk : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuity spectra of piecewise interval translations"};
    app.require_subcommand(1);

    SubmonoidOptions submonoid_opt;
    auto* submonoid_cmd =
        app.add_subcommand("submonoid", "canonicalize an integer submonoid and list members");
    submonoid_cmd->add_option("-g,--generators", submonoid_opt.generators,
                              "comma-separated integer generators");
    submonoid_cmd->add_option("-N,--window", submonoid_opt.n, "member window radius")->required();
    submonoid_cmd->add_option("--format", submonoid_opt.format)
        ->check(CLI::IsMember({"json", "text"}));
    submonoid_cmd->add_option("-o,--out", submonoid_opt.out, "output file (default stdout)");

    RealizeLineOptions line_opt;
    auto* line_cmd = app.add_subcommand(
        "realize-line", "realize a submonoid of Z as the continuity spectrum of a shift map");
    line_cmd->add_option("-g,--generators", line_opt.generators);
    line_cmd->add_option("-N,--spectrum-window", line_opt.n, "spectrum window radius")->required();
    line_cmd->add_option("-W,--space-window", line_opt.w, "column window radius (default 2N+1)");
    line_cmd->add_option("--format", line_opt.format)
        ->check(CLI::IsMember({"json", "text", "svg", "dot"}));
    line_cmd->add_option("-o,--out", line_opt.out);

    TopologiesOptions topo_opt;
    auto* topo_cmd = app.add_subcommand(
        "topologies", "enumerate topologies on n points with their continuity groups");
    topo_cmd->add_option("-n,--points", topo_opt.n, "number of points (max 4)")->required();
    topo_cmd->add_option("--format", topo_opt.format)->check(CLI::IsMember({"json", "text"}));
    topo_cmd->add_option("-o,--out", topo_opt.out);

    GroupOptions group_opt;
    auto* group_cmd = app.add_subcommand(
        "group", "realize a subset of a finite group or monoid as a continuity spectrum");
    auto* builtin_flag = group_cmd->add_option("--builtin", group_opt.builtin, "z1..z8, s3, d4");
    group_cmd->add_option("--table", group_opt.table_path, "Cayley table JSON file")
        ->excludes(builtin_flag);
    group_cmd->add_option("--subset", group_opt.subset, "comma-separated element names or ids")
        ->required();
    group_cmd->add_option("--variant", group_opt.variant)
        ->check(CLI::IsMember({"open", "compact", "monoid"}));
    group_cmd->add_option("--format", group_opt.format)->check(CLI::IsMember({"json", "text"}));
    group_cmd->add_option("-o,--out", group_opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }

    try {
        if (submonoid_cmd->parsed())
            return run_submonoid(submonoid_opt);
        if (line_cmd->parsed())
            return run_realize_line(line_opt);
        if (topo_cmd->parsed())
            return run_topologies(topo_opt);
        if (group_cmd->parsed()) {
            if (group_opt.builtin.empty() && group_opt.table_path.empty())
                throw input_error("group: pass --builtin or --table");
            return run_group(group_opt);
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const window_exhausted& e) {
        std::cerr << "window exhausted: " << e.what() << "\n";
        return kWindowExhausted;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kInputError;
}
