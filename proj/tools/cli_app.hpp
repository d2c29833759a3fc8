#ifndef POLYAUT_TOOLS_CLI_APP_HPP
#define POLYAUT_TOOLS_CLI_APP_HPP

#include <polyaut/json_io.hpp>
#include <polyaut/polyaut.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polyaut::cli {

// sysexits-style codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_invariant_failed = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_math = 65;
inline constexpr int exit_no_input = 66;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
}

inline std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> names;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        names.push_back(item);
    }
    return names;
}

/*
 * Entry point shared by the executable and the tests. `args` excludes the
 * program name.
 */
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Exact computations with polynomial automorphisms of affine 3-space", "polyaut"};
    app.require_subcommand(1);

    bool json = false;
    std::int64_t d1 = 0, d2 = 0, d3 = 0;
    unsigned power = 1;
    bool verify = false;
    std::string map_path;
    std::optional<std::int64_t> max_deg;
    std::string f_text, g_text, var_list = "x,y,z";

    const auto add_triple = [&](CLI::App* sub) {
        sub->add_option("d1", d1, "first degree")->required();
        sub->add_option("d2", d2, "second degree")->required();
        sub->add_option("d3", d3, "third degree")->required();
        sub->add_flag("--json", json, "JSON output");
    };

    auto* classify_cmd = app.add_subcommand("classify", "decide whether a multidegree is tame");
    add_triple(classify_cmd);
    auto* witness_cmd = app.add_subcommand("witness", "print a tame map with this multidegree");
    add_triple(witness_cmd);

    auto* nagata_cmd = app.add_subcommand("nagata", "iterate the twisted Nagata map (T∘N)^n");
    nagata_cmd->add_option("--power", power, "n")->required();
    nagata_cmd->add_flag("--verify-invariant", verify, "check g^2 + h*f = y^2 + z*x");
    nagata_cmd->add_flag("--json", json, "JSON output");

    auto* mdeg_cmd = app.add_subcommand("mdeg", "multidegree of a map");
    mdeg_cmd->add_option("--map", map_path, "map JSON file, - for stdin")->required();
    mdeg_cmd->add_flag("--json", json, "JSON output");

    auto* reduce_cmd = app.add_subcommand("reduce", "search for an elementary reduction");
    reduce_cmd->add_option("--map", map_path, "map JSON file, - for stdin")->required();
    reduce_cmd->add_option("--max-deg", max_deg, "support bound (default 2 * max degree)");
    reduce_cmd->add_flag("--json", json, "JSON output");

    auto* poisson_cmd = app.add_subcommand("poisson", "degree of the Poisson bracket [f,g]");
    poisson_cmd->add_option("--f", f_text, "first polynomial")->required();
    poisson_cmd->add_option("--g", g_text, "second polynomial")->required();
    poisson_cmd->add_option("--vars", var_list, "comma-separated variable names");
    poisson_cmd->add_flag("--json", json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (classify_cmd->parsed()) {
            const Verdict v = classify(d1, d2, d3);
            if (json) {
                out << verdict_to_json(v).dump() << '\n';
            } else {
                out << to_string(v.status) << ' ' << to_string(v.rule) << '\n';
                out << "citation: " << v.citation << '\n';
                out << "sorted input: " << v.sorted_input[0] << ' ' << v.sorted_input[1] << ' '
                    << v.sorted_input[2] << '\n';
                if (v.witness) {
                    out << "witness: " << polymap_to_json(v.witness->map).dump() << '\n';
                    for (const auto& s : v.witness->steps) {
                        out << "  step: " << default_var_names(3)[s.index] << " += "
                            << render(s.shift) << '\n';
                    }
                }
            }
            return v.status == TameStatus::Unknown ? exit_unknown : exit_ok;
        }

        if (witness_cmd->parsed()) {
            const Verdict v = classify(d1, d2, d3);
            if (!v.witness) {
                err << "no tame witness: classification is " << to_string(v.status) << " ("
                    << to_string(v.rule) << ")\n";
                return exit_math;
            }
            out << polymap_to_json(v.witness->map).dump() << '\n';
            return exit_ok;
        }

        if (nagata_cmd->parsed()) {
            const PolyMap f = twisted_iterate(power);
            const Multidegree m = multidegree(f);
            const bool holds = !verify || keystone_invariant_holds(f);
            if (json) {
                Json doc;
                doc["power"] = power;
                doc["map"] = polymap_to_json(f);
                doc["multidegree"] = multidegree_to_json(m);
                if (verify) {
                    doc["invariant"] = holds;
                }
                out << doc.dump() << '\n';
            } else {
                out << polymap_to_json(f).dump() << '\n';
                out << "multidegree: " << m.to_string() << '\n';
                if (verify) {
                    out << "invariant: " << (holds ? "OK" : "FAILED") << '\n';
                }
            }
            return holds ? exit_ok : exit_invariant_failed;
        }

        if (mdeg_cmd->parsed()) {
            const NamedMap nm = parse_polymap_json(read_source(map_path, in));
            const Multidegree m = multidegree(nm.map);
            if (json) {
                Json doc;
                doc["multidegree"] = multidegree_to_json(m);
                out << doc.dump() << '\n';
            } else {
                out << m.to_string() << '\n';
            }
            return exit_ok;
        }

        if (reduce_cmd->parsed()) {
            const NamedMap nm = parse_polymap_json(read_source(map_path, in));
            const std::int64_t bound = max_deg.value_or(default_reduction_bound(nm.map));
            const auto r = find_elementary_reduction(nm.map, bound);
            if (json) {
                Json doc;
                doc["bound"] = bound;
                doc["reduction"] = r ? reduction_to_json(*r) : Json(nullptr);
                out << doc.dump() << '\n';
            } else if (r) {
                out << reduction_to_json(*r).dump() << '\n';
            } else {
                out << "none found within bound " << bound << '\n';
            }
            return exit_ok;
        }

        if (poisson_cmd->parsed()) {
            const auto names = split_names(var_list);
            const ExtendedDegree d = poisson_degree(parse(f_text, names), parse(g_text, names));
            if (json) {
                Json doc;
                doc["poisson_degree"] = degree_to_json(d);
                out << doc.dump() << '\n';
            } else {
                out << d.to_string() << '\n';
            }
            return exit_ok;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_no_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_math;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_math;
    }
    return exit_usage;
}

} // namespace polyaut::cli

#endif // POLYAUT_TOOLS_CLI_APP_HPP
