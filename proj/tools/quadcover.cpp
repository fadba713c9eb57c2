/*
   Copyright 2026 The quadcover authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// quadcover: batch CLI over the exact binary-quadratic-form / double-cover
// correspondence. JSON in, JSON out; text output is derived from the JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quadcover/clirun.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw quadcover::ParseError("io_error", "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void render_text(const quadcover::json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 2);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>()
                                                               : value.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) render_text(value, os, indent);
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void write_output(const quadcover::json& doc, const std::string& path, const std::string& format) {
    std::ostringstream body;
    if (format == "text")
        render_text(doc, body);
    else
        body << doc.dump(2) << "\n";
    if (path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(path);
        if (!out) throw quadcover::ParseError("io_error", "cannot open output file '" + path + "'");
        out << body.str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for binary quadratic forms and double covers"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--input", input, "payload JSON file, or - for stdin")->capture_default_str();
    app.add_option("--output", output, "output file, or - for stdout")->capture_default_str();
    app.add_option("--seed", seed, "seed for all randomized runs")->capture_default_str();
    app.add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    const char* commands[] = {"form-to-cover", "cover-to-form", "roundtrip",     "dual",
                              "kernel-gen",    "proj-check",    "discriminant",  "standard",
                              "pinch",         "split",         "differentials", "verify-identities"};
    std::int64_t disc_n = 0;
    std::string chosen;
    for (const char* name : commands) {
        CLI::App* sub = app.add_subcommand(name, "");
        sub->fallthrough();  // let --input/--seed/... appear after the subcommand
        sub->callback([&chosen, name] { chosen = name; });
        if (std::string(name) == "discriminant")
            sub->add_option("--n", disc_n, "number of variables (2..QUADCOVER_MAX_N)");
    }

    CLI11_PARSE(app, argc, argv);

    quadcover::CommandOptions opt;
    opt.seed = seed;
    if (const char* cap = std::getenv("QUADCOVER_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end && *end == '\0' && v >= 2) opt.max_n = static_cast<std::size_t>(v);
    }

    try {
        quadcover::json payload = quadcover::json::object();
        // commands that always need a payload read it; discriminant can run
        // from --n alone
        const bool needs_input =
            !(chosen == "discriminant" && disc_n != 0) && chosen != "verify-identities";
        if (needs_input) {
            std::string text = read_input(input);
            if (!text.empty()) {
                payload = quadcover::json::parse(text, nullptr, true, true);
            } else if (chosen != "discriminant") {
                throw quadcover::ParseError("bad_request", "empty payload");
            }
        } else if (input != "-") {
            std::string text = read_input(input);
            if (!text.empty()) payload = quadcover::json::parse(text, nullptr, true, true);
        }
        if (chosen == "discriminant" && disc_n != 0) payload["n"] = disc_n;

        quadcover::CommandOutcome outcome = quadcover::run_command(chosen, payload, opt);
        write_output(outcome.document, output, format);
        return outcome.exit_code;
    } catch (const quadcover::json::parse_error& e) {
        quadcover::json err{{"error",
                             {{"code", "bad_json"}, {"message", e.what()}, {"location", "input"}}}};
        write_output(err, output, format);
        return 1;
    } catch (const quadcover::ParseError& e) {
        write_output(quadcover::json{{"error",
                                      {{"code", e.code()},
                                       {"message", e.what()},
                                       {"location", e.location()}}}},
                     output, format);
        return 1;
    } catch (const quadcover::Error& e) {
        write_output(quadcover::json{{"error",
                                      {{"code", e.code()},
                                       {"message", e.what()},
                                       {"location", e.location()}}}},
                     output, format);
        return 2;
    }
}
