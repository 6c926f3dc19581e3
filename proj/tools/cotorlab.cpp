#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cotorlab/tasks.hpp"

using namespace cotorlab;

namespace {

enum Exit {
    kOk = 0,
    kVerdictFailed = 1,
    kUsage = 2,
    kUnreadable = 3,
    kSchema = 4,
    kReference = 5,
    kInvalid = 6,
    kComputation = 7,
};

const char* kExitHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  a comparison ran and its verdict is fail\n"
    "  2  usage error\n"
    "  3  problem file unreadable or not JSON\n"
    "  4  schema violation in the problem file or task\n"
    "  5  unresolved or mistyped object reference\n"
    "  6  an object failed validation (nothing was computed)\n"
    "  7  computation error (invariant violation, size limit, bad parameters)\n";

std::string scalar_line(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat(const json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& x : j)
        if (x.is_object() || (x.is_array() && !x.empty() && (x[0].is_array() || x[0].is_object()))) return false;
    return true;
}

void render_text(std::ostream& os, const json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (is_flat(it.value())) {
                os << pad << it.key() << ": " << scalar_line(it.value()) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                render_text(os, it.value(), indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (is_flat(j[i])) {
                os << pad << "[" << i << "] " << scalar_line(j[i]) << "\n";
            } else {
                os << pad << "[" << i << "]\n";
                render_text(os, j[i], indent + 2);
            }
        }
    } else {
        os << pad << scalar_line(j) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Cotor / Hochschild cohomology computations on JSON problem files"};
    app.footer(kExitHelp);
    app.require_subcommand(1);

    std::string path;
    std::optional<int> max_degree;
    std::string window_text;
    bool emit_bases = false;
    bool text = false;
    bool json_out = false;

    for (const auto& name : task_commands()) {
        auto* sub = app.add_subcommand(name, "run the " + name + " task of a problem file");
        sub->add_option("problem", path, "problem file (JSON)")->required();
        sub->add_option("--max-degree", max_degree, "highest cohomological degree");
        sub->add_option("--window", window_text, "degree window lo:hi");
        sub->add_flag("--emit-bases", emit_bases, "include cocycle representatives");
        auto* t = sub->add_flag("--text", text, "human-readable report");
        sub->add_flag("--json", json_out, "JSON report (default)")->excludes(t);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    std::string command = app.get_subcommands().front()->get_name();

    TaskOptions opts;
    opts.max_degree = max_degree;
    opts.emit_bases = emit_bases;
    if (!window_text.empty()) {
        auto colon = window_text.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument("no colon");
            opts.window = GradedWindow(std::stoi(window_text.substr(0, colon)), std::stoi(window_text.substr(colon + 1)));
        } catch (const std::exception&) {
            std::cerr << "cotorlab: --window expects lo:hi with lo <= hi\n";
            return kUsage;
        }
    }
    if (max_degree && *max_degree < 0) {
        std::cerr << "cotorlab: --max-degree must be nonnegative\n";
        return kUsage;
    }

    json doc;
    {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cotorlab: cannot read " << path << "\n";
            return kUnreadable;
        }
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            std::cerr << "cotorlab: " << path << " is not JSON: " << e.what() << "\n";
            return kUnreadable;
        }
    }

    auto start = std::chrono::steady_clock::now();
    Problem problem;
    try {
        problem = parse_problem(doc);
    } catch (const ReferenceError& e) {
        std::cerr << "cotorlab: " << e.what() << "\n";
        return kReference;
    } catch (const SchemaError& e) {
        std::cerr << "cotorlab: schema: " << e.what() << "\n";
        return kSchema;
    } catch (const json::exception& e) {
        std::cerr << "cotorlab: schema: " << e.what() << "\n";
        return kSchema;
    } catch (const InputError& e) {
        std::cerr << "cotorlab: schema: " << e.what() << "\n";
        return kSchema;
    }

    json report;
    int status = kOk;
    try {
        report = run_task(command, problem, opts);
        if (report_failed(report)) status = command == "validate" ? kInvalid : kVerdictFailed;
    } catch (const ValidationError& e) {
        std::cerr << "cotorlab: " << e.what() << "\n";
        report = run_task("validate", problem, opts);
        report["command"] = command;
        status = kInvalid;
    } catch (const ReferenceError& e) {
        std::cerr << "cotorlab: " << e.what() << "\n";
        return kReference;
    } catch (const TaskError& e) {
        std::cerr << "cotorlab: task: " << e.what() << "\n";
        return kSchema;
    } catch (const SchemaError& e) {
        std::cerr << "cotorlab: schema: " << e.what() << "\n";
        return kSchema;
    } catch (const json::exception& e) {
        std::cerr << "cotorlab: schema: " << e.what() << "\n";
        return kSchema;
    } catch (const std::exception& e) {
        std::cerr << "cotorlab: computation failed: " << e.what() << "\n";
        return kComputation;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing_ms"] = std::round(elapsed.count() * 1000) / 1000;

    if (text) {
        render_text(std::cout, report, 0);
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return status;
}
