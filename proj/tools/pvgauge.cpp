#include "pvgauge/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw pvg::InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauge classes, intertwiners and closed-form representations over Q(x)"};
    std::string command, input, bounds_path;
    bool json = false;
    std::uint64_t seed = pvg::kDefaultSeed;
    unsigned threads = 1;
    app.add_option("command", command, "one of: gauge hmul equivalent trivial intertwine compose rep check")
        ->required()
        ->check(CLI::IsMember(pvg::command_names()));
    app.add_option("--input", input, "input document")->required();
    app.add_flag("--json", json, "machine-readable report");
    app.add_option("--bounds", bounds_path, "user-supplied degree bounds");
    app.add_option("--seed", seed, "seed for the randomized search tier");
    app.add_option("--threads", threads, "worker threads for the search")->check(CLI::Range(1u, 256u));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : pvg::exit_code::usage;
    }

    pvg::Report report;
    try {
        pvg::RunOptions opts;
        opts.seed = seed;
        opts.threads = threads;
        if (!bounds_path.empty())
            opts.bounds = pvg::parse_bounds(read_file(bounds_path));
        report = pvg::run_command(command, pvg::parse_document(read_file(input)), opts);
    } catch (const pvg::Error& e) {
        report = pvg::error_report(command, e);
    }
    std::cout << (json ? report.to_json() : report.to_text());
    if (report.exit_code != pvg::exit_code::ok && report.json["result"] == "error")
        std::cerr << "pvgauge: " << report.json["certificate"]["message"].get<std::string>() << "\n";
    return report.exit_code;
}
