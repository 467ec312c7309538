#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewcliff/errors.hpp"
#include "skewcliff/runner.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for graded skew Clifford algebras"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute a manifest and print the report");
    std::string run_path, out_path;
    int max_degree = 0;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> primes;
    bool timings = false;
    run->add_option("manifest", run_path, "manifest file")->required();
    auto* md_opt = run->add_option("--max-degree", max_degree, "truncation degree");
    auto* seed_opt = run->add_option("--seed", seed, "probe seed");
    run->add_option("--primes", primes, "probe primes, comma separated")->delimiter(',');
    run->add_option("--out", out_path, "write the report to this file");
    run->add_flag("--timings", timings, "print per-command wall-clock times to stderr");

    auto* val = app.add_subcommand("validate", "parse and validate a manifest");
    std::string val_path;
    val->add_option("manifest", val_path, "manifest file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        std::string text;
        if (!read_file(run_path, text)) {
            std::cerr << "cannot read " << run_path << "\n";
            return 2;
        }
        skewcliff::RunOverrides o;
        if (md_opt->count()) o.max_degree = max_degree;
        if (seed_opt->count()) o.seed = seed;
        o.primes = primes;
        o.timings = timings;
        skewcliff::RunResult res = skewcliff::run_manifest_text(text, o);
        if (!out_path.empty()) {
            std::ofstream outf(out_path, std::ios::binary);
            if (!outf) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            outf << res.report;
        } else {
            std::cout << res.report;
        }
        return res.exit_code;
    }

    std::string text;
    if (!read_file(val_path, text)) {
        std::cerr << "cannot read " << val_path << "\n";
        return 2;
    }
    try {
        skewcliff::Manifest m = skewcliff::parse_manifest(text);
        std::cout << "ok: " << m.name << "\n";
        return 0;
    } catch (const skewcliff::Error& e) {
        std::cerr << "invalid manifest: " << e.what() << "\n";
        return 2;
    }
}
