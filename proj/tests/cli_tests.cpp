// End-to-end checks of the graphonlab binary: every --help example must run,
// exit codes must follow the documented contract, and seeded runs must
// reproduce byte-for-byte.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

int g_failures = 0;

#define EXPECT(cond, what)                                                     \
    do {                                                                       \
        if (!(cond)) {                                                         \
            ++g_failures;                                                      \
            std::cerr << "FAIL " << what << " (" << __FILE__ << ":" << __LINE__ \
                      << ")\n";                                                \
        }                                                                      \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& command) {
    RunResult result;
    std::string full = command + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-graphonlab>\n";
        return 1;
    }
    std::string bin = argv[1];
    std::string tmpdir = "/tmp/graphonlab-cli-XXXXXX";
    std::vector<char> tmpl(tmpdir.begin(), tmpdir.end());
    tmpl.push_back('\0');
    if (!mkdtemp(tmpl.data())) {
        std::cerr << "cannot create temp dir\n";
        return 1;
    }
    tmpdir.assign(tmpl.data());

    // ---- every --help example runs and exits 0 ---------------------------
    RunResult help = run(bin + " --help");
    EXPECT(help.exit_code == 0, "--help exits 0");
    int examples_seen = 0;
    {
        std::istringstream lines(help.output);
        std::string line;
        while (std::getline(lines, line)) {
            std::size_t at = line.find("graphonlab ");
            if (at == std::string::npos || line.substr(0, at).find_first_not_of(' ') != std::string::npos)
                continue;
            std::string cmd = bin + " " + line.substr(at + 11);
            RunResult r = run(cmd);
            EXPECT(r.exit_code == 0, "help example '" + line + "' exits 0");
            ++examples_seen;
        }
    }
    EXPECT(examples_seen >= 10, "found the documented examples in --help");

    // ---- documented outputs ------------------------------------------------
    RunResult ent = run(bin + " entropy --graphon wrs:2,0");
    EXPECT(ent.exit_code == 0, "entropy exit");
    EXPECT(ent.output == "0.5\n", "entropy wrs:2,0 prints 0.5");

    RunResult cen = run(bin + " census --class kt_free:3 --n 3");
    EXPECT(cen.exit_code == 0, "census exit");
    EXPECT(cen.output.find("labelled 7") != std::string::npos, "census triangle-free n=3 labelled 7");

    write_file(tmpdir + "/zero.json",
               R"({"schema":"graphonlab.kernel/1","measures":["1/2","1/2"],)"
               R"("values":[["0","0"],["0","0"]]})");
    RunResult zero = run(bin + " cutnorm --kernel @" + tmpdir + "/zero.json");
    EXPECT(zero.exit_code == 0, "cutnorm exit");
    EXPECT(zero.output == "0\n", "cutnorm of the zero kernel is 0");

    // ---- exit-code contract -------------------------------------------------
    EXPECT(run(bin + " frobnicate").exit_code == 2, "unknown subcommand exits 2");
    EXPECT(run(bin + " entropy --graphon wrs:2,0 --wat").exit_code == 2, "unknown flag exits 2");
    EXPECT(run(bin + " entropy --graphon nosuch:1").exit_code == 2, "bad literal exits 2");
    EXPECT(run(bin + " census --class all --n 99").exit_code == 3, "capacity overflow exits 3");
    EXPECT(run(bin + " balls --graphon wrs:2,0 --n 7").exit_code == 3, "ball-count capacity exits 3");
    EXPECT(run(bin).exit_code == 0, "bare invocation prints help and exits 0");

    // ---- seed echo and byte-for-byte reproducibility -----------------------
    RunResult first = run(bin + " sample --graphon wrs:2,0 --n 8 --count 3");
    EXPECT(first.exit_code == 0, "unseeded sample exit");
    EXPECT(first.output.rfind("seed: ", 0) == 0, "sample echoes its seed");
    std::string seed_line = first.output.substr(0, first.output.find('\n'));
    std::string seed_value = seed_line.substr(6);
    RunResult replay = run(bin + " sample --graphon wrs:2,0 --n 8 --count 3 --seed " + seed_value);
    EXPECT(replay.exit_code == 0, "seeded sample exit");
    EXPECT(replay.output == first.output, "replay with the echoed seed is byte-identical");

    RunResult reg1 = run(bin + " regularity --subject wrs:3,2 --k 2,4 --seed 11");
    RunResult reg2 = run(bin + " regularity --subject wrs:3,2 --k 2,4 --seed 11");
    EXPECT(reg1.exit_code == 0 && reg1.output == reg2.output, "seeded regularity is reproducible");

    // ---- config files --------------------------------------------------------
    write_file(tmpdir + "/minimal.toml", "[balls]\ngraphon = \"wrs:2,0\"\n");
    RunResult minimal = run(bin + " --config " + tmpdir + "/minimal.toml");
    EXPECT(minimal.exit_code == 0, "minimal config applies defaults");
    EXPECT(minimal.output.find("delta,n_hat") != std::string::npos, "config-run report has rows");

    write_file(tmpdir + "/census.toml", "[census]\nclass = \"all\"\nn = 4\n");
    RunResult overridden = run(bin + " --config " + tmpdir + "/census.toml census --n 3");
    EXPECT(overridden.exit_code == 0, "config with override exit");
    EXPECT(overridden.output.find("labelled 8") != std::string::npos, "flag overrides config value");

    write_file(tmpdir + "/bad.toml", "[census]\nclass = \"all\"\nn = 3\nwat = 1\n");
    RunResult bad = run(bin + " --config " + tmpdir + "/bad.toml");
    EXPECT(bad.exit_code == 2, "unknown config key exits 2");
    EXPECT(bad.output.find("wat") != std::string::npos, "error names the offending key");

    // ---- json mode and file output -------------------------------------------
    RunResult json = run(bin + " entropy --graphon turan:3 --json");
    EXPECT(json.output.find("\"entropy\"") != std::string::npos, "json mode emits a document");

    // worker count does not change results
    RunResult one_thread = run("GRAPHONLAB_THREADS=1 " + bin + " census --class split --n 5");
    RunResult two_thread = run(bin + " census --class split --n 5 --threads 2");
    EXPECT(one_thread.exit_code == 0 && one_thread.output == two_thread.output,
           "census output independent of worker count");

    RunResult to_file =
        run(bin + " growth --class bipartite --n-max 4 --format csv --out " + tmpdir + "/g.csv");
    EXPECT(to_file.exit_code == 0, "growth --out exit");
    std::ifstream written(tmpdir + "/g.csv");
    std::string header;
    std::getline(written, header);
    EXPECT(header == "n,labelled,unlabelled,exponent", "growth csv header");

    // ---- forbidden-list classes load their graphs from graph6 files -------------
    write_file(tmpdir + "/triangle.g6", "Bw\n");
    RunResult forb = run(bin + " census --class forbidden:@" + tmpdir + "/triangle.g6 --n 3");
    EXPECT(forb.exit_code == 0, "forbidden census exit");
    EXPECT(forb.output.find("labelled 7") != std::string::npos,
           "forbidding the triangle matches kt_free:3 at n=3");

    // ---- round trip through the graph6 subcommand ------------------------------
    RunResult enc = run(bin + " graph6 encode --n 3 --edges 0-1,1-2,0-2");
    EXPECT(enc.output == "Bw\n", "graph6 encode K_3");
    RunResult dec = run(bin + " graph6 decode Bw");
    EXPECT(dec.output.find("n 3") != std::string::npos, "graph6 decode order");
    EXPECT(dec.output.find("0-1") != std::string::npos, "graph6 decode edges");

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << g_failures << " failures\n";
    return 1;
}
