// End-to-end CLI checks: exit codes, artifact creation, and determinism
// of repeated runs. Invoked with the CLI binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: cli_smoke <cli-binary>\n");
        return 1;
    }
    const std::string cli = argv[1];
    const fs::path base = fs::temp_directory_path() / "sphjump_cli_smoke";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string quiet = " 2>/dev/null";

    check(run(cli + " spectrum --d 2 --beta 0.5 --nmax 16 --out " +
              (base / "spec").string() + quiet) == 0,
          "spectrum exits 0");
    check(fs::exists(base / "spec" / "spectrum.csv") &&
              fs::exists(base / "spec" / "spectrum.json"),
          "spectrum writes csv and json");

    check(run(cli + " spectrum --d 2 --beta 1.5 --out " +
              (base / "bad").string() + quiet) == 2,
          "beta out of range exits 2");
    check(run(cli + " simulate --paths 0 --out " + (base / "bad").string() +
              quiet) == 2,
          "paths = 0 exits 2");
    check(run(cli + " bogus" + quiet) == 2, "unknown subcommand exits 2");

    check(run(cli + " simulate --paths 50 --tmax 0.5 --seed 3 --out " +
              (base / "sim").string() + quiet) == 0,
          "simulate exits 0");
    check(fs::exists(base / "sim" / "paths.csv"), "simulate writes paths.csv");

    // moments experiment, reduced size; then identical re-run with a
    // different worker count must produce byte-identical artifacts
    const std::string common =
        " moments --paths 2000 --seed 7 --t-grid 0.5 1 ";
    check(run(cli + common + "--workers 1 --out " + (base / "m1").string() +
              quiet) == 0,
          "moments exits 0");
    check(run(cli + common + "--workers 3 --out " + (base / "m3").string() +
              quiet) == 0,
          "moments (3 workers) exits 0");
    check(slurp(base / "m1" / "moments.csv") ==
                  slurp(base / "m3" / "moments.csv") &&
              !slurp(base / "m1" / "moments.csv").empty(),
          "moments.csv byte-identical across worker counts");
    check(slurp(base / "m1" / "moments.json") ==
              slurp(base / "m3" / "moments.json"),
          "moments.json byte-identical across worker counts");

    // validate umbrella at reduced size, twice with the same seed
    const std::string vcommon = " validate --paths 2000 --seed 5 ";
    check(run(cli + vcommon + "--out " + (base / "v1").string() + quiet) == 0,
          "validate exits 0");
    check(run(cli + vcommon + "--out " + (base / "v2").string() + quiet) == 0,
          "validate re-run exits 0");
    check(slurp(base / "v1" / "validate.csv") ==
                  slurp(base / "v2" / "validate.csv") &&
              !slurp(base / "v1" / "validate.csv").empty(),
          "validate outputs identical across runs");

    // config file + flag override: the flag wins
    {
        std::ofstream cfg(base / "run.ini");
        cfg << "beta=0.7\nseed=9\n";
    }
    check(run(cli + " spectrum --config " + (base / "run.ini").string() +
              " --beta 0.3 --nmax 4 --out " + (base / "cfgrun").string() +
              quiet) == 0,
          "config file with flag override exits 0");
    check(slurp(base / "cfgrun" / "spectrum.json").find("beta=0.3") !=
              std::string::npos,
          "flag overrides the config-file value");

    std::printf("%d failure(s)\n", failures);
    return failures;
}
