// Drives the installed command-line binary end to end through a shell,
// checking exit codes, diagnostics and emitted files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path = fs::temp_directory_path() / ("gegfault_cli_out_" +
                                                           std::to_string(counter));
    const fs::path err_path = fs::temp_directory_path() / ("gegfault_cli_err_" +
                                                           std::to_string(counter));
    ++counter;
    const std::string cmd = std::string(GEGFAULT_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("design geg:3:1 --no-such-flag").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("domain errors exit 1 with a single diagnostic line") {
    const auto result = run_cli("design geg:2:1");
    CHECK(result.code == 1);
    const auto diag = lines_of(result.err);
    REQUIRE(diag.size() == 1);
    CHECK(diag[0].find("nu must be odd") != std::string::npos);
    CHECK(diag[0].find("2") != std::string::npos);
}

TEST_CASE("design emits coefficient files deterministically") {
    const auto dir = fresh_dir("gegfault_cli_design");
    const auto result = run_cli("design geg:3:12 --out " + dir.string());
    REQUIRE(result.code == 0);

    const auto csv = slurp(dir / "design_geg3a12.csv");
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 5);  // header + 4 taps
    CHECK(rows[0] == "k,h_k,g_k");
    CHECK(rows[1].rfind("0,", 0) == 0);

    CHECK(fs::exists(dir / "design_geg3a12.json"));

    // Byte-identical on a second run.
    REQUIRE(run_cli("design geg:3:12 --out " + dir.string()).code == 0);
    CHECK(slurp(dir / "design_geg3a12.csv") == csv);
    fs::remove_all(dir);
}

TEST_CASE("bands reproduces the level-3 approximation edge") {
    const auto dir = fresh_dir("gegfault_cli_bands");
    REQUIRE(run_cli("bands geg:3:1 --levels 7 --fs 7680 --out " + dir.string()).code == 0);
    const auto doc = slurp(dir / "bands_geg3a1.json");
    CHECK(doc.find("\"scaling_hi_rounded\": 219") != std::string::npos);
    CHECK(doc.find("\"sample_rate_hz\": 7680") != std::string::npos);

    REQUIRE(run_cli("bands ideal --levels 3 --out " + dir.string()).code == 0);
    CHECK(slurp(dir / "bands_ideal.json").find("480") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("response and cascade emit series") {
    const auto dir = fresh_dir("gegfault_cli_response");
    REQUIRE(run_cli("response geg:3:12 --grid 256 --out " + dir.string()).code == 0);
    const auto rows = lines_of(slurp(dir / "response_geg3a12_scaling.csv"));
    REQUIRE(rows.size() == 257);
    CHECK(rows[0] == "omega,magnitude,phase,group_delay");

    REQUIRE(run_cli("cascade geg:3:12 --iterations 4 --kind wavelet --out " + dir.string())
                .code == 0);
    CHECK(lines_of(slurp(dir / "cascade_geg3a12_wavelet_i4.csv")).size() == 47);
    fs::remove_all(dir);
}

TEST_CASE("simulate, decompose and analyze round trip") {
    const auto dir = fresh_dir("gegfault_cli_pipeline");
    const auto record = dir / "record.csv";
    REQUIRE(run_cli("simulate --type AB-g --at 0.25 --inception 4.125 --to " + record.string())
                .code == 0);
    const auto rows = lines_of(slurp(record));
    REQUIRE(rows.size() == 1025);
    CHECK(rows[0] == "t_s,va,vb,vc,ia,ib,ic");

    REQUIRE(run_cli("decompose " + record.string() + " --filter geg:3:12 --levels 3 --channel ia --out " +
                    dir.string())
                .code == 0);
    CHECK(lines_of(slurp(dir / "decompose_ia_level3.csv")).size() == 129);
    CHECK(slurp(dir / "decompose_ia_levels.json").find("effective_rate_hz") != std::string::npos);

    const auto analyze = run_cli("analyze " + record.string() +
                                 " --filter geg:3:12 --truth 51.4 --out " + dir.string());
    REQUIRE(analyze.code == 0);
    CHECK(analyze.out.find("AB-g") != std::string::npos);
    const auto summary = slurp(dir / "analyze_geg3a12_summary.json");
    CHECK(summary.find("\"detected\": true") != std::string::npos);
    CHECK(summary.find("\"ground_involved\": true") != std::string::npos);
    const auto windows = lines_of(slurp(dir / "analyze_geg3a12_windows.csv"));
    CHECK(windows[0] == "window,D_F_km,error");
    CHECK(windows.size() > 100);
    fs::remove_all(dir);
}

TEST_CASE("analyzing a missing record exits 1") {
    const auto result = run_cli("analyze /nonexistent/record.csv --filter daub4");
    CHECK(result.code == 1);
    CHECK(lines_of(result.err).size() == 1);
}

TEST_CASE("config file overrides pipeline parameters") {
    const auto dir = fresh_dir("gegfault_cli_config");
    const auto record = dir / "record.csv";
    REQUIRE(run_cli("simulate --type C-g --at 0.5 --inception 4.25 --to " + record.string())
                .code == 0);

    const auto config = dir / "config.json";
    std::ofstream(config) << R"({"threshold_multiplier": 4.0, "prefault_cycles": 2})";
    const auto result = run_cli("analyze " + record.string() +
                                " --filter geg:3:12 --truth 102.8 --config " + config.string() +
                                " --out " + dir.string());
    REQUIRE(result.code == 0);
    CHECK(result.out.find("C-g") != std::string::npos);

    CHECK(run_cli("analyze " + record.string() + " --filter geg:3:12 --config /nonexistent.json")
              .code == 1);
    fs::remove_all(dir);
}

TEST_CASE("GEGFAULT_OUT provides the default output directory") {
    const auto dir = fresh_dir("gegfault_cli_envout");
    const std::string cmd = "GEGFAULT_OUT=" + dir.string() + " " + GEGFAULT_CLI_PATH +
                            " design haar > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(fs::exists(dir / "design_geg1a1.csv"));
    fs::remove_all(dir);
}

TEST_CASE("sweep over the built-in catalog") {
    const auto dir = fresh_dir("gegfault_cli_sweep");
    const auto result = run_cli("sweep default --filters daub4,geg:3:12 --write-catalog " +
                                (dir / "catalog.json").string() + " --out " + dir.string());
    REQUIRE(result.code == 0);
    CHECK(fs::exists(dir / "catalog.json"));

    const auto fig = lines_of(slurp(dir / "sweep_fig12.csv"));
    REQUIRE(fig.size() == 28);  // header + 27 single-phase-earth rows
    CHECK(fig[0] == "id,daub4_err,geg3a12_err");
    CHECK(fig[1].rfind("Ag25_1,", 0) == 0);
    CHECK(fig[27].rfind("Cg75_3,", 0) == 0);

    const auto summary = slurp(dir / "sweep_summary.json");
    CHECK(summary.find("\"detection_rate\": 1.0") != std::string::npos);

    // The written catalog reloads and sweeps identically.
    const auto again = run_cli("sweep " + (dir / "catalog.json").string() +
                               " --filters daub4 --out " + dir.string());
    CHECK(again.code == 0);
    fs::remove_all(dir);
}
