#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("prefseq_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args) {
    const char* cli = std::getenv("PREFSEQ_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "PREFSEQ_CLI must point at the built binary");
    fs::path out = work_dir() / "stdout.txt";
    fs::path err = work_dir() / "stderr.txt";
    std::string command = std::string(cli) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
    int status = std::system(command.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CliResult{code, slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream(p) << content;
    return p;
}

const std::string kTernaryCounterexample =
    "t=3 span=2\n"
    "00: 0 2 1\n"
    "01: 1 2 0\n"
    "02: 0 1 2\n"
    "10: 1 2 0\n"
    "11: 0 1 2\n"
    "12: 1 2 0\n"
    "20: 1 0 2\n"
    "21: 2 1 0\n"
    "22: 2 0 1\n";

}  // namespace

TEST_CASE("generate subcommand") {
    SUBCASE("prefer-higher ternary order 2 with wrap") {
        auto r = run_cli("generate --t 3 --order 2 --prefer-higher --wrap");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "00221201100\n");
    }

    SUBCASE("table file with a non-zero initial word") {
        auto table = write_file("counterexample.pref", kTernaryCounterexample);
        auto r = run_cli("generate --t 3 --order 3 --table " + table.string() +
                         " --initial 001");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "00110121222010200021112022100\n");
        CHECK(r.err.find("warning") != std::string::npos);
    }

    SUBCASE("prefer-opposite run reports its missing window and exits 3") {
        auto r = run_cli("generate --t 2 --order 3 --prefer-opposite --stats");
        CHECK(r.exit_code == 3);
        CHECK(r.out ==
              "000101100\n"
              "halt length: 7\n"
              "de Bruijn: no\n"
              "missing windows: 111\n");
    }

    SUBCASE("a full run with --stats exits 0") {
        auto r = run_cli("generate --t 2 --order 4 --prefer-higher --stats");
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "0000111101100101000\n"
              "halt length: 16\n"
              "de Bruijn: yes\n");
    }

    SUBCASE("usage errors exit 2") {
        CHECK(run_cli("generate --order 2 --prefer-higher").exit_code == 2);
        CHECK(run_cli("generate --t 3 --order 2").exit_code == 2);
        CHECK(run_cli("generate --t 3 --order 2 --prefer-opposite").exit_code == 2);
        CHECK(run_cli("generate --t 2 --order 3 --prefer-higher --initial 0000")
                  .exit_code == 2);
        auto table = write_file("counterexample2.pref", kTernaryCounterexample);
        CHECK(run_cli("generate --t 2 --order 3 --table " + table.string())
                  .exit_code == 2);
    }
}

TEST_CASE("check subcommand") {
    SUBCASE("prefer-higher is complete") {
        auto table = write_file("higher4.pref",
                                "t=4 span=0\n"
                                "-: 3 2 1 0\n");
        auto r = run_cli("check --table " + table.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out == "complete\n");
    }

    SUBCASE("the ternary counterexample table lists its cycle") {
        auto table = write_file("counterexample3.pref", kTernaryCounterexample);
        auto r = run_cli("check --table " + table.string());
        CHECK(r.exit_code == 3);
        CHECK(r.out.find("incomplete\n") == 0);
        CHECK(r.out.find("cycle: 00 -> 01 -> 10 -> 00") != std::string::npos);
    }

    SUBCASE("prefer-opposite reports its self-loop") {
        auto table = write_file("opposite.pref",
                                "t=2 span=1\n"
                                "0: 1 0\n"
                                "1: 0 1\n");
        auto r = run_cli("check --table " + table.string());
        CHECK(r.exit_code == 3);
        CHECK(r.out ==
              "incomplete\n"
              "cycle: 1 -> 1\n");
    }

    SUBCASE("format errors exit 2 with a line number") {
        auto table = write_file("broken.pref",
                                "t=2 span=1\n"
                                "0: 1 1\n"
                                "1: 0 1\n");
        auto r = run_cli("check --table " + table.string());
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("line 2") != std::string::npos);
    }

    SUBCASE("a missing file exits 2") {
        CHECK(run_cli("check --table /nonexistent/nowhere.pref").exit_code == 2);
    }
}

TEST_CASE("complexity subcommand") {
    SUBCASE("the order-4 Ford sequence has complexity 0") {
        auto r =
            run_cli("complexity --t 2 --order 4 --seq 0000111101100101000");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("complexity: 0\n") == 0);
    }

    SUBCASE("sequence 6 prints its span-2 witness") {
        auto r =
            run_cli("complexity --t 2 --order 4 --seq 0000101001111011000");
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "complexity: 2\n"
              "span 0: infeasible\n"
              "span 1: infeasible\n"
              "span 2: feasible\n"
              "span 3: feasible\n"
              "witness:\n"
              "t=2 span=2\n"
              "00: 1 0\n"
              "01: 0 1\n"
              "10: 1 0\n"
              "11: 1 0\n");
    }

    SUBCASE("sequences can come from a file") {
        auto path = write_file("seq1.txt", "0000100110101111000\n");
        auto r = run_cli("complexity --t 2 --order 4 --seq " + path.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("complexity: 3\n") == 0);
    }

    SUBCASE("non-de-Bruijn input exits 2") {
        CHECK(run_cli("complexity --t 2 --order 2 --seq 00010").exit_code == 2);
    }
}

TEST_CASE("census and count subcommands") {
    SUBCASE("binary order-4 census") {
        auto r = run_cli("census --t 2 --order 4");
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "span 0: 1\n"
              "span 1: 0\n"
              "span 2: 1\n"
              "span 3: 14\n"
              "total: 16\n");
    }

    SUBCASE("census with mode comparison flags the disagreement") {
        auto r = run_cli("census --t 2 --order 4 --modes");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("span 1: 0 (corrected N_1 = 0, paper-literal N_1 = 1; "
                         "modes disagree)") != std::string::npos);
        CHECK(r.out.find("total: 16 (M(2,4) = 16)") != std::string::npos);
    }

    SUBCASE("count surfaces the mode discrepancy at i = 1") {
        auto r = run_cli("count --t 2 --i 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "M(2,1) = 1\n"
              "N_1 paper-literal: 1\n"
              "N_1 corrected: 0 (modes disagree)\n");
    }

    SUBCASE("count reports the ternary order-2 total") {
        auto r = run_cli("count --t 3 --i 2");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("M(3,2) = 24\n") == 0);
    }

    SUBCASE("census guard violations exit 2") {
        CHECK(run_cli("census --t 3 --order 4").exit_code == 2);
    }
}
