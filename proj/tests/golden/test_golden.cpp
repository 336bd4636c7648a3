// Runs each CLI case in-process and compares stdout with <name>.out.
// ASCENT_UPDATE_GOLDEN=1 rewrites the files instead.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cli.hpp"

namespace {

std::string trim(std::string s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct Case {
    std::string name;
    int code = 0;
    std::vector<std::string> args;
};

std::vector<Case> load_cases()
{
    std::ifstream in(GOLDEN_DIR "/cases.txt");
    REQUIRE(in.good());
    std::vector<Case> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto p1 = line.find('|'), p2 = line.find('|', p1 + 1);
        Case c;
        c.name = trim(line.substr(0, p1));
        c.code = std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1)));
        std::istringstream args(line.substr(p2 + 1));
        for (std::string a; args >> a;)
            c.args.push_back(a);
        out.push_back(c);
    }
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("CLI golden files")
{
    const bool update = std::getenv("ASCENT_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : load_cases()) {
        CAPTURE(c.name);
        std::vector<const char*> argv{"ascent"};
        for (const auto& a : c.args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = ascent::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
        CHECK_MESSAGE(code == c.code, err.str());
        const std::string file = std::string(GOLDEN_DIR) + "/" + c.name + ".out";
        if (update) {
            std::ofstream(file) << out.str();
            continue;
        }
        CHECK(out.str() == slurp(file));
    }
}

TEST_CASE("size limit from the environment and the flag")
{
    std::ostringstream out, err;
    const char* big[] = {"ascent", "paths", "enumerate", "--family", "plain", "--n", "4", "--count-only"};
    setenv("ASCENT_SIZE_LIMIT", "3", 1);
    CHECK(ascent::cli::dispatch(8, big, out, err) == 2);
    const char* flag[] = {"ascent", "--size-limit", "4", "paths", "enumerate", "--family", "plain", "--n", "4",
                          "--count-only"};
    CHECK(ascent::cli::dispatch(10, flag, out, err) == 0);
    CHECK(out.str() == "14\n");
    unsetenv("ASCENT_SIZE_LIMIT");
}

TEST_CASE("usage errors exit with 2")
{
    std::ostringstream out, err;
    const char* none[] = {"ascent"};
    CHECK(ascent::cli::dispatch(1, none, out, err) == 2);
    const char* plain_m[] = {"ascent", "paths", "enumerate", "--family", "plain", "--m", "2", "--n", "2"};
    CHECK(ascent::cli::dispatch(9, plain_m, out, err) == 2);
    const char* help[] = {"ascent", "--help"};
    CHECK(ascent::cli::dispatch(2, help, out, err) == 0);
}
