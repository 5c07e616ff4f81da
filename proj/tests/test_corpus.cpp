#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

using namespace wfomc;

TEST_CASE("lifted counts reproduce the frozen corpus values") {
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(WFOMC_CORPUS_DIR)) {
        if (entry.path().extension() != ".wfomc") continue;
        std::ifstream in(entry.path());
        std::stringstream text;
        text << in.rdbuf();
        const Problem p = parse(text.str());
        std::istringstream lines(text.str());
        std::string line;
        int expectations = 0;
        while (std::getline(lines, line)) {
            if (line.rfind("# expect ", 0) != 0) continue;
            std::istringstream fields(line.substr(9));
            std::uint32_t n = 0;
            std::string value;
            fields >> n >> value;
            INFO(entry.path().filename().string(), " n=", n);
            CHECK(count(p, n).count == parse_rational(value));
            ++expectations;
        }
        CHECK(expectations == 3);
        ++files;
    }
    CHECK(files >= 100);
}
