#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

// Each line of golden/cases.txt is "<name> <exit> <args...>"; "{dir}" in an
// argument expands to the golden directory. Expected output lives in
// <name>.out and <name>.err. Setting SYZCX_UPDATE_GOLDEN=1 rewrites them.

namespace {

struct Case {
  std::string name;
  int exit = 0;
  std::vector<std::string> args;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

const std::string kDir = SYZCX_GOLDEN_DIR;

std::vector<Case> load_cases() {
  std::vector<Case> out;
  std::ifstream in(kDir + "/cases.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Case c;
    ss >> c.name >> c.exit;
    std::string arg;
    while (ss >> arg) {
      for (auto pos = arg.find("{dir}"); pos != std::string::npos; pos = arg.find("{dir}"))
        arg.replace(pos, 5, kDir);
      c.args.push_back(arg);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string relative(std::string text) {
  for (auto pos = text.find(kDir); pos != std::string::npos; pos = text.find(kDir)) text.replace(pos, kDir.size(), "{dir}");
  return text;
}

class CliGolden : public ::testing::TestWithParam<Case> {};

TEST_P(CliGolden, Matches) {
  const Case& c = GetParam();
  ::unsetenv("SYZCX_DIM_CAP");
  std::ostringstream out, err;
  int code = syzcx::cli::run(c.args, out, err);
  std::string got_out = relative(out.str()), got_err = relative(err.str());
  if (std::getenv("SYZCX_UPDATE_GOLDEN")) {
    std::ofstream(kDir + "/" + c.name + ".out", std::ios::binary) << got_out;
    std::ofstream(kDir + "/" + c.name + ".err", std::ios::binary) << got_err;
  }
  EXPECT_EQ(code, c.exit);
  EXPECT_EQ(got_out, slurp(kDir + "/" + c.name + ".out"));
  EXPECT_EQ(got_err, slurp(kDir + "/" + c.name + ".err"));
}

INSTANTIATE_TEST_SUITE_P(Golden, CliGolden, ::testing::ValuesIn(load_cases()),
                         [](const ::testing::TestParamInfo<Case>& info) { return info.param.name; });

TEST(CliGoldenManifest, HasCases) { EXPECT_GE(load_cases().size(), 20u); }

}  // namespace
