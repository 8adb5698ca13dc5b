#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "harness.hpp"

using namespace nldg::harness;

namespace {

RunConfig steady_cfg() {
  RunConfig c;
  c.command = "steady";
  c.example = "1";
  c.Ns = {12, 16};
  return c;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Harness, ListParsing) {
  EXPECT_EQ(parse_int_list("24, 36,48"), (std::vector<int>{24, 36, 48}));
  EXPECT_THROW(parse_int_list("24,3.5"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("x"), std::invalid_argument);
  auto t = parse_real_list("0, pi/2");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_DOUBLE_EQ(t[1], std::acos(0.0));
}

TEST(Harness, ValidationRejectsBadConfigs) {
  EXPECT_NO_THROW(validate(steady_cfg()));
  auto bad = [](auto edit) {
    RunConfig c = steady_cfg();
    edit(c);
    return c;
  };
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.command = "solve"; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.example = "9"; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.example = "3"; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.k = 0; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.alpha = 3.0; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.Ns = {16, 12}; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.Ns = {1}; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.mu = -1.0; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.scheme = "lds"; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.delta = "qh"; })), std::invalid_argument);
  EXPECT_THROW(validate(bad([](RunConfig& c) { c.tableau = "rk4"; })), std::invalid_argument);
  RunConfig e;
  e.command = "evolve";
  e.example = "5";
  e.flux = "upwind";
  EXPECT_THROW(validate(e), std::invalid_argument);
  e.flux = "godunov";
  e.times = {2.0};
  EXPECT_THROW(validate(e), std::invalid_argument);
  e.times = {0.8};
  EXPECT_NO_THROW(validate(e));
}

TEST(Harness, SteadyTable) {
  Outputs o = run_command(steady_cfg());
  EXPECT_EQ(first_line(o.main), "N,h,delta,L2_error,order,energy_error,energy_order");
  EXPECT_TRUE(o.errors.empty());
}

TEST(Harness, VerifyIsByteIdenticalAcrossRuns) {
  RunConfig c;
  c.command = "verify";
  c.example = "1";
  c.Ns = {8};
  c.trials = 50;
  c.seed = 42;
  std::string a = run_command(c).main, b = run_command(c).main;
  EXPECT_EQ(a, b);
  EXPECT_EQ(first_line(a), "quantity,N,k,alpha,delta,mu,estimate,method");
  c.seed = 43;
  EXPECT_NE(run_command(c).main, a);
}

TEST(Harness, EvolveWritesSnapshotsAndErrors) {
  RunConfig c;
  c.command = "evolve";
  c.example = "3";
  c.Ns = {12, 24};
  c.errors_output = "unused";
  Outputs o = run_command(c);
  EXPECT_EQ(first_line(o.main), "t,x,u");
  std::istringstream in(o.errors);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,h,delta,L2_error,order");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 2);
}

TEST(Harness, RunWritesTheOutputFile) {
  RunConfig c = steady_cfg();
  c.output = testing::TempDir() + "nldg_harness_out.csv";
  ASSERT_EQ(run(c), 0);
  std::ifstream f(c.output);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "N,h,delta,L2_error,order,energy_error,energy_order");
  std::remove(c.output.c_str());
  c.example = "42";
  EXPECT_EQ(run(c), 1);
}
