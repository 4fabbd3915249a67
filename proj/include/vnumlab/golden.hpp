#pragma once

#include <string>
#include <vector>

namespace vnumlab {

struct GoldenAssertion {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs. actual on failure
};

struct GoldenOptions {
  int window = 3;
  int extra_n = 0;  // added to the default n_max of the filtration runs
};

// M = k[X,Y]/(XY^b), I = (X^a) for (a,b) in {(1,1),(1,3),(2,3),(3,2)}, n = 1..10.
std::vector<GoldenAssertion> golden_xyb_family();
// k[X,Y]/((XY) + (X^d1, Y^d2)^n) for (d1,d2) in {(1,2),(2,3),(3,5)}, n = 1..10.
std::vector<GoldenAssertion> golden_axes_family();
// M = k[X,Y,Z]/(X^3, XY^4), I = (X, Y^2, Z^3), n = 0..8.
std::vector<GoldenAssertion> golden_cubic_family(const GoldenOptions& options = {});

// All three suites, with the third also re-run at window 4 and n_max + 4.
std::vector<GoldenAssertion> verify_golden();

}  // namespace vnumlab
