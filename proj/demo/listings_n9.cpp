// Prints the n = 9 image listings for the odd/even cancellation and the even
// refinement, then the small count tables behind them.

#include <iostream>

#include "overpart/overpart.hpp"

int main() {
  using namespace overpart;
  std::cout << golden_listing(Theorem::t3, 9) << "\n" << golden_listing(Theorem::t4e, 9) << "\n";
  for (const char* name : {"spt1o", "be1", "bo1", "pe"}) {
    const FamilySpec f = parse_family(name);
    std::cout << name << ":";
    for (int n = 0; n <= 9; ++n) std::cout << " " << count_family(f, n);
    std::cout << "\n";
  }
}
