// Genus, quotients and the hyperelliptic involution of a Q8-cover of the line.
#include <iostream>

#include "galcover/galcover.hpp"

int main() {
  using namespace galcover;
  auto q8 = make_quaternion8();
  Datum d = make_datum(q8, {2, 4, 4, 4}, parse_tuple(*q8, "-1,i,j,k"));
  std::cout << "genus " << genus(d) << "\n";
  for (const auto& h : all_subgroups(*q8))
    std::cout << "  g(C/H) for |H| = " << h.size() << ": " << intermediate_genus(d, h) << "\n";
  if (auto c = hyperelliptic_certificate(d))
    std::cout << "hyperelliptic via " << q8->label(c->involution) << ", " << c->fixed_points << " fixed points\n";
  auto x = shimura_lower_bound(d, {});
  std::cout << "lower bound " << to_string(x.lower_bound) << ", " << x.verdict() << "\n";
}
