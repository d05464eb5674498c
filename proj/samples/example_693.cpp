// The Hilbert monoid {1, 5, 9, 13, ...}: 693 factors two ways.
#include <iostream>

#include "acm/acm.hpp"

int main() {
  const acm::Monoid h(1, 4);
  for (const auto& z : acm::enumerate_factorizations(h, 693)) std::cout << z.str() << '\n';
  std::cout << "c(693) = " << acm::catenary_of_element(h, 693) << '\n';
  std::cout << "omega(693) = " << acm::omega_closed_regular(h, 693) << '\n';
  std::cout << "bullet:";
  for (auto a : acm::omega_witness_regular(h, 693)) std::cout << ' ' << a;
  std::cout << '\n';
}
