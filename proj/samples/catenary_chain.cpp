// Walk every factorization of 22^4 in M_{8,14} to the canonical one.
#include <iostream>

#include "acm/acm.hpp"

int main() {
  const acm::Monoid m(8, 14);
  const acm::u64 x = 234256;
  std::cout << m.name() << " closed-form c(M) = " << acm::catenary_closed_local(m) << '\n';
  for (const auto& z : acm::enumerate_factorizations(m, x)) {
    const auto cert = acm::build_canonical_chain(m, x, z);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      if (i) std::cout << "  --" << cert.link_distances[i - 1] << "--> ";
      std::cout << cert.steps[i].str();
    }
    std::cout << "   (max link " << cert.max_link << ")\n";
  }
}
