#include <iostream>

#include "acm/acm.hpp"

int main(int argc, char** argv) {
  const acm::u64 a = argc > 2 ? std::stoull(argv[1]) : 6;
  const acm::u64 b = argc > 2 ? std::stoull(argv[2]) : 6;
  const acm::u64 bound = argc > 3 ? std::stoull(argv[3]) : 10'000;
  const acm::Monoid m(a, b);
  acm::emit_report(acm::to_json(acm::probe_catenary_conjecture(m, bound)), acm::Format::Table, std::cout);
  std::cout << '\n';
  acm::emit_report(acm::to_json(acm::probe_ld_conjecture(m, bound)), acm::Format::Table, std::cout);
}
