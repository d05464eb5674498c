#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "acm/acm.hpp"

namespace {

using namespace acm;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

struct Config {
  std::optional<u64> a, b, x, max;
  std::string variant = "ceiling";
  std::string format = "table";
  std::string out;
  std::size_t cap = kDefaultFactorizationCap;
  std::optional<u64> atom_bound;
  std::optional<unsigned> len_bound;
  bool seedless = false;
  std::string suite;
};

u64 need(const std::optional<u64>& v, const char* flag) {
  if (!v) fail(ErrorKind::InvalidInput, std::string("missing required flag ") + flag);
  return *v;
}

Monoid need_monoid(const Config& c) { return Monoid(need(c.a, "--a"), need(c.b, "--b")); }

ScanOptions scan_options(const Config& c) {
  ScanOptions s;
  s.factorization_cap = c.cap;
  return s;
}

Json base(const Monoid& m) {
  Json j;
  j["monoid"] = m.name();
  return j;
}

Json cmd_classify(const Config& c) {
  const auto m = need_monoid(c);
  Json j = to_json(m.descriptor(), m.classification());
  if (c.max) {
    const auto diag = compare_membership_predicates(m.descriptor(), *c.max);
    j["membership_check"] = {{"checked", diag.checked},
                             {"disagreements", diag.disagreements},
                             {"first_disagreement", to_json(diag.first_disagreement)}};
  }
  return j;
}

Json cmd_atoms(const Config& c) {
  const auto m = need_monoid(c);
  const u64 bound = need(c.max, "--max");
  const auto atoms = m.atoms_up_to(bound);
  Json j = base(m);
  j["bound"] = bound;
  j["count"] = atoms.size();
  j["atoms"] = atoms;
  return j;
}

Json cmd_factorize(const Config& c) {
  const auto m = need_monoid(c);
  const u64 x = need(c.x, "--x");
  const auto zs = enumerate_factorizations(m, x, c.cap);
  Json list = Json::array();
  for (const auto& z : zs) list.push_back(to_json(z));
  Json j = base(m);
  j["element"] = x;
  j["count"] = zs.size();
  j["factorizations"] = list;
  return j;
}

Json cmd_profile(const Config& c) {
  const auto m = need_monoid(c);
  const u64 x = need(c.x, "--x");
  const auto zs = enumerate_factorizations(m, x, c.cap);
  Json j = to_json(profile_from_factorizations(zs));
  j["monoid"] = m.name();
  j["element"] = x;
  j["factorization_count"] = zs.size();
  j["catenary"] = catenary_of_factorizations(zs);
  return j;
}

Json cmd_omega(const Config& c) {
  const auto m = need_monoid(c);
  const u64 x = need(c.x, "--x");
  if (c.variant != "floor" && c.variant != "ceiling") {
    fail(ErrorKind::InvalidInput, "--variant must be floor or ceiling");
  }
  Json j = base(m);
  j["element"] = x;
  if (m.is_regular()) {
    j["omega"] = omega_closed_regular(m, x);
    j["witness_bullet"] = omega_witness_regular(m, x);
  } else {
    const auto v = c.variant == "floor" ? OmegaVariant::Floor : OmegaVariant::Ceiling;
    j["variant"] = to_string(v);
    j["omega"] = omega_closed_singular(m, x, v);
    j["floor_variant"] = omega_closed_singular(m, x, OmegaVariant::Floor);
    j["ceiling_variant"] = omega_closed_singular(m, x, OmegaVariant::Ceiling);
  }
  if (c.atom_bound || c.len_bound) {
    j["oracle"] = to_json(omega_oracle(m, x, c.atom_bound.value_or(1000), c.len_bound.value_or(5)));
  }
  return j;
}

Json cmd_ld(const Config& c) {
  const auto m = need_monoid(c);
  Json j = base(m);
  if (c.x) {
    const auto p = length_profile(m, *c.x, c.cap);
    j["element"] = *c.x;
    j["ld"] = to_json(p.length_density);
    j["lengths"] = p.lengths;
    return j;
  }
  if (m.is_regular()) {
    j["ld_closed"] = to_json(ld_closed_regular(m));
    try {
      const auto w = ld_witness_regular(m, c.cap);
      j["witness"] = w.element;
      j["witness_lengths"] = w.profile.lengths;
      j["witness_primes"] = {w.prime_a, w.prime_b};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unavailable) throw;
      j["witness"] = nullptr;
      j["witness_unavailable"] = e.what();
    }
  } else if (m.local() != nullptr) {
    j["ld_closed"] = to_json(ld_closed_local(m));
  } else if (m.a() == m.b()) {
    j["ld_closed"] = ld_closed_power(m).str();
  } else {
    j["ld_closed"] = nullptr;
  }
  if (c.max) j["survey"] = to_json(ld_survey(m, *c.max, scan_options(c)));
  return j;
}

Json cmd_catenary(const Config& c) {
  const auto m = need_monoid(c);
  Json j = base(m);
  if (m.local() != nullptr) j["closed_form"] = catenary_closed_local(m);
  if (c.x) {
    j["element"] = *c.x;
    j["catenary"] = catenary_of_element(m, *c.x, c.cap);
    return j;
  }
  const u64 bound = need(c.max, "--max or --x");
  auto opts = scan_options(c);
  const auto scan = scan_range(m, bound, opts);
  j["survey"] = to_json(catenary_survey(scan));
  j["lower_bound_check"] = to_json(catenary_lower_bound_check(m, scan));
  return j;
}

int cmd_survey(const Config& c, Format format, std::ostream& os) {
  const auto m = need_monoid(c);
  const u64 bound = need(c.max, "--max");
  SurveyWriter writer(format, os);
  writer.header();
  const auto scan = scan_range(m, bound, scan_options(c), [&](const SurveyRow& row) { writer.row(row); });
  Json summary = base(m);
  summary["bound"] = bound;
  summary["rows"] = scan.rows.size();
  summary["delta_set"] = to_json(delta_set_survey(scan));
  summary["ld"] = to_json(ld_survey(scan));
  summary["catenary"] = to_json(catenary_survey(scan));
  writer.footer(summary);
  return kExitOk;
}

int cmd_verify(const Config& c, Format format, std::ostream& os) {
  VerifyOptions opts;
  opts.factorization_cap = c.cap;
  if (c.atom_bound) opts.atom_bound = *c.atom_bound;
  if (c.len_bound) opts.length_bound = *c.len_bound;
  const auto result = verify_suite(c.suite, opts);
  if (format == Format::Table) {
    for (const auto& check : result.checks) {
      os << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
    }
    for (const auto& note : result.notes) os << "NOTE " << note << '\n';
    os << (result.passed() ? "suite passed" : "suite failed") << '\n';
  } else {
    emit_report(to_json(result), format, os);
  }
  return result.passed() ? kExitOk : kExitVerify;
}

Json cmd_conjecture(const Config& c) {
  const auto m = need_monoid(c);
  const u64 bound = c.max.value_or(10'000);
  Json j = base(m);
  j["catenary_probe"] = to_json(probe_catenary_conjecture(m, bound, scan_options(c)));
  j["ld_probe"] = to_json(probe_ld_conjecture(m, bound, scan_options(c)));
  return j;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return kExitCap;
    case ErrorKind::Structural: return kExitVerify;
    default: return kExitInvalid;
  }
}

void diagnose(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

int run(const std::string& command, const Config& c) {
  const Format format = parse_format(c.format);
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorKind::InvalidInput, "cannot open " + c.out + " for writing");
  }
  std::ostream& os = c.out.empty() ? std::cout : file;

  if (command == "survey") return cmd_survey(c, format, os);
  if (command == "verify") return cmd_verify(c, format, os);
  Json report;
  if (command == "classify") report = cmd_classify(c);
  if (command == "atoms") report = cmd_atoms(c);
  if (command == "factorize") report = cmd_factorize(c);
  if (command == "profile") report = cmd_profile(c);
  if (command == "omega") report = cmd_omega(c);
  if (command == "ld") report = cmd_ld(c);
  if (command == "catenary") report = cmd_catenary(c);
  if (command == "conjecture") report = cmd_conjecture(c);
  emit_report(report, format, os);
  if (!os) fail(ErrorKind::InvalidInput, "write failed");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization invariants of arithmetical congruence monoids"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--a", c.a, "residue a of M_{a,b}");
  app.add_option("--b", c.b, "modulus b of M_{a,b}");
  app.add_option("--x", c.x, "element");
  app.add_option("--max", c.max, "scan bound");
  app.add_option("--variant", c.variant, "omega variant for singular monoids")->check(CLI::IsMember({"floor", "ceiling"}));
  app.add_option("--format", c.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", c.out, "write the report to PATH");
  app.add_option("--cap-factorizations", c.cap, "factorization enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--atom-bound", c.atom_bound, "bullet search atom bound")->check(CLI::PositiveNumber);
  app.add_option("--len-bound", c.len_bound, "bullet search length bound")->check(CLI::PositiveNumber);
  app.add_flag("--seedless", c.seedless, "accepted for compatibility; nothing is random");

  const std::pair<const char*, const char*> commands[] = {
      {"classify", "validate a, b and report the class"},
      {"atoms", "atoms up to --max"},
      {"factorize", "all factorizations of --x"},
      {"profile", "length set, delta set and length density of --x"},
      {"omega", "omega of --x; bounded bullet search with --atom-bound/--len-bound"},
      {"ld", "length density of the monoid or of --x"},
      {"catenary", "catenary degree of --x, or a survey up to --max"},
      {"survey", "per-element invariants up to --max"},
      {"conjecture", "probe the global-singular conjectures up to --max"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", c.suite, "local-catenary, regular-ld, omega-adjudicate, chain-validity or conjectures")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose("invalid_input", e.what());
    return kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, c);
  } catch (const Error& e) {
    diagnose(to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    diagnose("internal", e.what());
    return kExitInvalid;
  }
}
