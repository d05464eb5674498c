#pragma once

// Report serialization. A report is a JSON object (keys sorted by the
// underlying std::map); CSV and table renderings are derived from it.
// Survey output streams one row per element and ends with a footer.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acm/catenary.hpp"
#include "acm/conjecture.hpp"
#include "acm/factorization.hpp"
#include "acm/length_density.hpp"
#include "acm/monoid.hpp"
#include "acm/omega.hpp"
#include "acm/rational.hpp"
#include "acm/survey.hpp"

namespace acm {

using Json = nlohmann::json;

enum class Format { Json, Csv, Table };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  fail(ErrorKind::InvalidInput, "unknown format '" + s + "' (expected json, csv or table)");
}

/// "{1;2}" style set rendering; the separator keeps commas free for CSV.
inline std::string render_set(const std::vector<unsigned>& values, const char* sep = ";") {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out + "}";
}

inline Json to_json(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

template <class T>
Json to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const AcmDescriptor& desc, const AcmClassification& cls) {
  Json j;
  j["monoid"] = desc.name();
  j["a"] = desc.a;
  j["b"] = desc.b;
  j["d"] = desc.d;
  j["f"] = desc.f;
  j["class"] = class_name(cls);
  if (std::holds_alternative<Regular>(cls)) j["krull"] = true;
  if (const auto* l = std::get_if<LocalSingular>(&cls)) {
    j["p"] = l->p;
    j["alpha"] = l->alpha;
    j["beta"] = l->beta;
    j["delta"] = l->delta;
  }
  if (const auto* g = std::get_if<GlobalSingular>(&cls)) {
    Json primes = Json::array();
    for (const auto& f : g->d_factorization.factors) primes.push_back({f.prime, f.exponent});
    j["d_factorization"] = primes;
  }
  return j;
}

inline Json to_json(const Factorization& z) { return Json(z.atoms); }

inline Json to_json(const LengthProfile& p) {
  Json j;
  j["lengths"] = p.lengths;
  j["min_len"] = p.min_length;
  j["max_len"] = p.max_length;
  j["spread"] = p.spread;
  j["delta_set"] = p.delta_set;
  j["ld"] = to_json(p.length_density);
  return j;
}

inline Json to_json(const ChainCertificate& cert) {
  Json steps = Json::array();
  for (const auto& z : cert.steps) steps.push_back(to_json(z));
  Json j;
  j["steps"] = steps;
  j["link_distances"] = cert.link_distances;
  j["max_link"] = cert.max_link;
  return j;
}

inline Json to_json(const OmegaReport& r) {
  Json j;
  j["element"] = r.element;
  j["closed_form"] = r.closed_form;
  j["floor_variant"] = to_json(r.floor_variant);
  j["ceiling_variant"] = to_json(r.ceiling_variant);
  j["oracle_lower_bound"] = r.oracle_lower_bound;
  j["witness_bullet"] = r.witness_bullet;
  j["oracle_exact"] = r.oracle_exact;
  j["length_bound_reached"] = r.length_bound_reached;
  j["atom_bound"] = r.atom_bound;
  j["length_bound"] = r.length_bound;
  j["closed_form_agrees"] = r.closed_form_agrees();
  j["floor_agrees"] = to_json(r.floor_agrees());
  j["ceiling_agrees"] = to_json(r.ceiling_agrees());
  return j;
}

inline Json to_json(const SurveyRow& row) {
  Json j;
  j["element"] = row.element;
  j["capped"] = row.capped;
  if (row.capped) {
    j["diagnostic"] = row.diagnostic;
    return j;
  }
  j["factorization_count"] = row.factorization_count;
  j["min_len"] = row.profile.min_length;
  j["max_len"] = row.profile.max_length;
  j["delta_set"] = row.profile.delta_set;
  j["ld"] = to_json(row.profile.length_density);
  j["catenary"] = row.catenary;
  return j;
}

inline Json to_json(const DeltaSetSurvey& s) {
  Json witnesses = Json::array();
  for (const auto& [gap, x] : s.witnesses) witnesses.push_back({{"delta", gap}, {"witness", x}});
  Json j;
  j["values"] = s.values();
  j["max"] = to_json(s.max());
  j["witnesses"] = witnesses;
  j["skipped"] = s.skipped;
  return j;
}

inline Json to_json(const LdSurvey& s) {
  Json j;
  j["min_ld"] = to_json(s.min_ld);
  j["witness"] = to_json(s.witness);
  j["skipped"] = s.skipped;
  return j;
}

inline Json to_json(const CatenarySurvey& s) {
  Json j;
  j["max_catenary"] = s.max_catenary;
  j["witness"] = to_json(s.witness);
  j["skipped"] = s.skipped;
  return j;
}

inline Json to_json(const CatenaryLowerBoundCheck& c) {
  Json j;
  j["applicable"] = c.applicable;
  if (!c.applicable) return j;
  j["max_delta"] = c.max_delta;
  j["max_delta_witness"] = to_json(c.max_delta_witness);
  j["lower_bound"] = c.lower_bound;
  j["reference"] = c.reference;
  j["reference_is_closed_form"] = c.reference_is_closed_form;
  j["consistent"] = c.consistent;
  return j;
}

inline Json to_json(const GlobalProfile& p) {
  Json j;
  j["zeta"] = p.zeta;
  j["mu"] = p.mu;
  j["mu_prime"] = p.mu_prime;
  j["mu_prime_max_multiplier"] = p.mu_prime_max_multiplier;
  j["catenary_order_mu"] = to_json(p.catenary_order_mu);
  j["search_bound"] = p.search_bound;
  j["x_members_scanned"] = p.x_members_scanned;
  j["bounded_estimate"] = p.bounded_estimate;
  return j;
}

inline Json to_json(const LdConjectureReport& r) {
  Json j;
  j["bound"] = r.bound;
  j["max_delta"] = to_json(r.max_delta);
  j["max_delta_witness"] = to_json(r.max_delta_witness);
  j["lhs_min_ld"] = to_json(r.min_ld);
  j["min_ld_witness"] = to_json(r.min_ld_witness);
  j["rhs_inverse_max_delta"] = to_json(r.inverse_max_delta);
  j["verdict"] = to_string(r.verdict);
  j["skipped"] = r.skipped;
  return j;
}

inline Json to_json(const CatenaryConjectureReport& r) {
  Json hedges = Json::array();
  for (const auto& h : r.hedges) {
    hedges.push_back({{"exponent", h.exponent}, {"element", h.element}, {"catenary", to_json(h.catenary)}});
  }
  Json j;
  j["bound"] = r.bound;
  j["profile"] = to_json(r.profile);
  j["probe_element"] = to_json(r.probe_element);
  j["probe_catenary"] = to_json(r.probe_catenary);
  j["hedges"] = hedges;
  j["rhs"] = to_json(r.rhs);
  j["surveyed_max"] = r.surveyed_max;
  j["surveyed_witness"] = to_json(r.surveyed_witness);
  j["within_reach"] = r.within_reach;
  j["verdict"] = to_string(r.verdict);
  j["skipped"] = r.skipped;
  return j;
}

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ";";
      out += scalar_text(v[i]);
    }
    return out + "]";
  }
  if (v.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, item] : v.items()) {
      if (!first) out += ";";
      first = false;
      out += k + "=" + scalar_text(item);
    }
    return out + "}";
  }
  return v.dump();
}

/// Dotted-path leaves of a report in key order.
inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar_text(j));
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Writes a complete (non-streamed) report.
inline void emit_report(const Json& report, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json:
      os << report.dump() << '\n';
      break;
    case Format::Csv: {
      std::vector<std::pair<std::string, std::string>> rows;
      detail::flatten(report, "", rows);
      os << "key,value\n";
      for (const auto& [k, v] : rows) os << detail::csv_field(k) << ',' << detail::csv_field(v) << '\n';
      break;
    }
    case Format::Table: {
      std::vector<std::pair<std::string, std::string>> rows;
      detail::flatten(report, "", rows);
      std::size_t width = 0;
      for (const auto& row : rows) width = std::max(width, row.first.size());
      for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
      break;
    }
  }
  os.flush();
}

inline constexpr const char* kSurveyCsvHeader = "element,min_len,max_len,delta_set,ld,catenary,flags";

/// Streams survey rows, then a footer. JSON output is one object per line.
class SurveyWriter {
 public:
  SurveyWriter(Format format, std::ostream& os) : format_(format), os_(os) {}

  void header() {
    if (format_ == Format::Csv) os_ << kSurveyCsvHeader << '\n';
    if (format_ == Format::Table) {
      os_ << pad("element", 10) << pad("min_len", 8) << pad("max_len", 8) << pad("delta_set", 11) << pad("ld", 8)
          << pad("catenary", 9) << "flags" << '\n';
    }
  }

  void row(const SurveyRow& r) {
    const std::string ld = r.capped || !r.profile.length_density ? "" : r.profile.length_density->str();
    const std::string flags = r.capped ? "capped" : "";
    switch (format_) {
      case Format::Json:
        os_ << to_json(r).dump() << '\n';
        break;
      case Format::Csv:
        os_ << r.element << ',';
        if (r.capped) {
          os_ << ",,,,," << flags << '\n';
        } else {
          os_ << r.profile.min_length << ',' << r.profile.max_length << ',' << render_set(r.profile.delta_set)
              << ',' << ld << ',' << r.catenary << ',' << flags << '\n';
        }
        break;
      case Format::Table:
        os_ << pad(std::to_string(r.element), 10);
        if (r.capped) {
          os_ << pad("", 8) << pad("", 8) << pad("", 11) << pad("", 8) << pad("", 9) << flags << '\n';
        } else {
          os_ << pad(std::to_string(r.profile.min_length), 8) << pad(std::to_string(r.profile.max_length), 8)
              << pad(render_set(r.profile.delta_set, ","), 11) << pad(ld, 8) << pad(std::to_string(r.catenary), 9)
              << flags << '\n';
        }
        break;
    }
  }

  void footer(const Json& summary) {
    switch (format_) {
      case Format::Json:
        os_ << Json{{"summary", summary}}.dump() << '\n';
        break;
      case Format::Csv: {
        std::vector<std::pair<std::string, std::string>> rows;
        detail::flatten(summary, "", rows);
        for (const auto& [k, v] : rows) os_ << "# " << k << '=' << v << '\n';
        break;
      }
      case Format::Table:
        os_ << '\n';
        emit_report(summary, Format::Table, os_);
        break;
    }
    os_.flush();
  }

 private:
  static std::string pad(const std::string& s, std::size_t width) {
    return s.size() + 1 >= width ? s + " " : s + std::string(width - s.size(), ' ');
  }

  Format format_;
  std::ostream& os_;
};

}  // namespace acm
