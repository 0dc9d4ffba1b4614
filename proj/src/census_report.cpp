#include "spectra/census_report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace spectra {
namespace {

std::string sci(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

nlohmann::json record_json(const CensusRecord& r) {
  nlohmann::json j{
      {"graph6", r.graph6},
      {"n", r.n},
      {"m", r.m},
      {"kind", std::string(to_string(r.kind))},
      {"k", r.k_exact},
      {"k_float", r.k_float},
      {"distinct", r.is_distinct},
      {"diam", r.diam},
      {"diam_ok", r.diameter_bound_ok},
      {"invol_ok", r.involution_ok ? nlohmann::json(*r.involution_ok) : nlohmann::json(nullptr)},
      {"res_i", finite_or_null(r.max_residual_i)},
      {"res_ii", finite_or_null(r.residual_ii)},
      {"gap", finite_or_null(r.min_eigen_gap)},
      {"identities_ok", r.identities_ok},
  };
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

nlohmann::json summary_json(const CensusSummary& s) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& [n, o] : s.orders) {
    nlohmann::json kinds = nlohmann::json::object();
    for (const auto& [kind, t] : o.kinds) {
      kinds[std::string(to_string(kind))] = {
          {"checked", t.checked},
          {"distinct", t.distinct},
          {"disagreements", t.disagreements},
          {"identity_failures", t.identity_failures},
          {"invariant_violations", t.invariant_violations},
          {"min_gap_distinct", finite_or_null(t.min_gap_distinct)},
      };
    }
    orders.push_back({{"n", n},
                      {"examined", o.examined},
                      {"connected", o.connected},
                      {"skipped", o.skipped},
                      {"kinds", kinds}});
  }
  return {{"schema", kCensusSchema},
          {"orders", orders},
          {"total_examined", s.total_examined()},
          {"total_violations", s.total_violations()},
          {"ok", s.ok()},
          {"wall_seconds", s.wall_seconds}};
}

}  // namespace

RecordWriter::RecordWriter(std::ostream& out, RecordFormat format) : out_(out), format_(format) {
  if (format_ == RecordFormat::csv)
    out_ << kCensusCsvHeader << '\n';
  else
    out_ << "{\"schema\":\"" << kCensusSchema << "\",\"records\":[";
}

void RecordWriter::write(const CensusRecord& record) {
  if (format_ == RecordFormat::csv) {
    out_ << record_to_csv(record) << '\n';
    return;
  }
  out_ << (first_ ? "\n" : ",\n") << record_to_json(record);
  first_ = false;
}

void RecordWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == RecordFormat::json) out_ << "\n]}\n";
  out_.flush();
}

std::string record_to_csv(const CensusRecord& r) {
  std::ostringstream os;
  os << r.graph6 << ',' << r.n << ',' << r.m << ',' << to_string(r.kind) << ',' << r.k_exact << ','
     << (r.is_distinct ? 1 : 0) << ',' << r.diam << ',' << (r.diameter_bound_ok ? 1 : 0) << ',';
  if (r.involution_ok) os << (*r.involution_ok ? 1 : 0);
  os << ',' << sci(r.max_residual_i) << ',' << sci(r.residual_ii) << ',' << sci(r.min_eigen_gap);
  return os.str();
}

std::string record_to_json(const CensusRecord& record) { return record_json(record).dump(); }

std::string summary_to_text(const CensusSummary& s) {
  std::ostringstream os;
  for (const auto& [n, o] : s.orders) {
    os << "n=" << n << ": examined " << o.examined << ", connected " << o.connected;
    if (o.skipped) os << ", skipped " << o.skipped;
    os << '\n';
    for (const auto& [kind, t] : o.kinds) {
      os << "  " << to_string(kind) << ": checked " << t.checked << ", distinct " << t.distinct
         << ", disagreements " << t.disagreements << ", identity failures " << t.identity_failures
         << ", invariant violations " << t.invariant_violations;
      if (t.distinct) os << ", min gap " << sci(t.min_gap_distinct);
      os << '\n';
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", s.wall_seconds);
  os << "total: examined " << s.total_examined() << ", violations " << s.total_violations() << ", " << buf
     << " s\n";
  os << (s.ok() ? "OK" : "VIOLATIONS FOUND") << '\n';
  return os.str();
}

std::string summary_to_json(const CensusSummary& s) { return summary_json(s).dump(2); }

}  // namespace spectra
