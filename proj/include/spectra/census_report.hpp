#pragma once

#include <ostream>
#include <string>

#include "spectra/census.hpp"

namespace spectra {

inline constexpr const char* kCensusCsvHeader = "graph6,n,m,kind,k,distinct,diam,diam_ok,invol_ok,res_i,res_ii,gap";
inline constexpr const char* kCensusSchema = "spectra-census/1";

enum class RecordFormat { csv, json };

/// Streams census records as CSV (fixed header) or as a JSON envelope
/// {"schema": ..., "records": [...]}. finish() closes the JSON array.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, RecordFormat format);
  void write(const CensusRecord& record);
  void finish();

 private:
  std::ostream& out_;
  RecordFormat format_;
  bool first_ = true;
  bool finished_ = false;
};

std::string record_to_csv(const CensusRecord& record);
std::string record_to_json(const CensusRecord& record);

std::string summary_to_text(const CensusSummary& summary);
std::string summary_to_json(const CensusSummary& summary);

}  // namespace spectra
