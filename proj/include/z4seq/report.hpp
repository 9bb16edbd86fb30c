#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "z4seq/analysis.hpp"
#include "z4seq/cyclotomy.hpp"

namespace z4seq {

using Json = nlohmann::ordered_json;

Json system_summary_json(const CyclotomicSystem& system);
std::string system_summary_text(const CyclotomicSystem& system);

Json analysis_json(const AnalysisReport& report);

/// One sweep result. Either report or error is set.
struct SweepRow {
  std::uint64_t p = 0, q = 0;
  std::optional<AnalysisReport> report;
  std::string error;
  double seconds = 0.0;

  bool agree() const { return report && report->agree; }
};

/// p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error[,seconds]
std::string sweep_csv_header(bool timing);
std::string sweep_csv_row(const SweepRow& row, bool timing);
Json sweep_row_json(const SweepRow& row, bool timing);
std::string sweep_row_text(const SweepRow& row, bool timing);

}  // namespace z4seq
