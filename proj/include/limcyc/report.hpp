#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "limcyc/oracle.hpp"
#include "limcyc/successor.hpp"
#include "limcyc/verify.hpp"

namespace limcyc {

using Json = nlohmann::ordered_json;

struct AnalyzedRoot {
  CycleRoot root;
  StabilityProbe probe;
};

struct AnalysisReport {
  SystemParams params;
  CycleValidation validation;
  SuccessorDomain domain{};
  Discriminants discriminants{};
  CycleSearch search;
  std::vector<AnalyzedRoot> roots;
  RegimePrediction regime;
  double seconds = 0;
};

// Throws NonNodeParams; an Assumption-1 violation yields an empty report with the reason.
AnalysisReport analyze(const SystemParams& p);

Json to_json(const SystemParams& p);
Json to_json(const SuccessorDomain& d);
Json to_json(const CycleRoot& r);
Json to_json(const AnalysisReport& r, bool timings);
Json to_json(const BifurcationReport& r, bool include_rows);
Json to_json(const VerifyReport& r, bool timings);

// Floats as %.17g; non-finite values become null.
std::string dump(const Json& j, int indent = 2);
std::string format_double(double x);

// b,count,y0_1,mult_1,stab_1,y0_2,mult_2,stab_2
std::string scan_csv(const BifurcationReport& r);
// t,x,y
std::string orbit_csv(const OrbitTrace& o);

}  // namespace limcyc
