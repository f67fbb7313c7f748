#pragma once

#include "ncsym/localization.hpp"

#include <string>
#include <vector>

namespace ncsym {

struct HilbertRow {
  long long n = 0;
  std::size_t dim_T = 0, dim_R = 0, dim_A = 0, dim_B = 0, dim_gr = 0;
  /// All columns equal their closed forms for both parities of the start index.
  bool ok = false;
};

/// Rows n = 0..nmax. Dimensions are over K_i, gr(Lambda_00) over K_0.
std::vector<HilbertRow> hilbert_table(const SymAlgebra& alg, int nmax);
/// Header n,dim_T,dim_R,dim_A,dim_B,dim_grLambda,status
std::string hilbert_csv(const std::vector<HilbertRow>& rows);

nlohmann::ordered_json classify_report(const FieldTowerInstance& inst);
nlohmann::ordered_json saturation_report(const SaturationProbeResult& r, const SymElement& x, int depth, int level_bound);
nlohmann::ordered_json center_report(const CenterProbeResult& r);

}  // namespace ncsym
