#include "ncsym/report.hpp"

#include <sstream>

namespace ncsym {

std::vector<HilbertRow> hilbert_table(const SymAlgebra& alg, int nmax) {
  if (nmax < 0) throw std::invalid_argument("hilbert_table needs nmax >= 0");
  const Localization loc(alg);
  const auto gr = loc.filtration_dims(nmax);
  std::vector<HilbertRow> rows;
  for (long long n = 0; n <= nmax; ++n) {
    const std::size_t expect_R = n < 2 ? 0 : (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1;
    const std::size_t expect_B = n == 0 ? 1 : 2;
    HilbertRow row;
    row.n = n;
    row.dim_T = tensor_dim(n);
    row.dim_gr = gr[static_cast<std::size_t>(n)];
    row.ok = row.dim_gr == expect_B;
    for (long long i : {1LL, 0LL}) {
      row.dim_R = n < 2 ? 0 : alg.relation_space(i, i + n)->dimension();
      row.dim_A = alg.basis(i, i + n).size();
      row.dim_B = alg.quotient_B_dim(i, n);
      row.ok = row.ok && row.dim_R == expect_R && row.dim_A == static_cast<std::size_t>(n + 1) && row.dim_B == expect_B &&
               row.dim_R + row.dim_A == row.dim_T;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string hilbert_csv(const std::vector<HilbertRow>& rows) {
  std::ostringstream os;
  os << "n,dim_T,dim_R,dim_A,dim_B,dim_grLambda,status\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.dim_T << ',' << r.dim_R << ',' << r.dim_A << ',' << r.dim_B << ',' << r.dim_gr << ','
       << (r.ok ? "ok" : "MISMATCH") << '\n';
  return os.str();
}

nlohmann::ordered_json classify_report(const FieldTowerInstance& inst) {
  nlohmann::ordered_json j;
  j["instance"] = inst.key();
  j["description"] = inst.description();
  j["subfields"] = {inst.subfield_name(0), inst.subfield_name(1)};
  auto inv = nlohmann::ordered_json::array();
  for (int i = 0; i < 2; ++i) {
    nlohmann::ordered_json t;
    t["involution"] = "tau_" + std::to_string(i);
    nlohmann::ordered_json images;
    for (std::size_t g = 0; g < inst.generators().size(); ++g)
      images[inst.generator_names()[g]] = inst.apply_tau(i, inst.generators()[g]).to_string();
    t["images"] = std::move(images);
    t["w"] = inst.w(i).to_string();
    inv.push_back(std::move(t));
  }
  j["involutions"] = std::move(inv);
  const auto s = inst.sigma_order(64);
  nlohmann::ordered_json sigma;
  sigma["verdict"] = to_string(s.kind);
  if (s.kind == SigmaOrder::Kind::Finite) sigma["order"] = s.order;
  sigma["evidence"] = s.evidence;
  j["sigma"] = std::move(sigma);
  j["classification"] = to_string(inst.classify_algebraic(64));
  return j;
}

nlohmann::ordered_json saturation_report(const SaturationProbeResult& r, const SymElement& x, int depth, int level_bound) {
  nlohmann::ordered_json j;
  j["generator"] = x.to_json();
  j["depth"] = depth;
  j["level_bound"] = level_bound;
  if (r.kind == SaturationProbeResult::Kind::ReachedGPower) {
    j["verdict"] = "ReachedGPower";
    j["power"] = r.power;
    j["chain_start"] = r.start;
  } else {
    j["verdict"] = "Inconclusive";
  }
  j["saturation_rounds"] = r.rounds;
  j["window_dims"] = r.final_dims;
  return j;
}

nlohmann::ordered_json center_report(const CenterProbeResult& r) {
  nlohmann::ordered_json j;
  j["level"] = r.level;
  j["dimension_over_Q"] = r.dimension;
  j["common_subfield_degree"] = r.common_subfield_degree;
  j["contains_common_subfield"] = r.contains_common_subfield;
  auto basis = nlohmann::ordered_json::array();
  for (const auto& z : r.basis) basis.push_back(z.to_json());
  j["basis"] = std::move(basis);
  return j;
}

}  // namespace ncsym
