#include "unitri/serialize.hpp"

#include <set>
#include <stdexcept>

namespace unitri {

namespace {

Json entry_triple(int i, int j, FieldElement v) { return Json::array({i, j, v.rep}); }

Json element_entries(const GroupElement& g) {
  Json out = Json::array();
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (g.body(i, j).rep) out.push_back(entry_triple(i, j, g.body(i, j)));
  return out;
}

Json comparison_json(const SubspaceComparison& c) {
  return Json{{"name", c.name}, {"equal", c.equal}, {"expected_dim", c.expected_dim}, {"computed_dim", c.computed_dim}};
}

}  // namespace

Json to_json(const Field& field) {
  Json j{{"p", field.p()}, {"e", field.e()}, {"q", field.q()}};
  j["modulus"] = field.modulus();
  return j;
}

Json to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"m", x.conductor()}, {"coeffs", coeffs}};
}

Json to_json(Position pos) { return Json::array({pos.i, pos.j}); }

Json to_json(const Functional& lambda) {
  Json out = Json::array();
  for (const auto& e : lambda.entries()) out.push_back(entry_triple(e.pos.i, e.pos.j, e.value));
  return out;
}

Json subspace_json(const Subspace& s, int n) {
  Json basis = Json::array();
  for (const auto& v : s.sparse_basis()) {
    Json vec = Json::array();
    for (const auto& [c, val] : v) {
      const Position pos = position_of(n, c);
      vec.push_back(entry_triple(pos.i, pos.j, val));
    }
    basis.push_back(std::move(vec));
  }
  Json zeros = Json::array();
  for (const std::size_t c : s.zero_coordinates()) zeros.push_back(to_json(position_of(n, c)));
  return Json{{"dim", s.dim()}, {"basis", basis}, {"zero_positions", zeros}};
}

Json to_json(const SetPartition& partition) {
  return Json{{"n", partition.n}, {"parts", partition.parts}, {"text", partition.to_string()}};
}

Json chain_json(const ChainResult& chain, int n) {
  Json l = Json::array(), s = Json::array();
  for (const auto& x : chain.l_list) l.push_back(subspace_json(x, n));
  for (const auto& x : chain.s_list) s.push_back(subspace_json(x, n));
  return Json{{"algebra_dim", chain.algebra_dim},
              {"d", chain.d},
              {"l", l},
              {"s", s},
              {"l_bar", subspace_json(chain.l_bar, n)},
              {"s_bar", subspace_json(chain.s_bar, n)},
              {"supercharacter",
               {{"degree_exponent", chain.supercharacter_degree_exponent()},
                {"norm_exponent", chain.supercharacter_norm_exponent()}}},
              {"xi",
               {{"degree_exponent", chain.xi_degree_exponent()},
                {"norm_exponent", chain.xi_norm_exponent()},
                {"l_bar_equals_s_bar", chain.l_bar == chain.s_bar}}}};
}

Json to_json(const ClassFunction& f) {
  const Algebra& g = f.group();
  Json values = Json::array();
  for_each_element(g, [&](std::uint64_t idx, const GroupElement& x) {
    values.push_back(Json{{"index", idx}, {"element", element_entries(x)}, {"value", to_json(f.at(idx))}});
  });
  return Json{{"n", g.n()},
              {"field", to_json(g.field())},
              {"group_dim", g.dim()},
              {"order", f.size()},
              {"conductor", f.conductor()},
              {"values", values}};
}

Json to_json(const LinearityReport& rep) {
  Json j{{"is_character", rep.is_character}};
  if (rep.witness) j["witness"] = Json::array({rep.witness->first, rep.witness->second});
  else j["witness"] = nullptr;
  return j;
}

Json to_json(const ValueField& vf) {
  Json j{{"conductor", vf.conductor}, {"min_subfield_index", vf.min_subfield_index}};
  if (vf.value_order) j["value_order"] = *vf.value_order;
  else j["value_order"] = nullptr;
  return j;
}

Json to_json(const TechnicalReport& rep) {
  Json comps = Json::array();
  for (const auto& c : rep.comparisons) comps.push_back(comparison_json(c));
  return Json{{"r", rep.r},
              {"n", rep.n},
              {"field", to_json(rep.field)},
              {"passed", rep.passed()},
              {"atlas",
               {{"ok", rep.atlas.ok()},
                {"disjoint", rep.atlas.disjoint},
                {"tau_images", rep.atlas.tau_images},
                {"tau_injective", rep.atlas.tau_injective},
                {"cardinalities", rep.atlas.cardinalities},
                {"d_orbit_count", rep.atlas.d_orbit_count},
                {"problems", rep.atlas.problems}}},
              {"d", rep.chain.d},
              {"l_bar_dim", rep.chain.l_bar.dim()},
              {"s_bar_dim", rep.chain.s_bar.dim()},
              {"subspaces", comps},
              {"kernels_match", rep.kernels_match},
              {"lambda_in_right_orbit", rep.lambda_in_right_orbit},
              {"bilinear_failures", rep.bilinear_failures},
              {"dimension_identities", rep.dimension_identities}};
}

Json to_json(const ASubalgebraReport& rep) {
  return Json{{"r", rep.r},
              {"passed", rep.passed()},
              {"a_dim", rep.a_dim},
              {"h_dim", rep.h_dim},
              {"a_is_subalgebra", rep.a_is_subalgebra},
              {"a_in_s_bar", rep.a_in_s_bar},
              {"direct_sum", rep.direct_sum},
              {"h_two_sided", rep.h_two_sided},
              {"h_in_ker_mu", rep.h_in_ker_mu},
              {"iso_bijective", rep.iso_bijective},
              {"iso_respects_products", rep.iso_respects_products},
              {"mu_matches_kappa", rep.mu_matches_kappa},
              {"nu_left_invariant", rep.nu_left_invariant},
              {"nu_right_invariant", rep.nu_right_invariant},
              {"projection_homomorphism", rep.projection_homomorphism}};
}

Json to_json(const KappaReport& rep) {
  Json fields = Json::array();
  for (const auto& vf : rep.constituent_fields) fields.push_back(to_json(vf));
  Json j{{"n", rep.n},
         {"field", to_json(rep.field)},
         {"consistent", rep.consistent()},
         {"group_order", rep.group_order},
         {"max_element_order", rep.max_element_order},
         {"expected_max_order", rep.expected_max_order},
         {"l_bar_is_corner", rep.lbar_is_corner},
         {"s_bar_is_whole", rep.sbar_is_whole},
         {"chi_matches_formula", rep.chi_matches_formula},
         {"constituent_count", rep.constituent_count},
         {"expected_constituent_count", rep.expected_constituent_count},
         {"constituents_distinct", rep.constituents_distinct},
         {"constituents_sum_to_chi", rep.constituents_sum_to_chi},
         {"max_value_order", rep.max_value_order},
         {"some_constituent_has_all_roots", rep.some_constituent_has_all_roots},
         {"constituent_fields", fields},
         {"psi", to_json(rep.psi)},
         {"psi_exp", to_json(rep.psi_exp)}};
  if (rep.exp_witness)
    j["exp_witness"] = Json{{"kind", rep.exp_witness->kind},
                            {"verified", rep.exp_witness->verified},
                            {"detail", rep.exp_witness->detail}};
  else
    j["exp_witness"] = nullptr;
  return j;
}

Json to_json(const ExoticReport& rep) {
  Json prov = Json::object(), disc = Json::object();
  for (const auto& [k, v] : rep.provenance) prov[k] = v;
  for (const auto& [k, v] : rep.discrepancies) disc[k] = v;
  return Json{{"r", rep.r},
              {"q", rep.q},
              {"n", rep.n},
              {"prerequisites_passed", rep.prerequisites_passed()},
              {"xi_degree_exponent", rep.xi_degree_exponent},
              {"xi_norm_exponent", rep.xi_norm_exponent},
              {"constituent_count", rep.constituent_count},
              {"constituent_count_exponent", rep.constituent_count_exponent},
              {"constituent_degree_exponent", rep.constituent_degree_exponent},
              {"degree_exponent", rep.constituent_degree_exponent},
              {"norm_exponent", rep.xi_norm_exponent},
              {"value_field_conductor", rep.value_field_conductor},
              {"conductor", rep.value_field_conductor},
              {"outside_subfield_index", rep.outside_subfield_index},
              {"some_constituent_outside", rep.some_constituent_outside},
              {"kirillov_is_character", rep.kirillov_is_character},
              {"exp_kirillov_is_character", rep.exp_kirillov_is_character},
              {"kirillov_degree_exponent", rep.kirillov_degree_exponent},
              {"xi_orbit_exponent", rep.xi_orbit_exponent},
              {"xi_orbit_consistent", rep.xi_orbit_consistent},
              {"s_bar_dim", rep.s_bar_dim},
              {"l_bar_dim", rep.l_bar_dim},
              {"shape", to_json(rep.shape)},
              {"provenance", prov},
              {"discrepancies", disc},
              {"technical", to_json(rep.technical)},
              {"a_subalgebra", to_json(rep.a_report)},
              {"kappa", to_json(rep.kappa)}};
}

Json to_json(const TorusReport& rep) {
  return Json{{"orbit_size", rep.orbit_size},
              {"expected", rep.expected},
              {"parts", rep.parts},
              {"shape_preserved", rep.shape_preserved},
              {"passed", rep.passed()}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j) {
  try {
    const int m = j.at("m").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      Rational r(c.get<std::string>());
      r.canonicalize();
      coeffs.push_back(r);
    }
    return CyclotomicNumber(m, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cyclotomic number: ") + e.what());
  }
}

Json to_json(const JobSpec& job) {
  Json j{{"command", job.command}};
  Json field{{"p", job.field.p}, {"e", job.field.e}};
  if (job.field.modulus) field["modulus"] = *job.field.modulus;
  j["field"] = field;
  if (job.n) j["n"] = *job.n;
  if (job.pattern) j["pattern"] = *job.pattern;
  j["lambda"] = job.lambda;
  if (job.r) j["r"] = *job.r;
  if (job.which) j["which"] = *job.which;
  Json options = Json::object();
  if (job.cap) options["cap"] = *job.cap;
  if (job.out) options["out"] = *job.out;
  j["options"] = options;
  return j;
}

JobSpec job_from_json(const Json& j) {
  static const std::set<std::string> commands = {"chain", "exotic", "verify", "kappa", "orbit", "table"};
  static const std::set<std::string> keys = {"command", "field", "n", "pattern", "lambda", "r", "which", "options"};
  try {
    if (!j.is_object()) throw std::invalid_argument("job: expected an object");
    for (const auto& [k, v] : j.items())
      if (!keys.count(k)) throw std::invalid_argument("job: unknown key '" + k + "'");
    JobSpec job;
    job.command = j.at("command").get<std::string>();
    if (!commands.count(job.command)) throw std::invalid_argument("job: unknown command '" + job.command + "'");
    const Json& f = j.at("field");
    job.field.p = f.at("p").get<int>();
    job.field.e = f.value("e", 1);
    if (f.contains("modulus")) job.field.modulus = f.at("modulus").get<std::vector<int>>();
    if (j.contains("n")) job.n = j.at("n").get<int>();
    if (j.contains("pattern")) job.pattern = j.at("pattern").get<std::vector<std::array<int, 2>>>();
    if (j.contains("lambda")) job.lambda = j.at("lambda").get<std::vector<std::array<long long, 3>>>();
    if (j.contains("r")) job.r = j.at("r").get<int>();
    if (j.contains("which")) job.which = j.at("which").get<std::string>();
    if (j.contains("options")) {
      const Json& o = j.at("options");
      if (o.contains("cap")) job.cap = o.at("cap").get<std::uint64_t>();
      if (o.contains("out")) job.out = o.at("out").get<std::string>();
    }
    return job;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("job: ") + e.what());
  }
}

std::vector<Entry> lambda_entries(const std::vector<std::array<long long, 3>>& raw, const Algebra& algebra) {
  const int n = algebra.n();
  const Field& f = algebra.field();
  std::vector<Entry> out;
  for (const auto& [i, j, c] : raw) {
    if (i < 1 || j <= i || j > n)
      throw std::invalid_argument("lambda: position (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not above the diagonal of a " + std::to_string(n) + "x" + std::to_string(n) +
                                  " matrix");
    if (c < 0 || c >= static_cast<long long>(f.q()))
      throw std::invalid_argument("lambda: value " + std::to_string(c) + " is not an element of F_" + std::to_string(f.q()));
    const Position pos{static_cast<int>(i), static_cast<int>(j)};
    if (algebra.pattern() && !algebra.pattern()->contains(pos))
      throw std::invalid_argument("lambda: position " + to_string(pos) + " is outside the pattern");
    out.push_back({pos, f.element(static_cast<std::uint32_t>(c))});
  }
  return out;
}

}  // namespace unitri
