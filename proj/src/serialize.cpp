#include "fekete/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace fekete {

using nlohmann::json;

std::string decimal_string(const AlgebraicScalar& a, int digits) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(64, 4 * digits);
  return a.enclose(prec).mid_string(digits);
}

std::string decimal_string(const Interval& x, int digits) {
  return x.mid_string(digits);
}

namespace {

json tag_json(const FamilyTag& tag) {
  return json{{"face_dim", tag.face_dim},
              {"variant", tag.variant},
              {"ordered", tag.ordered}};
}

/// Planar coordinates for the equilateral reference triangle.
json planar_xy(double l2, double l3) {
  return json{l2 + 0.5 * l3, std::sqrt(3.0) / 2.0 * l3};
}

template <typename S, typename ExactFn, typename DecimalFn>
json pointset_json_impl(const PointSet<S>& ps, ExactFn exact_of,
                        DecimalFn decimal_of, int digits) {
  json points = json::array();
  for (const auto& pt : ps.points) {
    json coords_exact = json::array();
    json coords_decimal = json::array();
    for (const auto& c : pt.coords) {
      coords_exact.push_back(exact_of(c));
      coords_decimal.push_back(decimal_of(c));
    }
    json entry{{"coords_exact", coords_exact},
               {"coords_decimal", coords_decimal},
               {"face", pt.face},
               {"tag", tag_json(pt.tag)}};
    if (ps.dim == 2) {
      double l2 = 0, l3 = 0;
      if constexpr (std::is_same_v<S, AlgebraicScalar>) {
        l2 = pt.coords[1].to_double();
        l3 = pt.coords[2].to_double();
      } else {
        l2 = pt.coords[1].mid_double();
        l3 = pt.coords[2].mid_double();
      }
      entry["xy"] = planar_xy(l2, l3);
    }
    points.push_back(std::move(entry));
  }
  return json{{"degree", ps.degree},
              {"dim", ps.dim},
              {"count", ps.points.size()},
              {"decimal_digits", digits},
              {"points", points}};
}

template <typename S, typename DecimalFn>
std::string pointset_csv_impl(const PointSet<S>& ps, DecimalFn decimal_of) {
  std::ostringstream out;
  out << "index";
  for (int c = 0; c <= ps.dim; ++c) out << ",l" << (c + 1);
  out << ",face_dim,variant\n";
  for (size_t i = 0; i < ps.points.size(); ++i) {
    out << i;
    for (const auto& c : ps.points[i].coords) out << "," << decimal_of(c);
    out << "," << ps.points[i].tag.face_dim << ","
        << ps.points[i].tag.variant << "\n";
  }
  return out.str();
}

}  // namespace

std::string pointset_json(const ExactPointSet& ps, int digits,
                          mpfr_prec_t prec) {
  auto exact_of = [](const AlgebraicScalar& c) { return c.to_string(); };
  auto decimal_of = [&](const AlgebraicScalar& c) {
    return c.enclose(prec).mid_string(digits);
  };
  json j = pointset_json_impl(ps, exact_of, decimal_of, digits);
  j["coords_kind"] = "exact";
  j["precision_bits"] = static_cast<long>(prec);
  return j.dump(2);
}

std::string pointset_json(const NumericPointSet& ps, int digits) {
  auto exact_of = [](const Interval&) { return nullptr; };
  auto decimal_of = [&](const Interval& c) { return c.mid_string(digits); };
  json j = pointset_json_impl(ps, exact_of, decimal_of, digits);
  j["coords_kind"] = "enclosure";
  if (!ps.points.empty())
    j["precision_bits"] =
        static_cast<long>(ps.points.front().coords.front().precision());
  return j.dump(2);
}

std::string pointset_csv(const ExactPointSet& ps, int digits) {
  return pointset_csv_impl(ps, [&](const AlgebraicScalar& c) {
    return c.enclose(std::max<mpfr_prec_t>(64, 4 * digits))
        .mid_string(digits);
  });
}

std::string pointset_csv(const NumericPointSet& ps, int digits) {
  return pointset_csv_impl(
      ps, [&](const Interval& c) { return c.mid_string(digits); });
}

std::string lagrange_json(const LagrangeBasis& basis, int digits) {
  json polys = json::array();
  for (const auto& poly : basis.polys) {
    json terms = json::object();
    for (const auto& [m, c] : poly.terms()) {
      std::string key;
      for (size_t i = 0; i < m.nvars(); ++i) {
        if (!key.empty()) key += ",";
        key += std::to_string(m[i]);
      }
      terms[key] = json{{"exact", c.to_string()},
                        {"decimal", decimal_string(c, digits)}};
    }
    polys.push_back(std::move(terms));
  }
  return json{{"degree", basis.degree},
              {"dim", basis.dim},
              {"count", basis.polys.size()},
              {"monomial_key", "exponents of l1..l_{d+1}"},
              {"polys", polys}}
      .dump(2);
}

std::string certificate_json(const FejerCertificate& cert) {
  json j{{"degree", cert.degree},
         {"dim", cert.dim},
         {"status", to_string(cert.status)},
         {"method", cert.method},
         {"r", cert.elevation},
         {"r_max", cert.r_max},
         {"term_count", cert.term_count},
         {"wall_ms", cert.wall_ms}};
  if (cert.negative_witness.has_value())
    j["negative_witness"] = cert.negative_witness->to_string();
  if (!cert.refutation_point.empty()) {
    json pt = json::array();
    for (const auto& c : cert.refutation_point) pt.push_back(to_string(c));
    j["refutation_point"] = pt;
    j["kernel_value"] = cert.refutation_value;
  }
  return j.dump(2);
}

std::string design_report_json(const DesignCheckReport& report, int digits) {
  json j{{"degree", report.degree},
         {"dim", report.dim},
         {"npoints", report.npoints},
         {"gram_det_identity", report.gram_det_identity},
         {"kernel_is_N_at_nodes", report.kernel_is_N_at_nodes},
         {"kernel_convention",
          "bound checks use N*sum l_i^2 <= N, i.e. sum l_i^2 <= 1"},
         {"violation_found", report.violation_found},
         {"samples", report.samples},
         {"max_sampled_kernel",
          json{{"exact", report.max_sampled_kernel.to_string()},
               {"decimal",
                decimal_string(report.max_sampled_kernel, digits)}}}};
  if (report.violation_found) {
    json pt = json::array();
    for (const auto& c : report.violation_point) pt.push_back(to_string(c));
    j["violation_point"] = pt;
  }
  return j.dump(2);
}

std::string exponent_json(const FejerExponentResult& result, int degree,
                          int dim) {
  json per_r = json::array();
  for (const auto& [r, v] : result.per_r) per_r.push_back(json{r, v});
  return json{{"degree", degree},
              {"dim", dim},
              {"exponent", result.r},
              {"bracket", json{result.r_lo, result.r_hi}},
              {"linf_ok", result.linf_ok},
              {"capped", result.capped},
              {"per_r", per_r}}
      .dump(2);
}

std::string max_report_json(const SimplexMaxReport& report, int degree,
                            int dim) {
  return json{{"degree", degree},
              {"dim", dim},
              {"value", report.value},
              {"argmax", report.argmax},
              {"starts", report.starts},
              {"iterations", report.iterations}}
      .dump(2);
}

std::string deg5_twoface_json(const Deg5TwoFaceResult& result, int digits) {
  return json{{"u", result.params.u.mid_string(digits)},
              {"v", result.params.v.mid_string(digits)},
              {"u_enclosure_width", result.params.u.width_double()},
              {"v_enclosure_width", result.params.v.width_double()},
              {"w", result.params.w.to_string()},
              {"objective_abs", result.objective},
              {"q1_bound", result.q1_bound},
              {"q2_bound", result.q2_bound},
              {"roots_in_unit_interval", result.roots_in_unit_interval},
              {"min_collinearity_det", result.min_collinearity_det}}
      .dump(2);
}

std::string deg5_threeface_json(const Deg5ThreeFaceResult& result) {
  return json{{"w_global", result.w_global.to_string()},
              {"w_local", result.w_local.to_string()},
              {"w_global_decimal", decimal_string(result.w_global, 20)},
              {"w_local_decimal", decimal_string(result.w_local, 20)},
              {"derivative_identity_ok", result.derivative_identity_ok},
              {"quadratic_roots_ok", result.quadratic_roots_ok},
              {"global_exceeds_local", result.global_exceeds_local}}
      .dump(2);
}

std::string decoupling_json(const DecouplingReport& report, int d) {
  return json{{"dim", d},
              {"matches", report.matches},
              {"constant", to_string(report.constant)}}
      .dump(2);
}

std::string brute_force_json(const BruteForceReport& report, int grid) {
  json triple = json::array();
  for (const auto& pt : report.best_triple)
    triple.push_back(json{pt[0], pt[1], pt[2]});
  return json{{"grid", grid},
              {"best_det_scaled", report.best_det_scaled},
              {"best_triple", triple},
              {"vertices_win", report.vertices_win},
              {"midpoint_vertex_ratio",
               to_string(report.midpoint_vertex_ratio)}}
      .dump(2);
}

}  // namespace fekete
