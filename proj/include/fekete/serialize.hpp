#pragma once

#include <string>

#include "fekete/certify.hpp"
#include "fekete/search.hpp"

namespace fekete {

/// Decimal rendering of scalars with an explicit precision trail.
std::string decimal_string(const AlgebraicScalar& a, int digits);
std::string decimal_string(const Interval& x, int digits);

/// Point sets as JSON: exact canonical strings plus decimal renderings, face
/// tags, and (for d = 2) plot-ready planar coordinates.
std::string pointset_json(const ExactPointSet& ps, int digits = 17,
                          mpfr_prec_t prec = Interval::kDefaultPrecision);
std::string pointset_json(const NumericPointSet& ps, int digits = 17);

/// CSV: one row per point, decimal coordinates only.
std::string pointset_csv(const ExactPointSet& ps, int digits = 17);
std::string pointset_csv(const NumericPointSet& ps, int digits = 17);

std::string lagrange_json(const LagrangeBasis& basis, int digits = 17);
std::string certificate_json(const FejerCertificate& cert);
std::string design_report_json(const DesignCheckReport& report,
                               int digits = 17);
std::string exponent_json(const FejerExponentResult& result, int degree,
                          int dim);
std::string max_report_json(const SimplexMaxReport& report, int degree,
                            int dim);
std::string deg5_twoface_json(const Deg5TwoFaceResult& result,
                              int digits = 30);
std::string deg5_threeface_json(const Deg5ThreeFaceResult& result);
std::string decoupling_json(const DecouplingReport& report, int d);
std::string brute_force_json(const BruteForceReport& report, int grid);

}  // namespace fekete
