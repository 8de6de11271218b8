// Exact-rational evaluation of linear particle-mass identities with Gaussian
// (root-sum-square) uncertainty propagation: identity checks, single-particle
// predictions, the six-equation quark-mass solve, the mass-ratio comparison
// table, and the gravitational-anomaly ppm estimate.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace modrep {

struct MassDatum {
  std::string name;
  mpq_class value_mev;  // central value, MeV/c^2, exact
  mpq_class sigma_mev;  // standard uncertainty, MeV/c^2, exact
  std::string source;
};

// Ordered collection with unique names; values positive, sigmas nonnegative.
class MassTable {
 public:
  void add(MassDatum d);
  bool has(const std::string& name) const;
  const MassDatum& at(const std::string& name) const;
  const std::vector<MassDatum>& items() const { return items_; }

 private:
  std::vector<MassDatum> items_;
};

struct MassTerm {
  std::string particle;
  mpq_class coeff;
};

// Asserted relation: sum of coeff * mass over all terms equals zero.
struct MassIdentity {
  std::string name;
  std::vector<MassTerm> terms;
};

// At least two terms, all coefficients nonzero, both signs present.
void validate_identity(const MassIdentity& id);

struct IdentityReport {
  std::string identity;
  // Positive-coefficient side, negated negative-coefficient side, and their
  // difference; all exact.
  mpq_class lhs_mev, rhs_mev, discrepancy_mev;
  double discrepancy_ppm;     // 1e6 * discrepancy / rhs
  double combined_sigma_mev;  // sqrt(sum (coeff_i * sigma_i)^2)
  double combined_sigma_ppm;  // 1e6 * combined_sigma / rhs
  double z_score;             // discrepancy / combined_sigma
};
IdentityReport check_identity(const MassIdentity& id, const MassTable& table);

// Solves the identity for one label; the result's sigma propagates the
// uncertainties of the remaining terms.
MassDatum predict_from_identity(const MassIdentity& id, const MassTable& table,
                                const std::string& solve_for);

struct QuarkRow {
  std::string lhs_desc, rhs_desc;
  mpq_class lhs_value, rhs_value;  // evaluated with the table's entries
  double lhs_sigma, rhs_sigma;
  bool dubious = false;  // the first equation is flagged in reports
};

struct QuarkSolution {
  bool alt_fourth = false;
  std::vector<MassDatum> quarks;  // u, d, s, c, b, t; exact solve of the system
  mpq_class det;                  // coefficient determinant (nonzero)
  bool residuals_zero = false;    // re-substitution of the solution
  std::vector<QuarkRow> rows;     // the six comparison rows
};

// The six linear equations relating (u,d,s,c,b,t) to lepton, meson, and boson
// masses; alt_fourth replaces s+K+ +eta+pi0 by s+K0+eta+pi+ in the fourth.
QuarkSolution solve_quark_system(const MassTable& table, bool alt_fourth = false);

struct AstroParams {
  double year = 365.24;     // days per year
  double month = 29.53;     // days per synodic month
  double obliquity_deg = 23.44;
  double lunar_deg = 5.14;  // lunar orbit inclination
  double precise_obliquity_deg = 23.4392911;
};

struct RatioRow {
  std::string name;
  double measured;
  std::string formula;
  double formula_value;
  double relative_deviation;  // (measured - formula) / formula
};

// Six mass ratios against astronomical-parameter formulas; a raw comparison
// with no significance claim.
std::vector<RatioRow> ratio_coincidence_table(const MassTable& table,
                                              const AstroParams& params = {});

struct GAnomalyReport {
  double ratio_a, ratio_b;  // weight per unit charge, amu per charge
  double delta_m_amu;       // (m(n) - m(e) - m(p)) in amu
  double ppm;
};

// Relative mass-shift estimate between two materials from their amu-per-charge
// ratios; the slope is normalized by the iron/lead reference product.
GAnomalyReport g_anomaly_ppm(const MassTable& table, double ratio_a, double ratio_b);

struct GAnomalyWalkthrough {
  double z;          // iron atomic number
  double z_eff;      // iron charge rescaled to lead's weight-per-charge
  double copies;     // z - z_eff, effective (n - e - p) copies per atom
  double shift_amu;  // copies * delta_m
  double ppm;        // shift relative to the atomic weight
};

// The iron-versus-lead estimate spelled out step by step.
GAnomalyWalkthrough g_anomaly_walkthrough(const MassTable& table);

}  // namespace modrep
