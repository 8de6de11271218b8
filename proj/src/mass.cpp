#include "modrep/mass.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "modrep/matrix.hpp"

namespace modrep {
namespace {

constexpr unsigned kSigmaBits = 256;  // >= 15 significant digits for RSS sums
constexpr double kPi = 3.141592653589793238462643383279502884;

// CODATA 2014 atomic mass constant, MeV/c^2 per amu.
const mpq_class& amu_mev() {
  static const mpq_class v = parse_decimal("931.4940954");
  return v;
}

constexpr double kIronRatio = 2.148;  // amu per unit charge
constexpr double kLeadRatio = 2.527;
constexpr double kIronZ = 26.0;

double rss(const std::vector<mpq_class>& terms) {
  mpf_class acc(0, kSigmaBits);
  for (const mpq_class& t : terms) {
    mpf_class f(t, kSigmaBits);
    acc += f * f;
  }
  mpf_class root(0, kSigmaBits);
  root = sqrt(acc);
  return root.get_d();
}

double deg_sin(double deg) { return std::sin(deg * kPi / 180.0); }
double deg_cos(double deg) { return std::cos(deg * kPi / 180.0); }

std::string trim_num(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

void MassTable::add(MassDatum d) {
  if (d.name.empty()) throw std::invalid_argument("mass table: empty particle name");
  if (d.value_mev <= 0) throw std::invalid_argument("mass table: nonpositive value for " + d.name);
  if (d.sigma_mev < 0) throw std::invalid_argument("mass table: negative sigma for " + d.name);
  if (has(d.name)) throw std::invalid_argument("mass table: duplicate particle " + d.name);
  items_.push_back(std::move(d));
}

bool MassTable::has(const std::string& name) const {
  for (const auto& d : items_)
    if (d.name == name) return true;
  return false;
}

const MassDatum& MassTable::at(const std::string& name) const {
  for (const auto& d : items_)
    if (d.name == name) return d;
  throw std::invalid_argument("mass table: missing particle " + name);
}

void validate_identity(const MassIdentity& id) {
  if (id.terms.size() < 2) throw std::invalid_argument("identity " + id.name + ": fewer than two terms");
  bool pos = false, neg = false;
  for (const auto& t : id.terms) {
    if (t.coeff == 0) throw std::invalid_argument("identity " + id.name + ": zero coefficient");
    (t.coeff > 0 ? pos : neg) = true;
  }
  if (!pos || !neg)
    throw std::invalid_argument("identity " + id.name + ": both sides must be populated");
}

IdentityReport check_identity(const MassIdentity& id, const MassTable& table) {
  validate_identity(id);
  IdentityReport rep;
  rep.identity = id.name;
  rep.lhs_mev = 0;
  rep.rhs_mev = 0;
  std::vector<mpq_class> sigma_terms;
  for (const auto& t : id.terms) {
    const MassDatum& d = table.at(t.particle);
    mpq_class v = t.coeff * d.value_mev;
    if (t.coeff > 0)
      rep.lhs_mev += v;
    else
      rep.rhs_mev -= v;
    sigma_terms.push_back(t.coeff * d.sigma_mev);
  }
  rep.discrepancy_mev = rep.lhs_mev - rep.rhs_mev;
  if (rep.rhs_mev == 0) throw std::runtime_error("identity " + id.name + ": zero right-hand side");
  rep.discrepancy_ppm = mpq_class(1000000 * rep.discrepancy_mev / rep.rhs_mev).get_d();
  rep.combined_sigma_mev = rss(sigma_terms);
  rep.combined_sigma_ppm = 1e6 * rep.combined_sigma_mev / rep.rhs_mev.get_d();
  if (rep.combined_sigma_mev == 0)
    rep.z_score = rep.discrepancy_mev == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  else
    rep.z_score = rep.discrepancy_mev.get_d() / rep.combined_sigma_mev;
  return rep;
}

MassDatum predict_from_identity(const MassIdentity& id, const MassTable& table,
                                const std::string& solve_for) {
  validate_identity(id);
  mpq_class c_solve = 0;
  mpq_class rest = 0;
  std::vector<mpq_class> sigma_terms;
  for (const auto& t : id.terms) {
    if (t.particle == solve_for) {
      c_solve += t.coeff;
      continue;
    }
    const MassDatum& d = table.at(t.particle);
    rest += t.coeff * d.value_mev;
    sigma_terms.push_back(t.coeff * d.sigma_mev);
  }
  if (c_solve == 0)
    throw std::invalid_argument("identity " + id.name + ": cannot solve for " + solve_for);
  MassDatum out;
  out.name = solve_for;
  out.value_mev = -rest / c_solve;
  mpq_class inv = 1 / abs(c_solve);
  for (auto& s : sigma_terms) s *= inv;
  out.sigma_mev = mpq_class(rss(sigma_terms));
  out.source = "predicted from identity " + id.name;
  return out;
}

QuarkSolution solve_quark_system(const MassTable& table, bool alt_fourth) {
  QuarkSolution sol;
  sol.alt_fourth = alt_fourth;
  const std::vector<std::string> unknowns = {"u", "d", "s", "c", "b", "t"};
  const std::vector<std::string> inputs = {"e",   "mu",  "tau", "n",   "Z0", "W",
                                           "pi0", "pi+", "K+",  "K0",  "eta", "etaprime"};
  auto in_idx = [&](const std::string& n) {
    for (size_t j = 0; j < inputs.size(); ++j)
      if (inputs[j] == n) return j;
    throw std::logic_error("solve_quark_system: unknown input " + n);
  };

  // Rows: the six equations, columns (u,d,s,c,b,t); right-hand sides as
  // combinations of the measured inputs.
  //   e + u = d
  //   mu = s + 2d
  //   tau = c + 5s
  //   c = s + K+ + eta + pi0        (alt: c = s + K0 + eta + pi+)
  //   b + s + d + pi+ + 2pi0 = 5n
  //   t + c + d + etaprime = b + s + u + Z0 + W
  Ring q = rationals();
  Matrix A = mat_from_int(q, {{1, -1, 0, 0, 0, 0},
                              {0, 2, 1, 0, 0, 0},
                              {0, 0, 5, 1, 0, 0},
                              {0, 0, -1, 1, 0, 0},
                              {0, 1, 1, 0, 1, 0},
                              {-1, 1, -1, 1, -1, 1}});
  Matrix M(q, 6, inputs.size());
  auto put = [&](size_t row, const std::string& input, long coeff) {
    M.set(row, in_idx(input), from_int(q, coeff));
  };
  put(0, "e", -1);
  put(1, "mu", 1);
  put(2, "tau", 1);
  if (alt_fourth) {
    put(3, "K0", 1);
    put(3, "pi+", 1);
  } else {
    put(3, "K+", 1);
    put(3, "pi0", 1);
  }
  put(3, "eta", 1);
  put(4, "n", 5);
  put(4, "pi+", -1);
  put(4, "pi0", -2);
  put(5, "Z0", 1);
  put(5, "W", 1);
  put(5, "etaprime", -1);

  sol.det = std::get<mpq_class>(mat_det(A).v);
  if (sol.det == 0) throw std::runtime_error("solve_quark_system: singular coefficient matrix");
  Matrix C = solve_exact(A, M);  // 6 x inputs, exact

  // Only inputs with a nonzero column are consulted (K0 is used by the
  // alternative fourth equation only, K+ and pi0 by the default).
  std::vector<bool> used(inputs.size(), false);
  for (size_t j = 0; j < inputs.size(); ++j)
    for (size_t i = 0; i < 6; ++i)
      if (!is_zero(M.at(i, j))) used[j] = true;

  Matrix m(q, inputs.size(), 1);
  for (size_t j = 0; j < inputs.size(); ++j)
    if (used[j]) m.set(j, 0, Scalar{q, table.at(inputs[j]).value_mev});
  Matrix x = mat_mul(C, m);
  sol.residuals_zero = mat_mul(A, x) == mat_mul(M, m);

  for (size_t i = 0; i < unknowns.size(); ++i) {
    MassDatum d;
    d.name = unknowns[i];
    d.value_mev = std::get<mpq_class>(x.at(i, 0).v);
    std::vector<mpq_class> sigma_terms;
    for (size_t j = 0; j < inputs.size(); ++j)
      if (used[j])
        sigma_terms.push_back(std::get<mpq_class>(C.at(i, j).v) * table.at(inputs[j]).sigma_mev);
    d.sigma_mev = mpq_class(rss(sigma_terms));
    d.source = "solved from the six-equation system";
    sol.quarks.push_back(std::move(d));
  }

  // Comparison rows evaluated with the table's own entries (including its
  // measured quark values), not with the solved ones.
  auto side = [&](const std::vector<std::pair<std::string, long>>& terms) {
    mpq_class v = 0;
    std::vector<mpq_class> sig;
    for (const auto& [name, coeff] : terms) {
      const MassDatum& d = table.at(name);
      v += coeff * d.value_mev;
      sig.push_back(coeff * d.sigma_mev);
    }
    return std::make_pair(v, rss(sig));
  };
  auto desc = [](const std::vector<std::pair<std::string, long>>& terms) {
    std::string s;
    for (const auto& [name, coeff] : terms) {
      if (!s.empty()) s += " + ";
      if (coeff != 1) s += std::to_string(coeff) + " ";
      s += name;
    }
    return s;
  };
  using Terms = std::vector<std::pair<std::string, long>>;
  auto row = [&](const Terms& lhs, const Terms& rhs, bool dubious = false) {
    QuarkRow r;
    r.lhs_desc = desc(lhs);
    r.rhs_desc = desc(rhs);
    std::tie(r.lhs_value, r.lhs_sigma) = side(lhs);
    std::tie(r.rhs_value, r.rhs_sigma) = side(rhs);
    r.dubious = dubious;
    sol.rows.push_back(std::move(r));
  };
  row({{"e", 1}, {"u", 1}}, {{"d", 1}}, true);
  row({{"mu", 1}}, {{"s", 1}, {"d", 2}});
  row({{"tau", 1}}, {{"c", 1}, {"s", 5}});
  if (alt_fourth)
    row({{"c", 1}}, {{"s", 1}, {"K0", 1}, {"eta", 1}, {"pi+", 1}});
  else
    row({{"c", 1}}, {{"s", 1}, {"K+", 1}, {"eta", 1}, {"pi0", 1}});
  row({{"b", 1}, {"s", 1}, {"d", 1}, {"pi+", 1}, {"pi0", 2}}, {{"n", 5}});
  row({{"t", 1}, {"c", 1}, {"d", 1}, {"etaprime", 1}},
      {{"b", 1}, {"s", 1}, {"u", 1}, {"Z0", 1}, {"W", 1}});
  return sol;
}

std::vector<RatioRow> ratio_coincidence_table(const MassTable& table, const AstroParams& p) {
  auto measured = [&](const std::string& a, const std::string& b) {
    return mpq_class(table.at(a).value_mev / table.at(b).value_mev).get_d();
  };
  std::vector<RatioRow> rows;
  auto add = [&](std::string name, double meas, std::string formula, double value) {
    RatioRow r;
    r.name = std::move(name);
    r.measured = meas;
    r.formula = std::move(formula);
    r.formula_value = value;
    r.relative_deviation = (meas - value) / value;
    rows.push_back(std::move(r));
  };
  std::string y = trim_num(p.year), mo = trim_num(p.month), ob = trim_num(p.obliquity_deg),
              lu = trim_num(p.lunar_deg), pr = trim_num(p.precise_obliquity_deg);
  add("n/p", measured("n", "p"), "1 + 1/(2*" + y + ")", 1.0 + 1.0 / (2.0 * p.year));
  add("e/p", measured("e", "p"), "sin(" + pr + " deg)/(2*" + y + ")",
      deg_sin(p.precise_obliquity_deg) / (2.0 * p.year));
  add("pi+/pi0", measured("pi+", "pi0"), "1 + 1/" + mo, 1.0 + 1.0 / p.month);
  add("K+/K0", measured("K+", "K0"), "cos(" + lu + " deg)^2",
      deg_cos(p.lunar_deg) * deg_cos(p.lunar_deg));
  add("W/Z0", measured("W", "Z0"), "cos(" + ob + " deg + " + lu + " deg)",
      deg_cos(p.obliquity_deg + p.lunar_deg));
  add("K0/eta", measured("K0", "eta"), "cos(" + ob + " deg)*cos(" + lu + " deg)",
      deg_cos(p.obliquity_deg) * deg_cos(p.lunar_deg));
  return rows;
}

GAnomalyReport g_anomaly_ppm(const MassTable& table, double ratio_a, double ratio_b) {
  if (ratio_a <= 0 || ratio_b <= 0)
    throw std::invalid_argument("g_anomaly_ppm: ratios must be positive");
  GAnomalyReport rep;
  rep.ratio_a = ratio_a;
  rep.ratio_b = ratio_b;
  mpq_class dm = (table.at("n").value_mev - table.at("e").value_mev - table.at("p").value_mev) /
                 amu_mev();
  rep.delta_m_amu = dm.get_d();
  rep.ppm = (ratio_b - ratio_a) / (kIronRatio * kLeadRatio) * rep.delta_m_amu * 1e6;
  return rep;
}

GAnomalyWalkthrough g_anomaly_walkthrough(const MassTable& table) {
  GAnomalyReport base = g_anomaly_ppm(table, kIronRatio, kLeadRatio);
  GAnomalyWalkthrough w;
  w.z = kIronZ;
  w.z_eff = kIronZ * kIronRatio / kLeadRatio;
  w.copies = w.z - w.z_eff;
  w.shift_amu = w.copies * base.delta_m_amu;
  w.ppm = w.shift_amu / (kIronZ * kIronRatio) * 1e6;
  return w;
}

}  // namespace modrep
