#include "cliffwave/verify.hpp"

#include <algorithm>
#include <sstream>

#include "cliffwave/operators.hpp"
#include "cliffwave/sphere.hpp"
#include "cliffwave/wavelets.hpp"

namespace cliffwave {

namespace {

// lambda with op(p) = lambda p, read off the first coefficient of p.
std::optional<Exact> eigen_ratio(const ExactPoly& op_p, const ExactPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  const auto& [blade, s] = *c.terms().begin();
  Exact lambda;
  auto it = op_p.terms().find(e);
  if (it != op_p.terms().end()) lambda = it->second.coeff(blade) / s;
  if (op_p == p * lambda) return lambda;
  return std::nullopt;
}

void eigen_check(VerifyReport& out, const std::string& section, const std::string& identity, const ExactPoly& op_p,
                 const ExactPoly& p, const Exact& expected) {
  auto got = eigen_ratio(op_p, p);
  out.checks.push_back({section, identity, expected.str(), got ? got->str() : "not an eigenfunction",
                        got && *got == expected});
}

void equality_check(VerifyReport& out, const std::string& section, const std::string& identity, const ExactPoly& lhs,
                    const ExactPoly& rhs) {
  bool eq = lhs == rhs;
  std::string actual = "equal";
  if (!eq) {
    ExactPoly d = lhs - rhs;
    actual = "differs in " + std::to_string(d.size()) + " monomials";
  }
  out.checks.push_back({section, identity, "equal", actual, eq});
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < w.size(); ++j) {
    int d = w.doubled()[j];
    os << (j ? "," : "") << (d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2");
  }
  os << ')';
  return os.str();
}

std::string kind_str(WeightKind k) { return k == WeightKind::Harmonic ? "harmonic" : "monogenic"; }

std::optional<ExactPoly> try_hwv(const Weight& w, WeightKind kind, int n) {
  try {
    return highest_weight_vector(w, kind, n);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

ExactPoly inner_uv(VarSystem vs) {
  ExactPoly uv(vs);
  for (int a = 0; a < vs.n; ++a) uv += ExactPoly::coordinate(vs, 0, a) * ExactPoly::coordinate(vs, 1, a);
  return uv;
}

}  // namespace

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.asserted && !c.pass; });
}

void verify_basis_eigenvalues(int m, int max_degree, VerifyReport& out) {
  BasisPtr basis = MonogenicBasis::build(m, max_degree);
  const std::string tag = "m=" + std::to_string(m) + " ";
  for (const auto& el : basis->elements()) {
    ExactPoly p = el.exact.homogenized();
    ExactPoly g = gamma(p, 0);
    eigen_check(out, "Gamma", tag + "Gamma " + el.key(), g, p, el.part == Part::V ? Exact(-el.degree) : Exact(el.degree + m));
    int h = el.harmonic_degree();
    eigen_check(out, "Delta", tag + "Laplace-Beltrami " + el.key(), spherical_laplacian(p, 0), p, Exact(-h * (h + m - 1)));
    equality_check(out, "Delta", tag + "sum L^2 = Gamma(n-2-Gamma) " + el.key(), spherical_laplacian(p, 0),
                   g * Exact(m - 1) - gamma(g, 0));
  }
}

void verify_casimir(int n, int weight_bound, const std::optional<Exact>& c, VerifyReport& out) {
  const Exact constant = c ? *c : default_casimir_constant(n);
  const std::string tag = "n=" + std::to_string(n) + " ";
  for (const auto& w : dominant_weights(n / 2, weight_bound)) {
    Weight wh = Weight::integral(w);
    if (auto h = try_hwv(wh, WeightKind::Harmonic, n)) {
      ExactPoly ch = casimir_H(*h);
      eigen_check(out, "Casimir", tag + "H " + weight_str(wh), ch, *h, casimir_H_eigenvalue(wh, n));
      equality_check(out, "Casimir", tag + "H oracle " + weight_str(wh), ch, casimir_H_expanded(*h));
    }
    Weight wl = Weight::half_integral(w);
    if (auto g = try_hwv(wl, WeightKind::Monogenic, n)) {
      Exact expected = casimir_L_eigenvalue(wl, n);
      eigen_check(out, "Casimir", tag + "L " + weight_str(wl), casimir_L(*g, constant), *g, expected);
      eigen_check(out, "Casimir", tag + "L oracle " + weight_str(wl), casimir_L_from_generators(*g), *g, expected);
    }
  }
}

void verify_simplicial(int n, int weight_bound, VerifyReport& out) {
  const std::string tag = "n=" + std::to_string(n) + " ";
  for (const auto& w : dominant_weights(n / 2, weight_bound)) {
    for (WeightKind kind : {WeightKind::Harmonic, WeightKind::Monogenic}) {
      Weight wt = kind == WeightKind::Harmonic ? Weight::integral(w) : Weight::half_integral(w);
      auto p = try_hwv(wt, kind, n);
      if (!p) continue;
      std::string name = tag + kind_str(kind) + " " + weight_str(wt);
      out.checks.push_back({"simplicial", name + " simplicial", "true", is_simplicial(*p) ? "true" : "false",
                            is_simplicial(*p)});
      bool sol = kind == WeightKind::Harmonic ? is_harmonic(*p) : is_monogenic(*p);
      out.checks.push_back({"simplicial", name + " " + (kind == WeightKind::Harmonic ? "harmonic" : "monogenic"), "true",
                            sol ? "true" : "false", sol});
      int k = p->vars().k;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          equality_check(out, "simplicial",
                         name + " Delta_" + std::to_string(i) + std::to_string(j) + " = E_" + std::to_string(j),
                         mixed_laplacian(*p, i, j), euler(*p, j));
    }
  }
}

void verify_identities(int n, int count, int degree, unsigned long seed, const std::optional<Exact>& c,
                       VerifyReport& out) {
  const Exact constant = c ? *c : default_casimir_constant(n);
  VarSystem vs(2, n);
  for (int r = 0; r < count; ++r) {
    const std::string tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed + r) + " ";
    ExactPoly p = random_polynomial(vs, degree, 6, seed + r);
    ExactPoly g = gamma(p, 0);
    equality_check(out, "mixed-Laplacian", tag + "sum L^2 = Gamma(n-2-Gamma)", spherical_laplacian(p, 0),
                   g * Exact(n - 2) - gamma(g, 0));
    equality_check(out, "mixed-Laplacian", tag + "u^d_u = -Gamma", wedge_dirac(p, 0), -g);
    ExactPoly q = random_polynomial(vs, degree, 6, seed + r, false);
    equality_check(out, "mixed-Laplacian", tag + "Delta_uv = <u,v><d_u,d_v> - <v,d'_u><u,d_v>", mixed_laplacian(q, 0, 1),
                   inner_uv(vs) * mixed_divergence(q, 0, 1) + overdot_mixed(q, 0, 1));
    equality_check(out, "Casimir", tag + "H = expanded H", casimir_H(p), casimir_H_expanded(p));
    equality_check(out, "Casimir", tag + "L = H + Gamma - c", casimir_L(p, constant), casimir_L_from_generators(p));
  }
}

void verify_spin(int m, int weight_bound, VerifyReport& out) {
  const std::string tag = "m=" + std::to_string(m) + " ";
  auto modes = enumerate_spin_modes(m, weight_bound);
  for (const auto& mode : modes) {
    std::string name = tag + kind_str(mode.kind) + " " + weight_str(mode.weight);
    Exact expected = mode.kind == WeightKind::Harmonic ? casimir_H_eigenvalue(mode.weight, m)
                                                        : casimir_L_eigenvalue(mode.weight, m);
    auto ev = mode.function.eigenvalue();
    out.checks.push_back({"Spin", name + " eigenvalue", expected.str(), ev ? ev->str() : "not an eigenfunction",
                          ev && *ev == expected});
    auto degrees = mode.kind == WeightKind::Harmonic ? mode.function.alpha_degrees() : mode.function.beta_degrees();
    Exact formula(degree_formula_eigenvalue(degrees, m));
    out.checks.push_back({"Spin", name + " degree formula sum k_j(m-2-k_j)", formula.str(),
                          ev ? ev->str() : "not an eigenfunction", ev && *ev == formula, false});
  }
  const Exact binom(m * (m - 1) / 2);
  for (const auto& a : modes) {
    if (a.kind != WeightKind::Harmonic || a.weight.floor_sum() > 2) continue;
    for (const auto& b : modes) {
      if (b.kind != WeightKind::Monogenic || b.weight.floor_sum() > 2) continue;
      const ExactPoly& alpha = a.function.alpha();
      const ExactPoly& beta = b.function.beta();
      equality_check(out, "Spin",
                     tag + "d_s(H " + weight_str(a.weight) + ", L " + weight_str(b.weight) + ") = Gamma a + (Gamma - binom) b",
                     spin_dirac(alpha, beta), gamma_total(alpha) + gamma_total(beta) - beta * binom);
    }
  }
}

VerifyReport run_verification(const VerifyConfig& cfg) {
  if (cfg.max_m < 2) throw std::invalid_argument("verify: max_m >= 2 required");
  VerifyReport r;
  for (int m = 2; m + 1 <= cfg.max_m; ++m) verify_basis_eigenvalues(m, cfg.max_degree, r);
  for (int n = 3; n <= cfg.max_m; ++n) verify_casimir(n, cfg.weight_bound, cfg.casimir_constant, r);
  for (int n = 3; n <= cfg.max_m; ++n) verify_simplicial(n, cfg.weight_bound, r);
  for (int n = 2; n <= cfg.max_m; ++n) verify_identities(n, cfg.random_polys, cfg.poly_degree, cfg.seed, cfg.casimir_constant, r);
  for (int m = 3; m <= cfg.max_m; ++m) verify_spin(m, cfg.weight_bound, r);
  return r;
}

}  // namespace cliffwave
