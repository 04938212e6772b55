#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "cliffwave/io.hpp"
#include "cliffwave/verify.hpp"

using namespace cliffwave;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 2;
  int max_degree = -1;  // -1: derived from the input, or 4
  std::string profile = "heat-h";
  double rho_min = 1e-3;
  double rho_max = 20.0;
  double rho_ratio = 1.05;
  double t = 0.1;
  std::string in;
  std::string out;
  std::string format = "json";
  double tol = 1e-3;
  unsigned long seed = 1;
  bool random = false;
  std::string mode = "roundtrip";
  std::string scale_integral = "grid";
  int bound = 4;
  std::string casimir_constant;
};

void add_basis_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "Sphere dimension (S^m)")->capture_default_str();
  sub->add_option("--max-degree", cfg.max_degree, "Band limit K")->capture_default_str();
}

void add_io_opts(CLI::App* sub, RunConfig& cfg, bool needs_in) {
  auto* in = sub->add_option("--in", cfg.in, "Input JSON file");
  if (needs_in) in->required();
  sub->add_option("--out", cfg.out, "Output file (stdout when omitted)");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

void add_family_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--profile", cfg.profile, "Spectral profile")
      ->check(CLI::IsMember({"heat-h", "heat-l", "modified"}))
      ->capture_default_str();
  sub->add_option("--rho-min", cfg.rho_min, "Smallest scale")->capture_default_str();
  sub->add_option("--rho-max", cfg.rho_max, "Largest scale")->capture_default_str();
  sub->add_option("--rho-ratio", cfg.rho_ratio, "Geometric grid ratio")->capture_default_str();
}

void validate(const RunConfig& cfg) {
  if (cfg.m < 1 || cfg.m > 8) throw UsageError("--m must lie in [1, 8]");
  if (cfg.max_degree < -1 || cfg.max_degree > 40) throw UsageError("--max-degree must lie in [0, 40]");
  if (!(cfg.rho_min > 0.0) || !(cfg.rho_max > cfg.rho_min)) throw UsageError("need 0 < --rho-min < --rho-max");
  if (!(cfg.rho_ratio > 1.0)) throw UsageError("--rho-ratio must exceed 1");
  if (!(cfg.t > 0.0)) throw UsageError("--t must be positive");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (cfg.bound < 0 || cfg.bound > kMaxSpinWeight) throw UsageError("--bound must lie in [0, 6]");
}

void emit(const RunConfig& cfg, const json& j, const std::string& csv) {
  std::string text = cfg.format == "csv" ? csv : j.dump(2) + "\n";
  if (cfg.out.empty())
    std::cout << text;
  else
    io::write_text(cfg.out, text);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int band_limit(const RunConfig& cfg) { return cfg.max_degree < 0 ? 4 : cfg.max_degree; }

// Largest K whose analysis is exact on the signal's quadrature unless --max-degree is given.
int band_limit(const RunConfig& cfg, const SphereSignal& f) {
  return cfg.max_degree < 0 ? std::max(0, (f.rule->degree - 2) / 2) : cfg.max_degree;
}

BasisPtr basis_for(int m, int max_degree) {
  if (m < 2) throw UsageError("the monogenic basis needs m >= 2");
  return MonogenicBasis::build(m, max_degree);
}

SpectralProfile profile_for(const RunConfig& cfg, int m) { return SpectralProfile::parse(cfg.profile, m); }

ScaleGrid grid_for(const RunConfig& cfg) { return ScaleGrid::geometric(cfg.rho_min, cfg.rho_max, cfg.rho_ratio); }

std::shared_ptr<const QuadratureRule> rule_for(int m, int max_degree) {
  return std::make_shared<QuadratureRule>(build_quadrature(m, required_exactness(max_degree)));
}

SphereSignal load_signal(const RunConfig& cfg) { return io::signal_from_json(io::read_json(cfg.in)); }

// ---- basis ----

int cmd_basis(const RunConfig& cfg) {
  BasisPtr basis = basis_for(cfg.m, band_limit(cfg));
  json table = json::array();
  std::ostringstream csv;
  csv << "key,degree,part,harmonic_degree";
  for (int b = 0; b < (1 << basis->dim()); ++b) csv << ",norm_re_" << b << ",norm_im_" << b;
  csv << '\n';
  for (int k = 0; k <= basis->max_degree(); ++k) {
    std::size_t v = basis->block(k, Part::V).size(), w = basis->block(k, Part::W).size();
    table.push_back({{"degree", k}, {"V", v}, {"W", w}, {"right_rank", MonogenicBasis::rank(basis->m(), k)}});
  }
  json elements = json::array();
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const BasisElement& el = basis->elements()[i];
    json transform = json::array();
    for (const auto& t : el.transform) transform.push_back(io::to_json(t));
    elements.push_back({{"key", el.key()},
                        {"degree", el.degree},
                        {"part", part_name(el.part)},
                        {"alpha", el.alpha},
                        {"harmonic_degree", el.harmonic_degree()},
                        {"gram", io::to_json(basis->exact_inner(i, i))},
                        {"transform", transform},
                        {"normalizer", io::to_json(el.normalizer)}});
    csv << '"' << el.key() << "\"," << el.degree << ',' << part_name(el.part) << ',' << el.harmonic_degree();
    for (int b = 0; b < (1 << basis->dim()); ++b) {
      Approx c = el.normalizer.coeff(static_cast<Blade>(b));
      csv << ',' << fmt(c.real()) << ',' << fmt(c.imag());
    }
    csv << '\n';
  }
  json j = {{"m", basis->m()},
            {"max_degree", basis->max_degree()},
            {"dimensions", table},
            {"elements", elements},
            {"dropped", basis->dropped()}};
  emit(cfg, j, csv.str());
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const RunConfig& cfg, int max_m, int poly_count) {
  VerifyConfig vc;
  vc.max_m = max_m;
  vc.max_degree = band_limit(cfg);
  vc.weight_bound = cfg.bound;
  vc.random_polys = poly_count;
  vc.seed = cfg.seed;
  if (!cfg.casimir_constant.empty()) {
    try {
      vc.casimir_constant = Exact(parse_rational(cfg.casimir_constant));
    } catch (const std::invalid_argument&) {
      throw UsageError("--casimir-constant must be a rational such as 3/4");
    }
  }
  if (vc.max_m < 2 || vc.max_m > 6) throw UsageError("verify: --m must lie in [2, 6]");
  VerifyReport report = run_verification(vc);

  json sections = json::object();
  std::ostringstream csv;
  csv << "section,identity,expected,actual,pass,asserted\n";
  for (const auto& c : report.checks) {
    sections[c.section].push_back(
        {{"identity", c.identity}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}, {"asserted", c.asserted}});
    csv << c.section << ",\"" << c.identity << "\"," << c.expected << ',' << c.actual << ',' << c.pass << ',' << c.asserted
        << '\n';
    if (c.asserted && !c.pass) std::cerr << "FAILED [" << c.section << "] " << c.identity << ": expected " << c.expected
                                         << ", got " << c.actual << '\n';
  }
  json j = {{"checks", report.checks.size()}, {"failures", report.failures()}, {"ok", report.ok()}, {"sections", sections}};
  emit(cfg, j, csv.str());
  std::cerr << "verify: " << report.checks.size() << " checks, " << report.failures() << " failures\n";
  return report.ok() ? kExitOk : kExitFail;
}

// ---- analyze / synthesize / heat ----

int cmd_analyze(const RunConfig& cfg) {
  SphereSignal f = load_signal(cfg);
  BasisPtr basis = basis_for(f.m(), band_limit(cfg, f));
  SpectralCoefficients c = analyze(f, *basis);
  emit(cfg, io::to_json(c, *basis), io::coefficients_csv(c, *basis));
  return kExitOk;
}

int cmd_synthesize(const RunConfig& cfg) {
  SpectralCoefficients c;
  BasisPtr basis;
  if (cfg.random) {
    basis = basis_for(cfg.m, band_limit(cfg));
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> g;
    c = SpectralCoefficients::zeros(*basis);
    for (auto& x : c.coeffs)
      for (Blade b = 0; b < (Blade{1} << basis->dim()); ++b) x.add(b, Approx(g(rng), g(rng)));
  } else {
    if (cfg.in.empty()) throw UsageError("synthesize: --in or --random is required");
    json j = io::read_json(cfg.in);
    if (!j.contains("m") || !j.contains("max_degree")) throw io::IoError("coefficient file lacks m / max_degree");
    basis = basis_for(j["m"].get<int>(), j["max_degree"].get<int>());
    c = io::coefficients_from_json(j, *basis);
  }
  SphereSignal s = synthesize(c, *basis, rule_for(basis->m(), c.max_degree));
  emit(cfg, io::to_json(s), io::signal_csv(s));
  return kExitOk;
}

int cmd_heat(const RunConfig& cfg) {
  SphereSignal f = load_signal(cfg);
  BasisPtr basis = basis_for(f.m(), band_limit(cfg, f));
  SpectralCoefficients c = spectral_multiply(heat_kernel(profile_for(cfg, f.m()), cfg.t, *basis), analyze(f, *basis));
  SphereSignal out = synthesize(c, *basis, f.rule);
  emit(cfg, io::to_json(out), io::signal_csv(out));
  return kExitOk;
}

// ---- wavelet ----

std::string wavelet_csv(const WaveletCoefficients& w, const MonogenicBasis& basis) {
  std::ostringstream os;
  os << "scale,key";
  for (int b = 0; b < (1 << basis.dim()); ++b) os << ",re_" << b << ",im_" << b;
  os << '\n';
  auto rows = [&](const std::string& label, const SpectralCoefficients& c) {
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      os << label << ",\"" << basis.elements()[i].key() << '"';
      for (int b = 0; b < (1 << basis.dim()); ++b) {
        Approx v = c.coeffs[i].coeff(static_cast<Blade>(b));
        os << ',' << fmt(v.real()) << ',' << fmt(v.imag());
      }
      os << '\n';
    }
  };
  rows("zero", w.zero_mode);
  for (std::size_t j = 0; j < w.scales.size(); ++j) rows(std::to_string(j), w.scales[j]);
  return os.str();
}

int cmd_wavelet(const RunConfig& cfg) {
  ScaleIntegral integral = cfg.scale_integral == "closed" ? ScaleIntegral::ClosedForm : ScaleIntegral::Grid;
  json in = io::read_json(cfg.in);
  if (cfg.mode == "reconstruct") {
    io::WaveletFile header = io::wavelet_header_from_json(in);
    int m = header.profile.m;
    int k = cfg.max_degree < 0 ? header.max_degree : cfg.max_degree;
    BasisPtr basis = basis_for(m, k);
    WaveletFamily family = wavelet_family(profile_for(cfg, m), grid_for(cfg), *basis);
    if (header.family_hash != family.family_hash) {
      std::cerr << "wavelet: family hash mismatch (file " << io::hash_hex(header.family_hash) << ", requested "
                << io::hash_hex(family.family_hash) << "); refusing to reconstruct\n";
      return kExitFail;
    }
    WaveletCoefficients w = io::wavelet_coefficients_from_json(in, *basis);
    SphereSignal s = wavelet_reconstruct(w, family, *basis, rule_for(m, k), integral);
    emit(cfg, io::to_json(s), io::signal_csv(s));
    return kExitOk;
  }

  SphereSignal f = io::signal_from_json(in);
  BasisPtr basis = basis_for(f.m(), band_limit(cfg, f));
  WaveletFamily family = wavelet_family(profile_for(cfg, f.m()), grid_for(cfg), *basis);
  WaveletCoefficients w = wavelet_transform(f, family, *basis);
  if (cfg.mode == "transform") {
    emit(cfg, io::to_json(w, family, *basis), wavelet_csv(w, *basis));
    return kExitOk;
  }
  SphereSignal back = wavelet_reconstruct(w, family, *basis, f.rule, integral);
  double err = relative_l2_error(back, f);
  json j = {{"relative_l2_error", err}, {"tolerance", cfg.tol}, {"scales", family.grid.size()},
            {"family_hash", io::hash_hex(family.family_hash)}, {"ok", err <= cfg.tol}};
  std::ostringstream csv;
  csv << "relative_l2_error,tolerance,scales,ok\n" << fmt(err) << ',' << fmt(cfg.tol) << ',' << family.grid.size() << ','
      << (err <= cfg.tol) << '\n';
  emit(cfg, j, csv.str());
  std::cerr << "wavelet roundtrip: relative L2 error " << err << " (tolerance " << cfg.tol << ")\n";
  return err <= cfg.tol ? kExitOk : kExitFail;
}

// ---- spin-eig ----

int cmd_spin_eig(const RunConfig& cfg) {
  if (cfg.m < 3) throw UsageError("spin-eig: --m >= 3 required");
  auto modes = enumerate_spin_modes(cfg.m, cfg.bound);
  json rows = json::array();
  std::ostringstream csv;
  csv << "kind,weight,eigenvalue,casimir_formula,degree_formula,lambda\n";
  bool ok = true;
  for (const auto& mode : modes) {
    Exact expected = mode.kind == WeightKind::Harmonic ? casimir_H_eigenvalue(mode.weight, cfg.m)
                                                        : casimir_L_eigenvalue(mode.weight, cfg.m);
    auto ev = mode.function.eigenvalue();
    auto degrees = mode.kind == WeightKind::Harmonic ? mode.function.alpha_degrees() : mode.function.beta_degrees();
    long formula = degree_formula_eigenvalue(degrees, cfg.m);
    std::vector<std::string> weight;
    for (int d : mode.weight.doubled()) weight.push_back(d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2");
    std::string kind = mode.kind == WeightKind::Harmonic ? "H" : "L";
    std::string evs = ev ? ev->str() : "none";
    ok = ok && ev && *ev == expected;
    rows.push_back({{"kind", kind}, {"weight", weight}, {"eigenvalue", evs}, {"casimir_formula", expected.str()},
                    {"degree_formula", formula}, {"lambda", mode.lambda}});
    std::string wj;
    for (std::size_t i = 0; i < weight.size(); ++i) wj += (i ? " " : "") + weight[i];
    csv << kind << ",\"" << wj << "\"," << evs << ',' << expected.str() << ',' << formula << ',' << fmt(mode.lambda) << '\n';
  }
  emit(cfg, {{"m", cfg.m}, {"bound", cfg.bound}, {"modes", rows}}, csv.str());
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-valued diffusive wavelets on S^m and Spin(m)"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* basis = app.add_subcommand("basis", "Build the spherical monogenic basis and write its metadata");
  add_basis_opts(basis, cfg);
  add_io_opts(basis, cfg, false);

  int verify_m = 4, verify_polys = 4;
  auto* verify = app.add_subcommand("verify", "Run the symbolic eigenvalue and identity battery");
  verify->add_option("--m", verify_m, "Largest ambient dimension")->capture_default_str();
  verify->add_option("--max-degree", cfg.max_degree, "Basis band limit for the Gamma/Delta sections");
  verify->add_option("--bound", cfg.bound, "Weight bound for Casimir and Spin sections")->capture_default_str();
  verify->add_option("--polys", verify_polys, "Random polynomials per dimension")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for random polynomials")->capture_default_str();
  verify->add_option("--casimir-constant", cfg.casimir_constant, "Override c in L = H + Gamma - c (rational)");
  add_io_opts(verify, cfg, false);

  auto* analyze_cmd = app.add_subcommand("analyze", "Spectral coefficients of a sampled signal");
  analyze_cmd->add_option("--max-degree", cfg.max_degree, "Band limit K")->capture_default_str();
  add_io_opts(analyze_cmd, cfg, true);

  auto* synth = app.add_subcommand("synthesize", "Sample a coefficient set (or a random one) on the quadrature grid");
  add_basis_opts(synth, cfg);
  add_io_opts(synth, cfg, false);
  synth->add_flag("--random", cfg.random, "Draw Gaussian coefficients instead of reading --in");
  synth->add_option("--seed", cfg.seed, "RNG seed for --random")->capture_default_str();

  auto* heat = app.add_subcommand("heat", "Evolve a signal under the heat semigroup");
  heat->add_option("--max-degree", cfg.max_degree, "Band limit K")->capture_default_str();
  heat->add_option("--t", cfg.t, "Diffusion time")->capture_default_str();
  heat->add_option("--profile", cfg.profile, "Spectral profile")
      ->check(CLI::IsMember({"heat-h", "heat-l", "modified"}))
      ->capture_default_str();
  add_io_opts(heat, cfg, true);

  auto* wavelet = app.add_subcommand("wavelet", "Diffusive wavelet transform, reconstruction or round trip");
  wavelet->add_option("--mode", cfg.mode, "transform | reconstruct | roundtrip")
      ->check(CLI::IsMember({"transform", "reconstruct", "roundtrip"}))
      ->capture_default_str();
  wavelet->add_option("--max-degree", cfg.max_degree, "Band limit K")->capture_default_str();
  wavelet->add_option("--tol", cfg.tol, "Round-trip tolerance")->capture_default_str();
  wavelet->add_option("--scale-integral", cfg.scale_integral, "grid | closed")
      ->check(CLI::IsMember({"grid", "closed"}))
      ->capture_default_str();
  add_family_opts(wavelet, cfg);
  add_io_opts(wavelet, cfg, true);

  auto* spin = app.add_subcommand("spin-eig", "Eigenvalues of the enumerated Spin(m) modes");
  spin->add_option("--m", cfg.m, "Group index m of Spin(m)")->capture_default_str();
  spin->add_option("--bound", cfg.bound, "Sum of integer weight parts")->capture_default_str();
  add_io_opts(spin, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      validate(cfg);
      return cmd_verify(cfg, verify_m, verify_polys);
    }
    validate(cfg);
    if (*basis) return cmd_basis(cfg);
    if (*analyze_cmd) return cmd_analyze(cfg);
    if (*synth) return cmd_synthesize(cfg);
    if (*heat) return cmd_heat(cfg);
    if (*wavelet) return cmd_wavelet(cfg);
    if (*spin) return cmd_spin_eig(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InsufficientQuadrature& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::length_error& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
