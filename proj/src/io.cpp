#include "cliffwave/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cliffwave::io {

namespace {

template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw IoError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("bad field '") + name + "': " + e.what());
  }
}

int blade_count(int dim) { return 1 << dim; }

void csv_header(std::ostringstream& os, int dim) {
  for (int b = 0; b < blade_count(dim); ++b) os << ",re_" << b << ",im_" << b;
  os << '\n';
}

void csv_row(std::ostringstream& os, const ApproxMV& v) {
  char buf[64];
  for (int b = 0; b < blade_count(v.dim()); ++b) {
    Approx c = v.coeff(static_cast<Blade>(b));
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", c.real(), c.imag());
    os << buf;
  }
  os << '\n';
}

}  // namespace

json to_json(const ExactMV& a) {
  json coeffs = json::array();
  for (const auto& [b, c] : a.terms()) coeffs.push_back({{"blade", b}, {"re", c.re.get_str()}, {"im", c.im.get_str()}});
  return {{"m", a.dim()}, {"coeffs", coeffs}};
}

json to_json(const ApproxMV& a) {
  json coeffs = json::array();
  for (const auto& [b, c] : a.terms()) coeffs.push_back({{"blade", b}, {"re", c.real()}, {"im", c.imag()}});
  return {{"m", a.dim()}, {"coeffs", coeffs}};
}

ExactMV exact_mv_from_json(const json& j) {
  int dim = field<int>(j, "m");
  if (dim < 0 || dim > kMaxGenerators) throw IoError("multivector dimension out of range");
  ExactMV r(dim);
  for (const auto& c : field<json>(j, "coeffs")) {
    Blade b = field<Blade>(c, "blade");
    if ((b >> dim) != 0) throw IoError("blade outside the algebra");
    try {
      r.add(b, Exact(parse_rational(field<std::string>(c, "re")), parse_rational(field<std::string>(c, "im"))));
    } catch (const std::invalid_argument& e) {
      throw IoError(std::string("bad rational: ") + e.what());
    }
  }
  return r;
}

ApproxMV approx_mv_from_json(const json& j) {
  int dim = field<int>(j, "m");
  if (dim < 0 || dim > kMaxGenerators) throw IoError("multivector dimension out of range");
  ApproxMV r(dim);
  for (const auto& c : field<json>(j, "coeffs")) {
    Blade b = field<Blade>(c, "blade");
    if ((b >> dim) != 0) throw IoError("blade outside the algebra");
    r.add(b, Approx(field<double>(c, "re"), field<double>(c, "im")));
  }
  return r;
}

json to_json(const ExactPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"k", p.vars().k}, {"n", p.vars().n}, {"terms", terms}};
}

ExactPoly exact_poly_from_json(const json& j) {
  VarSystem vs;
  try {
    vs = VarSystem(field<int>(j, "k"), field<int>(j, "n"));
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
  ExactPoly p(vs);
  for (const auto& t : field<json>(j, "terms")) {
    auto e = field<Exponents>(t, "exp");
    if (static_cast<int>(e.size()) != vs.count()) throw IoError("exponent length mismatch");
    p.add_term(e, exact_mv_from_json(field<json>(t, "coeff")));
  }
  return p;
}

json to_json(const SphereSignal& s) {
  json values = json::array();
  for (const auto& v : s.values) values.push_back(to_json(v));
  return {{"m", s.m()}, {"degree", s.rule->degree}, {"nodes", s.rule->nodes}, {"values", values}};
}

SphereSignal signal_from_json(const json& j) {
  int m = field<int>(j, "m");
  if (m < 1 || m > 8) throw IoError("signal: m out of range");
  auto nodes = field<std::vector<std::vector<double>>>(j, "nodes");
  auto values = field<json>(j, "values");
  if (!values.is_array() || values.size() != nodes.size()) throw IoError("signal: node and value counts differ");
  std::shared_ptr<QuadratureRule> rule;
  if (j.contains("degree")) {
    rule = std::make_shared<QuadratureRule>(build_quadrature(m, field<int>(j, "degree")));
  } else {
    for (int d = 0; d <= 200 && !rule; ++d) {
      QuadratureRule candidate = build_quadrature(m, d);
      if (candidate.size() == nodes.size()) rule = std::make_shared<QuadratureRule>(std::move(candidate));
      if (candidate.size() > nodes.size()) break;
    }
    if (!rule) throw IoError("signal: node set does not match any product rule");
  }
  if (rule->size() != nodes.size()) throw IoError("signal: node count does not match the quadrature degree");
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    if (static_cast<int>(nodes[q].size()) != m + 1) throw IoError("signal: node dimension mismatch");
    for (int a = 0; a <= m; ++a)
      if (std::abs(nodes[q][a] - rule->nodes[q][a]) > 1e-12) throw IoError("signal: nodes differ from the product rule");
  }
  SphereSignal s{rule, {}};
  for (const auto& v : values) {
    ApproxMV mv = approx_mv_from_json(v);
    if (mv.dim() != m + 1) throw IoError("signal: value algebra mismatch");
    s.values.push_back(std::move(mv));
  }
  return s;
}

json to_json(const SpectralCoefficients& c, const MonogenicBasis& basis) {
  json coeffs = json::object();
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) coeffs[basis.elements()[i].key()] = to_json(c.coeffs[i]);
  return {{"m", c.m}, {"max_degree", c.max_degree}, {"coeffs", coeffs}};
}

SpectralCoefficients coefficients_from_json(const json& j, const MonogenicBasis& basis) {
  int m = field<int>(j, "m");
  int k = field<int>(j, "max_degree");
  if (m != basis.m()) throw IoError("coefficients: m does not match the basis");
  if (k > basis.max_degree()) throw std::invalid_argument("coefficients: band limit exceeds the basis");
  SpectralCoefficients c = SpectralCoefficients::zeros(basis, k);
  const json entries = field<json>(j, "coeffs");
  if (!entries.is_object()) throw IoError("coefficients: 'coeffs' must be an object");
  for (const auto& [key, value] : entries.items()) {
    std::size_t idx;
    try {
      idx = basis.index_of(key);
    } catch (const std::out_of_range&) {
      throw IoError("coefficients: unknown key " + key);
    }
    if (idx >= c.coeffs.size()) throw std::invalid_argument("coefficients: key beyond the band limit: " + key);
    ApproxMV mv = approx_mv_from_json(value);
    if (mv.dim() != basis.dim()) throw IoError("coefficients: algebra mismatch");
    c.coeffs[idx] = std::move(mv);
  }
  return c;
}

std::string hash_hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const WaveletCoefficients& w, const WaveletFamily& family, const MonogenicBasis& basis) {
  json coeffs = json::object();
  for (std::size_t j = 0; j < w.scales.size(); ++j) coeffs[std::to_string(j)] = to_json(w.scales[j], basis);
  return {{"profile", family.profile.name()},
          {"m", family.profile.m},
          {"max_degree", family.max_degree},
          {"shift", family.profile.shift},
          {"rho_min", family.grid.rho_min},
          {"rho_max", family.grid.rho_max},
          {"rho_ratio", family.grid.ratio},
          {"grid", family.grid.nodes},
          {"family_hash", hash_hex(w.family_hash)},
          {"zero_mode", to_json(w.zero_mode, basis)},
          {"coeffs", coeffs}};
}

WaveletFile wavelet_header_from_json(const json& j) {
  WaveletFile f;
  int m = field<int>(j, "m");
  try {
    f.profile = SpectralProfile::parse(field<std::string>(j, "profile"), m);
    f.profile.shift = field<double>(j, "shift");
    f.grid = ScaleGrid::geometric(field<double>(j, "rho_min"), field<double>(j, "rho_max"), field<double>(j, "rho_ratio"));
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("wavelet file: ") + e.what());
  }
  f.max_degree = field<int>(j, "max_degree");
  std::string hex = field<std::string>(j, "family_hash");
  try {
    f.family_hash = std::stoull(hex, nullptr, 16);
  } catch (const std::exception&) {
    throw IoError("wavelet file: bad family hash");
  }
  f.body = j;
  return f;
}

WaveletCoefficients wavelet_coefficients_from_json(const json& j, const MonogenicBasis& basis) {
  WaveletFile header = wavelet_header_from_json(j);
  WaveletCoefficients w;
  w.family_hash = header.family_hash;
  w.zero_mode = coefficients_from_json(field<json>(j, "zero_mode"), basis);
  const json& coeffs = field<json>(j, "coeffs");
  for (std::size_t s = 0; s < header.grid.size(); ++s) {
    std::string key = std::to_string(s);
    if (!coeffs.contains(key)) throw IoError("wavelet file: missing scale " + key);
    w.scales.push_back(coefficients_from_json(coeffs.at(key), basis));
  }
  return w;
}

std::string signal_csv(const SphereSignal& s) {
  std::ostringstream os;
  for (int a = 0; a <= s.m(); ++a) os << (a ? "," : "") << 'x' << a;
  csv_header(os, s.m() + 1);
  char buf[64];
  for (std::size_t q = 0; q < s.values.size(); ++q) {
    for (int a = 0; a <= s.m(); ++a) {
      std::snprintf(buf, sizeof(buf), "%s%.17g", a ? "," : "", s.rule->nodes[q][a]);
      os << buf;
    }
    csv_row(os, s.values[q]);
  }
  return os.str();
}

std::string coefficients_csv(const SpectralCoefficients& c, const MonogenicBasis& basis) {
  std::ostringstream os;
  os << "key";
  csv_header(os, basis.dim());
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    os << '"' << basis.elements()[i].key() << '"';
    csv_row(os, c.coeffs[i]);
  }
  return os.str();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace cliffwave::io
