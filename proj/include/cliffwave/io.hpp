#pragma once

#include <string>

#include "json.hpp"

#include "cliffwave/sphere.hpp"
#include "cliffwave/wavelets.hpp"

namespace cliffwave::io {

using nlohmann::json;

// Missing, unreadable or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const ExactMV& a);
json to_json(const ApproxMV& a);
json to_json(const ExactPoly& p);
ExactMV exact_mv_from_json(const json& j);
ApproxMV approx_mv_from_json(const json& j);
ExactPoly exact_poly_from_json(const json& j);

// {"m", "degree", "nodes", "values"}.
json to_json(const SphereSignal& s);
// Rebuilds the quadrature from "degree" (or from the node count) and checks the nodes match.
SphereSignal signal_from_json(const json& j);

// {"m", "max_degree", "coeffs": {"k/alpha/part": Multivector}}.
json to_json(const SpectralCoefficients& c, const MonogenicBasis& basis);
SpectralCoefficients coefficients_from_json(const json& j, const MonogenicBasis& basis);

// {"profile", "m", "max_degree", "shift", "rho_min", "rho_max", "rho_ratio", "grid", "family_hash",
//  "zero_mode", "coeffs": {scale index: SpectralCoefficients}}.
json to_json(const WaveletCoefficients& w, const WaveletFamily& family, const MonogenicBasis& basis);
struct WaveletFile {
  SpectralProfile profile;
  ScaleGrid grid;
  int max_degree = 0;
  std::uint64_t family_hash = 0;
  json body;
};
WaveletFile wavelet_header_from_json(const json& j);
WaveletCoefficients wavelet_coefficients_from_json(const json& j, const MonogenicBasis& basis);

std::string hash_hex(std::uint64_t h);

// Real/imaginary blade components, one blade per column pair.
std::string signal_csv(const SphereSignal& s);
std::string coefficients_csv(const SpectralCoefficients& c, const MonogenicBasis& basis);

json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace cliffwave::io
