#include <algorithm>
#include <cmath>
#include <sstream>

#include "nsfourier/diagnostics.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/spectral.hpp"

namespace nsfourier {

namespace {

double parse_order(const std::string& digits, const std::string& token) {
  std::size_t used = 0;
  double s = 0.0;
  try {
    s = std::stod(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (digits.empty() || used != digits.size() || !(s >= 0.0)) {
    throw ConfigError("unrecognised norm '" + token + "'");
  }
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

NormSpec parse_norm(const std::string& raw) {
  const std::string token = trim(raw);
  if (token == "L2") return {NormKind::L2, 0.0, token};
  if (token == "Linf") return {NormKind::Linf, 0.0, token};
  if (token == "Linf_max") return {NormKind::LinfMax, 0.0, token};
  if (token.size() > 1 && token[0] == 'H') {
    const std::string suffix = "_fourier";
    if (token.size() > suffix.size() + 1 &&
        token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
      const std::string digits = token.substr(1, token.size() - 1 - suffix.size());
      return {NormKind::SobolevFourier, parse_order(digits, token), token};
    }
    return {NormKind::Sobolev, parse_order(token.substr(1), token), token};
  }
  throw ConfigError("unrecognised norm '" + token + "' (expected L2, Linf, Linf_max, H<s>, H<s>_fourier)");
}

std::vector<NormSpec> parse_norm_list(const std::string& list) {
  std::vector<NormSpec> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!trim(item).empty()) out.push_back(parse_norm(item));
  }
  if (out.empty()) throw ConfigError("empty norm list");
  return out;
}

std::string norm_conventions_note() {
  return "Linf=sum_i max_grid|e_i| Linf_max=max_{grid,i}|e_i| H<s>=||e||_L2+||e||_Hdot^s "
         "H<s>_fourier=(2pi)^-1(sum(1+|k|^2s)|e^|^2)^1/2";
}

double error_norm(const SpectralVectorField& u, const SpectralVectorField& exact,
                  const NormSpec& norm) {
  if (!(u.grid() == exact.grid())) throw ConfigError("error_norms: fields live on different grids");
  // compare on the wider of the two bands
  const int n = std::max(u.truncation(), exact.truncation());
  auto widen = [n](const SpectralScalarField& f) {
    const auto c = f.coefficients();
    return SpectralScalarField(f.grid(), n, ComplexBuffer(c.begin(), c.end()));
  };
  const SpectralVectorField e(widen(u.u1()) - widen(exact.u1()), widen(u.u2()) - widen(exact.u2()));
  switch (norm.kind) {
    case NormKind::L2:
      return l2_norm(e);
    case NormKind::Sobolev:
      return l2_norm(e) + sobolev_seminorm(e, norm.s);
    case NormKind::SobolevFourier:
      return sobolev_norm(e, norm.s);
    case NormKind::Linf:
    case NormKind::LinfMax: {
      const PhysicalField phys = inverse_transform(e);
      double per[2] = {0.0, 0.0};
      for (int c = 0; c < 2; ++c) {
        for (double v : phys.component(c)) per[c] = std::max(per[c], std::abs(v));
      }
      return norm.kind == NormKind::Linf ? per[0] + per[1] : std::max(per[0], per[1]);
    }
  }
  return 0.0;
}

NormValues error_norms(const SpectralVectorField& u, const SpectralVectorField& exact,
                       const std::vector<NormSpec>& norms) {
  NormValues out;
  out.reserve(norms.size());
  for (const auto& n : norms) out.emplace_back(n.label, error_norm(u, exact, n));
  return out;
}

}  // namespace nsfourier
