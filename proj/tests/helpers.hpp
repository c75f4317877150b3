#pragma once

#include <random>

#include "landau/poly.hpp"

namespace testutil {

/// Random polynomial with small Gaussian-rational coefficients.
template <class Chart>
landau::Poly4<Chart> random_poly(std::mt19937& rng, int max_degree, int nterms) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5), den(1, 4);
  landau::Poly4<Chart> p;
  for (int t = 0; t < nterms; ++t) {
    landau::Exponent4 e{0, 0, 0, 0};
    int budget = deg(rng);
    for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(rng() % 4)] += 1;
    landau::Rational re(coef(rng), den(rng)), im(coef(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    p.add_term(e, landau::QComplex(re, im));
  }
  return p;
}

inline std::mt19937 rng(unsigned seed = 12345) { return std::mt19937(seed); }

}  // namespace testutil
