#pragma once

#include <complex>

namespace concave {

using Complex = std::complex<double>;

// Parameters (w0,w1,w2) or (sigma0,sigma1,sigma2); each lives in the closed unit disk.
struct ParamTriple {
  Complex x0{};
  Complex x1{};
  Complex x2{};

  bool in_closed_polydisk(double tol = 0.0) const {
    return std::abs(x0) <= 1.0 + tol && std::abs(x1) <= 1.0 + tol && std::abs(x2) <= 1.0 + tol;
  }
};

// Leading Taylor coefficients c0 + c1 z + c2 z^2 of a self-map fixing p.
struct CoeffTriple {
  Complex c0{};
  Complex c1{};
  Complex c2{};
};

// psi(p), psi'(p), psi''(p)/2 for psi = T_p o phi o T_p.
struct TauTriple {
  Complex t0{};
  Complex t1{};
  Complex t2{};
};

}  // namespace concave
