#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfresnel {

/// A simple pole of a meromorphic quantity: where it sits, its order and
/// its residue.
struct PoleReport {
  std::complex<double> location;
  int order = 1;
  std::complex<double> residue;
};

/// Base of every exception the library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (bad parameter, empty grid...).
class domain_error : public error {
 public:
  using error::error;
};

/// The argument hit a pole. Carries the pole that was hit.
class pole_error : public domain_error {
 public:
  pole_error(const std::string& what, PoleReport pole)
      : domain_error(what), pole_(pole) {}
  const PoleReport& pole() const noexcept { return pole_; }

 private:
  PoleReport pole_;
};

/// Result magnitude exceeds the range of double.
class overflow_error : public error {
 public:
  using error::error;
};

/// Adaptive quadrature ran out of its subdivision or panel budget.
class quadrature_error : public error {
 public:
  using error::error;
};

/// An extrapolation (ε→0, τ→0) or a fit did not settle.
class convergence_error : public error {
 public:
  using error::error;
};

}  // namespace gfresnel
