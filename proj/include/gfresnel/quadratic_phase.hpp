#pragma once

// Non-degenerate quadratic phases ⟨Ax,x⟩/2 in n ≤ 3 variables.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "amplitude.hpp"
#include "cutoff.hpp"
#include "error.hpp"
#include "extrapolation.hpp"
#include "oscillatory.hpp"
#include "regularization.hpp"
#include "special_functions.hpp"
#include "types.hpp"

namespace gfresnel {

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(unsigned n = 1) : n_(n) {
    if (n < 1 || n > 3) throw domain_error("matrix dimension must be 1, 2 or 3");
  }

  /// Row-major entries; the input must be exactly symmetric.
  static SymmetricMatrix from_rows(std::span<const double> rows) {
    unsigned n = 0;
    for (unsigned k = 1; k <= 3; ++k)
      if (rows.size() == k * k) n = k;
    if (n == 0) throw domain_error("matrix needs 1, 4 or 9 entries");
    SymmetricMatrix m(n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        if (rows[i * n + j] != rows[j * n + i]) throw domain_error("matrix is not symmetric");
        m.a_[i * 3 + j] = rows[i * n + j];
      }
    return m;
  }

  static SymmetricMatrix diagonal(std::span<const double> d) {
    SymmetricMatrix m(static_cast<unsigned>(d.size()));
    for (unsigned i = 0; i < d.size(); ++i) m.a_[i * 3 + i] = d[i];
    return m;
  }

  static SymmetricMatrix identity(unsigned n) {
    const std::array<double, 3> ones{1.0, 1.0, 1.0};
    return diagonal(std::span<const double>(ones.data(), n));
  }

  unsigned dimension() const noexcept { return n_; }
  double operator()(unsigned i, unsigned j) const { return a_[i * 3 + j]; }
  void set(unsigned i, unsigned j, double v) {
    a_[i * 3 + j] = v;
    a_[j * 3 + i] = v;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) s += a_[i * 3 + j] * a_[i * 3 + j];
    return std::sqrt(s);
  }

  double off_diagonal_norm() const {
    double s = 0.0;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        if (i != j) s += a_[i * 3 + j] * a_[i * 3 + j];
    return std::sqrt(s);
  }

 private:
  unsigned n_;
  std::array<double, 9> a_{};
};

struct EigenDecomposition {
  unsigned n = 0;
  std::array<double, 3> values{};
  /// Column j is the eigenvector of values[j]; entry (i, j) at i*3 + j.
  std::array<double, 9> vectors{};
  double residual_off_diagonal = 0.0;
};

/// Cyclic Jacobi rotations until the off-diagonal part is below 1e-13·‖A‖.
inline EigenDecomposition jacobi_eigen(const SymmetricMatrix& A) {
  const unsigned n = A.dimension();
  SymmetricMatrix m = A;
  EigenDecomposition out;
  out.n = n;
  for (unsigned i = 0; i < n; ++i) out.vectors[i * 3 + i] = 1.0;
  const double target = 1e-13 * A.frobenius_norm();
  for (int sweep = 0; sweep < 64 && m.off_diagonal_norm() > target; ++sweep) {
    for (unsigned p = 0; p + 1 < n; ++p) {
      for (unsigned q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = m(p, p), aqq = m(q, q);
        for (unsigned r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = m(r, p), arq = m(r, q);
          m.set(r, p, c * arp - s * arq);
          m.set(r, q, s * arp + c * arq);
        }
        m.set(p, p, app - t * apq);
        m.set(q, q, aqq + t * apq);
        m.set(p, q, 0.0);
        for (unsigned r = 0; r < n; ++r) {
          const double vp = out.vectors[r * 3 + p], vq = out.vectors[r * 3 + q];
          out.vectors[r * 3 + p] = c * vp - s * vq;
          out.vectors[r * 3 + q] = s * vp + c * vq;
        }
      }
    }
  }
  for (unsigned i = 0; i < n; ++i) out.values[i] = m(i, i);
  out.residual_off_diagonal = m.off_diagonal_norm();
  return out;
}

struct SignatureDet {
  int signature = 0;
  double determinant = 0.0;
};

namespace detail {

inline void require_nonsingular(const SymmetricMatrix& A, const EigenDecomposition& e) {
  const double tol = 1e-12 * A.frobenius_norm();
  for (unsigned i = 0; i < e.n; ++i) {
    if (!(std::abs(e.values[i]) > tol)) throw domain_error("singular matrix: an eigenvalue is below 1e-12 of its norm");
  }
}

}  // namespace detail

/// sgn A = #positive - #negative eigenvalues, det A = product of eigenvalues.
inline SignatureDet signature_and_det(const SymmetricMatrix& A) {
  const EigenDecomposition e = jacobi_eigen(A);
  detail::require_nonsingular(A, e);
  SignatureDet out;
  out.determinant = 1.0;
  for (unsigned i = 0; i < e.n; ++i) {
    out.signature += e.values[i] > 0.0 ? 1 : -1;
    out.determinant *= e.values[i];
  }
  return out;
}

inline SymmetricMatrix inverse(const SymmetricMatrix& A) {
  const EigenDecomposition e = jacobi_eigen(A);
  detail::require_nonsingular(A, e);
  SymmetricMatrix B(e.n);
  for (unsigned i = 0; i < e.n; ++i)
    for (unsigned j = i; j < e.n; ++j) {
      double s = 0.0;
      for (unsigned k = 0; k < e.n; ++k) s += e.vectors[i * 3 + k] * e.vectors[j * 3 + k] / e.values[k];
      B.set(i, j, s);
    }
  return B;
}

struct QuadExpansion {
  unsigned dimension = 1;
  /// (2π)^{n/2} e^{iπ sgnA/4} / |det A|^{1/2}
  complex prefactor{};
  /// coefficients[k] multiplies λ^{-k-n/2}.
  std::vector<complex> coefficients;

  complex partial_sum(double lambda) const {
    complex sum{};
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      sum += coefficients[k] * std::pow(lambda, -(k + 0.5 * dimension));
    }
    return prefactor * sum;
  }
};

/// Σ_{jl} B_jl ∂_j ∂_l applied to a Taylor table (degree drops by 2).
inline TaylorTable apply_hessian_form(const SymmetricMatrix& B, const TaylorTable& t) {
  const unsigned n = t.dimension();
  if (t.degree() < 2) return TaylorTable(n, 0);
  TaylorTable out(n, t.degree() - 2);
  out.for_each([&](const MultiIndex& alpha) {
    double sum = 0.0;
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned l = 0; l < n; ++l) {
        MultiIndex beta = alpha;
        ++beta[j];
        ++beta[l];
        // ∂_j∂_l x^β contributes β_j (β_l - [j=l]) x^α.
        const double weight = static_cast<double>(beta[j]) * (beta[l] - (j == l ? 1.0 : 0.0));
        sum += B(j, l) * weight * t[beta];
      }
    }
    out.set(alpha, sum);
  });
  return out;
}

/// ∫_{ℝⁿ} e^{iλ⟨Ax,x⟩/2} a(x) dx ~ prefactor · Σ_{k<N} λ^{-k-n/2} (1/k!) [(-i/2 ⟨A^{-1}D, D⟩)^k a](0).
inline QuadExpansion quadratic_expansion(const SymmetricMatrix& A, const MultivariateAmplitude& a, unsigned N) {
  const unsigned n = A.dimension();
  if (a.dimension() != n) throw domain_error("amplitude and matrix dimensions differ");
  if (N < 1) throw domain_error("quadratic_expansion requires N >= 1");
  if (a.degree_cap() < 2 * (N - 1)) {
    throw domain_error("amplitude Taylor table too shallow: need degree >= 2(N-1)");
  }
  const SignatureDet sd = signature_and_det(A);
  const SymmetricMatrix B = inverse(A);

  // D_j = (1/i)∂_j, so D_j D_l = (1/i)² ∂_j∂_l and the operator
  // -(i/2)⟨B D, D⟩ equals -(i/2)(1/i)² ⟨B ∂, ∂⟩ = (i/2)⟨B ∂, ∂⟩.
  const complex one_over_i = 1.0 / complex(0.0, 1.0);
  const complex factor = complex(0.0, -0.5) * one_over_i * one_over_i;

  QuadExpansion out;
  out.dimension = n;
  out.prefactor = std::pow(2.0 * std::numbers::pi, 0.5 * n) * exp_i_pi(sd.signature / 4.0) /
                  std::sqrt(std::abs(sd.determinant));
  TaylorTable power = a.taylor();
  complex scale = 1.0;  // factor^k / k!
  for (unsigned k = 0; k < N; ++k) {
    if (k > 0) {
      power = apply_hessian_form(B, power);
      scale *= factor / static_cast<double>(k);
    }
    out.coefficients.push_back(scale * power[MultiIndex{0, 0, 0}]);
  }
  return out;
}

namespace detail {

using Polynomial = std::map<MultiIndex, double>;

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) r[{ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2]}] += ca * cb;
  return r;
}

/// ∫_ℝ e^{iσμλy²/2} y^b e^{-y²/2} dy; odd moments vanish, even ones are twice
/// the half-line quadrature.
inline PhaseIntegral gaussian_moment_integral(unsigned b, double mu, double lambda) {
  if (b % 2 == 1) return {};
  const Sign s = mu > 0.0 ? Sign::plus : Sign::minus;
  PhaseIntegral half = integrate_power_phase(PowerPhase{2.0, b + 1.0, s, 0.5 * std::abs(mu) * lambda},
                                             Amplitude::gaussian());
  half.value *= 2.0;
  half.error *= 2.0;
  half.abs_scale *= 2.0;
  return half;
}

}  // namespace detail

/// ∫_{ℝⁿ} e^{iλ⟨Ax,x⟩/2} P(x) e^{-|x|²/2} dx by quadrature. Rotating to the
/// eigenbasis of A keeps the Gaussian radial, so the integral becomes a sum
/// of products of one-dimensional quadratures.
inline PhaseIntegral quadratic_oracle(const SymmetricMatrix& A, const MultivariateAmplitude& a, double lambda) {
  if (!a.is_poly_gaussian()) throw domain_error("quadrature oracle needs a polynomial-times-Gaussian amplitude");
  const unsigned n = A.dimension();
  if (a.dimension() != n) throw domain_error("amplitude and matrix dimensions differ");
  const EigenDecomposition e = jacobi_eigen(A);
  detail::require_nonsingular(A, e);

  // P(Qy): substitute x_d = Σ_j Q_dj y_j.
  detail::Polynomial rotated;
  for (const auto& [alpha, c] : a.polynomial()) {
    detail::Polynomial term{{MultiIndex{0, 0, 0}, c}};
    for (unsigned d = 0; d < n; ++d) {
      detail::Polynomial linear;
      for (unsigned j = 0; j < n; ++j) {
        MultiIndex unit{0, 0, 0};
        unit[j] = 1;
        linear[unit] = e.vectors[d * 3 + j];
      }
      for (unsigned pw = 0; pw < alpha[d]; ++pw) term = detail::multiply(term, linear);
    }
    for (const auto& [beta, v] : term) rotated[beta] += v;
  }

  std::map<std::pair<unsigned, unsigned>, PhaseIntegral> cache;  // (axis, moment)
  auto moment = [&](unsigned axis, unsigned b) -> const PhaseIntegral& {
    auto it = cache.find({axis, b});
    if (it == cache.end()) it = cache.emplace(std::pair{axis, b}, detail::gaussian_moment_integral(b, e.values[axis], lambda)).first;
    return it->second;
  };

  PhaseIntegral out;
  for (const auto& [beta, c] : rotated) {
    if (c == 0.0) continue;
    complex prod = c;
    double err = 0.0;
    for (unsigned d = 0; d < n; ++d) {
      const PhaseIntegral& m = moment(d, beta[d]);
      err = err * std::abs(m.value) + std::abs(prod) * m.error;
      prod *= m.value;
    }
    out.value += prod;
    out.error += err;
  }
  return out;
}

struct FourierCheck {
  complex lhs{};
  complex rhs{};
  double error_estimate = 0.0;
};

/// (1/√(2π)) Os-∫ e^{-ixξ} e^{±ix²/2} dx against e^{±iπ/4} e^{∓iξ²/2}. The
/// left side completes the square, ±x²/2 - xξ = ±(x ∓ ξ)²/2 ∓ ξ²/2, and the
/// remaining Os-∫ e^{±iy²/2} dy is evaluated by the regularization engine.
inline FourierCheck fresnel_fourier_check(Sign sign, double xi,
                                          const CutoffFunction& chi = CutoffFunction::gaussian(),
                                          const EpsilonSchedule& schedule = EpsilonSchedule::geometric()) {
  if (!(std::abs(xi) <= 10.0)) throw domain_error("fresnel_fourier_check requires |xi| <= 10");
  const double s = sign_factor(sign);
  const QuadratureOutcome os = regularized_full_line(2, sign, chi, schedule, 0.5);
  const complex shift = std::polar(1.0, -s * 0.5 * xi * xi);
  FourierCheck out;
  out.lhs = shift * os.value / std::sqrt(2.0 * std::numbers::pi);
  out.rhs = exp_i_pi(s / 4.0) * shift;
  out.error_estimate = os.error_estimate / std::sqrt(2.0 * std::numbers::pi);
  return out;
}

}  // namespace gfresnel
