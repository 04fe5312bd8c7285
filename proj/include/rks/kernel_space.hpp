#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rks/quadrature.hpp"

namespace rks {

enum class GeneratorKind { gaussian, hat };

/// Basis family phi_i, i in [index_lo, index_hi]:
///   gaussian: phi_i(x) = exp(-(x - i - theta_i)^2), |theta_i| <= 1/10
///   hat:      phi_i(x) = max(1 - |x - i|, 0)
struct Generator {
  GeneratorKind kind = GeneratorKind::gaussian;
  int index_lo = 0;
  int index_hi = 0;
  std::vector<double> jitter;  // one entry per index, all zero for hat

  int size() const { return index_hi - index_lo + 1; }
  double center(int index) const { return index + jitter[index - index_lo]; }

  // Radius beyond which a basis element is numerically zero (< 5e-22 for the
  // Gaussian at 7, exactly zero for the hat at 1).
  double support_radius() const { return kind == GeneratorKind::hat ? 1.0 : 7.0; }

  double eval(int index, double x) const;
};

/// Element of the space, f = sum_i coeffs[i - index_lo] * phi_i.
struct Signal {
  Eigen::VectorXd coeffs;
};

/// Lower-bound estimates of the kernel's Schur-type norms.
struct SchurEstimate {
  double schur_norm = 0;    // estimate of ||K||_S
  double modulus_schur = 0; // estimate of ||omega_delta(K)||_S at `delta`
  double delta = 0;
  double holder_theta = 1.0;
  double combined = 0;      // ||K||_{S,theta} estimate
};

/// Probe abscissae for the sup over x in the Schur-norm estimate.
struct ProbeGrid {
  double x_lo = -1.0;
  double x_hi = 1.0;
  int count = 21;
};

enum class Region { whole_line, inside, outside };

/// Truncated shift-invariant reproducing kernel space: generator, Gram matrix
/// A[i][j] = <phi_i, phi_j> (closed form), its inverse B, and the induced
/// kernel K(x,y) = sum_{i,j} b_ji phi_i(x) phi_j(y).
class KernelSpace {
 public:
  static KernelSpace make(GeneratorKind kind, int index_lo, int index_hi,
                          std::optional<std::uint64_t> jitter_seed = std::nullopt,
                          QuadratureSpec quadrature = {});

  const Generator& generator() const { return gen_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const Eigen::MatrixXd& gram_inverse() const { return gram_inverse_; }
  const QuadratureSpec& quadrature() const { return quad_; }
  int size() const { return gen_.size(); }
  int index_lo() const { return gen_.index_lo; }
  int index_hi() const { return gen_.index_hi; }

  /// Geometric decay ratio r < 1 of the central inverse-Gram row,
  /// |b_0k| <= |b_00| r^k, estimated at construction.
  double inverse_decay_ratio() const { return decay_ratio_; }

  /// Index range [first, last] of basis elements not numerically zero at x.
  void support_range(double x, int& first, int& last) const;

  /// Basis-evaluation vector phi(x) (dense, mostly zero).
  Eigen::VectorXd basis_at(double x) const;

  double kernel(double x, double y) const;

  /// K(., y) in coefficient space: B^T phi(y).
  Signal kernel_section(double y) const;

  double eval(const Signal& f, double x) const;

  /// Composite-Simpson L2 norm over the whole line (support-derived window),
  /// over [-L, L], or over the complement within the window.
  double l2_norm(const Signal& f, Region region, double L = 0.0) const;

  /// Exact L2 norm of the expansion via the Gram quadratic form.
  double gram_norm(const Signal& f) const;

  /// ||f||_{2, [-L,L]^c} / ||f||_2; throws on the zero signal.
  double concentration_ratio(const Signal& f, double L) const;

  SchurEstimate estimate_schur(double delta, const ProbeGrid& probes) const;

  /// Default Schur estimate (delta = 1/2, central probe grid), computed once.
  const SchurEstimate& schur() const;

  Signal zero_signal() const { return Signal{Eigen::VectorXd::Zero(size())}; }

 private:
  KernelSpace() = default;

  Generator gen_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd gram_inverse_;
  QuadratureSpec quad_;
  double decay_ratio_ = 0.0;

  // Shared so that KernelSpace stays copyable; the estimate is a pure
  // function of the space, computed at most once.
  struct SchurCache {
    std::once_flag once;
    SchurEstimate value;
  };
  std::shared_ptr<SchurCache> schur_cache_;
};

}  // namespace rks
