#include "rks/kernel_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rks/rng.hpp"

namespace rks {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Exact <hat(x-a), hat(x-b)> for integer shifts.
double hat_inner(int a, int b) {
  switch (std::abs(a - b)) {
    case 0: return 2.0 / 3.0;
    case 1: return 1.0 / 6.0;
    default: return 0.0;
  }
}

}  // namespace

double Generator::eval(int index, double x) const {
  if (kind == GeneratorKind::hat) {
    const double t = 1.0 - std::abs(x - index);
    return t > 0.0 ? t : 0.0;
  }
  const double d = x - center(index);
  return std::exp(-d * d);
}

KernelSpace KernelSpace::make(GeneratorKind kind, int index_lo, int index_hi,
                              std::optional<std::uint64_t> jitter_seed,
                              QuadratureSpec quadrature) {
  if (index_lo > index_hi) throw std::invalid_argument("index_lo > index_hi");
  if (jitter_seed && kind != GeneratorKind::gaussian)
    throw std::invalid_argument("jitter is only defined for the gaussian generator");
  quadrature.validate();

  KernelSpace space;
  space.gen_.kind = kind;
  space.gen_.index_lo = index_lo;
  space.gen_.index_hi = index_hi;
  space.gen_.jitter.assign(static_cast<std::size_t>(index_hi - index_lo + 1), 0.0);
  if (jitter_seed) {
    Rng rng(*jitter_seed);
    for (double& t : space.gen_.jitter) t = rng.uniform(-0.1, 0.1);
  }
  space.quad_ = quadrature;

  const int n = space.size();
  space.gram_.resize(n, n);
  if (kind == GeneratorKind::hat) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) space.gram_(i, j) = hat_inner(i, j);
  } else {
    // <e^{-(x-a)^2}, e^{-(x-b)^2}> = sqrt(pi/2) e^{-(a-b)^2/2}
    const double scale = std::sqrt(kPi / 2.0);
    for (int i = 0; i < n; ++i) {
      const double ci = space.gen_.center(index_lo + i);
      for (int j = 0; j < n; ++j) {
        const double d = ci - space.gen_.center(index_lo + j);
        space.gram_(i, j) = scale * std::exp(-0.5 * d * d);
      }
    }
  }

  Eigen::LLT<Eigen::MatrixXd> llt(space.gram_);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("kernel space construction failed: Gram matrix is not positive definite");
  space.gram_inverse_ = llt.solve(Eigen::MatrixXd::Identity(n, n));

  const double residual =
      (space.gram_ * space.gram_inverse_ - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (residual > 1e-10)
    throw std::runtime_error("kernel space construction failed: Gram inversion residual " +
                             std::to_string(residual));

  // Off-diagonal decay ratio of the central inverse row.
  const int c = n / 2;
  const double b00 = std::abs(space.gram_inverse_(c, c));
  double ratio = 0.0;
  for (int k = 1; c + k < n; ++k) {
    const double bk = std::abs(space.gram_inverse_(c, c + k));
    if (bk > 0.0 && b00 > 0.0)
      ratio = std::max(ratio, std::pow(bk / b00, 1.0 / static_cast<double>(k)));
  }
  space.decay_ratio_ = ratio;
  space.schur_cache_ = std::make_shared<SchurCache>();
  return space;
}

void KernelSpace::support_range(double x, int& first, int& last) const {
  const double r = gen_.support_radius() + 0.11;  // jitter margin
  first = std::max(gen_.index_lo, static_cast<int>(std::ceil(x - r)));
  last = std::min(gen_.index_hi, static_cast<int>(std::floor(x + r)));
}

Eigen::VectorXd KernelSpace::basis_at(double x) const {
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(size());
  int first, last;
  support_range(x, first, last);
  for (int i = first; i <= last; ++i) phi(i - gen_.index_lo) = gen_.eval(i, x);
  return phi;
}

double KernelSpace::kernel(double x, double y) const {
  int xf, xl, yf, yl;
  support_range(x, xf, xl);
  support_range(y, yf, yl);
  if (xf > xl || yf > yl) return 0.0;
  double acc = 0.0;
  for (int j = yf; j <= yl; ++j) {
    const double pj = gen_.eval(j, y);
    double row = 0.0;
    for (int i = xf; i <= xl; ++i)
      row += gram_inverse_(j - gen_.index_lo, i - gen_.index_lo) * gen_.eval(i, x);
    acc += pj * row;
  }
  return acc;
}

Signal KernelSpace::kernel_section(double y) const {
  int yf, yl;
  support_range(y, yf, yl);
  Signal s{Eigen::VectorXd::Zero(size())};
  for (int j = yf; j <= yl; ++j)
    s.coeffs += gen_.eval(j, y) * gram_inverse_.row(j - gen_.index_lo).transpose();
  return s;
}

double KernelSpace::eval(const Signal& f, double x) const {
  if (f.coeffs.size() != size()) throw std::invalid_argument("signal length does not match the space");
  int first, last;
  support_range(x, first, last);
  double acc = 0.0;
  for (int i = first; i <= last; ++i) acc += f.coeffs(i - gen_.index_lo) * gen_.eval(i, x);
  return acc;
}

double KernelSpace::gram_norm(const Signal& f) const {
  return std::sqrt(std::max(0.0, f.coeffs.dot(gram_ * f.coeffs)));
}

double KernelSpace::l2_norm(const Signal& f, Region region, double L) const {
  if (f.coeffs.size() != size()) throw std::invalid_argument("signal length does not match the space");
  if (region != Region::whole_line && !(L > 0.0))
    throw std::invalid_argument("region parameter L must be > 0");

  // Coefficient-support-derived window.
  int lo = -1, hi = -1;
  for (int i = 0; i < size(); ++i)
    if (f.coeffs(i) != 0.0) {
      if (lo < 0) lo = i;
      hi = i;
    }
  if (lo < 0) return 0.0;

  const double lattice = 2.0 * quad_.step;
  const double r = gen_.support_radius() + 0.11;
  const double win_lo = snap_down(gen_.center(gen_.index_lo + lo) - r - quad_.window_pad, lattice);
  const double win_hi = snap_up(gen_.center(gen_.index_lo + hi) + r + quad_.window_pad, lattice);

  auto sq = [this, &f](double x) {
    const double v = eval(f, x);
    return v * v;
  };
  double energy = 0.0;
  switch (region) {
    case Region::whole_line:
      energy = simpson(sq, win_lo, win_hi, quad_.step);
      break;
    case Region::inside:
      energy = simpson(sq, std::max(win_lo, -L), std::min(win_hi, L), quad_.step);
      break;
    case Region::outside:
      if (win_lo < -L) energy += simpson(sq, win_lo, -L, quad_.step);
      if (win_hi > L) energy += simpson(sq, L, win_hi, quad_.step);
      break;
  }
  return std::sqrt(std::max(0.0, energy));
}

double KernelSpace::concentration_ratio(const Signal& f, double L) const {
  const double whole = l2_norm(f, Region::whole_line);
  if (!(whole > 0.0))
    throw std::domain_error("concentration ratio is undefined for the zero signal");
  return l2_norm(f, Region::outside, L) / whole;
}

SchurEstimate KernelSpace::estimate_schur(double delta, const ProbeGrid& probes) const {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must be in (0, 1]");
  if (probes.count < 1) throw std::invalid_argument("probe grid must be nonempty");

  const double theta = 1.0;  // both generators are Lipschitz
  const double lattice = 2.0 * quad_.step;
  const double r = gen_.support_radius() + 0.11;
  const double y_lo = snap_down(gen_.index_lo - r - 1.0, lattice);
  const double y_hi = snap_up(gen_.index_hi + r + 1.0, lattice);

  auto probe_x = [&](int k) {
    if (probes.count == 1) return 0.5 * (probes.x_lo + probes.x_hi);
    return probes.x_lo + (probes.x_hi - probes.x_lo) * k / double(probes.count - 1);
  };

  SchurEstimate est;
  est.delta = delta;
  est.holder_theta = theta;

  // ||K||_S: sup_x int |K(x,y)| dy (K is symmetric, so the two mixed bounds
  // coincide).
  for (int k = 0; k < probes.count; ++k) {
    const double x = probe_x(k);
    const Signal sec = kernel_section(x);  // K(x, .) in coefficient space
    auto absK = [this, &sec](double y) { return std::abs(eval(sec, y)); };
    est.schur_norm = std::max(est.schur_norm, simpson(absK, y_lo, y_hi, quad_.step));
  }

  // ||omega_d(K)||_S with the inner sup over the 5-point stencil
  // {0, +-d/2, +-d} in each argument, probed at d in {delta, delta/2, delta/4}.
  double combined_mod = 0.0;
  const double stencil[5] = {0.0, 0.5, -0.5, 1.0, -1.0};
  for (const double d : {delta, delta / 2.0, delta / 4.0}) {
    double mod = 0.0;
    for (int k = 0; k < probes.count; ++k) {
      const double x = probe_x(k);
      Signal secs[5];
      for (int s = 0; s < 5; ++s) secs[s] = kernel_section(x + stencil[s] * d);
      auto omega = [&](double y) {
        const double base = eval(secs[0], y);
        double w = 0.0;
        for (int sx = 0; sx < 5; ++sx)
          for (int sy = 0; sy < 5; ++sy) {
            if (sx == 0 && sy == 0) continue;
            w = std::max(w, std::abs(eval(secs[sx], y + stencil[sy] * d) - base));
          }
        return w;
      };
      mod = std::max(mod, simpson(omega, y_lo, y_hi, quad_.step));
    }
    if (d == delta) est.modulus_schur = mod;
    combined_mod = std::max(combined_mod, mod / std::pow(d, theta));
  }

  est.combined = est.schur_norm + combined_mod;
  return est;
}

const SchurEstimate& KernelSpace::schur() const {
  std::call_once(schur_cache_->once, [this] {
    schur_cache_->value = estimate_schur(0.5, ProbeGrid{-1.0, 1.0, 21});
  });
  return schur_cache_->value;
}

}  // namespace rks
