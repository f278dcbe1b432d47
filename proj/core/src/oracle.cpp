#include "singquad/oracle.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "singquad/errors.hpp"

namespace singquad {

SmoothFn SmoothFn::polynomial(std::vector<double> coeffs) {
  SmoothFn f;
  f.poly_ = std::move(coeffs);
  return f;
}

SmoothFn& SmoothFn::add_sin(double amplitude, double omega) {
  if (omega == 0.0) throw InvalidArgumentError("SmoothFn: trig frequency must be nonzero");
  trig_.push_back({amplitude, omega, true});
  return *this;
}

SmoothFn& SmoothFn::add_cos(double amplitude, double omega) {
  if (omega == 0.0) throw InvalidArgumentError("SmoothFn: trig frequency must be nonzero");
  trig_.push_back({amplitude, omega, false});
  return *this;
}

double SmoothFn::value(double x) const { return derivative(0, x); }

double SmoothFn::derivative(std::size_t k, double x) const {
  double acc = 0.0;
  // Polynomial part: d^k/dx^k x^i = i!/(i-k)! x^(i-k).
  for (std::size_t i = k; i < poly_.size(); ++i) {
    double falling = 1.0;
    for (std::size_t r = 0; r < k; ++r) falling *= static_cast<double>(i - r);
    acc += poly_[i] * falling * std::pow(x, static_cast<double>(i - k));
  }
  // sin/cos derivative cycle of length 4, each step multiplying by omega.
  for (const TrigTerm& t : trig_) {
    const double scale = t.amplitude * std::pow(t.omega, static_cast<double>(k));
    const double u = t.omega * x;
    const std::size_t phase = (t.is_sin ? 0u : 1u) + k;  // sin -> cos -> -sin -> -cos
    switch (phase % 4) {
      case 0: acc += scale * std::sin(u); break;
      case 1: acc += scale * std::cos(u); break;
      case 2: acc -= scale * std::sin(u); break;
      default: acc -= scale * std::cos(u); break;
    }
  }
  return acc;
}

double SmoothFn::antiderivative(double x) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    acc += poly_[i] * std::pow(x, static_cast<double>(i + 1)) /
           static_cast<double>(i + 1);
  }
  for (const TrigTerm& t : trig_) {
    if (t.is_sin) {
      acc -= t.amplitude * std::cos(t.omega * x) / t.omega;
    } else {
      acc += t.amplitude * std::sin(t.omega * x) / t.omega;
    }
  }
  return acc;
}

double PiecewiseFunction::eval(double x) const {
  if (x == xstar) {
    throw NodeCollisionError(
        "PiecewiseFunction: evaluation exactly at the singularity is undefined");
  }
  return x < xstar ? left.value(x) : right.value(x);
}

double PiecewiseFunction::jump(std::size_t k) const {
  return right.derivative(k, xstar) - left.derivative(k, xstar);
}

std::vector<double> PiecewiseFunction::jumps(std::size_t K) const {
  std::vector<double> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) out[k] = jump(k);
  return out;
}

SingularitySpec PiecewiseFunction::singularity(std::size_t K) const {
  return SingularitySpec{xstar, jumps(K)};
}

PiecewiseFunction paper_test_function(double a, double b, double c) {
  if (!(a < b && b < c)) {
    throw InvalidArgumentError("paper_test_function: need a < b < c");
  }
  PiecewiseFunction pf;
  pf.left = SmoothFn::constant(10.0);
  pf.left.add_cos(1.0, std::numbers::pi);
  pf.right = SmoothFn{};
  pf.right.add_sin(1.0, std::numbers::pi);
  pf.xstar = b;
  return pf;
}

double exact_integral(const PiecewiseFunction& pf, double a, double c) {
  if (!(a <= c)) throw InvalidArgumentError("exact_integral: need a <= c");
  if (c <= pf.xstar) {
    return pf.left.antiderivative(c) - pf.left.antiderivative(a);
  }
  if (a >= pf.xstar) {
    return pf.right.antiderivative(c) - pf.right.antiderivative(a);
  }
  return (pf.left.antiderivative(pf.xstar) - pf.left.antiderivative(a)) +
         (pf.right.antiderivative(c) - pf.right.antiderivative(pf.xstar));
}

namespace {

// Gauss-Kronrod 15-point pair on [-1, 1]; the 7 Gauss nodes are the
// odd-indexed Kronrod abscissae.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct GkResult {
  double kronrod = 0.0;
  double error = 0.0;
};

GkResult gk15(const SmoothFn& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f.value(mid);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f.value(mid - dx) + f.value(mid + dx);
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  GkResult r;
  r.kronrod = kron * half;
  r.error = std::abs((kron - gauss) * half);
  return r;
}

double adaptive_smooth(const SmoothFn& f, double lo, double hi, double tol) {
  if (lo == hi) return 0.0;
  struct Segment {
    double lo, hi, tol;
  };
  std::vector<Segment> stack{{lo, hi, tol}};
  double total = 0.0;
  int budget = 100000;
  while (!stack.empty()) {
    if (--budget < 0) {
      throw ConvergenceError(
          "reference_integral: subdivision budget exhausted before reaching "
          "the requested tolerance");
    }
    const Segment s = stack.back();
    stack.pop_back();
    const GkResult r = gk15(f, s.lo, s.hi);
    if (r.error <= s.tol || (s.hi - s.lo) < 1e-15 * (std::abs(s.lo) + 1.0)) {
      total += r.kronrod;
    } else {
      const double mid = 0.5 * (s.lo + s.hi);
      stack.push_back({s.lo, mid, 0.5 * s.tol});
      stack.push_back({mid, s.hi, 0.5 * s.tol});
    }
  }
  return total;
}

}  // namespace

double reference_integral(const PiecewiseFunction& pf, double a, double c,
                          double tol) {
  if (!(tol >= 1e-14)) {
    throw InvalidArgumentError("reference_integral: tol must be >= 1e-14");
  }
  if (!(a <= c)) throw InvalidArgumentError("reference_integral: need a <= c");
  // Always split at x* first; a smooth-function integrator run across the
  // jump would silently lose accuracy.
  if (c <= pf.xstar) return adaptive_smooth(pf.left, a, c, tol);
  if (a >= pf.xstar) return adaptive_smooth(pf.right, a, c, tol);
  return adaptive_smooth(pf.left, a, pf.xstar, 0.5 * tol) +
         adaptive_smooth(pf.right, pf.xstar, c, 0.5 * tol);
}

}  // namespace singquad
