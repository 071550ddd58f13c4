#include "xychain/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace xychain {
namespace {

// 15-point Kronrod extension of 7-point Gauss, positive half of the nodes.
// Odd indices are the embedded Gauss nodes.
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double lo, hi;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double lo,
                     double hi) {
  const double c = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double gk = kWeights[7] * f(c);
  double g = kGaussWeights[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double fp = f(c + half * kNodes[i]);
    const double fm = f(c - half * kNodes[i]);
    gk += kWeights[i] * (fp + fm);
    if (i % 2 == 1) g += kGaussWeights[i / 2] * (fp + fm);
  }
  gk *= half;
  g *= half;
  return Panel{lo, hi, gk, std::abs(gk - g)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double abs_tol,
                     double osc_scale, long eval_budget) {
  if (!(abs_tol > 0.0)) throw DomainError("integrate: abs_tol must be > 0");
  if (!(osc_scale >= 0.0)) throw DomainError("integrate: osc_scale must be >= 0");

  const double pi = std::numbers::pi;
  const long initial =
      std::max<long>(8, static_cast<long>(std::ceil(osc_scale)));

  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(initial) + 64);
  long evals = 0;
  for (long i = 0; i < initial; ++i) {
    heap.push_back(evaluate_panel(f, pi * double(i) / double(initial),
                                  pi * double(i + 1) / double(initial)));
    evals += 15;
  }
  std::make_heap(heap.begin(), heap.end());

  auto total_error = [&heap]() {
    double e = 0.0;
    for (const Panel& p : heap) e += p.error;
    return e;
  };

  while (total_error() > abs_tol && evals + 30 <= eval_budget) {
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    heap.push_back(evaluate_panel(f, worst.lo, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(evaluate_panel(f, mid, worst.hi));
    std::push_heap(heap.begin(), heap.end());
    evals += 30;
  }

  // Sum panels from smallest interval upward for a reproducible total.
  std::sort(heap.begin(), heap.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  double value = 0.0;
  double error = 0.0;
  for (const Panel& p : heap) {
    value += p.value;
    error += p.error;
  }

  if (error > abs_tol) {
    throw NonConvergence("quadrature did not converge to requested tolerance",
                         value, error, evals);
  }
  return QuadResult{value, error, evals};
}

}  // namespace xychain
