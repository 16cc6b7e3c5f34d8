#include "qkernel/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qkernel {

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenResult jacobi_symmetric(std::vector<double> a, int n, double tol,
                             int max_sweeps) {
  if (n < 1) throw std::invalid_argument("jacobi: n must be positive");
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("jacobi: matrix size mismatch");
  if (tol < 0) throw std::invalid_argument("jacobi: tol must be nonnegative");

  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double res = offdiag_norm(a, n);
  int sweep = 0;
  while (res > tol) {
    if (sweep >= max_sweeps) throw ConvergenceError(res);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r * n + p];
            const double arq = a[r * n + q];
            a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
            a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
          }
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = vrp - s * (vrq + tau * vrp);
          v[r * n + q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    ++sweep;
    res = offdiag_norm(a, n);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[x * n + x] > a[y * n + y];
  });

  EigenResult r;
  r.n = n;
  r.offdiag_residual = res;
  r.sweeps = sweep;
  r.values.resize(n);
  r.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    r.values[k] = a[order[k] * n + order[k]];
    for (int i = 0; i < n; ++i) r.vectors[i * n + k] = v[i * n + order[k]];
  }
  return r;
}

}  // namespace qkernel
