#include <cmath>
#include <cstddef>

#include "visclimit/kernels.hpp"

namespace visclimit::kernels {

namespace {

void cell_rhs(const double* u, const double* v, const double* th, double inv_dy, double Rgas,
              double mu, double* g, double* p, double* sig, double* er, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double gi = (u[i + 1] - u[i]) * inv_dy;
    const double pi = Rgas * th[i] / v[i];
    const double si = mu * gi / v[i];
    g[i] = gi;
    p[i] = pi;
    sig[i] = si;
    er[i] = (si - pi) * gi;
  }
}

void node_rhs(const double* p, const double* sig, const double* v, const double* th,
              double inv_dy, double kap2, double* ku, double* q, std::size_t m) {
  for (std::size_t k = 0; k < m; ++k) {
    q[k] = kap2 * (th[k + 1] - th[k]) / (v[k] + v[k + 1]);
    ku[k] = ((sig[k + 1] - sig[k]) - (p[k + 1] - p[k])) * inv_dy;
  }
}

void cell_energy(const double* er, const double* q, double inv_dy, double gm1_over_R, double* kth,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    kth[i] = gm1_over_R * (er[i] + (q[i + 1] - q[i]) * inv_dy);
}

void axpy_to(const double* x, const double* k, double dt, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + dt * k[i];
}

void heun_avg(const double* x0, const double* x1, const double* k2, double dt, double* out,
              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (x0[i] + (x1[i] + dt * k2[i]));
}

double max_lambda(const double* v, const double* th, double gR, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lam = std::sqrt(gR * th[i]) / v[i];
    if (lam > m) m = lam;
  }
  return m;
}

double min_val(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar",  cell_rhs, node_rhs,  cell_energy,
                         axpy_to,   heun_avg, max_lambda, min_val};
  return b;
}

}  // namespace visclimit::kernels
