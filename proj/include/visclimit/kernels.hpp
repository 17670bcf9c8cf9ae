#pragma once

#include <cstddef>
#include <string>

namespace visclimit::kernels {

// Inner loops of the staggered-grid stepper. All arrays are contiguous
// doubles; cell arrays have length n, the node array n + 1. Backends must
// produce bit-identical results: elementwise IEEE operations in the same
// order, no FMA.
struct Backend {
  const char* name;

  // Per cell i in [0, n): g = (u[i+1] - u[i]) inv_dy, p = Rgas th / v,
  // sig = mu g / v, er = (sig - p) g.
  void (*cell_rhs)(const double* u, const double* v, const double* th, double inv_dy, double Rgas,
                   double mu, double* g, double* p, double* sig, double* er, std::size_t n);

  // Per interior node k in [0, m): using flanking cells k and k+1,
  // q[k] = kap2 (th[k+1] - th[k]) / (v[k] + v[k+1]),
  // ku[k] = ((sig[k+1] - sig[k]) - (p[k+1] - p[k])) inv_dy.
  void (*node_rhs)(const double* p, const double* sig, const double* v, const double* th,
                   double inv_dy, double kap2, double* ku, double* q, std::size_t m);

  // Per cell i: kth = gm1_over_R (er[i] + (q[i+1] - q[i]) inv_dy).
  void (*cell_energy)(const double* er, const double* q, double inv_dy, double gm1_over_R,
                      double* kth, std::size_t n);

  // out = x + dt k.
  void (*axpy_to)(const double* x, const double* k, double dt, double* out, std::size_t n);

  // Heun combine: out = 0.5 (x0 + x1 + dt k2).
  void (*heun_avg)(const double* x0, const double* x1, const double* k2, double dt, double* out,
                   std::size_t n);

  // max over cells of sqrt(gR th) / v.
  double (*max_lambda)(const double* v, const double* th, double gR, std::size_t n);

  double (*min_val)(const double* x, std::size_t n);
};

const Backend& scalar_backend();
// nullptr when not compiled in or the CPU lacks AVX2.
const Backend* avx2_backend();

// Currently selected backend. First use honors VISCLIMIT_KERNELS
// (scalar | avx2 | auto); defaults to the best available.
const Backend& active();

// Force a backend by name ("auto" re-detects). Throws on unknown or
// unavailable names.
void select(const std::string& name);

}  // namespace visclimit::kernels
