// AVX2 variants of the stepper kernels. Four doubles per lane, scalar
// tails, and deliberately no FMA so every element matches the scalar
// backend bit-for-bit.

#include "visclimit/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace visclimit::kernels {

namespace {

void cell_rhs(const double* u, const double* v, const double* th, double inv_dy, double Rgas,
              double mu, double* g, double* p, double* sig, double* er, std::size_t n) {
  const __m256d vinv = _mm256_set1_pd(inv_dy);
  const __m256d vR = _mm256_set1_pd(Rgas);
  const __m256d vmu = _mm256_set1_pd(mu);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u0 = _mm256_loadu_pd(u + i);
    const __m256d u1 = _mm256_loadu_pd(u + i + 1);
    const __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d tt = _mm256_loadu_pd(th + i);
    const __m256d gi = _mm256_mul_pd(_mm256_sub_pd(u1, u0), vinv);
    const __m256d pi = _mm256_div_pd(_mm256_mul_pd(vR, tt), vv);
    const __m256d si = _mm256_div_pd(_mm256_mul_pd(vmu, gi), vv);
    _mm256_storeu_pd(g + i, gi);
    _mm256_storeu_pd(p + i, pi);
    _mm256_storeu_pd(sig + i, si);
    _mm256_storeu_pd(er + i, _mm256_mul_pd(_mm256_sub_pd(si, pi), gi));
  }
  for (; i < n; ++i) {
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
  const __m256d vinv = _mm256_set1_pd(inv_dy);
  const __m256d vk = _mm256_set1_pd(kap2);
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    const __m256d t0 = _mm256_loadu_pd(th + k);
    const __m256d t1 = _mm256_loadu_pd(th + k + 1);
    const __m256d v0 = _mm256_loadu_pd(v + k);
    const __m256d v1 = _mm256_loadu_pd(v + k + 1);
    const __m256d s0 = _mm256_loadu_pd(sig + k);
    const __m256d s1 = _mm256_loadu_pd(sig + k + 1);
    const __m256d p0 = _mm256_loadu_pd(p + k);
    const __m256d p1 = _mm256_loadu_pd(p + k + 1);
    const __m256d qk = _mm256_div_pd(_mm256_mul_pd(vk, _mm256_sub_pd(t1, t0)),
                                     _mm256_add_pd(v0, v1));
    const __m256d kk = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_sub_pd(s1, s0), _mm256_sub_pd(p1, p0)), vinv);
    _mm256_storeu_pd(q + k, qk);
    _mm256_storeu_pd(ku + k, kk);
  }
  for (; k < m; ++k) {
    q[k] = kap2 * (th[k + 1] - th[k]) / (v[k] + v[k + 1]);
    ku[k] = ((sig[k + 1] - sig[k]) - (p[k + 1] - p[k])) * inv_dy;
  }
}

void cell_energy(const double* er, const double* q, double inv_dy, double gm1_over_R, double* kth,
                 std::size_t n) {
  const __m256d vinv = _mm256_set1_pd(inv_dy);
  const __m256d vg = _mm256_set1_pd(gm1_over_R);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d q0 = _mm256_loadu_pd(q + i);
    const __m256d q1 = _mm256_loadu_pd(q + i + 1);
    const __m256d e = _mm256_loadu_pd(er + i);
    const __m256d flux = _mm256_mul_pd(_mm256_sub_pd(q1, q0), vinv);
    _mm256_storeu_pd(kth + i, _mm256_mul_pd(vg, _mm256_add_pd(e, flux)));
  }
  for (; i < n; ++i) kth[i] = gm1_over_R * (er[i] + (q[i + 1] - q[i]) * inv_dy);
}

void axpy_to(const double* x, const double* k, double dt, double* out, std::size_t n) {
  const __m256d vdt = _mm256_set1_pd(dt);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d kv = _mm256_loadu_pd(k + i);
    _mm256_storeu_pd(out + i, _mm256_add_pd(xv, _mm256_mul_pd(vdt, kv)));
  }
  for (; i < n; ++i) out[i] = x[i] + dt * k[i];
}

void heun_avg(const double* x0, const double* x1, const double* k2, double dt, double* out,
              std::size_t n) {
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d vhalf = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(x0 + i);
    const __m256d b = _mm256_loadu_pd(x1 + i);
    const __m256d kv = _mm256_loadu_pd(k2 + i);
    const __m256d inner = _mm256_add_pd(b, _mm256_mul_pd(vdt, kv));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vhalf, _mm256_add_pd(a, inner)));
  }
  for (; i < n; ++i) out[i] = 0.5 * (x0[i] + (x1[i] + dt * k2[i]));
}

double max_lambda(const double* v, const double* th, double gR, std::size_t n) {
  const __m256d vgR = _mm256_set1_pd(gR);
  __m256d vmax = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d tt = _mm256_loadu_pd(th + i);
    const __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d lam = _mm256_div_pd(_mm256_sqrt_pd(_mm256_mul_pd(vgR, tt)), vv);
    vmax = _mm256_max_pd(vmax, lam);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vmax);
  double m = lanes[0];
  for (int l = 1; l < 4; ++l)
    if (lanes[l] > m) m = lanes[l];
  for (; i < n; ++i) {
    const double lam = std::sqrt(gR * th[i]) / v[i];
    if (lam > m) m = lam;
  }
  return m;
}

double min_val(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m = x[0];
  if (n >= 4) {
    __m256d vmin = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) vmin = _mm256_min_pd(vmin, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmin);
    m = lanes[0];
    for (int l = 1; l < 4; ++l)
      if (lanes[l] < m) m = lanes[l];
  }
  for (; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

const Backend avx2{"avx2",   cell_rhs, node_rhs,  cell_energy,
                   axpy_to,  heun_avg, max_lambda, min_val};

}  // namespace

const Backend* avx2_backend_impl() {
  if (__builtin_cpu_supports("avx2")) return &avx2;
  return nullptr;
}

}  // namespace visclimit::kernels

#else

namespace visclimit::kernels {
const Backend* avx2_backend_impl() { return nullptr; }
}  // namespace visclimit::kernels

#endif
