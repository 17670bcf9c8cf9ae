#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "visclimit/errors.hpp"
#include "visclimit/kernels.hpp"

using namespace visclimit;

namespace {

std::vector<double> random_positive(std::mt19937& rng, size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

}  // namespace

TEST_CASE("scalar and AVX2 backends agree bit for bit") {
  const kernels::Backend* simd = kernels::avx2_backend();
  if (!simd) {
    MESSAGE("avx2 backend unavailable; equivalence trivially skipped");
    return;
  }
  const kernels::Backend& ref = kernels::scalar_backend();
  std::mt19937 rng(12345);

  for (size_t n : {size_t{1}, size_t{3}, size_t{4}, size_t{5}, size_t{8}, size_t{17},
                   size_t{64}, size_t{1001}}) {
    const std::vector<double> u = random_positive(rng, n + 1, -2.0, 2.0);
    const std::vector<double> v = random_positive(rng, n + 1, 0.2, 3.0);
    const std::vector<double> th = random_positive(rng, n + 1, 0.1, 4.0);
    const double inv_dy = 7.3, Rgas = 1.7, mu = 0.9, kap2 = 2.2;

    std::vector<double> g_a(n), p_a(n), s_a(n), e_a(n), g_b(n), p_b(n), s_b(n), e_b(n);
    ref.cell_rhs(u.data(), v.data(), th.data(), inv_dy, Rgas, mu, g_a.data(), p_a.data(),
                 s_a.data(), e_a.data(), n);
    simd->cell_rhs(u.data(), v.data(), th.data(), inv_dy, Rgas, mu, g_b.data(), p_b.data(),
                   s_b.data(), e_b.data(), n);
    CHECK(g_a == g_b);
    CHECK(p_a == p_b);
    CHECK(s_a == s_b);
    CHECK(e_a == e_b);

    // node_rhs reads m + 1 cell values for m interior nodes.
    const size_t m = n - 1;
    std::vector<double> ku_a(m), q_a(m), ku_b(m), q_b(m);
    ref.node_rhs(p_a.data(), s_a.data(), v.data(), th.data(), inv_dy, kap2, ku_a.data(),
                 q_a.data(), m);
    simd->node_rhs(p_a.data(), s_a.data(), v.data(), th.data(), inv_dy, kap2, ku_b.data(),
                   q_b.data(), m);
    CHECK(ku_a == ku_b);
    CHECK(q_a == q_b);

    std::vector<double> kth_a(n), kth_b(n);
    const std::vector<double> q_full = random_positive(rng, n + 1, -1.0, 1.0);
    ref.cell_energy(e_a.data(), q_full.data(), inv_dy, 0.4, kth_a.data(), n);
    simd->cell_energy(e_a.data(), q_full.data(), inv_dy, 0.4, kth_b.data(), n);
    CHECK(kth_a == kth_b);

    std::vector<double> o_a(n), o_b(n);
    ref.axpy_to(v.data(), th.data(), 0.0137, o_a.data(), n);
    simd->axpy_to(v.data(), th.data(), 0.0137, o_b.data(), n);
    CHECK(o_a == o_b);

    ref.heun_avg(v.data(), th.data(), u.data(), 0.0021, o_a.data(), n);
    simd->heun_avg(v.data(), th.data(), u.data(), 0.0021, o_b.data(), n);
    CHECK(o_a == o_b);

    CHECK(ref.max_lambda(v.data(), th.data(), 2.3, n) ==
          simd->max_lambda(v.data(), th.data(), 2.3, n));
    CHECK(ref.min_val(v.data(), n) == simd->min_val(v.data(), n));
  }
}

TEST_CASE("backend selection") {
  kernels::select("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");
  if (kernels::avx2_backend()) {
    kernels::select("avx2");
    CHECK(std::string(kernels::active().name) == "avx2");
  } else {
    CHECK_THROWS_AS(kernels::select("avx2"), Error);
  }
  CHECK_THROWS_AS(kernels::select("sse9"), Error);
  kernels::select("auto");
}
