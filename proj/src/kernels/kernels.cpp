#include "visclimit/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "visclimit/errors.hpp"

namespace visclimit::kernels {

#if VISCLIMIT_HAVE_AVX2
const Backend* avx2_backend_impl();
#else
static const Backend* avx2_backend_impl() { return nullptr; }
#endif

const Backend* avx2_backend() { return avx2_backend_impl(); }

namespace {

std::atomic<const Backend*> g_active{nullptr};

const Backend* resolve(const std::string& name) {
  if (name == "scalar") return &scalar_backend();
  if (name == "avx2") {
    const Backend* b = avx2_backend();
    if (!b) throw Error("kernels: avx2 backend unavailable on this machine");
    return b;
  }
  if (name == "auto" || name.empty()) {
    const Backend* b = avx2_backend();
    return b ? b : &scalar_backend();
  }
  throw Error("kernels: unknown backend '" + name + "' (scalar | avx2 | auto)");
}

}  // namespace

const Backend& active() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) {
    // Concurrent first calls resolve to the same backend; last store wins.
    const char* env = std::getenv("VISCLIMIT_KERNELS");
    b = resolve(env ? env : "auto");
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void select(const std::string& name) {
  g_active.store(resolve(name), std::memory_order_release);
}

}  // namespace visclimit::kernels
