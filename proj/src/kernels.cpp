#include "domset/kernels.hpp"

#include <atomic>

namespace domset::kernels {

#if defined(DOMSET_HAVE_AVX2)
extern const Ops avx2_ops;
#endif

bool avx2_supported() {
#if defined(DOMSET_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

const Ops* resolve(Backend b) {
#if defined(DOMSET_HAVE_AVX2)
    if (b == Backend::avx2 || b == Backend::auto_detect) {
        if (avx2_supported()) return &avx2_ops;
    }
#else
    (void)b;
#endif
    return &scalar_ops;
}

std::atomic<const Ops*> g_active{nullptr};

} // namespace

const Ops& active() {
    const Ops* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = resolve(Backend::auto_detect);
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

const char* select_backend(Backend b) {
    const Ops* t = resolve(b);
    g_active.store(t, std::memory_order_release);
    return t->name;
}

} // namespace domset::kernels
