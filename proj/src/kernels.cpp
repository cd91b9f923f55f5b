#include "gbs/kernels.hpp"

#include <atomic>

namespace gbs::kernels {

#if defined(GBS_HAVE_AVX2)
const KernelOps* avx2_ops_impl();
#endif

const KernelOps* avx2_ops() {
#if defined(GBS_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
    return nullptr;
}

namespace {

const KernelOps* detect() {
    if (const KernelOps* v = avx2_ops()) return v;
    return &scalar_ops();
}

std::atomic<const KernelOps*>& slot() {
    static std::atomic<const KernelOps*> s{detect()};
    return s;
}

}  // namespace

const KernelOps& active() { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
    if (name == "auto") {
        slot().store(detect(), std::memory_order_relaxed);
        return true;
    }
    if (name == "scalar") {
        slot().store(&scalar_ops(), std::memory_order_relaxed);
        return true;
    }
    if (name == "avx2") {
        if (const KernelOps* v = avx2_ops()) {
            slot().store(v, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
    return false;
}

}  // namespace gbs::kernels
