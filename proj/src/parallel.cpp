#include "bqk/parallel.hpp"

#include <atomic>
#include <cstdlib>

#include <omp.h>

namespace bqk {

namespace {
std::atomic<int> forced{0};
}

int thread_count() {
    if (int k = forced.load(); k > 0) return k;
    if (const char* env = std::getenv("BQK_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    return omp_get_max_threads();
}

void set_thread_count(int k) { forced.store(k > 0 ? k : 0); }

}  // namespace bqk
