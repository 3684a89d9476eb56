#include "dgla/parallel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dgla {

std::size_t min_violation_index(std::size_t n, const std::function<bool(std::size_t)>& violates,
                                bool parallel) {
#ifdef _OPENMP
    if (parallel && n > 1) {
        std::size_t best = scan_npos;
#pragma omp parallel
        {
            std::size_t local = scan_npos;
#pragma omp for schedule(dynamic, 16)
            for (long long i = 0; i < (long long)n; ++i) {
                if ((std::size_t)i < local && violates((std::size_t)i)) local = (std::size_t)i;
            }
#pragma omp critical
            best = std::min(best, local);
        }
        return best;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i)
        if (violates(i)) return i;
    return scan_npos;
}

std::vector<std::size_t> all_violation_indices(std::size_t n,
                                               const std::function<bool(std::size_t)>& violates,
                                               bool parallel) {
    std::vector<std::size_t> out;
#ifdef _OPENMP
    if (parallel && n > 1) {
#pragma omp parallel
        {
            std::vector<std::size_t> local;
#pragma omp for schedule(dynamic, 16)
            for (long long i = 0; i < (long long)n; ++i)
                if (violates((std::size_t)i)) local.push_back((std::size_t)i);
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i)
        if (violates(i)) out.push_back(i);
    return out;
}

}  // namespace dgla
