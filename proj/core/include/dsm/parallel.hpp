#pragma once

#include <cstddef>
#include <functional>

namespace dsm {

/// Worker cap for grid and receiver sweeps. 0 means hardware concurrency.
struct ExecPolicy {
    unsigned threads{0};

    [[nodiscard]] unsigned resolved() const;
    [[nodiscard]] static ExecPolicy serial() { return ExecPolicy{1}; }
};

/// Calls body(begin, end) over contiguous chunks of [0, count). Each index is
/// visited exactly once and chunk boundaries depend only on count and the
/// resolved thread count, so per-index results are bit-stable.
void parallel_for(std::size_t count, ExecPolicy policy,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace dsm
