#pragma once

#include <functional>

#include "ltnc/types.hpp"

namespace ltnc {

/// Sets the worker-thread cap used by parallel_for. Thread count affects
/// wall time only; every result slot is computed from its index alone, so
/// outputs are bitwise identical for any setting.
void set_max_threads(int n);
int max_threads();

/// Runs fn(i) for every i in [0, count), split into contiguous blocks.
/// Exceptions from workers are re-thrown on the calling thread.
void parallel_for(Index count, const std::function<void(Index)>& fn);

}  // namespace ltnc
