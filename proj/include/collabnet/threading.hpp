#pragma once

#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace collabnet {

// Worker count from COLLABNET_THREADS; 0 or unset means hardware concurrency.
int thread_budget();

// Runs compute(0..num_blocks) on `workers` threads and hands each result to
// merge(block, result) on the calling thread in ascending block order. The
// merge order is therefore independent of the worker count, which keeps
// floating-point reductions bit-identical across thread settings. In-flight
// results are bounded so workers cannot run arbitrarily far ahead.
template <typename Result, typename Compute, typename Merge>
void ordered_block_reduce(int num_blocks, int workers, Compute compute, Merge merge) {
    if (num_blocks <= 0) return;
    if (workers <= 1 || num_blocks == 1) {
        for (int b = 0; b < num_blocks; ++b) merge(b, compute(b));
        return;
    }

    std::mutex mu;
    std::condition_variable produced, consumed;
    std::map<int, Result> ready;
    std::atomic<int> next_block{0};
    int next_merge = 0;
    const int lookahead = workers * 4;

    auto work = [&] {
        for (;;) {
            int b = next_block.fetch_add(1);
            if (b >= num_blocks) return;
            Result r = compute(b);
            std::unique_lock lock(mu);
            consumed.wait(lock, [&] { return b - next_merge < lookahead; });
            ready.emplace(b, std::move(r));
            produced.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);

    while (next_merge < num_blocks) {
        Result r;
        {
            std::unique_lock lock(mu);
            produced.wait(lock, [&] { return ready.count(next_merge) > 0; });
            auto it = ready.find(next_merge);
            r = std::move(it->second);
            ready.erase(it);
        }
        merge(next_merge, std::move(r));
        {
            std::lock_guard lock(mu);
            ++next_merge;
        }
        consumed.notify_all();
    }
    for (auto& t : pool) t.join();
}

}  // namespace collabnet
