/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_PARALLEL_HH
#define LOCDOM_GUARD_PARALLEL_HH 1

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace locdom
{
    /// 0 means one per hardware thread.
    inline auto resolve_jobs(int jobs) -> int
    {
        if (jobs > 0)
            return jobs;
        auto hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : int(hw);
    }

    /**
     * Calls f(i) for every i in [0, count), spread over up to jobs threads.
     * Work items are claimed one at a time from a shared counter. The first
     * exception thrown by any f is rethrown here after all workers stop.
     */
    template <typename F>
    auto parallel_for(std::size_t count, int jobs, F && f) -> void
    {
        int workers = std::min<std::size_t>(resolve_jobs(jobs), count);
        if (workers <= 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                f(i);
            return;
        }

        std::atomic<std::size_t> next{ 0 };
        std::atomic<bool> failed{ false };
        std::exception_ptr error;
        std::mutex error_mutex;

        auto work = [&] {
            while (! failed) {
                auto i = next++;
                if (i >= count)
                    return;
                try {
                    f(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };

        std::vector<std::thread> threads;
        for (int t = 0 ; t < workers ; ++t)
            threads.emplace_back(work);
        for (auto & t : threads)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }
}

#endif
