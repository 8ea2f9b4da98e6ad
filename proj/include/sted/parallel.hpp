#ifndef STED_PARALLEL_HPP
#define STED_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sted {

/// Run fn(i) for i in [0, count) on `jobs` workers (0 = logical CPUs).
/// The first exception is rethrown after all workers finish, so results
/// indexed by i stay deterministic regardless of scheduling.
template <typename Fn>
void parallel_for_indexed(std::size_t count, unsigned jobs, Fn&& fn) {
    if (count == 0) return;
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace sted

#endif // STED_PARALLEL_HPP
