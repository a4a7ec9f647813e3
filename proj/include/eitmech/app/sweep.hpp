#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace eitmech::app {

// One sweep point. Observables that could not be computed are left empty
// (never NaN); `status` says why.
struct SweepRow {
    double value = 0.0;           // swept coordinate in config units
    double internal_value = 0.0;  // angular (or dimensionless) value used by the model
    std::vector<std::optional<double>> observables;
    std::string status = "ok";    // ok | unstable | <error kind>
    std::string detail;
    std::size_t warnings = 0;
};

struct SweepResult {
    std::string parameter;
    std::string unit;
    std::vector<std::string> columns;  // observable names, aligned with SweepRow::observables
    std::vector<SweepRow> rows;

    std::size_t column(const std::string& name) const;  // throws Error{NotFound}
    std::optional<double> at(std::size_t row, const std::string& name) const;
    std::size_t count_status(const std::string& status) const;
};

std::size_t resolve_workers(std::size_t requested) noexcept;

// Evaluates fn(0..n-1) on a pool of worker threads; results come back in
// index order whatever the scheduling. fn must not throw.
template <class T>
std::vector<T> parallel_map(std::size_t n, std::size_t workers,
                            const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    const std::size_t pool = std::min(resolve_workers(workers), n);
    if (pool <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t t = 0; t < pool; ++t) {
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
        });
    }
    for (auto& th : threads) th.join();
    return out;
}

}  // namespace eitmech::app
