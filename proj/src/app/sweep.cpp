#include "eitmech/app/sweep.hpp"

#include <algorithm>

#include "eitmech/errors.hpp"

namespace eitmech::app {

std::size_t SweepResult::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) fail(ErrorKind::NotFound, "no column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

std::optional<double> SweepResult::at(std::size_t row, const std::string& name) const {
    return rows.at(row).observables.at(column(name));
}

std::size_t SweepResult::count_status(const std::string& status) const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [&](const SweepRow& r) { return r.status == status; }));
}

std::size_t resolve_workers(std::size_t requested) noexcept {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace eitmech::app
