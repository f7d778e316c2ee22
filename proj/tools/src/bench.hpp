#pragma once

#include "placirc/recurrence.hpp"

#include "json.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace placirc::cli {

// Canonical method order for bench rows.
inline constexpr std::array<std::string_view, 4> kBenchMethods = {
    "eig-closed", "eig-oracle", "det-exact", "norm-closed"};

// Times the requested methods for each order in n_list. Returns bench rows
// [{n, method, seconds}, ...] where seconds is the median over `repeat`
// samples of the per-call wall time (fast calls are batched so each sample
// spans a measurable interval). Rows are n-major in canonical method order.
// Throws std::invalid_argument on an empty n_list, n = 0, repeat < 1, or an
// unknown method name.
nlohmann::json run_bench(const RecurrenceSpec& spec,
                         const std::vector<std::size_t>& n_list, int repeat,
                         const std::vector<std::string>& methods);

}  // namespace placirc::cli
