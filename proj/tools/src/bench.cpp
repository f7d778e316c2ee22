#include "bench.hpp"

#include "placirc/bigint.hpp"
#include "placirc/circulant.hpp"
#include "placirc/closed_form.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <stdexcept>

namespace placirc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Keeps the timed computations observable so the optimizer cannot drop them.
volatile double g_sink = 0.0;

double time_batch(const std::function<void()>& fn, std::size_t batch) {
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < batch; ++i) fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

double median_seconds_per_call(const std::function<void()>& fn, int repeat) {
  // Calibrate a batch size so one sample spans at least ~2 ms; the fast
  // closed forms are otherwise lost in clock jitter.
  const double single = time_batch(fn, 1);
  std::size_t batch = 1;
  if (single < 2e-3)
    batch = static_cast<std::size_t>(2e-3 / std::max(single, 1e-7)) + 1;
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(repeat));
  for (int s = 0; s < repeat; ++s)
    samples.push_back(time_batch(fn, batch) / static_cast<double>(batch));
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

json run_bench(const RecurrenceSpec& spec,
               const std::vector<std::size_t>& n_list, int repeat,
               const std::vector<std::string>& methods) {
  if (n_list.empty()) throw std::invalid_argument("--n-list must not be empty");
  if (repeat < 1) throw std::invalid_argument("--repeat must be >= 1");
  for (const std::string& m : methods) {
    if (std::find(kBenchMethods.begin(), kBenchMethods.end(), m) ==
        kBenchMethods.end())
      throw std::invalid_argument("unknown bench method: " + m);
  }
  const auto wants = [&methods](std::string_view m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
  };

  json rows = json::array();
  for (const std::size_t n : n_list) {
    if (n == 0) throw std::invalid_argument("--n-list entries must be >= 1");
    // The matrix is input, not work under test; build it outside the timers.
    std::unique_ptr<CirculantInt> matrix;
    if (wants("eig-oracle") || wants("det-exact"))
      matrix = std::make_unique<CirculantInt>(build_from_sequence(spec, n));

    for (const std::string_view method : kBenchMethods) {
      if (!wants(method)) continue;
      std::function<void()> fn;
      if (method == "eig-closed") {
        fn = [&spec, n] { g_sink = eig_closed_spectrum(spec, n).back().real(); };
      } else if (method == "eig-oracle") {
        fn = [&matrix] { g_sink = eig_oracle(*matrix).values.back().real(); };
      } else if (method == "det-exact") {
        fn = [&matrix] { g_sink = to_double(det_exact(*matrix)); };
      } else {
        fn = [&spec, n] { g_sink = to_double(norm_closed(spec, n)); };
      }
      rows.push_back(json::object({{"n", n},
                                   {"method", std::string(method)},
                                   {"seconds", median_seconds_per_call(fn, repeat)}}));
    }
  }
  return rows;
}

}  // namespace placirc::cli
