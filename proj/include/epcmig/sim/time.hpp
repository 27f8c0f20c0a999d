#pragma once

#include <cstdint>
#include <string>

namespace epcmig {

// Virtual clock value, microseconds since scenario start. All measured
// durations in the model are integer microseconds; the finest probe
// resolution is 1 ms, so there is headroom of three decimal orders.
using SimTime = std::int64_t;
using Duration = std::int64_t;

constexpr Duration kUsPerSecond = 1'000'000;
constexpr Duration kUsPerMs = 1'000;

constexpr Duration seconds_us(double s)
{
    // Profile files carry values like "3.24"; one rounding at load time,
    // exact integer arithmetic afterwards.
    return static_cast<Duration>(s * 1e6 + (s >= 0 ? 0.5 : -0.5));
}

constexpr double to_seconds(Duration us) { return static_cast<double>(us) / 1e6; }

// ceil(a / b) for non-negative a, positive b.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return (a + b - 1) / b;
}

// Serialization delay of `bytes` at `rate_bps` (bits per second), rounded
// up to a whole microsecond.
inline Duration wire_time_us(std::int64_t bytes, std::int64_t rate_bps)
{
    if (bytes == 0)
        return 0;
    // bytes * 8e6 can overflow int64 for multi-GB transfers; widen.
    __int128 num = static_cast<__int128>(bytes) * 8 * kUsPerSecond;
    __int128 t = (num + rate_bps - 1) / rate_bps;
    return static_cast<Duration>(t);
}

// Fixed-point rendering used by CSV/report output: exact microseconds,
// six decimals, no locale surprises.
std::string format_seconds(Duration us);

} // namespace epcmig
