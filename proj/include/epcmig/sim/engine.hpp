#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "epcmig/sim/time.hpp"

namespace epcmig {

class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a scenario exceeds the event safety cap (runaway feedback
// loop, e.g. an event chain that reschedules itself forever).
class RunawayScenarioError : public SimError {
public:
    using SimError::SimError;
};

using EventId = std::uint64_t;

// Deterministic single-threaded discrete-event engine. Events fire in
// (fire_at, seq) order; seq is the insertion counter, so two events at the
// same instant run in schedule order. One engine per simulation instance,
// no shared state between instances.
class SimEngine {
public:
    static constexpr std::uint64_t kEventCap = 10'000'000;

    SimEngine() = default;
    SimEngine(const SimEngine&) = delete;
    SimEngine& operator=(const SimEngine&) = delete;

    SimTime now() const { return now_; }

    EventId schedule(std::string entity, std::string action, Duration delay,
                     std::function<void()> fn);

    // Drains the queue; returns the clock after the last executed event.
    SimTime run_to_completion();

    std::uint64_t executed_events() const { return executed_; }

    // Optional event-trace sink: one line per executed event,
    // "time_us<TAB>seq<TAB>entity<TAB>action".
    void set_trace(std::string* sink) { trace_ = sink; }

private:
    struct Event {
        SimTime fire_at;
        EventId seq;
        std::string entity;
        std::string action;
        std::function<void()> fn;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const
        {
            if (a.fire_at != b.fire_at)
                return a.fire_at > b.fire_at;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    SimTime now_ = 0;
    EventId next_seq_ = 0;
    std::uint64_t executed_ = 0;
    std::string* trace_ = nullptr;
};

} // namespace epcmig
