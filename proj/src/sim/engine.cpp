#include "epcmig/sim/engine.hpp"

#include <cstdio>

namespace epcmig {

std::string format_seconds(Duration us)
{
    char buf[40];
    const char* sign = us < 0 ? "-" : "";
    if (us < 0)
        us = -us;
    std::snprintf(buf, sizeof(buf), "%s%lld.%06lld", sign,
                  static_cast<long long>(us / kUsPerSecond),
                  static_cast<long long>(us % kUsPerSecond));
    return buf;
}

EventId SimEngine::schedule(std::string entity, std::string action, Duration delay,
                            std::function<void()> fn)
{
    if (delay < 0)
        throw SimError("schedule: negative delay for '" + action + "'");
    EventId id = next_seq_++;
    queue_.push(Event{now_ + delay, id, std::move(entity), std::move(action), std::move(fn)});
    return id;
}

SimTime SimEngine::run_to_completion()
{
    while (!queue_.empty()) {
        if (executed_ >= kEventCap)
            throw RunawayScenarioError("event cap exceeded (" + std::to_string(kEventCap) +
                                       " events); runaway scenario");
        Event ev = queue_.top();
        queue_.pop();
        now_ = ev.fire_at; // clock is monotone: heap orders by (fire_at, seq)
        ++executed_;
        if (trace_) {
            trace_->append(std::to_string(ev.fire_at));
            trace_->push_back('\t');
            trace_->append(std::to_string(ev.seq));
            trace_->push_back('\t');
            trace_->append(ev.entity);
            trace_->push_back('\t');
            trace_->append(ev.action);
            trace_->push_back('\n');
        }
        ev.fn();
    }
    return now_;
}

} // namespace epcmig
