#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpor {

struct CausalityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Time-ordered queue of simulation events. Events at equal times pop in
/// insertion order, so a run is a pure function of its inputs.
template <typename Payload>
class EventQueue {
 public:
  struct Event {
    double time = 0.0;
    std::uint64_t seq_no = 0;
    Payload payload;
  };

  double now() const noexcept { return now_; }
  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  std::uint64_t executed() const noexcept { return executed_; }

  /// Throws CausalityError when time lies in the past.
  std::uint64_t schedule(double time, Payload payload) {
    if (time < now_) throw CausalityError("event scheduled before the current time");
    const std::uint64_t id = next_seq_++;
    heap_.push(Event{time, id, std::move(payload)});
    return id;
  }

  /// Runs every event with time <= t_end in (time, seq_no) order. Events
  /// beyond t_end stay queued and never run; the clock finishes at t_end.
  template <typename Handler>
  void run_until(double t_end, Handler&& handler) {
    while (!heap_.empty() && heap_.top().time <= t_end) {
      Event ev = std::move(const_cast<Event&>(heap_.top()));
      heap_.pop();
      now_ = ev.time;
      ++executed_;
      handler(ev);
    }
    if (t_end > now_) now_ = t_end;
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const noexcept {
      if (a.time != b.time) return a.time > b.time;
      return a.seq_no > b.seq_no;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  double now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t executed_ = 0;
};

}  // namespace lpor
