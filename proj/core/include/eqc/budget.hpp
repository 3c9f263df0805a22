#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace eqc {

// Resource cap for a search. Absent fields mean unlimited.
struct SearchBudget {
    std::optional<double> time_limit_s;
    std::optional<std::uint64_t> node_limit;
};

// Shared countdown for one solver run (or a whole framework run spanning
// several solver calls). tick() is cheap: the clock is polled only every
// few thousand nodes, so cancellation lag stays well under any practical
// time limit's resolution.
class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& b = {}) : node_limit_(b.node_limit) {
        start_ = Clock::now();
        if (b.time_limit_s)
            deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*b.time_limit_s));
    }

    // Counts one unit of work; returns false once the budget is gone.
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (node_limit_ && nodes_ > *node_limit_) {
            exhausted_ = true;
            return false;
        }
        if (deadline_ && (nodes_ & kPollMask) == 0 && Clock::now() >= *deadline_) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    double elapsed_s() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    static constexpr std::uint64_t kPollMask = (1u << 12) - 1;

    Clock::time_point start_;
    std::optional<Clock::time_point> deadline_;
    std::optional<std::uint64_t> node_limit_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace eqc
