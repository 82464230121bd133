#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rainbowj {

// Thrown when an exhaustive search runs out of budget. Deliberately a
// separate type: running out of budget is not a "does not exist" verdict,
// and callers must never convert one into the other.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Wall-clock / node-count cap shared by all complete searches.
struct SearchBudget {
    std::chrono::milliseconds time_limit{60000};
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();

    static SearchBudget unlimited() {
        return SearchBudget{std::chrono::milliseconds::max(),
                            std::numeric_limits<std::uint64_t>::max()};
    }
    static SearchBudget millis(std::int64_t ms) {
        SearchBudget b;
        b.time_limit = std::chrono::milliseconds(ms);
        return b;
    }
    static SearchBudget nodes(std::uint64_t count) {
        SearchBudget b;
        b.node_limit = count;
        return b;
    }
};

// Countdown used inside search loops. The clock is only consulted every
// few thousand ticks so the per-node cost stays negligible.
class BudgetMeter {
public:
    BudgetMeter(const SearchBudget& budget, std::string label)
        : budget_(budget), label_(std::move(label)) {
        if (budget_.time_limit != std::chrono::milliseconds::max()) {
            deadline_ = std::chrono::steady_clock::now() + budget_.time_limit;
            has_deadline_ = true;
        }
    }

    void tick() {
        ++nodes_;
        if (nodes_ > budget_.node_limit)
            throw budget_exceeded_error(label_ + ": node budget exceeded");
        if (has_deadline_ && (nodes_ & 0x1FFF) == 0 &&
            std::chrono::steady_clock::now() > deadline_)
            throw budget_exceeded_error(label_ + ": time budget exceeded");
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::string label_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

}  // namespace rainbowj
