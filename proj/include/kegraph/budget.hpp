#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace kegraph {

// Raised when a bounded search hits its cap before reaching a conclusive answer.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EnumStatus {
    complete,         // all objects visited
    budget_exceeded,  // cap or deadline hit first
    stopped,          // visitor asked to stop
};

// Cap on enumerated objects plus an optional wall-clock deadline.
// The default matches the CLI contract: 1e6 objects, no time limit.
class Budget {
public:
    static constexpr std::uint64_t kDefaultMaxItems = 1'000'000;

    Budget() = default;
    explicit Budget(std::uint64_t max_items) : max_items_(max_items) {}
    Budget(std::uint64_t max_items, double seconds) : max_items_(max_items) {
        set_time_limit(seconds);
    }

    static Budget unlimited() {
        return Budget(std::numeric_limits<std::uint64_t>::max());
    }

    void set_time_limit(double seconds) {
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds));
    }

    std::uint64_t max_items() const { return max_items_; }

    // Counts one enumerated object; false once the budget is exhausted.
    bool consume(std::uint64_t& used) const {
        if (used >= max_items_) return false;
        ++used;
        if (deadline_ && (used & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > *deadline_) {
            return false;
        }
        return true;
    }

    bool expired(std::uint64_t used) const {
        if (used >= max_items_) return true;
        return deadline_ && std::chrono::steady_clock::now() > *deadline_;
    }

private:
    std::uint64_t max_items_ = kDefaultMaxItems;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace kegraph
