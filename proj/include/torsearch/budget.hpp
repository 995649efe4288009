#ifndef TORSEARCH_BUDGET_HPP
#define TORSEARCH_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torsearch {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Node-count cap for enumeration-heavy operations. Charged cooperatively;
/// an overrun aborts deterministically with BudgetExceeded.
struct Budget {
    static constexpr std::uint64_t kDefault = 200'000'000;

    std::uint64_t cap;
    std::uint64_t used = 0;

    explicit Budget(std::uint64_t cap_nodes = kDefault) : cap(cap_nodes) {}

    void charge(std::uint64_t nodes, const char* where) {
        used += nodes;
        if (used > cap)
            throw BudgetExceeded(std::string(where) + ": enumeration budget exceeded (cap " +
                                 std::to_string(cap) + " nodes)");
    }
};

} // namespace torsearch

#endif
