#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dgkit {

/// Outcome of one property check over a window. Cases whose inputs were
/// truncated are counted as skipped rather than silently passed.
struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
    std::size_t checked = 0;
    std::size_t skipped = 0;

    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    void fail(std::string why)
    {
        if (pass)
            witness = std::move(why);
        pass = false;
    }
};

inline bool all_pass(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

}  // namespace dgkit
