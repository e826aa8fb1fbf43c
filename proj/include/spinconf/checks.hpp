#ifndef SPINCONF_CHECKS_HPP
#define SPINCONF_CHECKS_HPP

#include <string>
#include <vector>

namespace spinconf {

/// One verification outcome. `claim` states the violated (or upheld)
/// mathematical relation so a failure names the claim, not a code path.
struct Check {
    std::string name;
    std::string claim;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

}  // namespace spinconf

#endif
