#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcx {

struct SelftestOptions {
    std::uint64_t seed = 12345;
    /// Negative control: the gamma -> -gamma evaluation drops the absolute
    /// value for negative gamma, which the symmetry check must catch.
    bool inject_gamma_fault = false;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double threshold = 0.0;
    std::size_t samples = 0;
};

struct SelftestReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    void print(std::ostream& os) const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace fcx
