#ifndef IQPSIM_SELFTEST_H
#define IQPSIM_SELFTEST_H

#include <string>
#include <vector>

#include "iqpsim/planar_ising.h"

namespace iqpsim {

struct SelfTestResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Small seeded versions of the acceptance checks. `planar` is passed to every
/// Pfaffian evaluation, which lets callers inject faults.
std::vector<SelfTestResult> run_selftest(const PlanarOptions &planar = {});

}  // namespace iqpsim

#endif
