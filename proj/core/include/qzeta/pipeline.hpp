#pragma once

#include "qzeta/trace.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

// A product of Chern character operators chern_op(k_i, alpha_i), each k_i in {0, 1}.
struct FSeriesSpec {
    std::vector<std::pair<int, CohClass>> factors;
    SurfaceModel surface;
    int order = 0;
};

// Reduced F-series: the vertex trace of the expanded operator product.
PSeries f_series_reduced(const FSeriesSpec& spec);

// Reduced <ch1^{L1} ch1^{L2}>'; the surface needs divisors L1 and L2.
PSeries ch1ch1_reduced(const SurfaceModel& surface, int N);

// Reduced equivariant <ch1 ch1>' at a fixed m.
RSeries equiv_ch1ch1(long m, int N);

struct Mismatch {
    std::string label;  // which identity or slice failed
    int degree = 0;
    std::string expected, actual;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    int order = 0;
    std::optional<Mismatch> mismatch;  // the first failure, when failing
    std::vector<std::string> notes;
    double seconds = 0;
};

CheckResult f111_component_check(int N);

class UnknownCheck : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Registry names in their canonical order.
const std::vector<std::string>& check_names();
int default_check_order(const std::string& name);

// order <= 0 selects the default order of each check.
CheckResult run_check(const std::string& name, int order = 0);
// "all" anywhere in names selects the whole registry. Checks run concurrently;
// results come back in registry order.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, int order = 0);

std::string to_json(const CheckResult& r);
std::string to_json(const std::vector<CheckResult>& results);

}  // namespace qzeta
