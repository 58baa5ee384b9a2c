#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmorder/order.hpp"

namespace mm {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_messages;

    SuiteResult() = default;
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    bool passed() const { return failures == 0; }
    void check(bool ok, const std::string& message);
};

// Named verification suites. trials <= 0 selects each suite's default count;
// seed offsets every generated instance. Valid names:
//   remark46, oracle, triangle, order-zero, box-bounds, prokhorov-oracle,
//   ky-implications, gluing, lemma32, semicontinuity, composition
SuiteResult run_suite(const std::string& name, int trials = 0, std::uint64_t seed = 0,
                      const SearchBudget& budget = default_budget());

std::vector<std::string> suite_names();

}  // namespace mm
