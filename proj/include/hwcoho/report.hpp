#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hwcoho {

// Outcome of one verification suite or check: pass/fail with witnesses,
// or skipped with a reason.  Witness storage is capped; the check count
// keeps the full tally.
struct CheckReport {
    std::string name;
    bool skipped = false;
    std::string skip_reason;
    std::uint64_t checks = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> witnesses;
    std::map<std::string, std::int64_t> stats;

    static constexpr std::size_t kMaxWitnesses = 20;

    bool pass() const { return skipped || failure_count == 0; }

    void ok(std::uint64_t count = 1) { checks += count; }

    void fail(const std::string& witness) {
        ++checks;
        ++failure_count;
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
    }

    void require(bool condition, const std::string& witness) {
        if (condition) ok();
        else fail(witness);
    }

    void absorb(const CheckReport& o) {
        checks += o.checks;
        failure_count += o.failure_count;
        for (const auto& w : o.witnesses)
            if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
        for (const auto& [k, v] : o.stats) {
            auto it = stats.find(k);
            if (it == stats.end() || v > it->second) stats[k] = v;
        }
    }
};

} // namespace hwcoho
