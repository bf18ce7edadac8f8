#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace pleth {

// Outcome of an exhaustive or sampled verification. The first failure is kept
// as the witness; later failures only bump the counter.
struct Report {
    std::string check;
    bool pass = true;
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::string witness;
    std::map<std::string, std::string> info;

    explicit Report(std::string name = {}) : check(std::move(name)) {}

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
        ++failures;
    }
    bool expect(bool ok, const std::string& w) {
        ++cases;
        if (!ok) fail(w);
        return ok;
    }
    void absorb(const Report& sub) {
        cases += sub.cases;
        if (!sub.pass) {
            if (pass) witness = sub.check + ": " + sub.witness;
            pass = false;
            failures += sub.failures;
        }
    }
};

}  // namespace pleth
