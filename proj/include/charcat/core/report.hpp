#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace charcat {

/// Outcome of one law over all checked tuples. The witness is the first failing tuple
/// in enumeration order, rendered as names.
struct LawResult {
    std::string law;
    bool pass = true;
    std::uint64_t checked = 0;
    std::vector<std::string> witness;
    std::string detail;
};

/// Structured result of a law / axiom check. Laws keep insertion order.
class Report {
public:
    Report() = default;
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const { return subject_; }
    void set_subject(std::string s) { subject_ = std::move(s); }

    /// Registers a law (idempotent) so that it shows as passing even with no tuples.
    LawResult& law(const std::string& name);

    /// Counts one check of `name`; on the first failure the witness is stored.
    void record(const std::string& name, bool ok, const std::vector<std::string>& witness = {},
                const std::string& detail = {});

    template <class WitnessFn>
    void check(const std::string& name, bool ok, WitnessFn&& witness) {
        auto& l = law(name);
        ++l.checked;
        if (!ok && l.pass) {
            l.pass = false;
            l.witness = witness();
        }
    }

    bool ok() const;
    bool passed(const std::string& name) const;
    const LawResult* find(const std::string& name) const;
    const std::vector<LawResult>& laws() const { return laws_; }
    std::vector<std::string> failures() const;

    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;

    /// Folds another report's laws in, prefixing their names.
    void merge(const Report& other, const std::string& prefix = {});

    nlohmann::json to_json() const;
    std::string summary() const;

private:
    std::string subject_;
    std::vector<LawResult> laws_;
};

/// Deterministic index sampler (mt19937_64 is fully specified, unlike the distributions).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace charcat
