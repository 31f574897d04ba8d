#pragma once

#include <cstdint>
#include <string>

namespace charcat {

/// Search budgets and sampling parameters shared by every exhaustive routine.
struct Config {
    std::size_t exhaustive_limit = 16;        // max |G| for enumerating all homomorphisms out of G
    std::size_t iso_limit = 1000;             // max |G| for isomorphism / automorphism searches
    std::uint64_t aut_budget = 10'000'000;    // search nodes per backtracking run
    std::uint64_t sample_count = 10'000;      // seeded samples when a check is too large to exhaust
    std::uint64_t pair_budget = 100'000;      // exhaustive when a check has at most this many tuples
    std::uint64_t seed = 0;
    std::size_t tuple_budget = 64;            // max |G| for |G|^{n+1} word scans
    std::size_t max_word_arity = 3;
    std::string catalog_path;

    void validate() const;
};

/// Process-wide default; tests and the CLI override it explicitly.
const Config& default_config();

} // namespace charcat
