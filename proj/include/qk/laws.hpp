#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qk/completion.hpp"
#include "qk/dsl.hpp"

namespace qk {

struct LawOptions {
    std::optional<std::string> suite;  // run only this suite
    std::uint64_t seed = 1;
    std::size_t random = 1;            // seeded random instances per kind
    std::size_t cap = kDefaultPresheafCap;
    std::size_t functor_cap = kDefaultFunctorCap;
    std::size_t sample = 10;           // endofunctors and endo-distributors per category
    std::size_t lax_functors = 5;      // seeded lax functors per base
};

enum class LawStatus { pass, fail, skipped };

struct LawRow {
    std::string suite;
    std::string law;
    std::string anchor;    // short statement of what is checked
    std::string instance;
    LawStatus status = LawStatus::pass;
    std::string detail;    // counterexample, or why the row was skipped
};

struct LawReport {
    std::vector<LawRow> rows;
    std::vector<std::string> warnings;
    std::size_t count(LawStatus s) const;
    bool passed() const { return count(LawStatus::fail) == 0; }
};

struct LawInfo {
    std::string suite;
    std::string law;
    std::string anchor;
};

std::vector<LawInfo> law_catalogue();
std::vector<std::string> law_suites();
bool is_law_suite(const std::string& s);

// Rows sorted by (suite, law, instance).
LawReport run_laws(const QkDocument& doc, const LawOptions& opts);

// Seeded small categories for the random part of the corpus.
CategoryRef random_category(const QuantaloidRef& base, std::uint64_t seed, std::size_t max_objects = 3);

const char* status_name(LawStatus s);

}  // namespace qk
