#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttskit/report.hpp"
#include "ttskit/workbench/document.hpp"

namespace ttskit::workbench {

enum class SearchMode { random, exhaustive };

struct SearchSpec {
    std::string property;
    int max_carrier = 3;
    int max_tokens = 4;
    std::size_t samples = 20000;
    std::uint64_t seed = 1;
    SearchMode mode = SearchMode::random;
};

enum class SearchStatus { found, exhausted };

struct SearchResult {
    std::string property;
    SearchStatus status = SearchStatus::exhausted;
    std::string universe;
    std::size_t examined = 0;
    std::optional<Structure> witness;
    // Second structure for witnesses that are pairs.
    std::optional<Structure> partner;
    // Checker output on the witness explaining the finding.
    Report evidence;
    bool revalidated = false;
};

struct PropertyInfo {
    std::string name;
    std::string description;
};

const std::vector<PropertyInfo>& search_properties();

// Throws InputError on unknown properties and CapExceeded on oversize bounds.
SearchResult search(const SearchSpec& spec);
// Re-runs the module checkers on a witness alone.
bool revalidate(const std::string& property, const Structure& witness, const std::optional<Structure>& partner);

std::string render_text(const SearchResult& r, const SearchSpec& spec);
Json result_json(const SearchResult& r, const SearchSpec& spec);

}  // namespace ttskit::workbench
