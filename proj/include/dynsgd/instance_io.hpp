#pragma once

#include <string>
#include <variant>

#include "dynsgd/newsvendor.hpp"
#include "dynsgd/options_portfolio.hpp"

namespace dynsgd {

using InstanceSpec = std::variant<NewsvendorSpec, OptionsPortfolioSpec>;

// Human-readable JSON, lossless double round-trip. Loading revalidates all
// spec invariants and rejects unknown keys.
void save_instance(const InstanceSpec& spec, const std::string& path);
InstanceSpec load_instance(const std::string& path);

}  // namespace dynsgd
