#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hdakit/ipomset.hpp"
#include "hdakit/language.hpp"

namespace hdakit::testing {

using Rng = std::mt19937_64;

/// Seed shared by the unit tests and the acceptance binary.
inline constexpr std::uint64_t kCorpusSeed = 20240611;

/// Random interval ipomset: integer intervals on a small grid, random
/// event order on overlapping events, optional interfaces on the
/// intervals touching either end of the grid.
/// A smaller grid gives more overlap.
Ipomset random_ipomset(Rng& rng, std::size_t max_events, std::size_t num_labels, bool interfaces = true,
                       int grid = 6);

std::vector<Ipomset> ipomset_corpus(std::uint64_t seed, std::size_t count, std::size_t max_events = 5);

/// Down-closure of one to four random generators; every member has at most
/// five events and uses at most three labels.
LanguageSet random_language(Rng& rng);

std::vector<LanguageSet> language_corpus(std::uint64_t seed, std::size_t count);

}  // namespace hdakit::testing
