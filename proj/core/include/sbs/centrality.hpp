#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbs/graph.hpp"
#include "sbs/textprep.hpp"

namespace sbs {

// Raw, unstandardized dimensions of one term.
struct RawScores {
  std::uint64_t prevalence = 0;
  std::uint64_t diversity = 0;
  double connectivity = 0.0;

  bool operator==(const RawScores&) const = default;
};

// Occurrences of `term` across all token streams.
std::uint64_t prevalence(std::span<const TokenDoc> docs, std::string_view term);
std::map<std::string, std::uint64_t, std::less<>> prevalence_counts(std::span<const TokenDoc> docs);

// Distinct neighbours in the network; 0 for absent terms.
std::uint64_t degree(const WordNetwork& network, std::string_view term);

// Tolerance used to decide that two accumulated path lengths are equal.
inline constexpr double kPathTieEpsilon = 1e-12;

// Unnormalized betweenness over unordered pairs with arc length 1/w, indexed
// like network.nodes(). The result is bit-identical for every `jobs` value.
std::vector<double> weighted_betweenness(const WordNetwork& network, unsigned jobs = 1);

// Same contract by exhaustive simple-path enumeration. Test oracle only;
// throws ComputationError above kBruteForceMaxNodes nodes.
inline constexpr std::size_t kBruteForceMaxNodes = 12;
std::vector<double> brute_force_betweenness(const WordNetwork& network);

}  // namespace sbs
