#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbs/textprep.hpp"

namespace sbs {

struct GraphConfig {
  int window = 7;     // max positional distance j - i of a co-occurrence
  int prune_min = 2;  // arcs lighter than this are dropped

  void validate() const;
};

// Undirected weighted co-occurrence network. Nodes are kept in lexicographic
// order, so node indices are a deterministic function of the vocabulary.
class WordNetwork {
 public:
  struct Arc {
    std::uint32_t u;  // u < v
    std::uint32_t v;
    std::uint64_t weight;
    bool operator==(const Arc&) const = default;
  };
  struct Neighbor {
    std::uint32_t node;
    std::uint64_t weight;
  };
  using ArcMap = std::map<std::pair<std::string, std::string>, std::uint64_t>;

  WordNetwork() = default;
  // Pairs are unordered; weights of {a,b} and {b,a} add up. Self-pairs and
  // zero weights are rejected with ConfigError. `extra_nodes` may add
  // isolated vertices.
  static WordNetwork from_arcs(const ArcMap& arcs, std::span<const std::string> extra_nodes = {});

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::string& node(std::uint32_t i) const { return nodes_[i]; }
  std::optional<std::uint32_t> find(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }

  std::span<const Neighbor> neighbors(std::uint32_t i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::uint32_t i) const { return offsets_[i + 1] - offsets_[i]; }
  // 0 when the arc does not exist.
  std::uint64_t weight(std::string_view a, std::string_view b) const;
  std::uint64_t total_weight() const;

  ArcMap to_arc_map() const;

  bool operator==(const WordNetwork& other) const {
    return nodes_ == other.nodes_ && arcs_ == other.arcs_;
  }

 private:
  friend class NetworkBuilder;
  WordNetwork(std::vector<std::string> nodes, std::vector<Arc> arcs);

  std::vector<std::string> nodes_;
  std::vector<Arc> arcs_;  // sorted by (u, v)
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;  // per node, sorted by neighbor index
};

// Every position pair i < j with j - i <= window and distinct tokens adds one
// to the arc weight. Windows never cross token-stream boundaries.
WordNetwork build_cooccurrence(std::span<const std::vector<std::string>> streams, int window);
WordNetwork build_cooccurrence(std::span<const TokenDoc> docs, int window, unsigned jobs = 1);

// Drops arcs with weight < prune_min, then every node left without arcs.
WordNetwork prune(const WordNetwork& network, int prune_min);

// Node union, arc weights summed. Independent of input order.
WordNetwork merge(std::span<const WordNetwork> networks);

// Reciprocal arc weight, 1/w. Throws NotFoundError when the arc is missing.
double distance(const WordNetwork& network, std::string_view a, std::string_view b);

// source,target,weight with each pair once, in lexicographic pair order.
void write_network_csv(std::ostream& out, const WordNetwork& network);

}  // namespace sbs
