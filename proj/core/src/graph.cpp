#include "sbs/graph.hpp"

#include <algorithm>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "sbs/csv.hpp"
#include "sbs/error.hpp"

namespace sbs {

// Accumulates co-occurrence counts over an interned vocabulary, then emits a
// WordNetwork with sorted node order.
class NetworkBuilder {
 public:
  void add_stream(std::span<const std::string> tokens, int window) {
    ids_.clear();
    ids_.reserve(tokens.size());
    for (const auto& t : tokens) ids_.push_back(intern(t));
    const std::size_t w = static_cast<std::size_t>(window);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      const std::size_t stop = std::min(ids_.size(), i + w + 1);
      for (std::size_t j = i + 1; j < stop; ++j) {
        if (ids_[i] == ids_[j]) continue;
        ++counts_[key(ids_[i], ids_[j])];
      }
    }
  }

  void add_network(const WordNetwork& net) {
    std::vector<std::uint32_t> map(net.node_count());
    for (std::uint32_t i = 0; i < net.node_count(); ++i) map[i] = intern(net.node(i));
    for (const auto& a : net.arcs()) counts_[key(map[a.u], map[a.v])] += a.weight;
  }

  void add_arc(const std::string& a, const std::string& b, std::uint64_t w) {
    counts_[key(intern(a), intern(b))] += w;
  }
  void add_node(const std::string& a) { intern(a); }

  WordNetwork finish() && {
    std::vector<std::uint32_t> order(vocab_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return vocab_[x] < vocab_[y]; });
    std::vector<std::uint32_t> rank(vocab_.size());
    std::vector<std::string> nodes;
    nodes.reserve(vocab_.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
      rank[order[r]] = r;
      nodes.push_back(std::move(vocab_[order[r]]));
    }
    std::vector<WordNetwork::Arc> arcs;
    arcs.reserve(counts_.size());
    for (const auto& [k, w] : counts_) {
      auto u = rank[static_cast<std::uint32_t>(k >> 32)];
      auto v = rank[static_cast<std::uint32_t>(k & 0xFFFFFFFFu)];
      if (u > v) std::swap(u, v);
      arcs.push_back({u, v, w});
    }
    return WordNetwork(std::move(nodes), std::move(arcs));
  }

 private:
  std::uint32_t intern(const std::string& t) {
    auto [it, inserted] = index_.try_emplace(t, static_cast<std::uint32_t>(vocab_.size()));
    if (inserted) vocab_.push_back(t);
    return it->second;
  }
  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
  std::vector<std::uint32_t> ids_;
};

void GraphConfig::validate() const {
  if (window < 1) throw ConfigError("graph window must be >= 1");
  if (prune_min < 1) throw ConfigError("graph prune_min must be >= 1");
}

WordNetwork::WordNetwork(std::vector<std::string> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::vector<std::size_t> deg(nodes_.size(), 0);
  for (const auto& a : arcs_) {
    ++deg[a.u];
    ++deg[a.v];
  }
  offsets_.assign(nodes_.size() + 1, 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& a : arcs_) {
    adjacency_[fill[a.u]++] = {a.v, a.weight};
    adjacency_[fill[a.v]++] = {a.u, a.weight};
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
              [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
}

WordNetwork WordNetwork::from_arcs(const ArcMap& arcs, std::span<const std::string> extra_nodes) {
  NetworkBuilder b;
  for (const auto& [pair, w] : arcs) {
    if (pair.first == pair.second) throw ConfigError("self-loop on '" + pair.first + "'");
    if (w == 0) throw ConfigError("zero-weight arc " + pair.first + "-" + pair.second);
    b.add_arc(pair.first, pair.second, w);
  }
  for (const auto& n : extra_nodes) b.add_node(n);
  return std::move(b).finish();
}

std::optional<std::uint32_t> WordNetwork::find(std::string_view token) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), token);
  if (it == nodes_.end() || *it != token) return std::nullopt;
  return static_cast<std::uint32_t>(it - nodes_.begin());
}

std::uint64_t WordNetwork::weight(std::string_view a, std::string_view b) const {
  const auto u = find(a), v = find(b);
  if (!u || !v) return 0;
  const auto adj = neighbors(*u);
  auto it = std::lower_bound(adj.begin(), adj.end(), *v, [](const Neighbor& n, std::uint32_t x) { return n.node < x; });
  return it != adj.end() && it->node == *v ? it->weight : 0;
}

std::uint64_t WordNetwork::total_weight() const {
  std::uint64_t total = 0;
  for (const auto& a : arcs_) total += a.weight;
  return total;
}

WordNetwork::ArcMap WordNetwork::to_arc_map() const {
  ArcMap m;
  for (const auto& a : arcs_) m[{nodes_[a.u], nodes_[a.v]}] = a.weight;
  return m;
}

WordNetwork build_cooccurrence(std::span<const std::vector<std::string>> streams, int window) {
  if (window < 1) throw ConfigError("graph window must be >= 1");
  NetworkBuilder b;
  for (const auto& s : streams) b.add_stream(s, window);
  return std::move(b).finish();
}

WordNetwork build_cooccurrence(std::span<const TokenDoc> docs, int window, unsigned jobs) {
  if (window < 1) throw ConfigError("graph window must be >= 1");
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(docs.size())));
  if (jobs <= 1) {
    NetworkBuilder b;
    for (const auto& d : docs) b.add_stream(d.tokens, window);
    return std::move(b).finish();
  }
  // Integer sums are associative, so the merged network does not depend on
  // how documents were split.
  std::vector<WordNetwork> parts(jobs);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (docs.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        NetworkBuilder b;
        const std::size_t lo = t * chunk, hi = std::min(docs.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) b.add_stream(docs[i].tokens, window);
        parts[t] = std::move(b).finish();
      });
  }
  return merge(parts);
}

WordNetwork prune(const WordNetwork& network, int prune_min) {
  if (prune_min < 1) throw ConfigError("prune_min must be >= 1");
  NetworkBuilder b;
  for (const auto& a : network.arcs())
    if (a.weight >= static_cast<std::uint64_t>(prune_min)) b.add_arc(network.node(a.u), network.node(a.v), a.weight);
  return std::move(b).finish();
}

WordNetwork merge(std::span<const WordNetwork> networks) {
  NetworkBuilder b;
  for (const auto& n : networks) b.add_network(n);
  return std::move(b).finish();
}

double distance(const WordNetwork& network, std::string_view a, std::string_view b) {
  const auto w = network.weight(a, b);
  if (w == 0) throw NotFoundError("no arc between '" + std::string(a) + "' and '" + std::string(b) + "'");
  return 1.0 / static_cast<double>(w);
}

void write_network_csv(std::ostream& out, const WordNetwork& network) {
  CsvWriter csv(out);
  csv.row({"source", "target", "weight"});
  // Node order is lexicographic and arcs are sorted by (u, v) with u < v, so
  // arcs() is already in lexicographic pair order.
  for (const auto& a : network.arcs())
    csv.row({network.node(a.u), network.node(a.v), std::to_string(a.weight)});
}

}  // namespace sbs
