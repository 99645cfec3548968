#include "sbs/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

#include "sbs/error.hpp"

namespace sbs {

std::uint64_t prevalence(std::span<const TokenDoc> docs, std::string_view term) {
  std::uint64_t n = 0;
  for (const auto& d : docs)
    n += static_cast<std::uint64_t>(std::count(d.tokens.begin(), d.tokens.end(), term));
  return n;
}

std::map<std::string, std::uint64_t, std::less<>> prevalence_counts(std::span<const TokenDoc> docs) {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  for (const auto& d : docs)
    for (const auto& t : d.tokens) ++counts[t];
  return counts;
}

std::uint64_t degree(const WordNetwork& network, std::string_view term) {
  const auto i = network.find(term);
  return i ? network.degree(*i) : 0;
}

namespace {

// Single-source shortest paths plus dependency accumulation (Brandes 2001),
// with buffers reused across sources.
class BrandesWorker {
 public:
  explicit BrandesWorker(const WordNetwork& net)
      : net_(net), dist_(net.node_count()), sigma_(net.node_count()), delta_(net.node_count()),
        preds_(net.node_count()) {}

  // Adds the (directed) dependencies of `s` into `acc`.
  void accumulate(std::uint32_t s, std::vector<double>& acc) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::fill(dist_.begin(), dist_.end(), inf);
    std::fill(sigma_.begin(), sigma_.end(), 0.0);
    std::fill(delta_.begin(), delta_.end(), 0.0);
    for (auto& p : preds_) p.clear();
    order_.clear();

    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    std::vector<bool> settled(net_.node_count(), false);
    dist_[s] = 0.0;
    sigma_[s] = 1.0;
    queue.emplace(0.0, s);
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (settled[u] || d > dist_[u]) continue;
      settled[u] = true;
      order_.push_back(u);
      for (const auto& nb : net_.neighbors(u)) {
        const std::uint32_t v = nb.node;
        if (settled[v]) continue;
        const double alt = dist_[u] + 1.0 / static_cast<double>(nb.weight);
        if (alt < dist_[v] - kPathTieEpsilon) {
          dist_[v] = alt;
          sigma_[v] = sigma_[u];
          preds_[v].assign(1, u);
          queue.emplace(alt, v);
        } else if (std::abs(alt - dist_[v]) <= kPathTieEpsilon) {
          sigma_[v] += sigma_[u];
          preds_[v].push_back(u);
        }
      }
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const std::uint32_t w = *it;
      for (const std::uint32_t v : preds_[w]) delta_[v] += sigma_[v] / sigma_[w] * (1.0 + delta_[w]);
      if (w != s) acc[w] += delta_[w];
    }
  }

 private:
  const WordNetwork& net_;
  std::vector<double> dist_, sigma_, delta_;
  std::vector<std::vector<std::uint32_t>> preds_;
  std::vector<std::uint32_t> order_;
};

constexpr std::uint32_t kSourceBlock = 32;

}  // namespace

std::vector<double> weighted_betweenness(const WordNetwork& network, unsigned jobs) {
  const auto n = static_cast<std::uint32_t>(network.node_count());
  std::vector<double> total(n, 0.0);
  if (n < 3) return total;

  // Sources are cut into fixed blocks. Each block is summed in source order
  // and blocks are folded into the total in block order, so the floating
  // point reduction is the same whatever the thread count.
  const std::uint32_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
  jobs = std::max(1u, std::min(jobs, blocks));
  std::vector<std::vector<double>> partial(jobs, std::vector<double>(n));
  std::vector<BrandesWorker> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(network);

  auto run_block = [&](unsigned slot, std::uint32_t block) {
    auto& acc = partial[slot];
    std::fill(acc.begin(), acc.end(), 0.0);
    const std::uint32_t hi = std::min(n, (block + 1) * kSourceBlock);
    for (std::uint32_t s = block * kSourceBlock; s < hi; ++s) workers[slot].accumulate(s, acc);
  };

  for (std::uint32_t wave = 0; wave < blocks; wave += jobs) {
    const unsigned width = std::min<std::uint32_t>(jobs, blocks - wave);
    if (width == 1) {
      run_block(0, wave);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < width; ++t) pool.emplace_back(run_block, t, wave + t);
    }
    for (unsigned t = 0; t < width; ++t)
      for (std::uint32_t v = 0; v < n; ++v) total[v] += partial[t][v];
  }
  // Each unordered pair was visited from both ends.
  for (auto& x : total) x /= 2.0;
  return total;
}

std::vector<double> brute_force_betweenness(const WordNetwork& network) {
  const std::size_t n = network.node_count();
  if (n > kBruteForceMaxNodes)
    throw ComputationError("brute-force betweenness refuses " + std::to_string(n) + " nodes (max " +
                           std::to_string(kBruteForceMaxNodes) + ")");
  std::vector<double> result(n, 0.0);

  struct Best {
    double length = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> interiors;  // bitmask of interior nodes, one per minimal path
  };

  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<Best> best(n);
    std::uint32_t visited = 1u << s;
    // Explicit recursion over simple paths.
    auto dfs = [&](auto&& self, std::uint32_t u, double length) -> void {
      for (const auto& nb : network.neighbors(u)) {
        const std::uint32_t v = nb.node;
        if (visited & (1u << v)) continue;
        const double len = length + 1.0 / static_cast<double>(nb.weight);
        if (v > s) {
          const std::uint32_t interior = visited & ~(1u << s);
          auto& b = best[v];
          if (len < b.length - kPathTieEpsilon) {
            b.length = len;
            b.interiors.assign(1, interior);
          } else if (std::abs(len - b.length) <= kPathTieEpsilon) {
            b.interiors.push_back(interior);
          }
        }
        visited |= 1u << v;
        self(self, v, len);
        visited &= ~(1u << v);
      }
    };
    dfs(dfs, s, 0.0);
    for (std::uint32_t t = s + 1; t < n; ++t) {
      const auto& b = best[t];
      if (b.interiors.empty()) continue;
      const double paths = static_cast<double>(b.interiors.size());
      for (std::uint32_t v = 0; v < n; ++v) {
        std::size_t through = 0;
        for (auto mask : b.interiors) through += (mask >> v) & 1u;
        result[v] += static_cast<double>(through) / paths;
      }
    }
  }
  return result;
}

}  // namespace sbs
