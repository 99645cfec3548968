#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. They favour obviousness over speed and share no code with the
// library kernels they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <unistd.h>
#include <vector>

namespace oracle {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(SBS_TEST_DATA_DIR) / name; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using ArcMap = std::map<std::pair<std::string, std::string>, std::uint64_t>;

// Every position pair within `window`, counted one by one.
inline ArcMap naive_cooccurrence(const std::vector<std::vector<std::string>>& streams, int window) {
  ArcMap arcs;
  for (const auto& s : streams)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j <= i || j - i > static_cast<std::size_t>(window) || s[i] == s[j]) continue;
        auto key = std::minmax(s[i], s[j]);
        ++arcs[{key.first, key.second}];
      }
  return arcs;
}

inline std::uint64_t naive_pair_count(const std::vector<std::vector<std::string>>& streams, int window) {
  std::uint64_t n = 0;
  for (const auto& s : streams)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size() && j - i <= static_cast<std::size_t>(window); ++j)
        n += s[i] != s[j];
  return n;
}

inline std::vector<std::vector<std::string>> random_streams(std::mt19937_64& rng, std::size_t count,
                                                            std::size_t max_len, int vocab) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> word(0, vocab - 1);
  std::vector<std::vector<std::string>> out(count);
  for (auto& s : out) {
    s.resize(len(rng));
    for (auto& t : s) t = "w" + std::to_string(word(rng));
  }
  return out;
}

inline std::string node_name(int i) { return "n" + std::string(i < 10 ? "0" : "") + std::to_string(i); }

// A random spanning tree plus extra arcs, weights uniform in [1, max_w].
inline ArcMap random_connected_graph(std::mt19937_64& rng, int n, double extra_density, int max_w) {
  std::uniform_int_distribution<int> weight(1, max_w);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  ArcMap arcs;
  auto add = [&](int a, int b) {
    const auto x = node_name(a), y = node_name(b);
    arcs[{std::min(x, y), std::max(x, y)}] = static_cast<std::uint64_t>(weight(rng));
  };
  for (int v = 1; v < n; ++v) add(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng) < extra_density) add(a, b);
  return arcs;
}

struct Moments {
  double mean;
  double pop_std;
};

inline Moments moments(const std::vector<double>& v) {
  long double sum = 0;
  for (double x : v) sum += x;
  const long double mean = sum / v.size();
  long double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(ss / v.size()))};
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("sbs_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace oracle
