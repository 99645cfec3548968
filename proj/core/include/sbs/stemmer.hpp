#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sbs {

// Snowball-family stemmer. Instances are immutable and safe to share across
// threads. Input words are expected in lowercase UTF-8.
class Stemmer {
 public:
  // Accepts "english"/"en" and "italian"/"it". Throws ConfigError otherwise.
  static Stemmer create(std::string_view language);
  static std::vector<std::string> supported_languages();

  std::string stem(std::string_view word) const;
  const std::string& language() const { return language_; }

 private:
  enum class Algorithm { english, italian };
  Stemmer(Algorithm algorithm, std::string language)
      : algorithm_(algorithm), language_(std::move(language)) {}

  Algorithm algorithm_;
  std::string language_;
};

}  // namespace sbs
