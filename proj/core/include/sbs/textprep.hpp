#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sbs/ingest.hpp"
#include "sbs/stemmer.hpp"

namespace sbs {

// Canonical brand tokens and the phrases that refer to them. A phrase such as
// "virginia raggi" is rewritten to the single token "raggi" before
// tokenization, so multi-word names survive as one node.
class BrandLexicon {
 public:
  BrandLexicon() = default;
  // Throws ConfigError on an invalid canonical token, an empty phrase, or a
  // phrase mapped to two different canonical tokens.
  explicit BrandLexicon(std::map<std::string, std::vector<std::string>> entries);

  static BrandLexicon from_json(std::string_view json_text);
  static BrandLexicon load(const std::filesystem::path& path);

  bool is_canonical(std::string_view token) const;
  const std::map<std::string, std::vector<std::string>>& entries() const { return entries_; }
  std::vector<std::string> canonical_tokens() const;

  struct Phrase {
    std::vector<std::string> words;  // lowercase
    std::string canonical;
  };
  // Longest phrases first; ties in lexicographic order.
  const std::vector<Phrase>& phrases() const { return phrases_; }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
  std::vector<Phrase> phrases_;
  std::set<std::string, std::less<>> canonical_;
};

struct PrepConfig {
  std::unordered_set<std::string> stopwords;
  std::string stemmer_language = "english";
  double truncate_fraction = 0.30;
  bool drop_numeric = false;

  void validate() const;
};

struct TokenDoc {
  std::string doc_id;
  WeekWindow week;
  std::vector<std::string> tokens;

  bool operator==(const TokenDoc&) const = default;
};

// Replaces every case-insensitive, word-aligned occurrence of an alias phrase
// with its canonical token. Words of a phrase may be separated by any run of
// whitespace; the longest phrase starting at a word wins.
std::string normalize_aliases(std::string_view text, const BrandLexicon& lexicon);

// Title then body, split on whitespace, first ceil(fraction * words) kept.
std::string truncate(std::string_view title, std::string_view body, double fraction);

// Lowercased maximal runs of letters, digits and '_'.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const std::unordered_set<std::string>& stopwords,
                                          const BrandLexicon& lexicon);

std::vector<std::string> stem(std::vector<std::string> tokens, const Stemmer& stemmer,
                              const BrandLexicon& lexicon);
std::vector<std::string> stem(std::vector<std::string> tokens, std::string_view language,
                              const BrandLexicon& lexicon);

// One word per line, '#' starts a comment. Words are lowercased.
std::unordered_set<std::string> load_stopwords(std::istream& in);
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

// Binds a lexicon, configuration and stemmer so articles can be processed
// without re-validating anything. Thread-safe after construction.
class Preprocessor {
 public:
  Preprocessor(BrandLexicon lexicon, PrepConfig config);

  TokenDoc operator()(const Article& article, const WeekWindow& week) const;
  std::vector<TokenDoc> run(const WeeklyArticles& weeks, unsigned jobs = 1) const;

  const BrandLexicon& lexicon() const { return lexicon_; }
  const PrepConfig& config() const { return config_; }

 private:
  BrandLexicon lexicon_;
  PrepConfig config_;
  Stemmer stemmer_;
};

TokenDoc preprocess(const Article& article, const WeekWindow& week, const BrandLexicon& lexicon,
                    const PrepConfig& config);

}  // namespace sbs
