#include "sbs/textprep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>

#include "sbs/error.hpp"
#include "sbs/unicode.hpp"

namespace sbs {
namespace {

// A maximal run of token characters inside a UTF-8 string, as byte offsets.
struct Run {
  std::size_t begin;
  std::size_t end;
  std::string lower;
};

struct Scan {
  std::vector<Run> runs;
  std::vector<std::string> gaps;  // gaps[i] separates runs[i] and runs[i+1]
};

// Whitespace runs collapse to a single space so "di  maio" matches "di maio".
std::string normalize_gap(std::u32string_view gap) {
  std::string out;
  bool in_space = false;
  for (char32_t cp : gap) {
    if (unicode::is_space(cp)) {
      if (!in_space) out += ' ';
      in_space = true;
    } else {
      unicode::append(out, unicode::to_lower(cp));
      in_space = false;
    }
  }
  return out;
}

Scan scan(std::string_view text) {
  Scan s;
  std::u32string gap;
  std::size_t i = 0;
  std::optional<Run> current;
  while (i < text.size()) {
    // Decode one code point by hand to keep byte offsets.
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = lead < 0x80 ? 1 : lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : lead >= 0xC0 ? 2 : 1;
    len = std::min(len, text.size() - i);
    const std::u32string cps = unicode::decode(text.substr(i, len));
    const char32_t cp = cps.empty() ? U'\uFFFD' : cps.front();
    if (cps.size() != 1) len = 1;
    if (unicode::is_token_char(cp)) {
      if (!current) {
        if (!s.runs.empty()) s.gaps.push_back(normalize_gap(gap));
        gap.clear();
        current = Run{i, i, {}};
      }
      unicode::append(current->lower, unicode::to_lower(cp));
      current->end = i + len;
    } else {
      if (current) {
        s.runs.push_back(std::move(*current));
        current.reset();
      }
      gap += cp;
    }
    i += len;
  }
  if (current) s.runs.push_back(std::move(*current));
  return s;
}

bool is_numeric(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

bool valid_canonical(std::string_view token) {
  if (token.empty()) return false;
  const std::u32string cps = unicode::decode(token);
  return std::all_of(cps.begin(), cps.end(),
                     [](char32_t cp) { return unicode::is_token_char(cp) && unicode::to_lower(cp) == cp; });
}

}  // namespace

BrandLexicon::BrandLexicon(std::map<std::string, std::vector<std::string>> entries)
    : entries_(std::move(entries)) {
  // Phrase key (words joined by their gaps) -> canonical token.
  std::map<std::string, std::string> owner;
  for (const auto& [canonical, aliases] : entries_) {
    if (!valid_canonical(canonical))
      throw ConfigError("lexicon: invalid canonical token '" + canonical +
                        "' (must be lowercase letters, digits or '_')");
    canonical_.insert(canonical);
    for (const auto& alias : aliases) {
      const Scan s = scan(alias);
      if (s.runs.empty()) throw ConfigError("lexicon: empty alias phrase for '" + canonical + "'");
      for (const auto& g : s.gaps)
        if (g != " ")
          throw ConfigError("lexicon: alias '" + alias + "' for '" + canonical +
                            "' must separate words with whitespace only");
      Phrase p{{}, canonical};
      std::string key;
      for (const auto& r : s.runs) {
        p.words.push_back(r.lower);
        key += r.lower + ' ';
      }
      auto [it, inserted] = owner.emplace(key, canonical);
      if (!inserted) {
        if (it->second != canonical)
          throw ConfigError("lexicon: alias '" + alias + "' maps to both '" + it->second + "' and '" +
                            canonical + "'");
        continue;
      }
      phrases_.push_back(std::move(p));
    }
  }
  std::sort(phrases_.begin(), phrases_.end(), [](const Phrase& a, const Phrase& b) {
    if (a.words.size() != b.words.size()) return a.words.size() > b.words.size();
    return a.words < b.words;
  });
}

BrandLexicon BrandLexicon::from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("lexicon: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("lexicon: expected an object of canonical -> [aliases]");
  std::map<std::string, std::vector<std::string>> entries;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array()) throw ConfigError("lexicon: aliases of '" + key + "' must be an array");
    auto& aliases = entries[key];
    for (const auto& a : value) {
      if (!a.is_string()) throw ConfigError("lexicon: aliases of '" + key + "' must be strings");
      aliases.push_back(a.get<std::string>());
    }
  }
  return BrandLexicon(std::move(entries));
}

BrandLexicon BrandLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open lexicon " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json(text);
}

bool BrandLexicon::is_canonical(std::string_view token) const { return canonical_.contains(token); }

std::vector<std::string> BrandLexicon::canonical_tokens() const {
  return {canonical_.begin(), canonical_.end()};
}

void PrepConfig::validate() const {
  if (!(truncate_fraction > 0.0 && truncate_fraction <= 1.0))
    throw ConfigError("truncate_fraction must lie in (0, 1]");
  (void)Stemmer::create(stemmer_language);
}

std::string normalize_aliases(std::string_view text, const BrandLexicon& lexicon) {
  if (lexicon.phrases().empty()) return std::string(text);
  const Scan s = scan(text);
  std::string out;
  std::size_t copied = 0;
  std::size_t i = 0;
  while (i < s.runs.size()) {
    const BrandLexicon::Phrase* hit = nullptr;
    for (const auto& p : lexicon.phrases()) {
      const std::size_t n = p.words.size();
      if (i + n > s.runs.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = s.runs[i + k].lower == p.words[k];
        if (ok && k + 1 < n) ok = s.gaps[i + k] == " ";
      }
      if (ok) {
        hit = &p;
        break;
      }
    }
    if (!hit) {
      ++i;
      continue;
    }
    const std::size_t last = i + hit->words.size() - 1;
    out.append(text.substr(copied, s.runs[i].begin - copied));
    out += hit->canonical;
    copied = s.runs[last].end;
    i = last + 1;
  }
  out.append(text.substr(copied));
  return out;
}

std::string truncate(std::string_view title, std::string_view body, double fraction) {
  std::vector<std::string> words;
  for (std::string_view part : {title, body}) {
    std::string word;
    for (char32_t cp : unicode::decode(part)) {
      if (unicode::is_space(cp)) {
        if (!word.empty()) words.push_back(std::move(word));
        word.clear();
      } else {
        unicode::append(word, cp);
      }
    }
    if (!word.empty()) words.push_back(std::move(word));
  }
  // The epsilon keeps 0.3 * 10 (= 3.0000000000000004) from rounding up to 4.
  const double exact = fraction * static_cast<double>(words.size());
  const auto keep = std::min(words.size(), static_cast<std::size_t>(std::ceil(exact - 1e-9)));
  std::string out;
  for (std::size_t i = 0; i < keep; ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string token;
  for (char32_t cp : unicode::decode(text)) {
    if (unicode::is_token_char(cp)) {
      unicode::append(token, unicode::to_lower(cp));
    } else if (!token.empty()) {
      tokens.push_back(std::move(token));
      token.clear();
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const std::unordered_set<std::string>& stopwords,
                                          const BrandLexicon& lexicon) {
  std::erase_if(tokens, [&](const std::string& t) { return stopwords.contains(t) && !lexicon.is_canonical(t); });
  return tokens;
}

std::vector<std::string> stem(std::vector<std::string> tokens, const Stemmer& stemmer,
                              const BrandLexicon& lexicon) {
  for (auto& t : tokens)
    if (!lexicon.is_canonical(t)) t = stemmer.stem(t);
  return tokens;
}

std::vector<std::string> stem(std::vector<std::string> tokens, std::string_view language,
                              const BrandLexicon& lexicon) {
  return stem(std::move(tokens), Stemmer::create(language), lexicon);
}

std::unordered_set<std::string> load_stopwords(std::istream& in) {
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (auto& t : tokenize(line)) words.insert(std::move(t));
  }
  return words;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stopword file " + path.string());
  return load_stopwords(in);
}

Preprocessor::Preprocessor(BrandLexicon lexicon, PrepConfig config)
    : lexicon_(std::move(lexicon)),
      config_(std::move(config)),
      stemmer_((config_.validate(), Stemmer::create(config_.stemmer_language))) {}

TokenDoc Preprocessor::operator()(const Article& article, const WeekWindow& week) const {
  const std::string text = truncate(normalize_aliases(article.title, lexicon_),
                                    normalize_aliases(article.body, lexicon_), config_.truncate_fraction);
  auto tokens = remove_stopwords(tokenize(text), config_.stopwords, lexicon_);
  if (config_.drop_numeric)
    std::erase_if(tokens, [&](const std::string& t) { return is_numeric(t) && !lexicon_.is_canonical(t); });
  return TokenDoc{article.id, week, stem(std::move(tokens), stemmer_, lexicon_)};
}

std::vector<TokenDoc> Preprocessor::run(const WeeklyArticles& weeks, unsigned jobs) const {
  std::vector<std::pair<const Article*, const WeekWindow*>> work;
  for (const auto& [week, articles] : weeks)
    for (const auto& a : articles) work.emplace_back(&a, &week);

  std::vector<TokenDoc> docs(work.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i) docs[i] = (*this)(*work[i].first, *work[i].second);
    return docs;
  }
  // Strided assignment; each slot is written by exactly one thread.
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < work.size(); i += jobs) docs[i] = (*this)(*work[i].first, *work[i].second);
    });
  pool.clear();
  return docs;
}

TokenDoc preprocess(const Article& article, const WeekWindow& week, const BrandLexicon& lexicon,
                    const PrepConfig& config) {
  return Preprocessor(lexicon, config)(article, week);
}

}  // namespace sbs
