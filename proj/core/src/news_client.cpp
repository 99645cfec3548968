#include "sbs/news_client.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "sbs/error.hpp"
#include "sbs/unicode.hpp"

namespace sbs {
namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string base_path;
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint must be an http(s) URL: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw ConfigError("endpoint must be an http(s) URL: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint e;
  e.origin = url.substr(0, path_start);
  if (path_start != std::string::npos) e.base_path = url.substr(path_start);
  while (!e.base_path.empty() && e.base_path.back() == '/') e.base_path.pop_back();
  return e;
}

nlohmann::json page_request(const FetchOptions& o, int page) {
  nlohmann::json q = {{"action", "getArticles"},
                      {"keyword", o.keywords},
                      {"keywordOper", "or"},
                      {"dateStart", o.range.start.to_string()},
                      // The API's dateEnd is inclusive.
                      {"dateEnd", (o.range.end - 1).to_string()},
                      {"dataType", {"news"}},
                      {"resultType", "articles"},
                      {"articlesPage", page},
                      {"articlesCount", o.page_size},
                      {"articlesSortBy", "date"},
                      {"articlesSortByAsc", true},
                      {"includeArticleBody", true},
                      {"apiKey", o.api_key}};
  if (o.language) q["lang"] = *o.language;
  return q;
}

nlohmann::json post_with_retry(httplib::Client& client, const std::string& path, const nlohmann::json& body,
                               const FetchOptions& o) {
  for (int attempt = 0;; ++attempt) {
    try {
      auto res = client.Post(path, body.dump(), "application/json");
      if (!res)
        throw FetchError("request to " + path + " failed: " + httplib::to_string(res.error()), 0, true);
      const int status = res->status;
      if (status == 401 || status == 403)
        throw FetchError("news API rejected the credentials (HTTP " + std::to_string(status) + ")", status, false);
      if (status == 429 || status >= 500)
        throw FetchError("news API returned HTTP " + std::to_string(status), status, true);
      if (status != 200) throw FetchError("news API returned HTTP " + std::to_string(status), status, false);
      try {
        auto j = nlohmann::json::parse(res->body);
        if (j.contains("error")) {
          const std::string msg = j["error"].is_string() ? j["error"].get<std::string>() : j["error"].dump();
          throw FetchError("news API error: " + msg, status, false);
        }
        return j;
      } catch (const nlohmann::json::exception& e) {
        throw FetchError(std::string("malformed news API response: ") + e.what(), status, false);
      }
    } catch (const FetchError& e) {
      if (!e.retriable() || attempt >= o.max_retries) throw;
      std::this_thread::sleep_for(o.backoff * (1 << attempt));
    }
  }
}

std::optional<Article> to_article(const nlohmann::json& r) {
  Article a;
  a.id = r.value("uri", std::string{});
  if (a.id.empty()) return std::nullopt;
  std::string date = r.value("date", std::string{});
  if (date.empty()) date = r.value("dateTime", std::string{}).substr(0, 10);
  try {
    a.published = Date::parse(date.substr(0, 10));
  } catch (const Error&) {
    return std::nullopt;
  }
  a.title = r.value("title", std::string{});
  a.body = r.value("body", std::string{});
  if (a.title.empty() && a.body.empty()) return std::nullopt;
  if (auto it = r.find("source"); it != r.end() && it->is_object() && it->contains("uri"))
    a.source = (*it)["uri"].get<std::string>();
  if (auto it = r.find("lang"); it != r.end() && it->is_string()) a.language = it->get<std::string>();
  return a;
}

bool mentions_any(const Article& a, const std::vector<std::string>& lowered_keywords) {
  const std::string text = unicode::to_lower(a.title) + "\n" + unicode::to_lower(a.body);
  return std::any_of(lowered_keywords.begin(), lowered_keywords.end(),
                     [&](const std::string& k) { return text.find(k) != std::string::npos; });
}

}  // namespace

std::vector<Article> fetch_news(const FetchOptions& o) {
  if (o.keywords.empty()) throw ConfigError("fetch needs at least one keyword");
  if (o.range.days() < 0) throw ConfigError("fetch date range ends before it starts");
  std::vector<Article> out;
  if (o.range.days() > 0) {
    if (o.page_size < 1 || o.max_pages < 1) throw ConfigError("page_size and max_pages must be positive");
    const auto ep = split_endpoint(o.endpoint);
    httplib::Client client(ep.origin);
    client.set_connection_timeout(o.timeout);
    client.set_read_timeout(o.timeout);
    const std::string path = ep.base_path + "/api/v1/article/getArticles";

    std::vector<std::string> keywords;
    for (const auto& k : o.keywords) keywords.push_back(unicode::to_lower(k));

    std::map<std::string, Article> by_id;
    for (int page = 1; page <= o.max_pages; ++page) {
      const auto j = post_with_retry(client, path, page_request(o, page), o);
      const auto articles = j.value("articles", nlohmann::json::object());
      const auto results = articles.value("results", nlohmann::json::array());
      for (const auto& r : results) {
        auto a = to_article(r);
        if (a && mentions_any(*a, keywords)) by_id.try_emplace(a->id, std::move(*a));
      }
      const int pages = articles.value("pages", 1);
      if (results.empty() || page >= pages) break;
    }
    out.reserve(by_id.size());
    for (auto& [_, a] : by_id) out.push_back(std::move(a));
  }
  if (o.cache_path) write_jsonl(*o.cache_path, out);
  return out;
}

}  // namespace sbs
