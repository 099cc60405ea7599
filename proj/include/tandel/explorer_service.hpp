#pragma once

#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace tandel {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Fixed-capacity LRU map from canonical query strings to responses.
class ResponseCache {
 public:
  explicit ResponseCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<HttpResponse> get(const std::string& key);
  void put(const std::string& key, const HttpResponse& value);
  std::size_t size() const;

 private:
  using Entry = std::pair<std::string, HttpResponse>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

struct ServiceOptions {
  std::size_t cache_entries = 256;
  unsigned workers = 0;  ///< 0: default_workers()
  std::string static_dir;
  /// Upper bound on px * py per tile request.
  std::size_t max_pixels = std::size_t{4096} * 4096;
};

using QueryParams = std::multimap<std::string, std::string>;

/// Thin HTTP adapter over the library: every endpoint maps onto library
/// calls, and 200 responses are pure functions of the canonical query.
class ExplorerService {
 public:
  explicit ExplorerService(ServiceOptions options = {});

  /// Dispatches GET `path` with `query`. Malformed queries give 400,
  /// out-of-domain parameters 422, unknown paths 404.
  HttpResponse handle(const std::string& path, const QueryParams& query);

  /// Blocks serving HTTP on `host:port` until stop() is called.
  bool serve(const std::string& host, int port);
  /// Binds to an ephemeral port and returns it; use with listen().
  int bind_any_port(const std::string& host);
  bool listen();
  void stop();

  const ServiceOptions& options() const { return options_; }

 private:
  HttpResponse tile(const QueryParams& q);
  HttpResponse analyze(const QueryParams& q);
  HttpResponse orbit(const QueryParams& q);
  HttpResponse constants();

  ServiceOptions options_;
  ResponseCache cache_;
  struct Http;
  std::shared_ptr<Http> http_;
};

/// Sorted `key=value` pairs joined by '&'.
std::string canonical_query(const QueryParams& query);

}  // namespace tandel
