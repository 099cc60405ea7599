#include "tandel/explorer_service.hpp"

#include <charconv>
#include <stdexcept>

#include <httplib.h>

#include "tandel/colorize.hpp"
#include "tandel/error.hpp"
#include "tandel/render.hpp"
#include "tandel/report_json.hpp"

namespace tandel {

namespace {

constexpr long kMaxOrbitPoints = 100000;

// Malformed query: reported as 400.
struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string* find(const QueryParams& q, const std::string& key) {
  const auto it = q.find(key);
  return it == q.end() ? nullptr : &it->second;
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v))
    throw BadRequest("parameter '" + key + "' is not a finite number: '" + text + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& text) {
  long v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw BadRequest("parameter '" + key + "' is not an integer: '" + text + "'");
  return v;
}

double get_double(const QueryParams& q, const std::string& key, std::optional<double> fallback = std::nullopt) {
  if (const auto* v = find(q, key)) return parse_double(key, *v);
  if (fallback) return *fallback;
  throw BadRequest("missing parameter '" + key + "'");
}

long get_long(const QueryParams& q, const std::string& key, std::optional<long> fallback = std::nullopt) {
  if (const auto* v = find(q, key)) return parse_long(key, *v);
  if (fallback) return *fallback;
  throw BadRequest("missing parameter '" + key + "'");
}

std::string get_string(const QueryParams& q, const std::string& key, const std::string& fallback) {
  const auto* v = find(q, key);
  return v ? *v : fallback;
}

HttpResponse json_response(int status, const ordered_json& j) { return {status, "application/json", j.dump()}; }

HttpResponse error_response(int status, const std::string& message) {
  return json_response(status, ordered_json{{"error", message}});
}

std::string body_of(const std::vector<std::uint8_t>& bytes) { return {bytes.begin(), bytes.end()}; }

}  // namespace

std::optional<HttpResponse> ResponseCache::get(const std::string& key) {
  const std::lock_guard lock(mutex_);
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  order_.splice(order_.begin(), order_, it->second);
  return it->second->second;
}

void ResponseCache::put(const std::string& key, const HttpResponse& value) {
  if (capacity_ == 0) return;
  const std::lock_guard lock(mutex_);
  // Racing duplicate inserts carry identical values; keep the first.
  if (index_.contains(key)) return;
  order_.emplace_front(key, value);
  index_[key] = order_.begin();
  if (order_.size() > capacity_) {
    index_.erase(order_.back().first);
    order_.pop_back();
  }
}

std::size_t ResponseCache::size() const {
  const std::lock_guard lock(mutex_);
  return order_.size();
}

std::string canonical_query(const QueryParams& query) {
  std::string out;
  for (const auto& [k, v] : query) {  // multimap iterates in key order
    if (!out.empty()) out += '&';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

struct ExplorerService::Http {
  httplib::Server server;
};

ExplorerService::ExplorerService(ServiceOptions options)
    : options_(std::move(options)), cache_(options_.cache_entries), http_(std::make_shared<Http>()) {
  if (options_.workers == 0) options_.workers = default_workers();

  auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
    QueryParams q(req.params.begin(), req.params.end());
    const HttpResponse r = handle(req.path, q);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  http_->server.Get(R"(/api/v1/.*)", adapt);
  if (!options_.static_dir.empty()) {
    http_->server.set_mount_point("/", options_.static_dir);
  } else {
    http_->server.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(
          "<!doctype html><title>Tandelbrot explorer</title>"
          "<p>API: /api/v1/tile, /api/v1/analyze, /api/v1/orbit, /api/v1/constants</p>",
          "text/html");
    });
  }
}

HttpResponse ExplorerService::handle(const std::string& path, const QueryParams& query) {
  const std::string key = path + '?' + canonical_query(query);
  const bool cacheable = path == "/api/v1/tile";
  if (cacheable) {
    if (auto hit = cache_.get(key)) return *hit;
  }
  HttpResponse r;
  try {
    if (path == "/api/v1/tile") {
      r = tile(query);
    } else if (path == "/api/v1/analyze") {
      r = analyze(query);
    } else if (path == "/api/v1/orbit") {
      r = orbit(query);
    } else if (path == "/api/v1/constants") {
      r = constants();
    } else {
      return error_response(404, "unknown endpoint " + path);
    }
  } catch (const BadRequest& e) {
    return error_response(400, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::ZeroPixelViewport)
      return error_response(400, e.what());
    return error_response(422, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
  if (cacheable && r.status == 200) cache_.put(key, r);
  return r;
}

HttpResponse ExplorerService::tile(const QueryParams& q) {
  const std::string plane = get_string(q, "plane", "param");
  const std::string family = get_string(q, "family", "tangent");
  const std::string format = get_string(q, "format", "tile");
  if (plane != "param" && plane != "dyn") throw BadRequest("plane must be 'param' or 'dyn'");
  if (family != "tangent" && family != "newton" && family != "an_mask")
    throw BadRequest("family must be 'tangent', 'newton' or 'an_mask'");
  if (format != "tile" && format != "png") throw BadRequest("format must be 'tile' or 'png'");

  Viewport vp;
  vp.center = {get_double(q, "center_re", 0.0), get_double(q, "center_im", 0.0)};
  vp.width = get_double(q, "width", 1.0);
  const long px = get_long(q, "px", 256);
  const long py = get_long(q, "py", px);
  if (px < 1 || py < 1 || !(vp.width > 0.0)) throw BadRequest("viewport needs px, py >= 1 and width > 0");
  if (static_cast<std::size_t>(px) * static_cast<std::size_t>(py) > options_.max_pixels)
    throw BadRequest("viewport exceeds the pixel budget");
  vp.px = static_cast<std::uint32_t>(px);
  vp.py = static_cast<std::uint32_t>(py);

  IterationSettings s = IterationSettings::rendering();
  s.max_iter = get_long(q, "max_iter", s.max_iter);
  if (s.max_iter < 1 || s.max_iter > 10'000'000) throw BadRequest("max_iter must be in [1, 1e7]");

  TileGrid grid;
  if (plane == "param") {
    ParamFamily fam = ParamFamily::tangent();
    if (family == "newton") fam = ParamFamily::newton();
    if (family == "an_mask") {
      fam = ParamFamily::an_mask(static_cast<int>(get_long(q, "n")));
      if (find(q, "k")) fam.k = static_cast<int>(get_long(q, "k"));
      if (find(q, "delta")) fam.delta = get_double(q, "delta");
    }
    grid = render_parameter_plane(fam, vp, s, options_.workers);
  } else {
    if (family == "an_mask") throw BadRequest("an_mask has no dynamical plane");
    if (family == "tangent") {
      const TangentParam p({get_double(q, "alpha_re"), get_double(q, "alpha_im", 0.0)});
      grid = render_dynamical_plane(p, vp, s, options_.workers);
    } else {
      const NewtonParam p({get_double(q, "a_re"), get_double(q, "a_im", 0.0)});
      grid = render_dynamical_plane(p, vp, s, options_.workers);
    }
  }

  if (format == "png") return {200, "image/png", body_of(encode_png(colorize(grid)))};
  return {200, "application/octet-stream", body_of(encode_tile(grid))};
}

HttpResponse ExplorerService::analyze(const QueryParams& q) {
  const cplx alpha{get_double(q, "alpha_re"), get_double(q, "alpha_im", 0.0)};
  IterationSettings s = IterationSettings::analysis();
  s.max_iter = get_long(q, "max_iter", s.max_iter);
  if (s.max_iter < 1 || s.max_iter > 10'000'000) throw BadRequest("max_iter must be in [1, 1e7]");
  if (std::abs(alpha) >= 1.0) throw Error(ErrorCode::ParamOutsideDisk, "analysis needs |alpha| < 1");
  return json_response(200, to_json(analyze_parameter(alpha, s)));
}

HttpResponse ExplorerService::orbit(const QueryParams& q) {
  const std::string family = get_string(q, "family", "tangent");
  const long n = get_long(q, "n", 100);
  if (n < 0 || n > kMaxOrbitPoints) throw BadRequest("n must be in [0, 100000]");

  ordered_json points = ordered_json::array();
  SpherePoint z;
  if (family == "tangent") {
    const TangentParam p({get_double(q, "alpha_re"), get_double(q, "alpha_im", 0.0)});
    z = SpherePoint::finite(p.free_value());
    for (long i = 0; i < n; ++i) {
      points.push_back(to_json(z));
      if (z.is_infinity()) break;
      z = eval(p, z.value()).value;
    }
  } else if (family == "newton") {
    const NewtonParam p({get_double(q, "a_re"), get_double(q, "a_im", 0.0)});
    z = SpherePoint::finite(0.0);
    for (long i = 0; i < n; ++i) {
      points.push_back(to_json(z));
      if (z.is_infinity()) break;
      z = eval_newton(p, z.value()).value;
    }
  } else {
    throw BadRequest("family must be 'tangent' or 'newton'");
  }
  return json_response(200, ordered_json{{"family", family}, {"points", std::move(points)}});
}

HttpResponse ExplorerService::constants() { return json_response(200, to_json(model_constants())); }

bool ExplorerService::serve(const std::string& host, int port) { return http_->server.listen(host, port); }

int ExplorerService::bind_any_port(const std::string& host) { return http_->server.bind_to_any_port(host); }

bool ExplorerService::listen() { return http_->server.listen_after_bind(); }

void ExplorerService::stop() { http_->server.stop(); }

}  // namespace tandel
