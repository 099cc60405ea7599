#include <complex>
#include <cstdlib>
#include <string>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "tandel/explorer_service.hpp"
#include "tandel/model_family.hpp"

using namespace tandel;
using nlohmann::json;

namespace {
QueryParams q(std::initializer_list<std::pair<const std::string, std::string>> kv) { return QueryParams(kv); }
}  // namespace

TEST_CASE("analyze endpoint") {
  ExplorerService svc;
  const HttpResponse r = svc.handle("/api/v1/analyze", q({{"alpha_re", "-0.021"}, {"alpha_im", "0.009"}}));
  CHECK(r.status == 200);
  CHECK(r.content_type == "application/json");
  CHECK(r.body.find("\"membership\":\"InT\",\"period\":3") != std::string::npos);
  const json j = json::parse(r.body);
  CHECK(j["cycle"]["period"] == 3);
  CHECK(j["cycle"]["multiplier_abs"].get<double>() < 1.0);
  CHECK(svc.handle("/api/v1/analyze", q({{"alpha_re", "-0.021"}, {"alpha_im", "0.009"}})).body == r.body);
}

TEST_CASE("tile endpoint") {
  ExplorerService svc;
  const auto query = q({{"center_re", "-0.05"}, {"center_im", "0"}, {"width", "1.2"}, {"px", "1"}});
  const HttpResponse r = svc.handle("/api/v1/tile", query);
  CHECK(r.status == 200);
  CHECK(r.content_type == "application/octet-stream");
  CHECK(r.body.size() == 41);
  CHECK(r.body.substr(0, 4) == "TNDL");

  const auto png = svc.handle("/api/v1/tile", q({{"px", "8"}, {"width", "0.5"}, {"format", "png"}}));
  CHECK(png.content_type == "image/png");
  const auto dyn = svc.handle("/api/v1/tile", q({{"plane", "dyn"}, {"alpha_re", "0.3"}, {"px", "4"}}));
  CHECK(dyn.status == 200);
  CHECK(dyn.body.size() == 32 + 16 * 9);
  const auto mask = svc.handle("/api/v1/tile", q({{"family", "an_mask"}, {"n", "3"}, {"px", "4"}, {"width", "0.5"}}));
  CHECK(mask.status == 200);
  // parameter order does not matter
  const auto swapped = q({{"px", "1"}, {"width", "1.2"}, {"center_im", "0"}, {"center_re", "-0.05"}});
  CHECK(svc.handle("/api/v1/tile", swapped).body == r.body);
}

TEST_CASE("orbit endpoint") {
  ExplorerService svc;
  const HttpResponse r =
      svc.handle("/api/v1/orbit", q({{"family", "tangent"}, {"alpha_re", "-0.021"}, {"alpha_im", "0.009"}, {"n", "1"}}));
  CHECK(r.status == 200);
  const json j = json::parse(r.body);
  REQUIRE(j["points"].size() == 1);
  const cplx inv = TangentParam({-0.021, 0.009}).free_value();
  CHECK(j["points"][0]["re"].get<double>() == inv.real());
  CHECK(j["points"][0]["im"].get<double>() == inv.imag());

  const json nj = json::parse(svc.handle("/api/v1/orbit", q({{"family", "newton"}, {"a_re", "-0.2"}, {"n", "3"}})).body);
  CHECK(nj["points"].size() == 3);
  CHECK(nj["points"][0]["re"] == 0.0);
}

TEST_CASE("constants endpoint") {
  ExplorerService svc;
  const json j = json::parse(svc.handle("/api/v1/constants", {}).body);
  CHECK(j["p_star"].get<double>() > 0.01);
  CHECK(j["p_star_residual"].get<double>() < 1e-12);
}

TEST_CASE("error statuses") {
  ExplorerService svc;
  CHECK(svc.handle("/api/v1/nope", {}).status == 404);
  CHECK(svc.handle("/api/v1/analyze", q({{"alpha_re", "abc"}})).status == 400);
  CHECK(svc.handle("/api/v1/analyze", {}).status == 400);
  CHECK(svc.handle("/api/v1/analyze", q({{"alpha_re", "1"}, {"alpha_im", "0"}})).status == 422);
  CHECK(svc.handle("/api/v1/analyze", q({{"alpha_re", "0.9"}, {"alpha_im", "0.9"}})).status == 422);
  CHECK(svc.handle("/api/v1/tile", q({{"px", "0"}})).status == 400);
  CHECK(svc.handle("/api/v1/tile", q({{"px", "4"}, {"plane", "sideways"}})).status == 400);
  CHECK(svc.handle("/api/v1/tile", q({{"px", "4"}, {"family", "an_mask"}, {"n", "2"}, {"width", "3"}})).status == 422);
  CHECK(svc.handle("/api/v1/tile", q({{"px", "4"}, {"max_iter", "0"}})).status == 400);
  CHECK(svc.handle("/api/v1/orbit", q({{"alpha_re", "0"}})).status == 422);
  CHECK(svc.handle("/api/v1/orbit", q({{"alpha_re", "0.2"}, {"n", "-1"}})).status == 400);
  CHECK(svc.handle("/api/v1/orbit", q({{"family", "x"}, {"alpha_re", "0.2"}})).status == 400);
}

TEST_CASE("canonical query and cache") {
  CHECK(canonical_query(q({{"b", "2"}, {"a", "1"}})) == "a=1&b=2");
  ResponseCache c(2);
  c.put("a", {200, "x", "1"});
  c.put("a", {200, "x", "other"});
  CHECK(c.get("a")->body == "1");
  c.put("b", {200, "x", "2"});
  c.get("a");
  c.put("c", {200, "x", "3"});
  CHECK(c.size() == 2);
  CHECK_FALSE(c.get("b"));
  CHECK(c.get("a"));
}

TEST_CASE("http round trip") {
  ExplorerService svc;
  const int port = svc.bind_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server([&] { svc.listen(); });
  httplib::Client cli("127.0.0.1", port);
  auto a = cli.Get("/api/v1/analyze?alpha_re=-0.021&alpha_im=0.009");
  auto b = cli.Get("/api/v1/analyze?alpha_im=0.009&alpha_re=-0.021");
  auto t = cli.Get("/api/v1/tile?px=1&width=0.5");
  auto bad = cli.Get("/api/v1/analyze?alpha_re=oops");
  auto root = cli.Get("/");
  svc.stop();
  server.join();
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->status == 200);
  CHECK(a->body == b->body);
  REQUIRE(t);
  CHECK(t->body.size() == 41);
  CHECK(t->get_header_value("Content-Type") == "application/octet-stream");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  REQUIRE(root);
  CHECK(root->status == 200);
}

#ifdef TANDELBROT_CLI
TEST_CASE("cli exit codes") {
  const std::string cli = TANDELBROT_CLI;
  auto run = [&](const std::string& args) {
    const int rc = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  CHECK(run("constants") == 0);
  CHECK(run("analyze --alpha -0.021,0.009") == 0);
  CHECK(run("analyze") == 2);
  CHECK(run("analyze --alpha notanumber") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("analyze --alpha 1,0") == 1);
  CHECK(run("an-mask --n 2 --center 0,0 --width 3 --px 4 --out /dev/null --format tile") == 1);
}
#endif
