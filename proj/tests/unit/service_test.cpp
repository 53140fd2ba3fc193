// Copyright 2026 The camplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <future>
#include <string>
#include <thread>
#include <vector>

#include <doctest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "server.hpp"

using nlohmann::json;
namespace service = camplace::service;

namespace {

const json kSquare = {{"version", 1}, {"outer", {{0, 0}, {4, 0}, {4, 4}, {0, 4}}}};
const json kL = {{"outer", {{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}}};

}  // namespace

TEST_CASE("handle: health and routing") {
  const service::Response health = service::handle("GET", "/api/health", "");
  CHECK(health.status == 200);
  CHECK(json::parse(health.body)["status"] == "ok");
  CHECK(service::handle("POST", "/api/health", "").status == 405);
  CHECK(service::handle("GET", "/api/plan", "").status == 405);
  CHECK(service::handle("POST", "/api/nothing", "{}").status == 404);
}

TEST_CASE("handle: plan, verify, visibility") {
  const service::Response plan =
      service::handle("POST", "/api/plan", json{{"floorplan", kSquare}}.dump());
  REQUIRE(plan.status == 200);
  const json report = json::parse(plan.body);
  CHECK(report["objective"] == 1);
  CHECK(report["status"] == "optimal");

  const service::Response verify = service::handle(
      "POST", "/api/verify", json{{"floorplan", kSquare}, {"placements", json::array()}}.dump());
  REQUIRE(verify.status == 200);
  const json v = json::parse(verify.body);
  CHECK(v["missed"].size() == v["n_boundary"].get<std::size_t>());

  const service::Response outside = service::handle(
      "POST", "/api/visibility", json{{"floorplan", kSquare}, {"point", {9, 9}}}.dump());
  CHECK(outside.status == 400);
  CHECK(json::parse(outside.body)["error"]["message"] == "viewpoint outside floorplan");

  CHECK(service::handle("POST", "/api/plan", "{not json").status == 400);
  const json no_sites = {{"floorplan", kSquare}, {"sampling", {{"d_min", 3.0}}}};
  CHECK(service::handle("POST", "/api/plan", no_sites.dump()).status == 422);
}

TEST_CASE("bind parsing") {
  const service::Options o = service::parse_bind("0.0.0.0:9000");
  CHECK(o.host == "0.0.0.0");
  CHECK(o.port == 9000);
  CHECK_THROWS_AS(service::parse_bind("localhost"), std::invalid_argument);
  CHECK_THROWS_AS(service::parse_bind("localhost:http"), std::invalid_argument);
  CHECK_THROWS_AS(service::parse_bind("localhost:70000"), std::invalid_argument);
}

TEST_CASE("HTTP round trips on an ephemeral port") {
  service::Server server({"127.0.0.1", 0, ""});
  const int port = server.bind();
  REQUIRE(port > 0);
  std::thread loop([&] { server.run(); });

  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(60, 0);
  auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");

  auto plan = client.Post("/api/plan", json{{"floorplan", kSquare}}.dump(), "application/json");
  REQUIRE(plan);
  CHECK(plan->status == 200);
  CHECK(json::parse(plan->body)["objective"] == 1);

  auto outside = client.Post("/api/visibility", json{{"floorplan", kSquare}, {"point", {-1, 2}}}.dump(),
                             "application/json");
  REQUIRE(outside);
  CHECK(outside->status == 400);
  auto missing = client.Get("/api/nothing");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  // Interleaved requests answer exactly as serial ones.
  const std::vector<json> requests = {
      {{"floorplan", kSquare}},
      {{"floorplan", kL}, {"constraints", {{"d_max", 2.5}}}},
      {{"floorplan", kL}, {"solver", "greedy"}},
  };
  std::vector<std::string> serial;
  for (const json& r : requests) {
    serial.push_back(json::parse(service::handle("POST", "/api/plan", r.dump()).body)["chosen"].dump());
  }
  std::vector<std::future<std::string>> parallel;
  for (int round = 0; round < 3; ++round) {
    for (const json& r : requests) {
      parallel.push_back(std::async(std::launch::async, [port, body = r.dump()] {
        httplib::Client c("127.0.0.1", port);
        c.set_read_timeout(60, 0);
        auto res = c.Post("/api/plan", body, "application/json");
        return res && res->status == 200 ? json::parse(res->body)["chosen"].dump() : std::string("error");
      }));
    }
  }
  for (std::size_t i = 0; i < parallel.size(); ++i) CHECK(parallel[i].get() == serial[i % requests.size()]);

  server.stop();
  loop.join();
}
