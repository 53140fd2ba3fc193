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

#include "server.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "camplace/camplace.h"

namespace camplace::service {
namespace {

using nlohmann::json;

int http_status(camplace_status s) {
  switch (s) {
    case CAMPLACE_OK:
      return 200;
    case CAMPLACE_ERR_INFEASIBLE_SAMPLING:
    case CAMPLACE_ERR_SOLVER_INFEASIBLE:
      return 422;
    case CAMPLACE_ERR_IO:
    case CAMPLACE_ERR_INTERNAL:
      return 500;
    default:
      return 400;
  }
}

Response error(camplace_status s) {
  const json body = {{"error", {{"code", camplace_status_name(s)}, {"message", camplace_last_error()}}}};
  return {http_status(s), body.dump()};
}

// Owns a string returned by the C API.
struct CString {
  char* p = nullptr;
  ~CString() { camplace_string_free(p); }
};

Response plan(const std::string& body) {
  camplace_report* report = nullptr;
  camplace_status s = camplace_plan(body.c_str(), &report);
  if (s != CAMPLACE_OK) return error(s);
  CString out;
  s = camplace_report_json(report, &out.p);
  camplace_report_free(report);
  if (s != CAMPLACE_OK) return error(s);
  return {200, out.p};
}

template <typename F>
Response json_call(F&& call, const std::string& body) {
  CString out;
  const camplace_status s = call(body.c_str(), &out.p);
  if (s != CAMPLACE_OK) return error(s);
  return {200, out.p};
}

}  // namespace

Response handle(std::string_view method, std::string_view path, std::string_view body) {
  const std::string text(body);
  if (path == "/api/health") {
    if (method != "GET") return {405, R"({"error":{"code":"method_not_allowed","message":"use GET"}})"};
    return {200, json{{"status", "ok"}, {"version", camplace_version()}}.dump()};
  }
  const bool known = path == "/api/plan" || path == "/api/verify" || path == "/api/visibility";
  if (!known) return {404, R"({"error":{"code":"not_found","message":"unknown endpoint"}})"};
  if (method != "POST") return {405, R"({"error":{"code":"method_not_allowed","message":"use POST"}})"};
  if (path == "/api/plan") return plan(text);
  if (path == "/api/verify") return json_call(camplace_verify, text);
  return json_call(camplace_visibility, text);
}

Options parse_bind(std::string_view bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("expected HOST:PORT, got '" + std::string(bind) + "'");
  }
  Options o;
  o.host = std::string(bind.substr(0, colon));
  const std::string_view port = bind.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), o.port);
  if (ec != std::errc() || ptr != port.data() + port.size() || o.port < 0 || o.port > 65535) {
    throw std::invalid_argument("invalid port in '" + std::string(bind) + "'");
  }
  return o;
}

struct Server::Impl {
  Options options;
  httplib::Server http;
};

Server::Server(Options options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto route = [](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  };
  impl_->http.Get("/api/health", route);
  for (const char* path : {"/api/plan", "/api/verify", "/api/visibility"}) {
    impl_->http.Post(path, route);
  }
  impl_->http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

Server::~Server() { stop(); }

int Server::bind() {
  if (!impl_->options.static_dir.empty() &&
      !impl_->http.set_mount_point("/", impl_->options.static_dir)) {
    throw std::runtime_error("static directory not found: " + impl_->options.static_dir);
  }
  const Options& o = impl_->options;
  int port = o.port;
  if (port == 0) {
    port = impl_->http.bind_to_any_port(o.host);
    if (port < 0) throw std::runtime_error("cannot bind " + o.host + ":0");
  } else if (!impl_->http.bind_to_port(o.host, port)) {
    throw std::runtime_error("cannot bind " + o.host + ":" + std::to_string(port));
  }
  return port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace camplace::service
