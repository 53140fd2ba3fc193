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

// HTTP front end for the planning UI. Stateless: every request carries its
// floorplan and configuration, and every handler goes through the C API.

#ifndef CAMPLACE_TOOLS_SERVICE_SERVER_HPP_
#define CAMPLACE_TOOLS_SERVICE_SERVER_HPP_

#include <memory>
#include <string>
#include <string_view>

namespace camplace::service {

struct Options {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 binds an ephemeral port
  std::string static_dir;
};

struct Response {
  int status = 200;
  std::string body;
};

/// Dispatches one API call. Unknown routes answer 404.
Response handle(std::string_view method, std::string_view path, std::string_view body);

/// Splits "HOST:PORT"; throws std::invalid_argument on malformed input.
Options parse_bind(std::string_view bind);

class Server {
 public:
  explicit Server(Options options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket and returns the bound port. Throws std::runtime_error
  /// when the address cannot be bound or the static directory is missing.
  int bind();
  /// Serves until stop(); call bind() first.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace camplace::service

#endif  // CAMPLACE_TOOLS_SERVICE_SERVER_HPP_
