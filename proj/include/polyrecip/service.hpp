#pragma once

#include <memory>
#include <string>

#include "polyrecip/pipeline.hpp"

namespace httplib {
class Server;
}

namespace polyrecip {

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceOptions {
  /// Directory holding the viewer bundle; a built-in page is served when empty.
  std::string viewer_dir;
};

/// HTTP front end over a loaded model. handle() is the whole request logic
/// and is usable without sockets; bind()/listen() put it on the network.
class Service {
 public:
  explicit Service(std::shared_ptr<const Model> model, ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  HttpReply handle(const std::string& method, const std::string& path, const std::string& body) const;

  /// Binds to host:port (port 0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void listen();
  void stop();

 private:
  HttpReply serve_static(const std::string& path) const;

  std::shared_ptr<const Model> model_;
  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace polyrecip
