#include "polyrecip/service.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "httplib.h"

namespace polyrecip {

namespace {

constexpr const char* kIndexPage = R"html(<!doctype html>
<html>
<head><meta charset="utf-8"><title>polyrecip</title>
<style>body{font-family:sans-serif;margin:2em}pre{background:#f4f4f4;padding:1em;overflow:auto}</style>
</head>
<body>
<h1>polyrecip</h1>
<p id="summary">loading...</p>
<div id="sliders"></div>
<button id="solve">solve</button>
<pre id="out"></pre>
<script>
const out = document.getElementById('out');
let faces = [];
fetch('/api/analysis').then(r => r.json()).then(a => {
  faces = a.independent_faces;
  document.getElementById('summary').textContent = `rank ${a.rank}, dof ${a.dof}`;
  const box = document.getElementById('sliders');
  faces.forEach(f => {
    const label = document.createElement('label');
    label.textContent = `face ${f} `;
    const input = document.createElement('input');
    input.type = 'number'; input.value = 1; input.step = 0.1; input.className = 'zeta';
    label.appendChild(input);
    box.appendChild(label);
  });
});
document.getElementById('solve').onclick = () => {
  const zeta = [...document.querySelectorAll('.zeta')].map(i => parseFloat(i.value));
  fetch('/api/solve', {method: 'POST', body: JSON.stringify({method: 'rref', zeta})})
    .then(r => r.json()).then(j => { out.textContent = JSON.stringify(j, null, 2); });
};
</script>
</body>
</html>
)html";

std::string content_type_for(const std::filesystem::path& p) {
  const std::string ext = p.extension().string();
  if (ext == ".html") return "text/html";
  if (ext == ".js" || ext == ".mjs") return "application/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  return "application/octet-stream";
}

HttpReply json_reply(int status, std::string body) { return {status, "application/json", std::move(body)}; }

}  // namespace

Service::Service(std::shared_ptr<const Model> model, ServiceOptions options)
    : model_(std::move(model)), options_(std::move(options)) {}

Service::~Service() { stop(); }

HttpReply Service::serve_static(const std::string& path) const {
  if (options_.viewer_dir.empty()) {
    if (path == "/" || path == "/index.html") return {200, "text/html", kIndexPage};
    return json_reply(404, error_json("NotFound", "no such resource: " + path));
  }
  std::string rel = path == "/" ? "index.html" : path.substr(1);
  if (rel.find("..") != std::string::npos) return json_reply(400, error_json("BadRequest", "invalid path"));
  const std::filesystem::path file = std::filesystem::path(options_.viewer_dir) / rel;
  std::ifstream in(file, std::ios::binary);
  if (!in) return json_reply(404, error_json("NotFound", "no such resource: " + path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return {200, content_type_for(file), ss.str()};
}

HttpReply Service::handle(const std::string& method, const std::string& path, const std::string& body) const {
  try {
    if (path == "/api/complex") {
      if (method != "GET") return json_reply(405, error_json("MethodNotAllowed", "use GET"));
      return json_reply(200, complex_json(*model_));
    }
    if (path == "/api/analysis") {
      if (method != "GET") return json_reply(405, error_json("MethodNotAllowed", "use GET"));
      return json_reply(200, analysis_json(*model_));
    }
    if (path == "/api/solve") {
      if (method != "POST") return json_reply(405, error_json("MethodNotAllowed", "use POST"));
      const SolveRequest request = parse_solve_request(body);
      return json_reply(200, response_json(*model_, model_->solve(request)));
    }
    if (path.rfind("/api/", 0) == 0) return json_reply(404, error_json("NotFound", "no such endpoint: " + path));
    if (method != "GET") return json_reply(405, error_json("MethodNotAllowed", "use GET"));
    return serve_static(path);
  } catch (const Error& e) {
    return json_reply(422, error_json(std::string(to_string(e.code())), e.what()));
  } catch (const std::invalid_argument& e) {
    return json_reply(400, error_json("BadRequest", e.what()));
  } catch (const std::exception& e) {
    return json_reply(500, error_json("InternalError", e.what()));
  }
}

int Service::bind(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const HttpReply reply = handle(req.method, req.path, req.body);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  server_->Get(R"(/.*)", forward);
  server_->Post(R"(/.*)", forward);
  server_->Put(R"(/.*)", forward);
  server_->Delete(R"(/.*)", forward);
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw std::runtime_error("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void Service::listen() {
  if (!server_) throw std::logic_error("Service::listen called before bind");
  server_->listen_after_bind();
}

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace polyrecip
