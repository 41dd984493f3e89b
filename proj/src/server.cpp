#include "nlwidb/server.hpp"

#include <stdexcept>

#include "httplib.h"
#include "json.hpp"
#include "nlwidb/report.hpp"

namespace nlwidb {

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

HttpReply request_error(std::string_view message) {
    ordered_json j;
    j["error"] = {{"stage", "request"}, {"kind", "BadRequest"}, {"message", message}, {"detail", ordered_json::array()}};
    return {400, j.dump()};
}

} // namespace

HttpReply handle_query(const Engine& engine, std::string_view request_body) {
    nlohmann::json req;
    try {
        req = nlohmann::json::parse(request_body);
    } catch (const nlohmann::json::parse_error&) {
        return request_error("request body is not valid JSON");
    }
    if (!req.is_object() || !req.contains("question") || !req["question"].is_string())
        return request_error("request must be an object with a string 'question'");

    Answer a = engine.answer(req["question"].get<std::string>());
    return {a.ok() ? 200 : 422, to_json(a).dump()};
}

HttpReply handle_schema(const Engine& engine) { return {200, schema_json(engine.catalog().schema).dump()}; }

HttpReply handle_health() { return {200, R"({"status":"ok"})"}; }

struct Service::Impl {
    httplib::Server http;
};

Service::Service(const Engine& engine, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>()) {
    auto send = [](httplib::Response& res, const HttpReply& r) {
        res.status = r.status;
        res.set_content(r.body, kJson);
    };
    impl_->http.Post("/api/query", [&engine, send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_query(engine, req.body));
    });
    impl_->http.Get("/api/schema", [&engine, send](const httplib::Request&, httplib::Response& res) {
        send(res, handle_schema(engine));
    });
    impl_->http.Get("/api/health",
                    [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
    impl_->http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            what = e.what();
        } catch (...) {
        }
        ordered_json j;
        j["error"] = {{"stage", "internal"}, {"kind", "InternalError"}, {"message", what}, {"detail", ordered_json::array()}};
        res.status = 500;
        res.set_content(j.dump(), kJson);
    });
    if (static_dir) {
        if (!impl_->http.set_mount_point("/", static_dir->string()))
            throw std::runtime_error("static directory '" + static_dir->string() + "' does not exist");
    }
}

Service::~Service() { stop(); }

int Service::bind(const std::string& host, int port) {
    int bound = port == 0 ? impl_->http.bind_to_any_port(host) : (impl_->http.bind_to_port(host, port) ? port : -1);
    if (bound <= 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void Service::run() { impl_->http.listen_after_bind(); }

void Service::stop() {
    if (impl_) impl_->http.stop();
}

bool Service::running() const { return impl_->http.is_running(); }

} // namespace nlwidb
