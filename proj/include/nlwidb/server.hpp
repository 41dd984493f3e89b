#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "nlwidb/pipeline.hpp"

namespace nlwidb {

struct HttpReply {
    int status = 200;
    std::string body;
};

/// Request handlers, independent of any socket.
HttpReply handle_query(const Engine& engine, std::string_view request_body);
HttpReply handle_schema(const Engine& engine);
HttpReply handle_health();

/// HTTP front end. Routes:
///   POST /api/query   {"question": "..."}
///   GET  /api/schema
///   GET  /api/health
/// plus static files under `/` when a directory is given.
class Service {
public:
    explicit Service(const Engine& engine, std::optional<std::filesystem::path> static_dir = std::nullopt);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds `host:port` (port 0 picks a free one). Returns the bound port or
    /// throws std::runtime_error.
    int bind(const std::string& host, int port);

    /// Blocks serving requests until stop() is called.
    void run();
    void stop();
    bool running() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace nlwidb
