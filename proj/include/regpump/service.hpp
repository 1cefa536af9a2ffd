#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "regpump/enumerate.hpp"
#include "regpump/pumping.hpp"
#include "regpump/syntax.hpp"

namespace regpump {

struct ServiceConfig {
    ReservedSymbols reserved;
    PumpingLimits limits;
    std::size_t max_strings_per_request = 1'000'000;  // offset + count
    std::size_t max_pumped_length = 1'000'000;
};

struct ApiResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

// JSON shapes shared by the service and the CLI's json-lines output.
nlohmann::json batch_to_json(const StringBatch& batch);
nlohmann::json mpl_to_json(const MplResult& result);

/// Request handlers. Each one is a pure function of its input and the
/// configuration fixed at construction, so responses are byte-identical for
/// identical requests and handlers may run concurrently.
class Service {
public:
    explicit Service(ServiceConfig config = {});

    ApiResponse membership(std::string_view body) const;  // POST /api/membership
    ApiResponse strings(std::string_view body) const;     // POST /api/strings
    ApiResponse mpl(std::string_view body) const;         // POST /api/mpl
    ApiResponse pump(std::string_view body) const;        // POST /api/pump
    ApiResponse graph(const std::optional<std::string>& regex) const;  // GET /api/graph
    ApiResponse health() const;                           // GET /api/health

    const ServiceConfig& config() const { return config_; }

private:
    ServiceConfig config_;
};

/// HTTP front end over Service with permissive CORS.
class HttpServer {
public:
    explicit HttpServer(Service service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds the socket; port 0 picks an ephemeral port. Returns the bound
    /// port, or nullopt when binding failed (e.g. the port is in use).
    std::optional<int> bind(const std::string& host, int port);
    /// Serves until stop() is called. Requires a successful bind().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace regpump
