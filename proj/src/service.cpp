#include "regpump/service.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

#include <httplib.h>

#include "regpump/automata.hpp"

namespace regpump {

using nlohmann::json;

json batch_to_json(const StringBatch& batch) {
    json epsilon = json::array();
    for (const auto& s : batch.strings) epsilon.push_back(s.empty());
    return json{{"strings", batch.strings},
                {"epsilon", std::move(epsilon)},
                {"next_offset", batch.next_offset},
                {"exhausted", batch.exhausted}};
}

json mpl_to_json(const MplResult& result) {
    json out{{"p", result.p}, {"mode", to_string(result.mode)}};
    if (result.witness) out["witness"] = *result.witness;
    if (result.split) out["split"] = json{{"x", result.split->x}, {"y", result.split->y}, {"z", result.split->z}};
    if (result.counterexample) out["counterexample"] = *result.counterexample;
    return out;
}

namespace {

class BadRequest : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ApiResponse json_response(int status, const json& body) {
    return {status, "application/json", body.dump()};
}

ApiResponse error_response(int status, const std::string& code, const std::string& message,
                           std::optional<std::size_t> position = std::nullopt) {
    json body{{"code", code}, {"message", message}};
    if (position) body["position"] = *position;
    return json_response(status, body);
}

// A request body restricted to a fixed set of field names.
class RequestFields {
public:
    RequestFields(std::string_view body, std::initializer_list<std::string_view> allowed) {
        try {
            obj_ = json::parse(body.begin(), body.end());
        } catch (const json::parse_error&) {
            throw BadRequest("request body is not valid JSON");
        }
        if (!obj_.is_object()) throw BadRequest("request body must be a JSON object");
        for (const auto& [key, value] : obj_.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                throw BadRequest("unknown field '" + key + "'");
        }
    }

    std::string text(const std::string& name) const {
        auto v = optional_text(name);
        if (!v) throw BadRequest("missing field '" + name + "'");
        return *v;
    }

    std::optional<std::string> optional_text(const std::string& name) const {
        auto it = obj_.find(name);
        if (it == obj_.end()) return std::nullopt;
        if (!it->is_string()) throw BadRequest("field '" + name + "' must be a string");
        return it->get<std::string>();
    }

    std::size_t count(const std::string& name) const {
        auto v = optional_count(name);
        if (!v) throw BadRequest("missing field '" + name + "'");
        return *v;
    }

    std::optional<std::size_t> optional_count(const std::string& name) const {
        auto it = obj_.find(name);
        if (it == obj_.end()) return std::nullopt;
        if (it->is_number_unsigned()) return it->get<std::size_t>();
        throw BadRequest("field '" + name + "' must be a non-negative integer");
    }

private:
    json obj_;
};

template <class Handler>
ApiResponse guarded(Handler&& handler) {
    try {
        return handler();
    } catch (const BadRequest& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const SyntaxError& e) {
        return error_response(422, "syntax_error", e.what(), e.position());
    } catch (const ResourceError& e) {
        return error_response(429, "resource_limit", e.what());
    } catch (const std::invalid_argument& e) {
        return error_response(400, "bad_request", e.what());
    }
}

} // namespace

Service::Service(ServiceConfig config) : config_(std::move(config)) {
    if (!config_.reserved.distinct()) throw std::invalid_argument("reserved symbols must be pairwise distinct");
}

ApiResponse Service::membership(std::string_view body) const {
    return guarded([&] {
        RequestFields req(body, {"regex", "input"});
        const auto regex = req.text("regex");
        const auto input = req.text("input");
        const Nfa nfa = compile(regex, config_.reserved);
        return json_response(200, json{{"member", accepts(nfa, input)}});
    });
}

ApiResponse Service::strings(std::string_view body) const {
    return guarded([&] {
        RequestFields req(body, {"regex", "count", "offset"});
        const auto regex = req.text("regex");
        const auto count = req.count("count");
        const auto offset = req.count("offset");
        if (count == 0) throw BadRequest("field 'count' must be at least 1");
        if (offset > config_.max_strings_per_request || count > config_.max_strings_per_request - offset)
            throw ResourceError("offset + count exceeds " + std::to_string(config_.max_strings_per_request));
        const Nfa nfa = compile(regex, config_.reserved);
        const auto batch = strings_at(nfa, offset, count, EnumerationOptions{config_.limits.max_frontier, true, std::nullopt});
        return json_response(200, batch_to_json(batch));
    });
}

ApiResponse Service::mpl(std::string_view body) const {
    return guarded([&] {
        RequestFields req(body, {"regex", "mode", "max_len"});
        const auto regex = req.text("regex");
        const auto mode = req.text("mode");
        const auto max_len = req.optional_count("max_len");
        if (max_len && *max_len == 0) throw BadRequest("field 'max_len' must be at least 1");
        const Nfa nfa = compile(regex, config_.reserved);
        MplResult result;
        if (mode == "exact")
            result = min_pumping_length_exact(determinize(nfa, config_.limits.state_cap), config_.limits);
        else if (mode == "sampled")
            result = min_pumping_length_sampled(nfa, max_len, config_.limits);
        else
            throw BadRequest("field 'mode' must be \"exact\" or \"sampled\"");
        return json_response(200, mpl_to_json(result));
    });
}

ApiResponse Service::pump(std::string_view body) const {
    return guarded([&] {
        RequestFields req(body, {"regex", "x", "y", "z", "i"});
        const auto regex = req.text("regex");
        PumpSplit split{req.text("x"), req.text("y"), req.text("z")};
        const auto i = req.count("i");
        if (split.y.empty()) throw BadRequest("field 'y' must be non-empty");
        const std::size_t room = config_.max_pumped_length - std::min(config_.max_pumped_length, split.x.size() + split.z.size());
        if (i > room / split.y.size())
            throw ResourceError("pumped string would exceed " + std::to_string(config_.max_pumped_length) + " characters");
        const Nfa nfa = compile(regex, config_.reserved);
        const auto pumped = regpump::pump(split, i);
        return json_response(200, json{{"pumped", pumped}, {"member", accepts(nfa, pumped)}});
    });
}

ApiResponse Service::graph(const std::optional<std::string>& regex) const {
    return guarded([&] {
        if (!regex) throw BadRequest("missing query parameter 'regex'");
        const Nfa nfa = compile(*regex, config_.reserved);
        return ApiResponse{200, "text/vnd.graphviz", export_graph(nfa, config_.reserved)};
    });
}

ApiResponse Service::health() const {
    return json_response(200, json{{"status", "ok"}});
}

// ---------------------------------------------------------------------------
// HTTP

struct HttpServer::Impl {
    explicit Impl(Service s) : service(std::move(s)) {}

    Service service;
    httplib::Server server;
};

namespace {

void write(httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, api.content_type);
}

} // namespace

HttpServer::HttpServer(Service service) : impl_(std::make_unique<Impl>(std::move(service))) {
    auto& svr = impl_->server;
    const Service& api = impl_->service;

    // SO_REUSEADDR only: the library default adds SO_REUSEPORT, which lets a
    // second server silently share a port that is already taken.
    svr.set_socket_options([](socket_t sock) {
        int yes = 1;
        ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    svr.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                             {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                             {"Access-Control-Allow-Headers", "Content-Type"}});

    svr.Post("/api/membership", [&api](const httplib::Request& req, httplib::Response& res) {
        write(res, api.membership(req.body));
    });
    svr.Post("/api/strings", [&api](const httplib::Request& req, httplib::Response& res) {
        write(res, api.strings(req.body));
    });
    svr.Post("/api/mpl", [&api](const httplib::Request& req, httplib::Response& res) {
        write(res, api.mpl(req.body));
    });
    svr.Post("/api/pump", [&api](const httplib::Request& req, httplib::Response& res) {
        write(res, api.pump(req.body));
    });
    svr.Get("/api/graph", [&api](const httplib::Request& req, httplib::Response& res) {
        std::optional<std::string> regex;
        if (req.has_param("regex")) regex = req.get_param_value("regex");
        write(res, api.graph(regex));
    });
    svr.Get("/api/health", [&api](const httplib::Request&, httplib::Response& res) { write(res, api.health()); });
    svr.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() {
    stop();
}

std::optional<int> HttpServer::bind(const std::string& host, int port) {
    auto& svr = impl_->server;
    if (port == 0) {
        const int bound = svr.bind_to_any_port(host);
        if (bound <= 0) return std::nullopt;
        return bound;
    }
    if (!svr.bind_to_port(host, port)) return std::nullopt;
    return port;
}

bool HttpServer::listen() {
    return impl_->server.listen_after_bind();
}

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

} // namespace regpump
