#pragma once

// Scripted upload → view → selection → explanation session against a live
// http server on an ephemeral port.

#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "patex/service/http.hpp"

namespace patex::test {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Server on 127.0.0.1 with a fresh store; stops on destruction.
class LiveServer {
public:
    explicit LiveServer(PatternRepository repo) : service_(std::move(repo)) {
        mount(server_, service_);
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LiveServer() {
        server_.stop();
        thread_.join();
    }
    int port() const { return port_; }

private:
    Service service_;
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

/// Runs the script and returns "status body" per request, in order.
inline std::vector<std::string> replay_session(int port, const std::string& lesmis_json, const std::string& temporal_csv) {
    httplib::Client cli("127.0.0.1", port);
    std::vector<std::string> log;
    auto record = [&](const httplib::Result& r) {
        log.push_back(r ? std::to_string(r->status) + " " + r->body : "no response");
        return r ? nlohmann::json::parse(r->body, nullptr, false) : nlohmann::json();
    };
    auto up = record(cli.Post("/api/v1/networks?format=json", lesmis_json, "application/json"));
    std::string id = up.value("id", "");
    auto tup = record(cli.Post("/api/v1/networks?format=csv&directed=true", temporal_csv, "text/csv"));
    std::string tid = tup.value("id", "");

    for (const char* viz : {"node-link", "matrix", "time-arcs"}) record(cli.Get("/api/v1/networks/" + id + "/views/" + viz));
    record(cli.Get("/api/v1/networks/" + tid + "/views/time-arcs"));
    record(cli.Get("/api/v1/networks/" + id + "/views/matrix?w=400&h=400"));
    record(cli.Get("/api/v1/networks/" + id + "/patterns"));

    std::string keys_from;
    for (const char* body : {R"({"viz":"matrix","region":{"kind":"rectangle","points":[[80,80],[300,300]]}})",
                             R"({"viz":"node-link","region":{"kind":"lasso","points":[[300,200],[500,220],[450,420],[280,380]]}})",
                             R"({"viz":"node-link","region":{"kind":"rectangle","points":[[1,1],[5,5]]}})",
                             R"({"viz":"matrix","region":{"kind":"rectangle","points":[[120,120],[120,120]]}})"}) {
        auto sel = record(cli.Post("/api/v1/networks/" + id + "/selection", body, "application/json"));
        if (sel.is_object() && sel.contains("instances"))
            for (const auto& inst : sel["instances"])
                for (const char* viz : {"node-link", "matrix", "time-arcs"})
                    record(cli.Get("/api/v1/networks/" + id + "/explanations/" + inst["key"].get<std::string>() + "?viz=" + viz));
    }
    record(cli.Post("/api/v1/networks/" + tid + "/selection",
                    R"({"viz":"time-arcs","region":{"kind":"rectangle","points":[[0,0],[800,600]]}})", "application/json"));
    record(cli.Get("/api/v1/networks/net-99/patterns"));
    record(cli.Get("/api/v1/repository/cards"));
    return log;
}

}  // namespace patex::test
