// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

#include "umlforge/client.hpp"
#include "umlforge/png.hpp"
#include "umlforge/raster.hpp"

using namespace umlforge;
namespace fs = std::filesystem;

namespace {

/// Local stub endpoint with configurable behaviour and in-flight accounting.
class StubServer {
public:
    StubServer() {
        server_.Post("/generate", [this](const httplib::Request& req,
                                         httplib::Response& res) {
            int now = 1 + in_flight_.fetch_add(1);
            int seen = max_in_flight_.load();
            while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
            }
            ++hits_;
            if (delay_ms_ > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms_));
            }
            if (fail_with_500_) {
                res.status = 500;
                res.set_content("boom", "text/plain");
            } else if (require_token_ &&
                       req.get_header_value("Authorization") != "Bearer sesame") {
                res.status = 401;
                res.set_content("who are you", "text/plain");
            } else {
                auto body = nlohmann::json::parse(req.body, nullptr, false);
                std::string id =
                    body.is_discarded() ? "" : body.value("id", std::string{});
                nlohmann::json reply;
                reply["text"] = reply_prefix_ + id;
                res.set_content(reply.dump(), "application/json");
            }
            in_flight_.fetch_sub(1);
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~StubServer() {
        server_.stop();
        thread_.join();
    }

    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

    int hits() const { return hits_.load(); }
    int max_in_flight() const { return max_in_flight_.load(); }

    int delay_ms_ = 0;
    bool fail_with_500_ = false;
    bool require_token_ = false;
    std::string reply_prefix_ = "echo:";

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> hits_{0};
    std::atomic<int> in_flight_{0};
    std::atomic<int> max_in_flight_{0};
};

fs::path tiny_png() {
    static fs::path path = [] {
        fs::path p = fs::temp_directory_path() / "umlforge-client-test.png";
        write_png_gray(RasterImage::filled(4, 4, 200), p);
        return p;
    }();
    return path;
}

EndpointConfig config_for(const StubServer& server) {
    EndpointConfig config;
    config.base_url = server.url();
    config.timeout_seconds = 5.0;
    config.max_retries = 2;
    config.retry_backoff_ms = 1;
    return config;
}

QueryItem item(const std::string& id) {
    return QueryItem{id, tiny_png(), "describe this"};
}

}  // namespace

TEST_CASE("query_one round-trips against a healthy stub") {
    StubServer server;
    auto response = query_one(item("e42"), config_for(server));
    CHECK(response.status == TransportStatus::Ok);
    CHECK(response.raw_text == "echo:e42");
    CHECK(response.latency_seconds > 0.0);
    CHECK(response.attempts == 1);
    CHECK(response.entry_id == "e42");
}

TEST_CASE("server errors retry up to max_retries then record transport") {
    StubServer server;
    server.fail_with_500_ = true;
    auto config = config_for(server);
    config.max_retries = 2;
    auto response = query_one(item("x"), config);
    CHECK(response.status == TransportStatus::Transport);
    CHECK(response.attempts == 3);
    CHECK(server.hits() == 3);
    CHECK(response.raw_text.empty());
    CHECK(response.http_status == 500);
}

TEST_CASE("slow endpoints time out") {
    StubServer server;
    server.delay_ms_ = 500;
    auto config = config_for(server);
    config.timeout_seconds = 0.02;
    config.max_retries = 0;
    auto response = query_one(item("slow"), config);
    CHECK(response.status == TransportStatus::Timeout);
    CHECK(response.raw_text.empty());
}

TEST_CASE("auth failures do not retry") {
    StubServer server;
    server.require_token_ = true;
    auto config = config_for(server);
    auto rejected = query_one(item("noauth"), config);
    CHECK(rejected.status == TransportStatus::AuthFailure);
    CHECK(rejected.attempts == 1);

    config.auth_token = "sesame";
    auto accepted = query_one(item("withauth"), config);
    CHECK(accepted.status == TransportStatus::Ok);
}

TEST_CASE("missing image files are recorded, not thrown") {
    StubServer server;
    QueryItem missing{"gone", fs::temp_directory_path() / "does-not-exist.png", "p"};
    auto response = query_one(missing, config_for(server));
    CHECK(response.status == TransportStatus::Transport);
    CHECK(response.raw_text.empty());
}

TEST_CASE("run_batch preserves order and is total") {
    StubServer server;
    std::vector<QueryItem> items;
    for (int i = 0; i < 12; ++i) items.push_back(item("id" + std::to_string(i)));
    auto config = config_for(server);
    config.max_concurrent = 4;
    BatchResult batch = run_batch(items, config);
    REQUIRE(batch.responses.size() == items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        CHECK(batch.responses[i].entry_id == items[i].id);
        CHECK(batch.responses[i].raw_text == "echo:" + items[i].id);
    }
    CHECK(batch.timing.total_seconds >= 0.0);
    CHECK(batch.timing.p95_latency >= batch.timing.p50_latency);
}

TEST_CASE("run_batch respects the concurrency bound") {
    StubServer server;
    server.delay_ms_ = 100;
    std::vector<QueryItem> items;
    for (int i = 0; i < 10; ++i) items.push_back(item("c" + std::to_string(i)));

    auto config = config_for(server);
    config.max_concurrent = 10;
    BatchResult wide = run_batch(items, config);
    CHECK(server.max_in_flight() <= 10);
    CHECK(wide.timing.total_seconds < 0.6);
    CHECK(wide.timing.total_seconds >= 0.1);

    StubServer serial_server;
    serial_server.delay_ms_ = 100;
    auto serial_config = config_for(serial_server);
    serial_config.max_concurrent = 1;
    BatchResult narrow = run_batch(items, serial_config);
    CHECK(serial_server.max_in_flight() == 1);
    CHECK(narrow.timing.total_seconds >= 1.0);  // ten serialized 0.1 s calls
    CHECK(narrow.timing.total_seconds / wide.timing.total_seconds >= 3.0);
}

TEST_CASE("batch total dominates the largest single latency") {
    StubServer server;
    server.delay_ms_ = 30;
    std::vector<QueryItem> items = {item("a"), item("b"), item("c")};
    auto config = config_for(server);
    config.max_concurrent = 3;
    BatchResult batch = run_batch(items, config);
    double max_latency = 0.0;
    for (const auto& response : batch.responses) {
        max_latency = std::max(max_latency, response.latency_seconds);
    }
    CHECK(batch.timing.total_seconds >= max_latency * 0.9);
}

TEST_CASE("endpoint config reads the token from the environment") {
    ::setenv("UMLFORGE_API_TOKEN", "hunter2", 1);
    auto config = endpoint_config_from_env("http://127.0.0.1:1");
    CHECK(config.auth_token == "hunter2");
    ::unsetenv("UMLFORGE_API_TOKEN");
    auto cleared = endpoint_config_from_env("http://127.0.0.1:1");
    CHECK(cleared.auth_token.empty());
}
