// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/client.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "umlforge/base64.hpp"

namespace umlforge {

namespace {

using nlohmann::json;

std::chrono::milliseconds to_ms(double seconds) {
    return std::chrono::milliseconds(
        std::max<long long>(1, static_cast<long long>(seconds * 1000.0)));
}

httplib::Client make_client(const EndpointConfig& config) {
    httplib::Client client(config.base_url);
    client.set_connection_timeout(to_ms(config.timeout_seconds));
    client.set_read_timeout(to_ms(config.timeout_seconds));
    client.set_write_timeout(to_ms(config.timeout_seconds));
    return client;
}

bool read_file(const std::filesystem::path& path, std::vector<std::uint8_t>& out) {
    std::ifstream file(path, std::ios::binary);
    if (!file) return false;
    out.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    return true;
}

ModelResponse do_query(httplib::Client& client, const QueryItem& item,
                       const EndpointConfig& config) {
    ModelResponse response;
    response.entry_id = item.id;

    const auto begin = std::chrono::steady_clock::now();
    auto record_latency = [&] {
        response.latency_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
                .count();
    };

    std::vector<std::uint8_t> image;
    if (!read_file(item.image_file, image)) {
        response.status = TransportStatus::Transport;
        response.error_detail = "cannot read image: " + item.image_file.string();
        response.attempts = 0;
        record_latency();
        return response;
    }

    json body;
    body["model"] = config.model;
    body["prompt"] = item.prompt;
    body["image"] = base64_encode(image);
    body["id"] = item.id;
    if (config.temperature) body["temperature"] = *config.temperature;
    if (config.max_tokens) body["max_tokens"] = *config.max_tokens;
    const std::string payload = body.dump();

    httplib::Headers headers;
    if (!config.auth_token.empty()) {
        headers.emplace("Authorization", "Bearer " + config.auth_token);
    }

    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
        response.attempts = attempt + 1;
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(
                static_cast<long long>(config.retry_backoff_ms) << (attempt - 1)));
        }

        httplib::Result res =
            client.Post("/generate", headers, payload, "application/json");
        if (!res) {
            bool timed_out = res.error() == httplib::Error::ConnectionTimeout ||
                             res.error() == httplib::Error::Read;
            response.status =
                timed_out ? TransportStatus::Timeout : TransportStatus::Transport;
            response.error_detail = httplib::to_string(res.error());
            continue;  // transport errors retry
        }

        response.http_status = res->status;
        if (res->status == 401 || res->status == 403) {
            response.status = TransportStatus::AuthFailure;
            response.error_detail = "authentication rejected";
            break;
        }
        if (res->status >= 500) {
            response.status = TransportStatus::Transport;
            response.error_detail = "server error " + std::to_string(res->status);
            continue;  // retryable
        }
        if (res->status != 200) {
            response.status = TransportStatus::Transport;
            response.error_detail = "unexpected status " + std::to_string(res->status);
            break;
        }

        json parsed = json::parse(res->body, nullptr, false);
        if (parsed.is_discarded() || !parsed.contains("text") ||
            !parsed["text"].is_string()) {
            response.status = TransportStatus::Transport;
            response.error_detail = "malformed response body";
            break;
        }
        response.status = TransportStatus::Ok;
        response.raw_text = parsed["text"].get<std::string>();
        response.error_detail.clear();
        break;
    }

    record_latency();
    return response;
}

}  // namespace

const char* to_string(TransportStatus status) {
    switch (status) {
        case TransportStatus::Ok: return "ok";
        case TransportStatus::Timeout: return "timeout";
        case TransportStatus::Transport: return "transport";
        case TransportStatus::AuthFailure: return "auth";
    }
    return "unknown";
}

EndpointConfig endpoint_config_from_env(std::string base_url) {
    EndpointConfig config;
    config.base_url = std::move(base_url);
    if (const char* token = std::getenv("UMLFORGE_API_TOKEN")) {
        config.auth_token = token;
    }
    return config;
}

ModelResponse query_one(const QueryItem& item, const EndpointConfig& config) {
    httplib::Client client = make_client(config);
    return do_query(client, item, config);
}

BatchResult run_batch(const std::vector<QueryItem>& items, const EndpointConfig& config) {
    BatchResult result;
    result.responses.resize(items.size());
    if (items.empty()) return result;

    const auto begin = std::chrono::steady_clock::now();
    const int workers = std::max(
        1, std::min<int>(config.max_concurrent, static_cast<int>(items.size())));
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        httplib::Client client = make_client(config);
        for (;;) {
            std::size_t index = next.fetch_add(1);
            if (index >= items.size()) return;
            result.responses[index] = do_query(client, items[index], config);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    result.timing.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();

    std::vector<double> latencies;
    latencies.reserve(items.size());
    for (const ModelResponse& r : result.responses) latencies.push_back(r.latency_seconds);
    std::sort(latencies.begin(), latencies.end());
    double sum = 0.0;
    for (double v : latencies) sum += v;
    result.timing.mean_latency = sum / static_cast<double>(latencies.size());
    auto rank = [&](double q) {
        std::size_t idx = static_cast<std::size_t>(
            q * static_cast<double>(latencies.size() - 1) + 0.5);
        return latencies[std::min(idx, latencies.size() - 1)];
    };
    result.timing.p50_latency = rank(0.5);
    result.timing.p95_latency = rank(0.95);
    return result;
}

}  // namespace umlforge
