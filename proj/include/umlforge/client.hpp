// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef UMLFORGE_CLIENT_HPP
#define UMLFORGE_CLIENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace umlforge {

/// Connection settings for a multimodal inference endpoint. The auth token is
/// read from the UMLFORGE_API_TOKEN environment variable, never from files.
struct EndpointConfig {
    std::string base_url;  // e.g. "http://127.0.0.1:8080"
    std::string auth_token;
    std::string model = "default";
    double timeout_seconds = 60.0;
    int max_concurrent = 4;
    int max_retries = 2;
    int retry_backoff_ms = 250;  // doubles per attempt
    // Pass-through generation settings; omitted from the request when unset.
    std::optional<double> temperature;
    std::optional<int> max_tokens;
};

EndpointConfig endpoint_config_from_env(std::string base_url);

enum class TransportStatus { Ok, Timeout, Transport, AuthFailure };

const char* to_string(TransportStatus status);

struct ModelResponse {
    std::string entry_id;
    std::string raw_text;          // empty only alongside a recorded failure
    double latency_seconds = 0.0;  // monotonic clock over all attempts
    int attempts = 0;
    TransportStatus status = TransportStatus::Ok;
    int http_status = 0;
    std::string error_detail;
};

/// What the client needs to issue one request.
struct QueryItem {
    std::string id;
    std::filesystem::path image_file;
    std::string prompt;
};

/// POST {base_url}/generate with {"model", "prompt", "image" (base64 PNG),
/// "id"}; expects {"text": "..."}. Transport failures and 5xx retry with
/// exponential backoff up to max_retries; failures are recorded in the
/// response, never thrown.
ModelResponse query_one(const QueryItem& item, const EndpointConfig& config);

struct BatchTiming {
    double total_seconds = 0.0;
    double mean_latency = 0.0;
    double p50_latency = 0.0;
    double p95_latency = 0.0;

    double total_hours() const { return total_seconds / 3600.0; }
};

struct BatchResult {
    std::vector<ModelResponse> responses;  // same order as the input
    BatchTiming timing;
};

/// Runs all items with at most max_concurrent requests in flight.
BatchResult run_batch(const std::vector<QueryItem>& items, const EndpointConfig& config);

}  // namespace umlforge

#endif
