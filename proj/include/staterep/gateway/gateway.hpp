#pragma once

#include <condition_variable>
#include <functional>
#include <mutex>
#include <string>

#include "staterep/prompting/prompt.hpp"

namespace staterep::gateway {

enum class Backend { Remote, Mock };

std::string to_string(Backend b);
Backend backend_from_string(std::string_view s);

// Sampling defaults follow the evaluation setup: temperature 0.2, nucleus
// sampling top_p 0.95. Credentials are never stored in config files; the
// CLI fills endpoint_url/api_key from environment variables.
struct ModelConfig {
    Backend backend = Backend::Mock;
    std::string endpoint_url;  // full URL, e.g. http://host:8080/v1/chat/completions
    std::string api_key;
    std::string model_name = "mock";
    double temperature = 0.2;
    double top_p = 0.95;
    int max_output_tokens = 512;
    int timeout_ms = 30000;
    int max_retries = 3;
    int retry_backoff_ms = 250;
    std::string mock_policy;  // Mock backend: name of the registered policy
    int max_in_flight = 8;    // global backpressure cap

    void validate() const;  // Config error on out-of-range values
};

struct ModelReply {
    std::string text;
    long input_tokens = 0;
    long output_tokens = 0;
    bool tokens_approximate = false;  // endpoint gave no usage block
    long latency_ms = 0;
    int attempt_count = 1;
};

// Scripted reply source for the Mock backend. Policies may keep mutable
// state (failure schedules), but stateful policies are only deterministic
// under serial execution; parallel runs need pure policies.
using MockPolicy = std::function<std::string(const prompting::PromptBundle&)>;

// RAII registration: the name frees up when the handle is destroyed.
class MockRegistration {
public:
    MockRegistration() = default;
    explicit MockRegistration(std::string name) : name_(std::move(name)) {}
    MockRegistration(MockRegistration&& other) noexcept { *this = std::move(other); }
    MockRegistration& operator=(MockRegistration&& other) noexcept;
    MockRegistration(const MockRegistration&) = delete;
    MockRegistration& operator=(const MockRegistration&) = delete;
    ~MockRegistration();

private:
    std::string name_;
};

// Registers a named policy; a duplicate name is a Config error.
[[nodiscard]] MockRegistration register_mock_policy(std::string name, MockPolicy policy);
bool mock_policy_registered(const std::string& name);

// Uniform model-call interface over the two backends. Safe for concurrent
// calls; per-call state is isolated and max_in_flight bounds concurrency.
class Gateway {
public:
    // Transport errors (connect failure / retries exhausted) abort the
    // calling episode; protocol errors signal a malformed response body.
    ModelReply chat(const ModelConfig& config, const prompting::PromptBundle& bundle);

private:
    ModelReply chat_remote(const ModelConfig& config, const prompting::PromptBundle& bundle);
    ModelReply chat_mock(const ModelConfig& config, const prompting::PromptBundle& bundle);

    std::mutex mutex_;
    std::condition_variable slot_free_;
    int in_flight_ = 0;
};

}  // namespace staterep::gateway
