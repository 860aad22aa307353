#include "staterep/gateway/gateway.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "staterep/core/base64.hpp"
#include "staterep/core/error.hpp"
#include "staterep/core/strings.hpp"

namespace staterep::gateway {

using nlohmann::json;

std::string to_string(Backend b) { return b == Backend::Remote ? "remote" : "mock"; }

Backend backend_from_string(std::string_view s) {
    if (s == "remote") return Backend::Remote;
    if (s == "mock") return Backend::Mock;
    throw config_error("unknown backend: " + std::string(s));
}

void ModelConfig::validate() const {
    if (temperature < 0.0) throw config_error("temperature must be >= 0");
    if (top_p <= 0.0 || top_p > 1.0) throw config_error("top_p must be in (0, 1]");
    if (max_output_tokens < 1) throw config_error("max_output_tokens must be >= 1");
    if (max_retries < 0) throw config_error("max_retries must be >= 0");
    if (max_in_flight < 1) throw config_error("max_in_flight must be >= 1");
    if (backend == Backend::Remote && endpoint_url.empty()) {
        throw config_error("remote backend requires endpoint_url");
    }
    if (backend == Backend::Mock && mock_policy.empty()) {
        throw config_error("mock backend requires mock_policy");
    }
}

namespace {

struct MockRegistry {
    std::mutex mutex;
    // shared_ptr so stateful policies advance in place while invocations
    // run outside the registry lock
    std::map<std::string, std::shared_ptr<MockPolicy>> policies;
};

MockRegistry& registry() {
    static MockRegistry instance;
    return instance;
}

void unregister_mock_policy(const std::string& name) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    reg.policies.erase(name);
}

// Splits a full URL into the httplib client base and the request path.
std::pair<std::string, std::string> split_url(const std::string& url) {
    size_t scheme = url.find("://");
    if (scheme == std::string::npos) throw config_error("endpoint_url must include a scheme");
    size_t path_start = url.find('/', scheme + 3);
    if (path_start == std::string::npos) return {url, "/v1/chat/completions"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

long whitespace_token_count(const prompting::PromptBundle& bundle) {
    return count_whitespace_tokens(bundle.system_text) +
           count_whitespace_tokens(bundle.user_text);
}

json request_body(const ModelConfig& config, const prompting::PromptBundle& bundle) {
    json body{
        {"model", config.model_name},
        {"temperature", config.temperature},
        {"top_p", config.top_p},
        {"max_tokens", config.max_output_tokens},
    };
    json messages = json::array();
    if (bundle.has_image()) {
        json content = json::array();
        content.push_back({{"type", "text"}, {"text", bundle.user_text}});
        content.push_back(
            {{"type", "image_url"},
             {"image_url",
              {{"url", "data:image/png;base64," + base64_encode(bundle.image_png)}}}});
        messages.push_back({{"role", "user"}, {"content", content}});
    } else {
        messages.push_back({{"role", "user"}, {"content", bundle.user_text}});
    }
    body["messages"] = messages;
    return body;
}

}  // namespace

MockRegistration& MockRegistration::operator=(MockRegistration&& other) noexcept {
    if (this != &other) {
        if (!name_.empty()) unregister_mock_policy(name_);
        name_ = std::move(other.name_);
        other.name_.clear();
    }
    return *this;
}

MockRegistration::~MockRegistration() {
    if (!name_.empty()) unregister_mock_policy(name_);
}

MockRegistration register_mock_policy(std::string name, MockPolicy policy) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    if (reg.policies.count(name)) {
        throw config_error("mock policy already registered: " + name);
    }
    reg.policies.emplace(name, std::make_shared<MockPolicy>(std::move(policy)));
    return MockRegistration(std::move(name));
}

bool mock_policy_registered(const std::string& name) {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mutex);
    return reg.policies.count(name) > 0;
}

ModelReply Gateway::chat(const ModelConfig& config, const prompting::PromptBundle& bundle) {
    config.validate();
    {
        std::unique_lock<std::mutex> lock(mutex_);
        slot_free_.wait(lock, [&] { return in_flight_ < config.max_in_flight; });
        ++in_flight_;
    }
    struct SlotGuard {
        Gateway* gw;
        ~SlotGuard() {
            {
                std::lock_guard<std::mutex> lock(gw->mutex_);
                --gw->in_flight_;
            }
            gw->slot_free_.notify_one();
        }
    } guard{this};

    return config.backend == Backend::Mock ? chat_mock(config, bundle)
                                           : chat_remote(config, bundle);
}

ModelReply Gateway::chat_mock(const ModelConfig& config, const prompting::PromptBundle& bundle) {
    std::shared_ptr<MockPolicy> policy;
    {
        auto& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mutex);
        auto it = reg.policies.find(config.mock_policy);
        if (it == reg.policies.end()) {
            throw config_error("no mock policy registered under name: " + config.mock_policy);
        }
        policy = it->second;
    }
    ModelReply reply;
    reply.text = (*policy)(bundle);
    reply.input_tokens = whitespace_token_count(bundle);
    reply.output_tokens = count_whitespace_tokens(reply.text);
    reply.attempt_count = 1;
    return reply;
}

ModelReply Gateway::chat_remote(const ModelConfig& config, const prompting::PromptBundle& bundle) {
    const auto [base, path] = split_url(config.endpoint_url);
    const std::string payload = request_body(config, bundle).dump();

    const auto start = std::chrono::steady_clock::now();
    std::string last_failure;
    for (int attempt = 1; attempt <= config.max_retries + 1; ++attempt) {
        httplib::Client client(base);
        client.set_connection_timeout(0, config.timeout_ms * 1000);
        client.set_read_timeout(config.timeout_ms / 1000, (config.timeout_ms % 1000) * 1000);
        httplib::Headers headers;
        if (!config.api_key.empty()) {
            headers.emplace("Authorization", "Bearer " + config.api_key);
        }
        auto res = client.Post(path, headers, payload, "application/json");

        if (!res) {
            last_failure = "connection failure: " + httplib::to_string(res.error());
        } else if (res->status >= 500 || res->status == 429) {
            last_failure = "server status " + std::to_string(res->status);
        } else if (res->status != 200) {
            throw protocol_error("chat endpoint returned status " + std::to_string(res->status));
        } else {
            json parsed;
            try {
                parsed = json::parse(res->body);
            } catch (const json::exception& e) {
                throw protocol_error(std::string("malformed response body: ") + e.what());
            }
            if (!parsed.contains("choices") || parsed["choices"].empty() ||
                !parsed["choices"][0].contains("message")) {
                throw protocol_error("response body lacks choices[0].message");
            }
            ModelReply reply;
            reply.text = parsed["choices"][0]["message"].value("content", "");
            reply.attempt_count = attempt;
            if (parsed.contains("usage") && parsed["usage"].contains("prompt_tokens")) {
                reply.input_tokens = parsed["usage"].value("prompt_tokens", 0L);
                reply.output_tokens = parsed["usage"].value("completion_tokens", 0L);
            } else {
                reply.input_tokens = whitespace_token_count(bundle);
                reply.output_tokens = count_whitespace_tokens(reply.text);
                reply.tokens_approximate = true;
            }
            reply.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
            return reply;
        }
        if (attempt <= config.max_retries) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(config.retry_backoff_ms * (1L << (attempt - 1))));
        }
    }
    throw transport_error("chat retries exhausted after " +
                          std::to_string(config.max_retries + 1) + " attempts; last: " +
                          last_failure);
}

}  // namespace staterep::gateway
