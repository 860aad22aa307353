#pragma once

#include <stdexcept>
#include <string>

namespace staterep {

// Error taxonomy shared across modules. The kind decides the CLI exit code
// and lets tests distinguish contract violations from environment faults.
enum class ErrorKind {
    Config,     // bad configuration, unknown names, invalid combinations
    Protocol,   // caller broke an interface contract (e.g. out-of-range action)
    State,      // operation not valid in the current lifecycle state
    Parse,      // malformed text that was expected to follow a fixed format
    Transport,  // remote endpoint unreachable / retries exhausted
    Metric,     // a requested statistic is undefined for the given data
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error config_error(const std::string& msg) { return Error(ErrorKind::Config, msg); }
inline Error protocol_error(const std::string& msg) { return Error(ErrorKind::Protocol, msg); }
inline Error state_error(const std::string& msg) { return Error(ErrorKind::State, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }
inline Error transport_error(const std::string& msg) { return Error(ErrorKind::Transport, msg); }
inline Error metric_error(const std::string& msg) { return Error(ErrorKind::Metric, msg); }

}  // namespace staterep
