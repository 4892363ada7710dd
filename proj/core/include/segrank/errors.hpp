#pragma once

#include <stdexcept>
#include <string>

namespace segrank {

// Bad configuration values (unknown field, out-of-range parameter,
// min_count larger than any frequency, ...). CLI exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / format failures (missing path, malformed file, ...).
// CLI exit code 3.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested experiment cannot be carried out on the given data
// (no documents survive filtering, empty feature vocabulary, ...).
// CLI exit code 4.
struct experiment_error : std::runtime_error {
    explicit experiment_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace segrank
