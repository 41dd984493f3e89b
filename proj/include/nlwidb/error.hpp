#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlwidb {

/// Base of every error raised by the question pipeline and its configuration.
/// `detail` carries machine-readable specifics (offending words, violations).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message, std::vector<std::string> detail = {})
        : std::runtime_error(message), detail_(std::move(detail)) {}

    const std::vector<std::string>& detail() const noexcept { return detail_; }

    /// Short name of the failure, e.g. "UnknownWords".
    virtual std::string_view kind() const noexcept { return "Error"; }

private:
    std::vector<std::string> detail_;
};

class CatalogError : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "CatalogError"; }
};

} // namespace nlwidb
