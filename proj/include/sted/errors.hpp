#ifndef STED_ERRORS_HPP
#define STED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sted {

/// Malformed document text. `offset` is the 0-based byte offset of the
/// first byte that could not be consumed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error(message), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Nesting deeper than the configured parser limit.
class DepthExceeded : public std::runtime_error {
public:
    explicit DepthExceeded(const std::string& message) : std::runtime_error(message) {}
};

class EmptyName : public std::invalid_argument {
public:
    EmptyName() : std::invalid_argument("field name must be non-empty") {}
};

/// A remote embedding endpoint could not be reached or kept failing
/// after the configured retries.
class ProviderUnavailable : public std::runtime_error {
public:
    explicit ProviderUnavailable(const std::string& message) : std::runtime_error(message) {}
};

/// A provider returned a vector whose length disagrees with the
/// declared dimension.
class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& message) : std::runtime_error(message) {}
};

class NotALeaf : public std::invalid_argument {
public:
    explicit NotALeaf(const std::string& message) : std::invalid_argument(message) {}
};

class NonSquare : public std::invalid_argument {
public:
    explicit NonSquare(const std::string& message) : std::invalid_argument(message) {}
};

class NonFinite : public std::invalid_argument {
public:
    explicit NonFinite(const std::string& message) : std::invalid_argument(message) {}
};

class EmptySet : public std::invalid_argument {
public:
    explicit EmptySet(const std::string& message) : std::invalid_argument(message) {}
};

class TooFew : public std::invalid_argument {
public:
    explicit TooFew(const std::string& message) : std::invalid_argument(message) {}
};

class InfeasibleSpec : public std::invalid_argument {
public:
    explicit InfeasibleSpec(const std::string& message) : std::invalid_argument(message) {}
};

class NoEligibleKeys : public std::runtime_error {
public:
    explicit NoEligibleKeys(const std::string& message) : std::runtime_error(message) {}
};

class NoEligibleValues : public std::runtime_error {
public:
    explicit NoEligibleValues(const std::string& message) : std::runtime_error(message) {}
};

class EmptyPool : public std::invalid_argument {
public:
    explicit EmptyPool(const std::string& message) : std::invalid_argument(message) {}
};

class UnknownKey : public std::invalid_argument {
public:
    explicit UnknownKey(const std::string& message) : std::invalid_argument(message) {}
};

class OverlappingGroups : public std::invalid_argument {
public:
    explicit OverlappingGroups(const std::string& message) : std::invalid_argument(message) {}
};

} // namespace sted

#endif // STED_ERRORS_HPP
