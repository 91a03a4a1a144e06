#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bicomplex {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand lies in the null cone (zero divisor) where an invertible value is required.
class singular_operand : public error {
public:
    explicit singular_operand(const std::string& what,
                              std::optional<std::uint64_t> index = std::nullopt)
        : error(index ? what + " (term " + std::to_string(*index) + ")" : what), index_(index) {}

    std::optional<std::uint64_t> index() const noexcept { return index_; }

private:
    std::optional<std::uint64_t> index_;
};

/// A result overflowed or became NaN.
class non_finite : public error {
public:
    explicit non_finite(const std::string& what,
                        std::optional<std::uint64_t> index = std::nullopt)
        : error(index ? what + " (term " + std::to_string(*index) + ")" : what), index_(index) {}

    std::optional<std::uint64_t> index() const noexcept { return index_; }

private:
    std::optional<std::uint64_t> index_;
};

class precondition_error : public error {
public:
    using error::error;
};

} // namespace bicomplex
