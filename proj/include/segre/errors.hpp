#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segre {

/// Base class of every exception thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A ring presentation with no factors or a factor of dimension < 1.
class invalid_spec_error : public error {
public:
    using error::error;
};

/// Two operands built over different ring presentations.
class spec_mismatch_error : public error {
public:
    using error::error;
};

/// A quantity that must be an integer came out fractional
/// (non-integral Chern class, fractional Euler characteristic, ...).
class integrality_error : public error {
public:
    using error::error;
};

/// A closed-form formula was applied outside the domain where it is exact.
class formula_error : public error {
public:
    using error::error;
};

/// Invariants requested for a degenerate configuration they do not cover.
class unsupported_degenerate_error : public error {
public:
    using error::error;
};

/// Section counts requested for a curve/twist outside the supported regimes.
class unsupported_regime_error : public error {
public:
    using error::error;
};

/// Classification requested for a first Chern class outside the table's scope.
class unsupported_c1_error : public error {
public:
    using error::error;
};

/// Classification that reduces to a result external to this library.
/// Carries a citation for the external result.
class delegated_error : public unsupported_c1_error {
public:
    delegated_error(const std::string& what_arg, std::string citation)
        : unsupported_c1_error(what_arg), citation_(std::move(citation)) {}

    const std::string& citation() const noexcept { return citation_; }

private:
    std::string citation_;
};

/// Argument outside an operation's stated domain.
class domain_error : public error {
public:
    using error::error;
};

/// Malformed textual input; carries the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(const std::string& what_arg, std::size_t position)
        : error(what_arg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace segre
