#ifndef CTCONG_ERRORS_HPP
#define CTCONG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <cstddef>

namespace ctcong {

/// Every library error carries a stable machine-readable kind slug
/// (rendered as `error.kind` in the CLI's JSON mode) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// kind slugs in use:
//   syntax, division-by-zero, inexact-division            (expr)
//   denominator-zero, improper-fraction, degree-limit,
//   no-fit                                                (series)
//   non-integer-coefficients, inadmissible-prime          (theorems)
//   inverse-of-zero, no-splitting-prime, not-quadratic,
//   reducible-denominator, bad-prime, not-simple          (numfield)
//   usage                                                 (cli)

/// Syntax error with byte position and a description of what was expected.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& expected, const std::string& msg)
        : Error("syntax", msg), pos_(pos), expected_(expected) {}
    std::size_t position() const noexcept { return pos_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t pos_;
    std::string expected_;
};

} // namespace ctcong

#endif
