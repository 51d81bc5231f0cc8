#pragma once

#include <stdexcept>
#include <string>

namespace ydw {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleFieldError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct UnrepresentableRootError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct EnumerationOverflowError : Error {
    using Error::Error;
};
struct BadWordError : Error {
    using Error::Error;
};
struct NotAQuandleError : Error {
    // 1-based indices of the failing triple, axiom name in message
    int i, j, k;
    NotAQuandleError(const std::string& what, int i_, int j_, int k_)
        : Error(what), i(i_), j(j_), k(k_) {}
};
struct InvalidCharacterError : Error {
    using Error::Error;
};
struct NotSimpleError : Error {
    using Error::Error;
};
struct LadderUnboundedError : Error {
    using Error::Error;
};
struct ReflectionUndefinedError : Error {
    using Error::Error;
};
struct GroupoidUnboundedError : Error {
    using Error::Error;
};
struct NotFiniteTypeError : Error {
    using Error::Error;
};
struct OracleCapacityError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

} // namespace ydw
