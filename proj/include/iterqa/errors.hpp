#pragma once

#include <stdexcept>
#include <string>

namespace iterqa {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameters, misconfiguration, or API misuse.
struct ConfigError : Error {
    using Error::Error;
};

/// Filesystem or store problems (unreadable path, corrupt store, ...).
struct IoError : Error {
    using Error::Error;
};

/// A lookup by identifier found nothing.
struct NotFoundError : Error {
    using Error::Error;
};

/// Malformed input records or dataset rows; message carries file/line context.
struct FormatError : Error {
    using Error::Error;
};

/// LLM transport failure that survived the retry policy.
struct BackendError : Error {
    using Error::Error;
};

/// Mock script exhausted or mismatched. Always a test bug, never a runtime
/// condition, so it is kept distinct from BackendError.
struct ScriptError : Error {
    using Error::Error;
};

}  // namespace iterqa
