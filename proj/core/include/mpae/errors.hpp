#ifndef MPAE_ERRORS_HPP
#define MPAE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpae {

struct InvalidGenomeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedDagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnevaluatedIndividualError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SameLayerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tabular lookup misses and absent surrogate state.
struct MissingKeyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AbsentStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or wrong-version files (logs, tables, checkpoints, genotypes).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VersionMismatchError : FormatError {
    using FormatError::FormatError;
};

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mpae

#endif
