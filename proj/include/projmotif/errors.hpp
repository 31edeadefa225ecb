#pragma once

#include <stdexcept>
#include <string>

namespace projmotif {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid arguments, parameter combinations, or overridden settings.
struct ParamError : Error {
    using Error::Error;
};

/// Malformed or unreadable input text.
struct ParseError : Error {
    using Error::Error;
};

/// Filesystem-level failure (open/read/write).
struct IoError : Error {
    using Error::Error;
};

struct UnknownSymbolError : ParseError {
    using ParseError::ParseError;
};

struct KmerTooLongError : ParamError {
    using ParamError::ParamError;
};

struct CodeOutOfRangeError : ParamError {
    using ParamError::ParamError;
};

struct IndexOutOfRangeError : ParamError {
    using ParamError::ParamError;
};

struct LengthMismatchError : ParamError {
    using ParamError::ParamError;
};

struct InvalidParamsError : ParamError {
    using ParamError::ParamError;
};

struct EmptyInputError : ParseError {
    using ParseError::ParseError;
};

struct RecordWithoutSequenceError : ParseError {
    using ParseError::ParseError;
};

struct FastaFormatError : ParseError {
    using ParseError::ParseError;
};

/// Exact solver refused to enumerate a search space above its limit.
struct SearchSpaceTooLargeError : ParamError {
    using ParamError::ParamError;
};

/// Direct-indexed hashing would need more buckets than the configured cap.
struct DenseTableTooLargeError : ParamError {
    using ParamError::ParamError;
};

/// The requested bucket threshold cannot be reached at the given hash
/// probability, so no finite trial count exists.
struct UnreachableError : ParamError {
    using ParamError::ParamError;
};

struct EmptyBucketError : ParamError {
    using ParamError::ParamError;
};

/// Every trial finished without a single bucket at or above the threshold.
struct NoEnrichedBucketsError : Error {
    using Error::Error;
};

/// Probability mass vanished where log-space accumulation should have kept
/// it finite; indicates a bug rather than an input condition.
struct NumericalUnderflowError : Error {
    using Error::Error;
};

}  // namespace projmotif
