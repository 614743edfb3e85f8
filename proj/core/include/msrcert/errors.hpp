#pragma once

#include <stdexcept>
#include <string>

namespace msrcert {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed external input (files, JSON, CLI arguments).
struct InputError : Error {
    using Error::Error;
};

/// An operation was called outside its contract (disconnected graph,
/// too few vertices, malformed permutation, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// The input graph is not a cactus but the operation requires one.
struct NotCactusError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// An exhaustive oracle was asked to run above its size cap.
struct SizeLimitError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Vector construction ran out of retries at some position. Generic
/// sampling succeeds with probability 1, so this signals either an
/// impossible dimension request or a bug.
struct BuildError : Error {
    BuildError(const std::string& message, int position, int constraints, int attempts)
        : Error(message), position(position), constraints(constraints), attempts(attempts) {}
    int position;
    int constraints;
    int attempts;
};

/// Two derivations produced irreconcilable facts. Always a bug, never
/// acceptable input behaviour.
struct ContradictionError : Error {
    using Error::Error;
};

} // namespace msrcert
