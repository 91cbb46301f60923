/*
 * errors.hpp — exception taxonomy shared by the whole library.
 *
 * Every failure mode that callers are expected to handle gets its own
 * type so the CLI can map them onto distinct exit codes.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace hybrid {

// Base class for all library errors.
class HybridError : public std::runtime_error {
public:
    explicit HybridError(const std::string& what) : std::runtime_error(what) {}
};

// A multi-index component exceeds its mode cutoff.
class OutOfRange : public HybridError {
public:
    using HybridError::HybridError;
};

// Beam-splitter applied to a single mode twice, or a mode index is invalid.
class InvalidModes : public HybridError {
public:
    using HybridError::HybridError;
};

// Two vectors with different ModeLayouts were combined.
class LayoutMismatch : public HybridError {
public:
    using HybridError::HybridError;
};

// An operation pushed amplitude mass beyond the configured tail tolerance.
class CutoffTooSmall : public HybridError {
public:
    using HybridError::HybridError;
};

// A requested superposition vanishes identically (e.g. odd SCS at beta=0).
class DegenerateState : public HybridError {
public:
    using HybridError::HybridError;
};

// A coefficient with a removable singularity was requested exactly at the
// singular point (e.g. A_n at beta*r = sqrt(n)).
class InfiniteCoefficient : public HybridError {
public:
    using HybridError::HybridError;
};

// Density matrix input fails the Hermiticity/trace checks.
class InvalidDensity : public HybridError {
public:
    using HybridError::HybridError;
};

// Root solver found no sign change over the requested bracket.
class NoSignChange : public HybridError {
public:
    using HybridError::HybridError;
};

} // namespace hybrid
