#pragma once

#include <stdexcept>

namespace gnk {

/// Exact division left a nonzero remainder. When the dividend came from one
/// of the closed-form identities this falsifies the identity rather than
/// signalling a recoverable condition.
struct NonzeroRemainder : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation is undefined for the zero polynomial (darga, least exponent,
/// division by zero).
struct ZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotSymmetric : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotSymmetricUnimodal : std::domain_error {
  using std::domain_error::domain_error;
};

/// Partition shape has no known closed-form contribution.
struct UnsupportedShape : std::domain_error {
  using std::domain_error::domain_error;
};

/// Parameters lie below the validity bound of a closed form.
struct OutOfValidityRange : std::domain_error {
  using std::domain_error::domain_error;
};

/// Parameter pair not decided by the depth results.
struct OutOfCoverage : std::domain_error {
  using std::domain_error::domain_error;
};

/// The forward size-s recurrence hit the singular line n = k+s-1.
struct SingularLine : std::domain_error {
  using std::domain_error::domain_error;
};

/// An integer closed form failed to divide exactly.
struct NonIntegerValue : std::domain_error {
  using std::domain_error::domain_error;
};

/// A recurrence parameter choice produced a negative q-exponent.
struct NegativeExponent : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace gnk
