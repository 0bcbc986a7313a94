#pragma once

#include <stdexcept>
#include <string>

namespace c2 {

/// Root of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (bit strings, stream literals, operator tokens,
/// certificate records).
class parse_error : public error {
public:
  using error::error;
};

/// An identity operator applied to the wrong object.
class undefined_morphism : public error {
public:
  using error::error;
};

/// Two operators whose object flow does not line up.
class non_composable : public error {
public:
  using error::error;
};

/// A stream was asked for more bits than it can materialize.
class horizon_exceeded : public error {
public:
  using error::error;
};

/// Argument outside the operation's domain (probability, empty period, ...).
class invalid_argument : public error {
public:
  using error::error;
};

class rule_error : public error {
public:
  using error::error;
};

class rule_length_error : public rule_error {
public:
  using rule_error::rule_error;
};

class rule_alphabet_error : public rule_error {
public:
  using rule_error::rule_error;
};

/// The input pairs of a rule code are not in the order 00, 01, 10, 11.
class rule_order_error : public rule_error {
public:
  using rule_error::rule_error;
};

/// A program and an object string that do not belong to the same chain.
class mismatch_error : public error {
public:
  using error::error;
};

class insufficient_samples : public error {
public:
  using error::error;
};

/// Internal self-check failed; indicates a bug rather than bad input.
class verification_failure : public error {
public:
  using error::error;
};

} // namespace c2
