#pragma once

#include <stdexcept>
#include <string>

namespace stackprice {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undefined exact arithmetic: inf - inf, inf * 0, division by zero, ...
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Malformed instance text or numeric literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid instance that violates a model assumption
// (unknown ids, negative costs, a follower without an all-fixed fallback).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Request outside what an algorithm supports (non-bipartite cover,
// two-sided instance passed to the one-sided solver, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Enumeration or tuple limit of the brute-force oracle exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace stackprice
