#pragma once

#include <stdexcept>
#include <string>

namespace efg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An action index outside the legal range, or a move past a terminal.
class InvalidHistoryError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A strategy or profile does not belong to the game it is used with.
class GameMismatchError : public Error {
 public:
  using Error::Error;
};

// A fixed opponent model has no entry for an information set it must cover.
class IncompleteModelError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed its budget.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace efg
