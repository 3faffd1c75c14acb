#pragma once

#include <stdexcept>
#include <string>

namespace griesmer {

/// Two words (or a word and a code) differ in length or alphabet size.
class IncomparableWordsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum distance requested for a code with fewer than two words.
class UndefinedDistanceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search instance is too large for the requested method.
class GuardExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Theorem case parameters outside the theorem's admissible range.
class InadmissibleCaseError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed word text or witness-set file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace griesmer
