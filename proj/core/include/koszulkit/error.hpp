#pragma once

#include <stdexcept>
#include <string>

namespace koszulkit {

// All library failures derive from Error. The CLI maps every Error to exit
// status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Duplicate identifiers, cycles, non-Hasse cover sets, bad JSON shape.
class MalformedPosetError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  explicit UnknownElementError(const std::string& id);
  const std::string& element() const { return element_; }

 private:
  std::string element_;
};

class IncomparableError : public Error {
 public:
  IncomparableError(const std::string& x, const std::string& y);
};

// Raised by every homological entry point handed a non-graded poset.
class NotGradedError : public Error {
 public:
  NotGradedError(const std::string& x, const std::string& y, int shortest, int longest);
  const std::string& lower() const { return lower_; }
  const std::string& upper() const { return upper_; }
  int shortest() const { return shortest_; }
  int longest() const { return longest_; }

 private:
  std::string lower_, upper_;
  int shortest_, longest_;
};

class InvalidFrontierError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidTargetError : public Error {
 public:
  using Error::Error;
};

class InvalidGeneratorError : public Error {
 public:
  using Error::Error;
};

}  // namespace koszulkit
