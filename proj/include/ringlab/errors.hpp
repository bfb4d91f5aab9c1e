#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

// Operation tables fail a ring axiom; the message carries a witnessing tuple.
class InvalidTable : public std::runtime_error {
 public:
  explicit InvalidTable(const std::string& what) : std::runtime_error(what) {}
};

class SizeCapExceeded : public std::runtime_error {
 public:
  SizeCapExceeded(long long size, long long cap)
      : std::runtime_error("ring size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)),
        size(size),
        cap(cap) {}
  long long size;
  long long cap;
};

class IdealEnumerationCapExceeded : public std::runtime_error {
 public:
  IdealEnumerationCapExceeded(long long count, long long cap)
      : std::runtime_error("ideal enumeration exceeded cap " +
                           std::to_string(cap) + " (reached " +
                           std::to_string(count) + ")"),
        count(count),
        cap(cap) {}
  long long count;
  long long cap;
};

class SideMismatch : public std::runtime_error {
 public:
  explicit SideMismatch(const std::string& what) : std::runtime_error(what) {}
};

class NotTwoSided : public std::runtime_error {
 public:
  explicit NotTwoSided(const std::string& what) : std::runtime_error(what) {}
};

class NotCoprime : public std::runtime_error {
 public:
  NotCoprime(int a, int b)
      : std::runtime_error("pair (" + std::to_string(a) + ", " +
                           std::to_string(b) + ") is not right coprime"),
        a(a),
        b(b) {}
  int a;
  int b;
};

class NotDescending : public std::runtime_error {
 public:
  explicit NotDescending(int index)
      : std::runtime_error("chain is not descending at step " +
                           std::to_string(index)),
        index(index) {}
  int index;  // first i with chain[i+1] not below chain[i]
};

class NotVonNeumannRegular : public std::runtime_error {
 public:
  explicit NotVonNeumannRegular(const std::string& what)
      : std::runtime_error(what) {}
};

// A checked mathematical identity failed: either the input tables are broken
// or there is a bug. Never raised by well-formed inputs.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace ringlab
