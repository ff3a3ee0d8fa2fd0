#pragma once

#include <stdexcept>
#include <string>

namespace su2erg {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong" catch this; the CLI maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |tr(g)| is 2 (within 1e-12): g = +-identity, so the one-parameter subgroup
// degenerates and twist time / period are undefined.
class CentralElement : public Error {
 public:
  using Error::Error;
};

class UnsupportedSurface : public Error {
 public:
  using Error::Error;
};

class InvalidWord : public Error {
 public:
  using Error::Error;
};

class MissingVariable : public Error {
 public:
  using Error::Error;
};

class SurfaceMismatch : public Error {
 public:
  using Error::Error;
};

// Rejection sampling exhausted its proposal budget: the fiber is empty or
// the tolerance window is too thin to hit.
class FiberEmptyOrThin : public Error {
 public:
  using Error::Error;
};

class TrivialWalkGroup : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace su2erg
