#pragma once

#include <stdexcept>
#include <string>

namespace cwts {

// Error categories map 1:1 onto CLI exit codes (see tools/main.cpp):
// InputError -> 2, NumericalError -> 3, NetworkError -> 4.
// Every throw site tags the originating module so failures surface with
// provenance, e.g. "data-io: duplicate date 2008-09-15".

class Error : public std::runtime_error {
 public:
  Error(const std::string& module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(module) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  NetworkError(const std::string& module, const std::string& what, int status = 0)
      : Error(module, what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_ = 0;
};

}  // namespace cwts
