// Copyright 2026 The amis library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMIS_ERRORS_HPP
#define AMIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amis {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: dimension mismatch, bad parameter value, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Every particle carries zero weight; the proposal missed the target support.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// A covariance estimate could not be factorized, even with ridge jitter.
class DegenerateCovarianceError : public Error {
 public:
  using Error::Error;
};

/// The weighted sample carries too little information for the requested fit.
class TooFewEffectivePointsError : public Error {
 public:
  using Error::Error;
};

/// Model selection failed for every candidate.
class SelectionError : public Error {
 public:
  using Error::Error;
};

/// Proposal initialization never found positive ESS on the target.
class InitializationError : public Error {
 public:
  using Error::Error;
};

/// Proposal adaptation failed (wraps the underlying fit error).
class AdaptationError : public Error {
 public:
  using Error::Error;
};

/// Config file error, with the 1-based line the problem was found on
/// (0 when no location is known).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0) : Error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace amis

#endif  // AMIS_ERRORS_HPP
