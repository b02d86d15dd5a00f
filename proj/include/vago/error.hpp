// Copyright 2026 The Vago Authors.
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

#ifndef VAGO_ERROR_HPP
#define VAGO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vago {

// Base class for all errors raised by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (lexicon, corpus, JSON-lines annotations, ...).
struct ParseError : Error {
  using Error::Error;
};

// A requested key (sentence id, embedding id) is not available.
struct LookupError : Error {
  using Error::Error;
};

// Vector/matrix dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// Invalid configuration value (zero dimension, empty grid, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Data unsuitable for the requested operation (single-class training
// set, empty sentence, ...).
struct DataError : Error {
  using Error::Error;
};

// Training failure (non-finite loss).
struct TrainError : Error {
  using Error::Error;
};

}  // namespace vago

#endif  // VAGO_ERROR_HPP
