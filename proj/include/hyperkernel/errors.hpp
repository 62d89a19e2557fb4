// Copyright 2026 The Hyperkernel Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hyperkernel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument referenced an object that does not exist, or a supplied
/// ordering / subset does not match the hypergraph.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rule was applied to a hypergraph on which it is not applicable.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exponential search was requested on an input above its size guard.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t size, std::size_t limit)
      : Error(what + " (size " + std::to_string(size) + " exceeds limit " +
              std::to_string(limit) + ")"),
        size_(size),
        limit_(limit) {}

  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

}  // namespace hyperkernel
