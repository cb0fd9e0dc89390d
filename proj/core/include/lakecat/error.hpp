// Copyright 2026 The Lakecat Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lakecat {

/// Base of every exception thrown by lakecat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something malformed or violated a precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A referenced node, dataset or file does not exist (or is hidden).
class NotFound : public Error {
 public:
  using Error::Error;
};

/// The operation does not apply to this kind of input.
class NotApplicable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Filesystem or network failure underneath an otherwise valid request.
class StorageError : public Error {
 public:
  using Error::Error;
};

/// Another process holds the writer lease on the store directory.
class StoreLocked : public StorageError {
 public:
  using StorageError::StorageError;
};

/// An event log line failed to parse, validate or replay.
class CorruptLog : public Error {
 public:
  CorruptLog(std::uint64_t seq, const std::string& detail);

  std::uint64_t seq() const noexcept { return seq_; }

 private:
  std::uint64_t seq_;
};

}  // namespace lakecat
