// Copyright 2026 The davoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace davoid
{

/// Base class for every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The requested configuration has no well-defined geometry (e.g. nested spheres).
class GeometryError : public Error
{
public:
    using Error::Error;
};

/// An iterative scheme did not reach its target. Carries the best estimate
/// available at the point of failure.
class NumericError : public Error
{
public:
    NumericError(const std::string& what, double best_estimate, double achieved_error)
        : Error(what), best_estimate_(best_estimate), achieved_error_(achieved_error)
    {
    }

    double best_estimate() const noexcept { return best_estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double best_estimate_;
    double achieved_error_;
};

/// A concentration certificate was requested for a dimension it cannot cover.
class CertificateError : public Error
{
public:
    CertificateError(const std::string& what, int minimal_n) : Error(what), minimal_n_(minimal_n) {}

    /// Smallest dimension for which the requested constant would be admissible.
    int minimal_n() const noexcept { return minimal_n_; }

private:
    int minimal_n_;
};

/// The concentration bound is too weak to certify any dimension.
class NoCertificateError : public Error
{
public:
    using Error::Error;
};

}  // namespace davoid
