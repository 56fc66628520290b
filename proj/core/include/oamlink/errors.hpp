// SPDX-License-Identifier: Apache-2.0
//
// oam-link: OAM multiplexed MIMO link simulator
// Copyright (C) 2026 The oam-link contributors
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
// ------------------------------------------------------------------------

#ifndef OAMLINK_ERRORS_HPP
#define OAMLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oam
{
    // Base class of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    class PoleError : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    class NonConvergence : public Error
    {
    public:
        using Error::Error;
    };

    class NoRoot : public Error
    {
    public:
        using Error::Error;
    };

    class UnsupportedState : public Error
    {
    public:
        using Error::Error;
    };

    class IndexOutOfRange : public Error
    {
    public:
        using Error::Error;
    };

    class SingularMatrix : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    class ValidationError : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
