/*
   Copyright 2026 The subseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace subseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses a decimal string; throws InvalidArgument on anything else.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v);

/// Narrows to uint64_t, throwing InvalidArgument if the value does not fit.
std::uint64_t to_u64(const Integer& v);
Integer from_u64(std::uint64_t v);

}  // namespace subseq
