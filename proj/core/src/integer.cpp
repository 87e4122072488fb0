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

#include "subseq/integer.hpp"

#include <limits>

#include "subseq/errors.hpp"

namespace subseq {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw InvalidArgument("expected an integer, got empty string");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::uint64_t to_u64(const Integer& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw InvalidArgument("value " + v.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace subseq
