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

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "subseq/approx.hpp"
#include "subseq/euclid_cf.hpp"
#include "subseq/extremal.hpp"
#include "subseq/search.hpp"
#include "subseq/word.hpp"

// JSON conventions:
//  * counts and pair entries (arbitrary precision) are decimal strings;
//  * continued-fraction quotients and run lengths are JSON numbers, falling
//    back to decimal strings for values beyond 64 bits;
//  * exact rationals are strings "p/q" (or "p" when integral).
namespace subseq::io {

using Json = nlohmann::ordered_json;

Json small_integer(const Integer& v);
Integer parse_small_integer(const Json& j);

Json to_json(const SubseqProfile& p);
Json to_json(const CoprimePair& p);
Json to_json(const ContinuedFraction& cf);
Json to_json(const RunLengthWord& w);
Json to_json(const ShortestWordResult& r);
Json to_json(const ZarembaResult& r);
Json to_json(const SNStats& s);
Json to_json(const ExtensionReport& r);
Json to_json(const ApproxReport& r);
Json to_json(const BoundedQuotientTarget& t);

ContinuedFraction cf_from_json(const Json& j);
RunLengthWord runs_from_json(const Json& j);
/// {"prefix":[0,...], "tail":[...]|null, "C":int}
BoundedQuotientTarget target_from_json(const Json& j);

/// "[c0; c1, c2]"
std::string format_cf(const ContinuedFraction& cf);
/// "A^3 B^1 A^2", or "0" for the empty word.
std::string format_runs(const RunLengthWord& w);
/// Fixed-precision decimals used in CSV and plain output.
std::string format_fixed(double v, int digits = 6);
std::string format_sci(double v, int digits = 6);

/// Rows of a CSV document with a fixed header.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

/// zaremba-scan row schema: N,bound,witness_a,s_min,s_median,s_mean,reference.
/// `stats` may be null (N < 3 or statistics disabled); the columns are then empty.
std::vector<std::string> scan_csv_header();
std::vector<std::string> scan_csv_row(const ZarembaResult& z, const SNStats* stats);

/// approx row schema: N,a,delta,delta_decimal,word_length,term1,term2,ratio,max_quotient.
std::vector<std::string> approx_csv_header();
std::vector<std::string> approx_csv_row(const ApproxReport& r);

}  // namespace subseq::io
