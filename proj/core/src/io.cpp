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

#include "subseq/io.hpp"

#include <cstdio>
#include <sstream>

#include "subseq/errors.hpp"

namespace subseq::io {

Json small_integer(const Integer& v) {
  if (sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) return Json(to_u64(v));
  return Json(v.get_str());
}

Integer parse_small_integer(const Json& j) {
  if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) return -from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
    return from_u64(static_cast<std::uint64_t>(v));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json to_json(const SubseqProfile& p) {
  Json j;
  j["total"] = to_string(p.total());
  j["pA_start"] = to_string(p.pA_start);
  j["pB_start"] = to_string(p.pB_start);
  j["pA_end"] = to_string(p.pA_end);
  j["pB_end"] = to_string(p.pB_end);
  return j;
}

Json to_json(const CoprimePair& p) {
  Json j;
  j["a"] = to_string(p.a());
  j["b"] = to_string(p.b());
  return j;
}

Json to_json(const ContinuedFraction& cf) {
  Json j = Json::array();
  for (const auto& q : cf.quotients) j.push_back(small_integer(q));
  return j;
}

Json to_json(const RunLengthWord& w) {
  Json j;
  j["first"] = w.first ? Json(std::string(1, to_char(*w.first))) : Json(nullptr);
  j["runs"] = Json::array();
  for (const auto& r : w.runs) j["runs"].push_back(small_integer(r));
  return j;
}

Json to_json(const ShortestWordResult& r) {
  Json j;
  j["n"] = std::to_string(r.n);
  j["best_a"] = std::to_string(r.best_a);
  j["word_length"] = r.word_length;
  j["lower_bound"] = r.lower_bound;
  j["candidates_scanned"] = r.candidates_scanned;
  j["runs"] = to_json(r.word);
  return j;
}

Json to_json(const ZarembaResult& r) {
  Json j;
  j["N"] = r.modulus;
  j["bound"] = r.bound;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["cf"] = r.cf ? to_json(*r.cf) : Json(nullptr);
  return j;
}

Json to_json(const SNStats& s) {
  Json j;
  j["N"] = s.modulus;
  j["sample_size"] = s.sample_size;
  j["min_S"] = s.min_s;
  j["argmin_a"] = s.argmin_a;
  j["median_S"] = s.median_s;
  j["mean_S"] = format_fixed(s.mean_s);
  j["sum_S"] = s.sum_s;
  j["reference"] = format_fixed(s.reference);
  return j;
}

Json to_json(const ExtensionReport& r) {
  Json j;
  j["base"] = r.base.str();
  j["n"] = r.n;
  j["best_t"] = r.best_t.str();
  j["best_count"] = to_string(r.best_count);
  j["unique"] = r.unique;
  j["maximizers"] = r.maximizers;
  return j;
}

Json to_json(const ApproxReport& r) {
  Json j;
  j["N"] = r.modulus;
  j["a"] = r.a;
  j["delta"] = to_string(r.delta);
  j["delta_decimal"] = format_sci(r.delta.get_d());
  j["delta_error"] = format_sci(r.delta_error.get_d());
  j["word_length"] = r.word_length;
  j["max_quotient"] = r.max_quotient;
  j["term1"] = format_fixed(r.bound_term1);
  j["term2"] = format_fixed(r.bound_term2);
  j["ratio"] = format_fixed(r.ratio);
  return j;
}

Json to_json(const BoundedQuotientTarget& t) {
  Json j;
  j["prefix"] = t.prefix();
  j["tail"] = t.tail() ? Json(*t.tail()) : Json(nullptr);
  j["C"] = t.bound();
  return j;
}

ContinuedFraction cf_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("continued fraction must be a JSON array");
  ContinuedFraction cf;
  for (const auto& q : j) cf.quotients.push_back(parse_small_integer(q));
  return cf;
}

RunLengthWord runs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("first") || !j.contains("runs")) {
    throw InvalidArgument("run-length word must be {\"first\":..., \"runs\":[...]}");
  }
  RunLengthWord w;
  const auto& first = j.at("first");
  if (!first.is_null()) {
    const auto s = first.get<std::string>();
    if (s != "A" && s != "B") throw InvalidArgument("run-length word: first must be \"A\", \"B\" or null");
    w.first = s == "A" ? Letter::A : Letter::B;
  }
  for (const auto& r : j.at("runs")) {
    Integer v = parse_small_integer(r);
    if (v < 1) throw InvalidArgument("run-length word: runs must be positive");
    w.runs.push_back(std::move(v));
  }
  if (w.first.has_value() == w.runs.empty()) {
    throw InvalidArgument("run-length word: first is null exactly when runs is empty");
  }
  return w;
}

BoundedQuotientTarget target_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("target must be a JSON object");
    auto prefix = j.at("prefix").get<std::vector<std::uint64_t>>();
    std::optional<std::vector<std::uint64_t>> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) tail = j.at("tail").get<std::vector<std::uint64_t>>();
    return BoundedQuotientTarget(std::move(prefix), std::move(tail), j.at("C").get<std::uint64_t>());
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed target: ") + e.what());
  }
}

std::string format_cf(const ContinuedFraction& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
    if (i == 1) {
      out += "; ";
    } else if (i > 1) {
      out += ", ";
    }
    out += cf.quotients[i].get_str();
  }
  return out + "]";
}

std::string format_runs(const RunLengthWord& w) {
  if (!w.first) return "0";
  std::string out;
  Letter l = *w.first;
  for (std::size_t i = 0; i < w.runs.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_char(l);
    out += '^';
    out += w.runs[i].get_str();
    l = complement(l);
  }
  return out;
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string format_sci(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", digits, v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_line(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    os << csv_escape(fields[i]);
  }
  os << '\n';
}

}  // namespace

std::string CsvTable::str() const {
  std::ostringstream os;
  write_csv_line(os, header);
  for (const auto& row : rows) write_csv_line(os, row);
  return os.str();
}

std::vector<std::string> scan_csv_header() {
  return {"N", "bound", "witness_a", "s_min", "s_median", "s_mean", "reference"};
}

std::vector<std::string> scan_csv_row(const ZarembaResult& z, const SNStats* stats) {
  std::vector<std::string> row{std::to_string(z.modulus), std::to_string(z.bound),
                               z.witness ? std::to_string(*z.witness) : std::string()};
  if (stats != nullptr) {
    row.push_back(std::to_string(stats->min_s));
    row.push_back(std::to_string(stats->median_s));
    row.push_back(format_fixed(stats->mean_s));
    row.push_back(format_fixed(stats->reference));
  } else {
    row.insert(row.end(), 4, std::string());
  }
  return row;
}

std::vector<std::string> approx_csv_header() {
  return {"N", "a", "delta", "delta_decimal", "word_length", "term1", "term2", "ratio", "max_quotient"};
}

std::vector<std::string> approx_csv_row(const ApproxReport& r) {
  return {std::to_string(r.modulus),     std::to_string(r.a),         to_string(r.delta),
          format_sci(r.delta.get_d()),   std::to_string(r.word_length), format_fixed(r.bound_term1),
          format_fixed(r.bound_term2),   format_fixed(r.ratio),       std::to_string(r.max_quotient)};
}

}  // namespace subseq::io
