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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <sstream>

#include "subseq/approx.hpp"
#include "subseq/errors.hpp"
#include "subseq/euclid_cf.hpp"
#include "subseq/extremal.hpp"
#include "subseq/io.hpp"
#include "subseq/parallel.hpp"
#include "subseq/search.hpp"
#include "subseq/word.hpp"

namespace subseq::cli {

namespace {

using io::Json;

struct Output {
  Json json;                  // object, or array when `list`
  bool list = false;
  std::optional<io::CsvTable> csv;  // fixed schema; derived from `json` when absent
  std::string plain;
};

std::uint64_t parse_u64(const std::string& text) { return to_u64(parse_integer(text)); }

std::string csv_cell(const Json& v) {
  if (v.is_null()) return {};
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

io::CsvTable csv_from_json(const Output& o) {
  io::CsvTable table;
  const Json& first = o.list ? (o.json.empty() ? Json::object() : o.json.front()) : o.json;
  for (const auto& item : first.items()) table.header.push_back(item.key());
  auto add = [&table](const Json& record) {
    std::vector<std::string> row;
    for (const auto& key : table.header) row.push_back(record.contains(key) ? csv_cell(record.at(key)) : "");
    table.rows.push_back(std::move(row));
  };
  if (o.list) {
    for (const auto& record : o.json) add(record);
  } else {
    add(o.json);
  }
  return table;
}

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return o.json.dump() + "\n";
  if (format == "jsonl") {
    if (!o.list) return o.json.dump() + "\n";
    std::string out;
    for (const auto& record : o.json) out += record.dump() + "\n";
    return out;
  }
  if (format == "csv") return o.csv ? o.csv->str() : csv_from_json(o).str();
  return o.plain;
}

// Word text for output: the letters, or run-length form past the threshold.
Json word_field(const RunLengthWord& w, bool expand) {
  if (!expand && w.length() > from_u64(kExpandThreshold)) return nullptr;
  return w.expand(std::numeric_limits<std::size_t>::max()).str();
}

std::string plain_word(const RunLengthWord& w, bool expand) {
  Json field = word_field(w, expand);
  return field.is_null() ? io::format_runs(w) : field.get<std::string>();
}

BoundedQuotientTarget load_target(const std::string& arg) {
  if (arg == "golden") return BoundedQuotientTarget::golden();
  if (arg == "silver") return BoundedQuotientTarget::silver();
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot read target file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("target is not valid JSON");
  return io::target_from_json(j);
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_u64(item));
  }
  return out;
}

Output scan_output(const std::vector<ZarembaResult>& results, bool with_stats, unsigned jobs) {
  std::vector<std::optional<SNStats>> stats(results.size());
  if (with_stats) {
    stats = parallel_map(results.size(), jobs, [&](std::size_t i) -> std::optional<SNStats> {
      if (results[i].modulus < 3) return std::nullopt;
      return s_stats(results[i].modulus);
    });
  }
  Output o;
  o.list = true;
  o.json = Json::array();
  io::CsvTable table{io::scan_csv_header(), {}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    Json row = io::to_json(results[i]);
    row["stats"] = stats[i] ? io::to_json(*stats[i]) : Json(nullptr);
    o.json.push_back(std::move(row));
    table.rows.push_back(io::scan_csv_row(results[i], stats[i] ? &*stats[i] : nullptr));
    o.plain += "N=" + std::to_string(results[i].modulus) + " witness=" +
               (results[i].witness ? std::to_string(*results[i].witness) : std::string("none"));
    if (results[i].cf) o.plain += " cf=" + io::format_cf(*results[i].cf);
    if (stats[i]) {
      o.plain += " S_min=" + std::to_string(stats[i]->min_s) + " S_median=" + std::to_string(stats[i]->median_s) +
                 " S_mean=" + io::format_fixed(stats[i]->mean_s) + " reference=" + io::format_fixed(stats[i]->reference);
    }
    o.plain += "\n";
  }
  o.csv = std::move(table);
  return o;
}

Output approx_output(const std::vector<ApproxReport>& reports, bool list) {
  Output o;
  o.list = list;
  io::CsvTable table{io::approx_csv_header(), {}};
  Json records = Json::array();
  for (const auto& r : reports) {
    records.push_back(io::to_json(r));
    table.rows.push_back(io::approx_csv_row(r));
    o.plain += "N=" + std::to_string(r.modulus) + " a=" + std::to_string(r.a) + " delta=" +
               io::format_sci(r.delta.get_d()) + " word_length=" + std::to_string(r.word_length) +
               " term1=" + io::format_fixed(r.bound_term1) + " term2=" + io::format_fixed(r.bound_term2) +
               " ratio=" + io::format_fixed(r.ratio) + "\n";
  }
  o.json = list ? records : records.front();
  o.csv = std::move(table);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary words, distinct subsequences and continued fractions", "subseq"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  std::string output_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "jsonl", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output_path, "Write the payload to this file instead of stdout");

  std::vector<std::pair<CLI::App*, std::function<Output()>>> commands;

  // count
  std::string count_word;
  auto* count_cmd = app.add_subcommand("count", "Distinct-subsequence profile of a word");
  count_cmd->add_option("word", count_word, "Word over {A,B}");
  commands.emplace_back(count_cmd, [&] {
    const BinaryWord w = BinaryWord::parse(count_word);
    const SubseqProfile p = profile(w);
    Output o;
    o.json = io::to_json(p);
    o.json["word"] = w.str();
    o.plain = "total=" + to_string(p.total()) + " pA_start=" + to_string(p.pA_start) + " pB_start=" +
              to_string(p.pB_start) + " pA_end=" + to_string(p.pA_end) + " pB_end=" + to_string(p.pB_end) + "\n";
    return o;
  });

  // gen
  std::string gen_a;
  std::string gen_b;
  bool gen_expand = false;
  auto* gen_cmd = app.add_subcommand("gen", "Word gen(a, b) of a coprime pair");
  gen_cmd->add_option("a", gen_a)->required();
  gen_cmd->add_option("b", gen_b)->required();
  gen_cmd->add_flag("--expand", gen_expand, "Print the letters even for very long words");
  commands.emplace_back(gen_cmd, [&] {
    const CoprimePair pair(parse_integer(gen_a), parse_integer(gen_b));
    const RunLengthWord w = gen(pair);
    Output o;
    o.json["a"] = to_string(pair.a());
    o.json["b"] = to_string(pair.b());
    o.json["word"] = word_field(w, gen_expand);
    o.json["length"] = to_string(w.length());
    o.json["runs"] = io::to_json(w);
    o.plain = plain_word(w, gen_expand) + "\n";
    return o;
  });

  // pair
  std::string pair_word;
  auto* pair_cmd = app.add_subcommand("pair", "Coprime pair (P^A, P^B) of a word");
  pair_cmd->add_option("word", pair_word, "Word over {A,B}");
  commands.emplace_back(pair_cmd, [&] {
    const CoprimePair p = word_to_pair(BinaryWord::parse(pair_word));
    Output o;
    o.json = io::to_json(p);
    o.plain = "(" + to_string(p.a()) + ", " + to_string(p.b()) + ")\n";
    return o;
  });

  // cf
  std::string cf_a;
  std::string cf_b;
  std::optional<std::string> cf_word;
  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of a/b, or of the pair of a word");
  cf_cmd->add_option("a", cf_a);
  cf_cmd->add_option("b", cf_b);
  cf_cmd->add_option("--word", cf_word, "Use word_to_cf on this word instead of a/b");
  commands.emplace_back(cf_cmd, [&] {
    ContinuedFraction cf;
    Integer num;
    Integer den;
    if (cf_word) {
      if (!cf_a.empty()) throw InvalidArgument("cf: give either <a> <b> or --word, not both");
      const BinaryWord w = BinaryWord::parse(*cf_word);
      const CoprimePair p = word_to_pair(w);
      cf = word_to_cf(w);
      SUBSEQ_CHECK_INVARIANT(cf == cf_of_rational(p.a(), p.b()), "word_to_cf disagrees with cf_of_rational");
      num = p.a();
      den = p.b();
    } else {
      if (cf_a.empty() || cf_b.empty()) throw InvalidArgument("cf: expected <a> <b> or --word <WORD>");
      num = parse_integer(cf_a);
      den = parse_integer(cf_b);
      cf = cf_of_rational(num, den);
    }
    Output o;
    o.json["num"] = to_string(num);
    o.json["den"] = to_string(den);
    o.json["quotients"] = io::to_json(cf);
    o.json["sum"] = to_string(cf.quotient_sum());
    o.plain = io::format_cf(cf) + "\n";
    return o;
  });

  // shortest
  std::string shortest_n;
  bool shortest_verify = false;
  bool shortest_expand = false;
  auto* shortest_cmd = app.add_subcommand("shortest", "Shortest word with exactly n subsequences");
  shortest_cmd->add_option("n", shortest_n)->required();
  shortest_cmd->add_flag("--verify", shortest_verify, "Cross-check against plain enumeration when n is small enough");
  shortest_cmd->add_flag("--expand", shortest_expand);
  commands.emplace_back(shortest_cmd, [&] {
    const std::uint64_t n = parse_u64(shortest_n);
    const ShortestWordResult r = shortest_word(n);
    Output o;
    o.json = io::to_json(r);
    o.json["word"] = word_field(r.word, shortest_expand);
    Json verified = nullptr;
    if (shortest_verify && n <= kBruteForceShortestMaxN) {
      const BinaryWord oracle = brute_force_shortest(n);
      SUBSEQ_CHECK_INVARIANT(oracle.size() == r.word_length, "shortest_word disagrees with enumeration");
      verified = true;
    }
    o.json["verified"] = verified;
    o.plain = plain_word(r.word, shortest_expand) + "\nlength=" + std::to_string(r.word_length) +
              " best_a=" + std::to_string(r.best_a) + " lower_bound=" + std::to_string(r.lower_bound) +
              " candidates_scanned=" + std::to_string(r.candidates_scanned);
    if (shortest_verify) o.plain += verified.is_null() ? " verified=skipped" : " verified=yes";
    o.plain += "\n";
    return o;
  });

  // countwords
  std::string countwords_n;
  auto* countwords_cmd = app.add_subcommand("countwords", "Number of words with exactly N subsequences");
  countwords_cmd->add_option("N", countwords_n)->required();
  commands.emplace_back(countwords_cmd, [&] {
    const std::uint64_t n = parse_u64(countwords_n);
    const std::uint64_t count = count_words(n);
    Output o;
    o.json["N"] = n;
    o.json["count"] = count;
    o.plain = std::to_string(count) + "\n";
    return o;
  });

  // zaremba / zaremba-scan
  std::string zaremba_n;
  std::uint64_t zaremba_bound = 5;
  bool zaremba_no_stats = false;
  auto* zaremba_cmd = app.add_subcommand("zaremba", "Smallest a with all partial quotients of a/N <= C");
  zaremba_cmd->add_option("N", zaremba_n)->required();
  zaremba_cmd->add_option("--bound", zaremba_bound, "Quotient bound C")->capture_default_str();
  zaremba_cmd->add_flag("--no-stats", zaremba_no_stats, "Leave the S_N statistics columns empty");
  commands.emplace_back(zaremba_cmd, [&] {
    const std::uint64_t n = parse_u64(zaremba_n);
    Output o = scan_output({zaremba_witness(n, zaremba_bound)}, !zaremba_no_stats, 1);
    o.list = false;
    o.json = o.json.front();
    return o;
  });

  std::string scan_lo;
  std::string scan_hi;
  std::uint64_t scan_bound = 5;
  unsigned scan_jobs = 1;
  bool scan_no_stats = false;
  auto* scan_cmd = app.add_subcommand("zaremba-scan", "zaremba for every N in [lo, hi]");
  scan_cmd->add_option("lo", scan_lo)->required();
  scan_cmd->add_option("hi", scan_hi)->required();
  scan_cmd->add_option("--bound", scan_bound, "Quotient bound C")->capture_default_str();
  scan_cmd->add_option("--jobs", scan_jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  scan_cmd->add_flag("--no-stats", scan_no_stats, "Leave the S_N statistics columns empty");
  commands.emplace_back(scan_cmd, [&] {
    const auto results = zaremba_scan(parse_u64(scan_lo), parse_u64(scan_hi), scan_bound, scan_jobs);
    for (const auto& r : results) {
      if (!r.witness) err << "warning: N=" << r.modulus << " has no witness with bound " << r.bound << "\n";
    }
    return scan_output(results, !scan_no_stats, scan_jobs);
  });

  // stats
  std::string stats_n;
  auto* stats_cmd = app.add_subcommand("stats", "Distribution of S_N(a) over units a mod N");
  stats_cmd->add_option("N", stats_n)->required();
  commands.emplace_back(stats_cmd, [&] {
    const SNStats s = s_stats(parse_u64(stats_n));
    Output o;
    o.json = io::to_json(s);
    o.plain = "N=" + std::to_string(s.modulus) + " sample_size=" + std::to_string(s.sample_size) +
              " min_S=" + std::to_string(s.min_s) + " argmin_a=" + std::to_string(s.argmin_a) +
              " median_S=" + std::to_string(s.median_s) + " mean_S=" + io::format_fixed(s.mean_s) +
              " reference=" + io::format_fixed(s.reference) + "\n";
    return o;
  });

  // zword / zcount / lowerbound
  std::string zword_n;
  bool zword_expand = false;
  auto* zword_cmd = app.add_subcommand("zword", "Alternating word ABAB... of length n");
  zword_cmd->add_option("n", zword_n)->required();
  zword_cmd->add_flag("--expand", zword_expand);
  commands.emplace_back(zword_cmd, [&] {
    const std::uint64_t n = parse_u64(zword_n);
    if (n > kExpandThreshold && !zword_expand) {
      throw BudgetExceeded("zword: n above " + std::to_string(kExpandThreshold) + " requires --expand");
    }
    const BinaryWord w = z(n);
    Output o;
    o.json["n"] = n;
    o.json["word"] = w.str();
    o.plain = w.str() + "\n";
    return o;
  });

  std::string zcount_n;
  auto* zcount_cmd = app.add_subcommand("zcount", "P(z_n) = F_{n+3} - 1");
  zcount_cmd->add_option("n", zcount_n)->required();
  commands.emplace_back(zcount_cmd, [&] {
    const std::uint64_t n = parse_u64(zcount_n);
    const Integer count = z_count(n);
    Output o;
    o.json["n"] = n;
    o.json["count"] = to_string(count);
    o.plain = to_string(count) + "\n";
    return o;
  });

  std::string lowerbound_n;
  auto* lowerbound_cmd = app.add_subcommand("lowerbound", "Fibonacci lower bound on the length of a word with n subsequences");
  lowerbound_cmd->add_option("n", lowerbound_n)->required();
  commands.emplace_back(lowerbound_cmd, [&] {
    const Integer n = parse_integer(lowerbound_n);
    const std::uint64_t m = min_length_lower_bound(n);
    Output o;
    o.json["n"] = to_string(n);
    o.json["lower_bound"] = m;
    o.plain = std::to_string(m) + "\n";
    return o;
  });

  // extend
  std::string extend_base;
  std::string extend_n;
  auto* extend_cmd = app.add_subcommand("extend", "Best n-letter extension of a base word, by exhaustive search");
  extend_cmd->add_option("base", extend_base)->required();
  extend_cmd->add_option("n", extend_n)->required();
  commands.emplace_back(extend_cmd, [&] {
    const BinaryWord base = BinaryWord::parse(extend_base);
    const std::uint64_t n = parse_u64(extend_n);
    const bool reflected = !base.empty() && base.back() == Letter::A;
    ExtensionReport r = best_extension(reflected ? base.star() : base, n);
    if (reflected) {
      r.base = base;
      r.best_t = r.best_t.star();
    }
    Output o;
    o.json = io::to_json(r);
    o.json["reflected"] = reflected;
    o.plain = "best_t=" + r.best_t.str() + " best_count=" + to_string(r.best_count) +
              " unique=" + (r.unique ? "true" : "false") + (reflected ? " reflected=true" : "") + "\n";
    return o;
  });

  // mean
  std::string mean_n;
  auto* mean_cmd = app.add_subcommand("mean", "Exact average subsequence count over all words of length n");
  mean_cmd->add_option("n", mean_n)->required();
  commands.emplace_back(mean_cmd, [&] {
    const std::uint64_t n = parse_u64(mean_n);
    const Rational mean = mean_subseq_exact(n);
    const Rational closed = mean_closed_form(n);
    Output o;
    o.json["n"] = n;
    o.json["mean"] = to_string(mean);
    o.json["closed_form"] = to_string(closed);
    o.json["equal"] = mean == closed;
    o.plain = to_string(mean) + "\n";
    return o;
  });

  // approx / approx-sweep
  std::string approx_target;
  std::string approx_n;
  auto* approx_cmd = app.add_subcommand("approx", "Word from the best coprime approximation a/N of a target");
  approx_cmd->add_option("--target", approx_target, "JSON file, inline JSON, or 'golden' / 'silver'")->required();
  approx_cmd->add_option("--N", approx_n)->required();
  commands.emplace_back(approx_cmd, [&] {
    const BoundedQuotientTarget t = load_target(approx_target);
    return approx_output({approx_experiment(t, parse_u64(approx_n))}, false);
  });

  std::string sweep_target;
  std::string sweep_list;
  unsigned sweep_jobs = 1;
  auto* sweep_cmd = app.add_subcommand("approx-sweep", "approx over a comma-separated list of N");
  sweep_cmd->add_option("--target", sweep_target, "JSON file, inline JSON, or 'golden' / 'silver'")->required();
  sweep_cmd->add_option("--N-list", sweep_list, "Comma-separated moduli")->required();
  sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads")->check(CLI::PositiveNumber);
  commands.emplace_back(sweep_cmd, [&] {
    const BoundedQuotientTarget t = load_target(sweep_target);
    return approx_output(bound_sweep(t, parse_list(sweep_list), sweep_jobs), true);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Output result;
    for (auto& [cmd, action] : commands) {
      if (cmd->parsed()) result = action();
    }
    const std::string payload = render(result, format);
    if (output_path.empty()) {
      out << payload;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw InvalidArgument("cannot open output file '" + output_path + "'");
      file << payload;
    }
    return kOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace subseq::cli
