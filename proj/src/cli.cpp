#include "z4seq/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "z4seq/analysis.hpp"
#include "z4seq/error.hpp"
#include "z4seq/identities.hpp"
#include "z4seq/lfsr.hpp"
#include "z4seq/numtheory.hpp"
#include "z4seq/sequence.hpp"
#include "z4seq/trace_repr.hpp"

namespace z4seq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::string describe(const Error& e) {
  return std::string(error_name(e.code())) + ": " + e.what();
}

}  // namespace

void validate(const SweepConfig& c) {
  if (c.p_max < 5 || c.q_max < 5) {
    throw Error(ErrorCode::InvalidArgument, "p-max and q-max must be at least 5");
  }
  if (c.r_max < 1 || c.r_max > 64) {
    throw Error(ErrorCode::InvalidArgument, "r-max must lie in [1, 64]");
  }
  if (c.format != "csv" && c.format != "json" && c.format != "text") {
    throw Error(ErrorCode::InvalidArgument, "unknown format " + c.format);
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sweep_pairs(const SweepConfig& c) {
  validate(c);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t p = 3; p <= c.p_max; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = 3; q <= c.q_max; q += 2) {
      if (!is_prime(q) || !is_admissible(p, q)) continue;
      if (mult_order(2, p * q) > static_cast<std::uint64_t>(c.r_max)) continue;
      pairs.emplace_back(p, q);
    }
  }
  return pairs;
}

SweepRow sweep_one(std::uint64_t p, std::uint64_t q, int r_max) {
  SweepRow row;
  row.p = p;
  row.q = q;
  const auto start = std::chrono::steady_clock::now();
  try {
    row.report = analyze(build_system(p, q), r_max);
  } catch (const Error& e) {
    row.error = describe(e);
  } catch (const std::exception& e) {
    row.error = std::string("InternalError: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const SweepRow&)>& emit) {
  const auto pairs = sweep_pairs(config);
  std::vector<std::optional<SweepRow>> results(pairs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(pairs.size())));

  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers && !pairs.empty(); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < pairs.size(); i = next++) {
        SweepRow row = sweep_one(pairs[i].first, pairs[i].second, config.r_max);
        {
          std::lock_guard lock(mu);
          results[i] = std::move(row);
        }
        ready.notify_all();
      }
    });
  }

  SweepSummary summary;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    const SweepRow row = *results[i];
    lock.unlock();
    ++summary.pairs;
    if (!row.report) {
      ++summary.errors;
    } else if (row.agree()) {
      ++summary.agree;
    } else {
      ++summary.disagree;
    }
    emit(row);
  }
  return summary;
}

namespace {

struct Options {
  std::uint64_t p = 0, q = 0;
  std::string method = "all";
  std::string format = "text";
  std::string out;
  int r_max = 64;
  std::string source = "dft";
  bool check = false;
  std::uint64_t p_max = 40, q_max = 40;
  unsigned threads = 0;
  bool timing = false;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void require_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv") {
    throw Error(ErrorCode::InvalidArgument, "unknown format " + format);
  }
}

CyclotomicSystem system_from(const Options& o) {
  if (o.p == 0 || o.q == 0) throw Error(ErrorCode::InvalidArgument, "--p and --q are required");
  return build_system(o.p, o.q);
}

int cmd_system(const Options& o, std::ostream& os) {
  const auto s = system_from(o);
  if (o.format == "json") {
    os << system_summary_json(s).dump(2) << '\n';
  } else if (o.format == "csv") {
    const Json j = system_summary_json(s);
    os << "p,q,g,h,e,case,two_class\n"
       << s.p() << ',' << s.q() << ',' << s.g() << ',' << s.h() << ',' << s.e() << ','
       << j["case"].get<std::string>() << ',' << j["two_class"].get<std::string>() << '\n';
  } else {
    os << system_summary_text(s);
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& os) {
  const auto s = system_from(o);
  const auto seq = generate(s);
  if (o.format == "json") {
    Json j;
    j["p"] = s.p();
    j["q"] = s.q();
    j["period"] = seq.period();
    std::string line = to_digit_line(seq);
    line.pop_back();
    j["digits"] = line;
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << to_csv(seq);
  } else {
    os << to_digit_line(seq);
  }
  return kExitOk;
}

int cmd_lc(const Options& o, std::ostream& os) {
  const bool all = o.method == "all";
  if (!all && o.method != "formula" && o.method != "dft" && o.method != "reeds-sloane") {
    throw Error(ErrorCode::InvalidArgument, "unknown method " + o.method);
  }
  const auto s = system_from(o);
  std::optional<std::uint64_t> formula, by_dft, by_rs;
  if (all || o.method == "formula") formula = lc_by_theorem(s);
  if (all || o.method == "dft") {
    by_dft = lc_by_count(dft(generate(s), canonical_context(s, o.r_max)));
  }
  if (all || o.method == "reeds-sloane") by_rs = linear_complexity(generate(s));
  const bool agree = !all || (*formula == *by_dft && *formula == *by_rs);

  auto field = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  if (o.format == "json") {
    Json j;
    j["p"] = s.p();
    j["q"] = s.q();
    j["method"] = o.method;
    if (formula) j["lc_formula"] = *formula;
    if (by_dft) j["lc_dft"] = *by_dft;
    if (by_rs) j["lc_rs"] = *by_rs;
    if (all) j["agree"] = agree;
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "p,q,lc_formula,lc_dft,lc_rs,agree\n"
       << s.p() << ',' << s.q() << ',' << field(formula) << ',' << field(by_dft) << ','
       << field(by_rs) << ',' << (all ? (agree ? "true" : "false") : "") << '\n';
  } else if (all) {
    os << *formula << ' ' << *by_dft << ' ' << *by_rs << ' ' << (agree ? "AGREE" : "DISAGREE")
       << '\n';
  } else {
    os << field(formula) << field(by_dft) << field(by_rs) << '\n';
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_defpoly(const Options& o, std::ostream& os) {
  if (o.source != "dft" && o.source != "formula") {
    throw Error(ErrorCode::InvalidArgument, "unknown source " + o.source);
  }
  const auto s = system_from(o);
  const auto ctx = canonical_context(s, o.r_max);
  const DefiningPolynomial poly =
      o.source == "dft" ? dft(generate(s), ctx) : defining_poly_formula(s, ctx);
  if (o.format == "json") {
    Json j;
    j["p"] = s.p();
    j["q"] = s.q();
    j["ring_degree"] = ctx.ring->degree();
    j["beta"] = to_string(ctx.beta);
    Json terms = Json::array();
    for (std::size_t i = 0; i < poly.period(); ++i) {
      terms.push_back({{"exponent", i},
                       {"label", std::string(label_name(s.label_at(i)))},
                       {"coefficient", to_string(poly.coeffs[i])}});
    }
    j["terms"] = terms;
    os << j.dump(2) << '\n';
  } else {
    const char sep = o.format == "csv" ? ',' : ' ';
    if (o.format == "csv") os << "exponent,label,coefficient\n";
    for (std::size_t i = 0; i < poly.period(); ++i) {
      std::string coeff = to_string(poly.coeffs[i]);
      if (o.format == "csv") coeff = '"' + coeff + '"';
      os << i << sep << label_name(s.label_at(i)) << sep << coeff << '\n';
    }
  }
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& os) {
  const auto s = system_from(o);
  const auto ctx = canonical_context(s, o.r_max);
  if (!o.check) {
    const TraceParams tp = trace_params(s, ctx);
    Json j;
    j["p"] = s.p();
    j["q"] = s.q();
    j["ell"] = tp.ell;
    j["ell_p"] = tp.ell_p;
    j["ell_q"] = tp.ell_q;
    j["epsilon"] = tp.epsilon;
    j["inner_degree"] = tp.inner_degree;
    j["class_rep_bound"] = tp.class_rep_bound;
    j["rho"] = to_string(tp.rho);
    if (o.format == "json") {
      os << j.dump(2) << '\n';
    } else {
      for (const auto& [key, value] : j.items()) {
        os << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
           << '\n';
      }
    }
    return kExitOk;
  }

  const TraceCheck tc = check_trace_repr(s, ctx);
  std::string status = tc.passed ? "PASS" : tc.preconditions_hold ? "FAIL" : "PRECONDITION_FAILED";
  if (o.format == "json") {
    Json j;
    j["p"] = s.p();
    j["q"] = s.q();
    j["status"] = status;
    j["checked"] = tc.checked;
    j["first_mismatch"] = tc.first_mismatch ? Json(*tc.first_mismatch) : Json(nullptr);
    j["precondition_failure"] = tc.precondition_failure;
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "p,q,status,checked,first_mismatch\n"
       << s.p() << ',' << s.q() << ',' << status << ',' << tc.checked << ','
       << (tc.first_mismatch ? std::to_string(*tc.first_mismatch) : "") << '\n';
  } else if (tc.passed) {
    os << "PASS " << tc.checked << '/' << s.n() << '\n';
  } else if (tc.preconditions_hold) {
    os << "FAIL first_mismatch=" << *tc.first_mismatch << '\n';
  } else {
    os << "PRECONDITION_FAILED " << tc.precondition_failure << '\n';
  }
  return tc.passed ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& os) {
  const auto s = system_from(o);
  const auto ctx = canonical_context(s, o.r_max);
  auto checks = check_identities(s, ctx);

  const auto seq = generate(s);
  const auto by_dft = dft(seq, ctx);
  const auto by_formula = defining_poly_formula(s, ctx);
  checks.push_back({"defining-polynomial", by_dft.coeffs == by_formula.coeffs, ""});
  const std::uint64_t lc_f = lc_by_theorem(s);
  const std::uint64_t lc_d = lc_by_count(by_dft);
  const std::uint64_t lc_r = linear_complexity(seq);
  checks.push_back({"linear-complexity", lc_f == lc_d && lc_f == lc_r,
                    std::to_string(lc_f) + " " + std::to_string(lc_d) + " " +
                        std::to_string(lc_r)});

  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    Json j;
    j["p"] = s.p();
    j["q"] = s.q();
    j["checks"] = arr;
    j["all_passed"] = all;
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << "check,passed,detail\n";
    for (const auto& c : checks) {
      os << c.name << ',' << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
    }
  } else {
    for (const auto& c : checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
  }
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& os, std::ostream& err) {
  SweepConfig c;
  c.p_max = o.p_max;
  c.q_max = o.q_max;
  c.r_max = o.r_max;
  c.output_path = o.out;
  c.format = o.format;
  c.threads = o.threads;
  c.timing = o.timing;
  validate(c);

  bool first = true;
  if (c.format == "csv") os << sweep_csv_header(c.timing) << '\n' << std::flush;
  if (c.format == "json") os << '[';
  const SweepSummary sum = run_sweep(c, [&](const SweepRow& row) {
    if (c.format == "csv") {
      os << sweep_csv_row(row, c.timing) << '\n';
    } else if (c.format == "json") {
      os << (first ? "\n  " : ",\n  ") << sweep_row_json(row, c.timing).dump();
    } else {
      os << sweep_row_text(row, c.timing) << '\n';
    }
    os.flush();
    first = false;
  });
  if (c.format == "json") os << (first ? "]\n" : "\n]\n");
  err << "sweep: " << sum.pairs << " pairs, " << sum.agree << " agree, " << sum.disagree
      << " disagree, " << sum.errors << " errors\n";
  return sum.disagree == 0 && sum.errors == 0 ? kExitOk : kExitCheckFailed;
}

constexpr const char* kCsvSchema =
    "sweep CSV columns: p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error "
    "(plus seconds with --timing); error is empty on success";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized cyclotomic quaternary sequences of period pq", "z4seq"};
  app.footer(kCsvSchema);
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  Options o;
  app.add_option("--p", o.p, "first prime");
  app.add_option("--q", o.q, "second prime");
  app.add_option("--method", o.method, "lc method: formula, dft, reeds-sloane or all");
  app.add_option("--format", o.format, "output format: text, json or csv");
  app.add_option("--out", o.out, "write output to this file instead of stdout");
  app.add_option("--r-max", o.r_max, "largest Galois ring degree to build");
  app.add_option("--source", o.source, "defpoly coefficients from dft or formula");
  app.add_flag("--check", o.check, "trace: compare the representation with the sequence");
  app.add_option("--p-max", o.p_max, "sweep: largest p");
  app.add_option("--q-max", o.q_max, "sweep: largest q");
  app.add_option("--threads", o.threads, "sweep: worker threads (0 = all cores)");
  app.add_flag("--timing", o.timing, "sweep: add per-pair seconds to each row");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"system", "print the cyclotomic system summary"},
      {"gen", "print one period of the sequence"},
      {"lc", "linear complexity by formula, DFT count and Reeds-Sloane"},
      {"defpoly", "list (exponent, class label, coefficient) of the defining polynomial"},
      {"trace", "trace representation parameters, or the full check with --check"},
      {"verify", "run the identity suite and cross-checks"},
      {"sweep", "analyze every admissible pair up to --p-max, --q-max"},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    require_format(o.format);
    if (o.r_max < 1 || o.r_max > 64) {
      throw Error(ErrorCode::InvalidArgument, "r-max must lie in [1, 64]");
    }
    Output sink(o.out, out);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "system") return cmd_system(o, *sink);
    if (name == "gen") return cmd_gen(o, *sink);
    if (name == "lc") return cmd_lc(o, *sink);
    if (name == "defpoly") return cmd_defpoly(o, *sink);
    if (name == "trace") return cmd_trace(o, *sink);
    if (name == "verify") return cmd_verify(o, *sink);
    if (name == "sweep") return cmd_sweep(o, *sink, err);
    throw Error(ErrorCode::InternalError, "unhandled command " + name);
  } catch (const Error& e) {
    err << "error: " << describe(e) << '\n';
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << '\n';
  }
  return kExitError;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace z4seq
