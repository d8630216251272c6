#pragma once

// Commands behind the `gjx` executable. Each command renders its full output
// into a buffer and writes it to `out` only on success; diagnostics go to
// `err`. Exit codes: 0 success, 1 verification or singularity failure,
// 2 input error, 3 zero pivot.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gjx/arrangement.hpp"
#include "gjx/closed_form.hpp"
#include "gjx/engine.hpp"
#include "gjx/error.hpp"
#include "gjx/minors.hpp"
#include "gjx/random.hpp"
#include "gjx/text_format.hpp"
#include "gjx/trace_json.hpp"

namespace gjx::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kInputError = 2,
  kZeroPivot = 3,
};

enum class Format { pretty, json };

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class InputError : public Error {
 public:
  using Error::Error;
};

/// Reads `path`, or standard input for "-".
inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline Matrix load_matrix(const std::string& path, std::istream& in) {
  return parse_matrix(read_source(path, in));
}

/// Runs `body`, mapping library exceptions onto the exit-code contract.
inline int guarded(Io io, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ZeroPivot& e) {
    io.err << "gjx: " << e.what()
           << "; the matrix needs a row/column exchange, try `gjx arrange` or --arrange\n";
    return kZeroPivot;
  } catch (const Singular& e) {
    io.err << "gjx: " << e.what() << '\n';
    return kFailure;
  } catch (const NotSquare& e) {
    io.err << "gjx: " << e.what() << '\n';
    return kFailure;
  } catch (const ParseError& e) {
    io.err << "gjx: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    io.err << "gjx: " << e.what() << '\n';
    return kInputError;
  }
}

// eliminate -----------------------------------------------------------------

inline std::string render_trace_pretty(const Trace& t) {
  std::ostringstream os;
  os << "eliminate: " << t.input().shape() << " matrix, rank " << t.rank() << ", "
     << t.steps().size() << " steps\n";
  os << "A^(0):\n" << render_aligned(t.input());
  for (const Step& s : t.steps()) {
    const std::size_t p = s.level() + 1;
    os << "\nq=" << s.q << ' ' << (s.is_odd() ? "odd" : "even") << " (k=" << s.level()
       << "): ";
    if (s.is_odd()) {
      os << "scale row " << p << " by " << s.op(p, p).str() << '\n';
    } else {
      os << "clear column " << p << " outside row " << p << '\n';
    }
    os << "G_" << s.q << ":\n" << render_aligned(s.op);
    os << "A^(" << s.q << "):\n" << render_aligned(s.result);
  }
  return os.str();
}

inline int cmd_eliminate(const std::string& file, Format format, Io io) {
  return guarded(io, [&] {
    Trace t = eliminate(load_matrix(file, io.in));
    io.out << (format == Format::json ? trace_document(t).dump(2) + "\n"
                                      : render_trace_pretty(t));
    return kSuccess;
  });
}

// verify --------------------------------------------------------------------

struct VerifyOptions {
  Format format = Format::pretty;
  bool arrange_on_zero_pivot = false;
  FormulaMutation mutation = FormulaMutation::none;
};

inline std::string render_report_pretty(const VerifyReport& r) {
  auto count = [](const std::vector<Comparison>& v) {
    std::size_t n = 0;
    for (const auto& c : v) n += c.match ? 1 : 0;
    return std::to_string(n) + "/" + std::to_string(v.size());
  };
  std::size_t holds = 0;
  for (const auto& l : r.product_checks) holds += l.holds ? 1 : 0;

  std::ostringstream os;
  os << "verify: " << r.input.shape() << " matrix, rank " << r.rank << '\n';
  os << "intermediate entries A^(2k), k < " << r.rank << ": " << count(r.comparisons)
     << " match\n";
  os << "operation matrix entries G_q, q <= " << 2 * r.rank << ": "
     << count(r.op_comparisons) << " match\n";
  os << "pivots m_{k+1}/m_k: " << count(r.pivot_comparisons) << " match\n";
  os << "pivot products m_{k+1}: " << holds << "/" << r.product_checks.size() << " hold\n";
  if (auto first = r.first_mismatch()) {
    os << "first mismatch: " << *first << '\n';
    os << "result: MISMATCH\n";
  } else {
    os << "result: VERIFIED\n";
  }
  return os.str();
}

inline int cmd_verify(const std::string& file, const VerifyOptions& options, Io io) {
  return guarded(io, [&] {
    Matrix a = load_matrix(file, io.in);
    std::string preamble;
    std::optional<Trace> trace;
    try {
      trace.emplace(eliminate(a));
    } catch (const ZeroPivot& e) {
      if (!options.arrange_on_zero_pivot) throw;
      ArrangeResult arranged = arrange(a);
      preamble = "arranged after zero pivot: rows " + arranged.row_perm.str() +
                 ", columns " + arranged.col_perm.str() + "\n";
      trace.emplace(eliminate(arranged.arranged));
    }
    VerifyReport report = verify_trace(*trace, options.mutation);
    if (options.format == Format::json) {
      io.out << trace_document(*trace, &report).dump(2) << '\n';
    } else {
      io.out << preamble << render_report_pretty(report);
    }
    return report.all_match ? kSuccess : kFailure;
  });
}

// arrange -------------------------------------------------------------------

inline std::string render_arrangement(const ArrangeResult& r) {
  std::ostringstream os;
  os << "row permutation: " << r.row_perm.str() << '\n';
  os << "column permutation: " << r.col_perm.str() << '\n';
  if (r.swaps.empty()) {
    os << "swaps: none\n";
  } else {
    os << "swaps:\n";
    for (const SwapRecord& s : r.swaps) {
      os << "  k=" << s.level << ' ' << (s.kind == SwapKind::row ? "row" : "col") << ' '
         << s.from << "<->" << s.to << '\n';
    }
  }
  os << "arranged:\n" << render_matrix(r.arranged);
  return os.str();
}

inline int cmd_arrange(const std::string& file, Io io) {
  return guarded(io, [&] {
    io.out << render_arrangement(arrange(load_matrix(file, io.in)));
    return kSuccess;
  });
}

// invert --------------------------------------------------------------------

/// With `arrange_first`, inverts P*A*Q and maps back: A^{-1} = Q (PAQ)^{-1} P.
inline int cmd_invert(const std::string& file, bool arrange_first, Io io) {
  return guarded(io, [&] {
    Matrix a = load_matrix(file, io.in);
    if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
    Matrix inv = a;
    if (arrange_first) {
      if (a.is_zero()) throw Singular(0, a.rows());
      ArrangeResult r = arrange(a);
      inv = r.col_perm.column_matrix() * inverse(r.arranged) * r.row_perm.row_matrix();
    } else {
      inv = inverse(a);
    }
    io.out << render_matrix(inv);
    return kSuccess;
  });
}

// minor ---------------------------------------------------------------------

/// "1,2,5" -> (1,2,5).
inline IndexList parse_index_list(const std::string& text) {
  std::vector<std::size_t> indices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad index list '" + text + "'");
    }
    indices.push_back(std::stoul(item));
  }
  if (indices.empty()) throw InputError("empty index list");
  return IndexList(std::move(indices));
}

inline int cmd_minor(const std::string& file, const std::string& rows,
                     const std::string& cols, Io io) {
  return guarded(io, [&] {
    Matrix a = load_matrix(file, io.in);
    Rational value = minor(a, parse_index_list(rows), parse_index_list(cols));
    io.out << value.str() << '\n';
    return kSuccess;
  });
}

// fuzz ----------------------------------------------------------------------

struct FuzzOptions {
  std::size_t trials = 200;
  std::size_t rows = 5;
  std::size_t cols = 7;
  std::int64_t max_abs = 9;
  std::uint64_t seed = 42;
  std::size_t inner = 0;  // > 0: rows x inner times inner x cols products
};

/// Checks every property for one matrix; returns the failed property or "".
inline std::string check_all_properties(const Matrix& a) {
  ArrangeResult r = arrange(a);
  if (r.arranged.min_dim() <= kArrangementCheckLimit && !is_properly_arranged(r.arranged)) {
    return "is_properly_arranged";
  }
  Trace t = [&] {
    try {
      return eliminate(r.arranged);
    } catch (const ZeroPivot& e) {
      throw PreconditionError(std::string("zero pivot on arranged input: ") + e.what());
    }
  }();
  VerifyReport report = verify_trace(t);
  if (!report.all_match) return "verify_trace: " + report.first_mismatch().value_or("");
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (!lemma_product_check(r.arranged, k, t)) {
      return "lemma_product_check k=" + std::to_string(k);
    }
  }
  if (!pivot_dominance_check(t)) return "pivot_dominance_check";
  if (t.rank() != rank_by_minors(a)) return "rank agreement";
  return "";
}

inline int cmd_fuzz(const FuzzOptions& o, Io io) {
  return guarded(io, [&] {
    if (o.rows < 1 || o.cols < 1) throw InputError("--rows and --cols must be positive");
    if (std::min(o.rows, o.cols) > kDefaultOracleLimit) {
      throw InputError("min(rows, cols) must not exceed " +
                       std::to_string(kDefaultOracleLimit));
    }
    if (o.max_abs < 0) throw InputError("--max-abs must be non-negative");

    std::ostringstream os;
    os << "fuzz: trials=" << o.trials << " rows=" << o.rows << " cols=" << o.cols
       << " max-abs=" << o.max_abs << " seed=" << o.seed;
    if (o.inner > 0) os << " inner=" << o.inner;
    os << " generator=mt19937_64\n";

    MatrixGenerator gen(o.seed);
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    for (std::size_t trial = 1; trial <= o.trials; ++trial) {
      Matrix a = o.inner > 0 ? gen.low_rank_matrix(o.rows, o.cols, o.inner, o.max_abs)
                             : gen.integer_matrix(o.rows, o.cols, o.max_abs);
      if (a.is_zero()) {
        os << "trial " << trial << ": skipped (zero matrix, rank 0)\n";
        ++skipped;
        continue;
      }
      std::string failure;
      try {
        failure = check_all_properties(a);
      } catch (const Error& e) {
        failure = e.what();
      }
      if (failure.empty()) {
        ++passed;
      } else {
        ++failed;
        os << "trial " << trial << ": FAILED " << failure << '\n' << render_matrix(a);
      }
    }
    os << "passed: " << passed << ", skipped: " << skipped << ", failed: " << failed
       << '\n';
    io.out << os.str();
    return failed == 0 ? kSuccess : kFailure;
  });
}

// entry point ---------------------------------------------------------------

inline int run(int argc, const char* const* argv, Io io) {
  CLI::App app{"Exact Gauss-Jordan elimination with closed-form minor verification", "gjx"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"pretty", Format::pretty},
                                              {"json", Format::json}};
  const std::map<std::string, FormulaMutation> mutations{
      {"none", FormulaMutation::none},
      {"flip-upper-sign", FormulaMutation::flip_upper_sign},
      {"invert-pivot-ratio", FormulaMutation::invert_pivot_ratio}};

  std::string file;
  Format format = Format::pretty;
  VerifyOptions verify;
  bool arrange_first = false;
  std::string rows;
  std::string cols;
  FuzzOptions fuzz;

  auto* elim = app.add_subcommand("eliminate", "print every operation matrix and state");
  elim->add_option("FILE", file, "matrix file, '-' for stdin")->required();
  elim->add_option("--format", format)->transform(CLI::CheckedTransformer(formats));

  auto* ver = app.add_subcommand("verify", "check the trace against the closed forms");
  ver->add_option("FILE", file, "matrix file, '-' for stdin")->required();
  ver->add_option("--format", verify.format)->transform(CLI::CheckedTransformer(formats));
  ver->add_flag("--arrange", verify.arrange_on_zero_pivot,
                "arrange the matrix if a zero pivot occurs");
  ver->add_option("--mutate", verify.mutation, "inject a formula defect (testing)")
      ->transform(CLI::CheckedTransformer(mutations))
      ->group("");

  auto* arr = app.add_subcommand("arrange", "permute rows and columns into proper arrangement");
  arr->add_option("FILE", file, "matrix file, '-' for stdin")->required();

  auto* inv = app.add_subcommand("invert", "invert via the product of operation matrices");
  inv->add_option("FILE", file, "matrix file, '-' for stdin")->required();
  inv->add_flag("--arrange", arrange_first, "arrange before eliminating");

  auto* min = app.add_subcommand("minor", "evaluate one minor");
  min->add_option("FILE", file, "matrix file, '-' for stdin")->required();
  min->add_option("--rows", rows, "comma-separated increasing row indices")->required();
  min->add_option("--cols", cols, "comma-separated increasing column indices")->required();

  auto* fz = app.add_subcommand("fuzz", "property checks on seeded random matrices");
  fz->add_option("--trials", fuzz.trials);
  fz->add_option("--rows", fuzz.rows);
  fz->add_option("--cols", fuzz.cols);
  fz->add_option("--max-abs", fuzz.max_abs);
  fz->add_option("--seed", fuzz.seed);
  fz->add_option("--inner", fuzz.inner, "rank bound: multiply thin random factors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return kInputError;
  }

  if (*elim) return cmd_eliminate(file, format, io);
  if (*ver) return cmd_verify(file, verify, io);
  if (*arr) return cmd_arrange(file, io);
  if (*inv) return cmd_invert(file, arrange_first, io);
  if (*min) return cmd_minor(file, rows, cols, io);
  return cmd_fuzz(fuzz, io);
}

}  // namespace gjx::cli
