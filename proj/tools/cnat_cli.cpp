// cnat: validate, enumerate, transform, and render complete non-ambiguous
// trees from the command line. Exit codes: 0 success/pass, 1 domain failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cnat/core.hpp"
#include "cnat/enumerate.hpp"
#include "cnat/io.hpp"
#include "cnat/transform.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

int fail(const cnat::Error& error) {
  std::cerr << "error: " << error.message() << "\n";
  return error.code == cnat::ErrorCode::parse_error ? exit_usage : exit_domain;
}

struct Input {
  std::ifstream file;
  std::istream* stream = nullptr;
};

bool open_input(const std::string& path, Input& in) {
  if (path.empty() || path == "-") {
    in.stream = &std::cin;
    return true;
  }
  in.file.open(path);
  if (!in.file) {
    std::cerr << "error: cannot open " << path << "\n";
    return false;
  }
  in.stream = &in.file;
  return true;
}

void emit(const cnat::Cnat& t, const std::string& format) {
  std::cout << (format == "record" ? cnat::to_record(t)
                                   : cnat::to_matrix_text(t));
}

template <class Fn>
int with_single_tree(const std::string& path, Fn&& fn) {
  Input in;
  if (!open_input(path, in)) return exit_usage;
  auto next = cnat::read_next_cnat(*in.stream);
  if (!next) {
    std::cerr << "error: no input record\n";
    return exit_usage;
  }
  if (!next->ok()) return fail(next->error());
  return fn(next->value());
}

int cmd_enum(int n, const std::string& format, int jobs, int bound) {
  cnat::EnumerateOptions opt{bound, jobs};
  std::mutex mutex;
  bool first = true;
  auto sink = [&](const cnat::Cnat& t) {
    const std::string text =
        format == "record" ? cnat::to_record(t) : cnat::to_matrix_text(t);
    std::scoped_lock lock(mutex);
    if (format != "record") {
      if (!first) std::cout << "\n";  // blank line between matrix blocks
      first = false;
    }
    std::cout << text;
  };
  auto total = cnat::enumerate_cnats(n, sink, opt);
  if (!total.ok()) return fail(total.error());
  std::cout.flush();
  return exit_ok;
}

int cmd_count(int n, int jobs, int bound) {
  auto counts = cnat::count_by_sign(n, {bound, jobs});
  if (!counts.ok()) return fail(counts.error());
  std::cout << "T_" << n << " = " << counts.value().total() << "\n";
  std::cout << "T(" << n << ";+1) = " << counts.value().plus << "\n";
  std::cout << "T(" << n << ";-1) = " << counts.value().minus << "\n";
  return exit_ok;
}

int cmd_verify(int n, int jobs, int bound) {
  auto verified = cnat::verify_theorem(n, {bound, jobs});
  if (!verified.ok()) return fail(verified.error());
  const cnat::TheoremReport& report = verified.value();
  std::cout << "T_" << n << " = " << report.observed.total() << "\n";
  if (!report.applicable) {
    std::cout << "verdict: not applicable (the parity split addresses n > 1)\n";
    return exit_ok;
  }
  std::cout << "T(" << n << ";+1) = " << report.observed.plus
            << " (expected " << report.expected_plus << ")\n";
  std::cout << "T(" << n << ";-1) = " << report.observed.minus
            << " (expected " << report.expected_minus << ")\n";
  std::cout << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
  return report.pass ? exit_ok : exit_domain;
}

int cmd_phi(const std::string& path, const std::string& format) {
  return with_single_tree(path, [&](const cnat::Cnat& t) {
    const auto pair = cnat::active_pair(t);
    if (!pair) {
      std::cerr << "fixed point (all leaves short)\n";
      emit(t, format);
    } else {
      std::cerr << "active pair " << cnat::to_string(pair->first) << " <-> "
                << cnat::to_string(pair->second)
                << (pair->side == cnat::Side::left ? " [left]" : " [right]")
                << "\n";
      emit(cnat::phi(t), format);
    }
    return exit_ok;
  });
}

int cmd_reduce(const std::string& path, const std::string& format) {
  return with_single_tree(path, [&](const cnat::Cnat& t) {
    auto reduced = cnat::reduce(t);
    if (!reduced.ok()) return fail(reduced.error());
    emit(reduced.value(), format);
    return exit_ok;
  });
}

int cmd_expand(const std::string& path, const std::string& format) {
  return with_single_tree(path, [&](const cnat::Cnat& t) {
    emit(cnat::expand(t), format);
    return exit_ok;
  });
}

int cmd_show(const std::string& path, bool tikz) {
  return with_single_tree(path, [&](const cnat::Cnat& t) {
    std::cout << (tikz ? cnat::render_tikz(t) : cnat::render_ascii(t));
    return exit_ok;
  });
}

void print_taxonomy(const cnat::Cnat& t) {
  for (const cnat::LeafInfo& leaf : cnat::classify_leaves(t))
    std::cout << "  leaf " << cnat::to_string(leaf.dot) << ": "
              << (leaf.side == cnat::Side::left ? "left" : "right") << " "
              << (leaf.is_short ? "short" : "long") << "\n";
}

int cmd_check(const std::string& path) {
  Input in;
  if (!open_input(path, in)) return exit_usage;

  bool all_valid = true;
  bool any = false;
  for (;;) {
    auto raw = cnat::read_next_raw(*in.stream);
    if (!raw) break;
    if (!raw->ok()) return fail(raw->error());  // cannot resync after this
    if (any) std::cout << "\n";
    any = true;

    const cnat::RawRecord& record = raw->value();
    auto grid = cnat::validate_nat(record.rows, record.cols, record.dots);
    if (!grid.ok()) {
      std::cout << "invalid: " << grid.error().message() << "\n";
      all_valid = false;
      continue;
    }
    auto tree = cnat::validate_cnat(grid.value());
    if (!tree.ok()) {
      std::cout << "NAT " << record.rows << "x" << record.cols
                << ", not a CNAT: " << tree.error().message() << "\n";
      all_valid = false;
      continue;
    }
    const cnat::Cnat& t = tree.value();
    const cnat::Permutation pi = cnat::leaf_permutation(t);
    const int s = cnat::sign(pi);
    std::cout << "CNAT size " << t.size() << ", π = " << to_string(pi)
              << ", sign " << (s > 0 ? "+1" : "-1") << "\n";
    print_taxonomy(t);
  }
  if (!any) {
    std::cerr << "error: no input record\n";
    return exit_usage;
  }
  return all_valid ? exit_ok : exit_domain;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"toolkit for complete non-ambiguous trees (CNATs)"};
  app.require_subcommand(1);
  app.fallthrough();

  int bound = cnat::default_size_bound;
  app.add_option("--bound", bound,
                 "size bound for enumeration commands (env CNAT_BOUND)")
      ->envname("CNAT_BOUND")
      ->check(CLI::PositiveNumber);

  int exit_code = exit_ok;

  auto* enum_cmd =
      app.add_subcommand("enum", "stream every CNAT of the given size");
  int enum_n = 1, enum_jobs = 1;
  std::string enum_format = "matrix";
  enum_cmd->add_option("n", enum_n, "size")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--format", enum_format, "matrix or record")
      ->check(CLI::IsMember({"matrix", "record"}));
  enum_cmd
      ->add_option("--jobs", enum_jobs,
                   "worker threads; output order is canonical only with 1")
      ->check(CLI::PositiveNumber);
  enum_cmd->callback(
      [&] { exit_code = cmd_enum(enum_n, enum_format, enum_jobs, bound); });

  auto* count_cmd =
      app.add_subcommand("count", "print T_n and the sign tally");
  int count_n = 1, count_jobs = 1;
  count_cmd->add_option("n", count_n, "size")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--jobs", count_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  count_cmd->callback([&] { exit_code = cmd_count(count_n, count_jobs, bound); });

  auto* verify_cmd = app.add_subcommand(
      "verify", "check the sign tally against the closed forms");
  int verify_n = 2, verify_jobs = 1;
  verify_cmd->add_option("n", verify_n, "size")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->callback(
      [&] { exit_code = cmd_verify(verify_n, verify_jobs, bound); });

  const std::string input_help = "input file (default: stdin)";
  const std::string format_help = "output format: matrix or record";

  auto* phi_cmd = app.add_subcommand(
      "phi", "apply the sign-reversing involution to one CNAT");
  std::string phi_path = "-", phi_format = "matrix";
  phi_cmd->add_option("file", phi_path, input_help);
  phi_cmd->add_option("--format", phi_format, format_help)
      ->check(CLI::IsMember({"matrix", "record"}));
  phi_cmd->callback([&] { exit_code = cmd_phi(phi_path, phi_format); });

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "halve an all-short CNAT of even size");
  std::string reduce_path = "-", reduce_format = "matrix";
  reduce_cmd->add_option("file", reduce_path, input_help);
  reduce_cmd->add_option("--format", reduce_format, format_help)
      ->check(CLI::IsMember({"matrix", "record"}));
  reduce_cmd->callback(
      [&] { exit_code = cmd_reduce(reduce_path, reduce_format); });

  auto* expand_cmd = app.add_subcommand(
      "expand", "double a CNAT into an all-short one of twice the size");
  std::string expand_path = "-", expand_format = "matrix";
  expand_cmd->add_option("file", expand_path, input_help);
  expand_cmd->add_option("--format", expand_format, format_help)
      ->check(CLI::IsMember({"matrix", "record"}));
  expand_cmd->callback(
      [&] { exit_code = cmd_expand(expand_path, expand_format); });

  auto* show_cmd = app.add_subcommand("show", "render one CNAT");
  std::string show_path = "-";
  bool show_tikz = false;
  show_cmd->add_option("file", show_path, input_help);
  show_cmd->add_flag("--tikz", show_tikz, "emit a TikZ picture instead of ASCII");
  show_cmd->callback([&] { exit_code = cmd_show(show_path, show_tikz); });

  auto* check_cmd = app.add_subcommand(
      "check", "validate records and report status, permutation, sign, leaves");
  std::string check_path = "-";
  check_cmd->add_option("file", check_path, input_help);
  check_cmd->callback([&] { exit_code = cmd_check(check_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_code;
}
