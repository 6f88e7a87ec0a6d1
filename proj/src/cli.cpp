#include "domino/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "domino/count2d.hpp"
#include "domino/errors.hpp"
#include "domino/identities.hpp"
#include "domino/region_spec.hpp"
#include "domino/sequences.hpp"
#include "domino/solid3d.hpp"

namespace domino::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountArgs {
  std::string spec;
  bool json = false;
};

struct SeqArgs {
  std::string family;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::string method = "iter";
  bool json = false;
};

struct VerifyArgs {
  std::string suite;
  std::optional<std::int64_t> max;
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_k;
  bool json = false;
};

struct RenderArgs {
  std::string spec;
  std::size_t limit = 10;
};

struct BfileArgs {
  std::string family;
  std::optional<std::int64_t> from;
  std::int64_t to = 0;
};

int cmd_count(const CountArgs& args, std::ostream& out) {
  const Shape shape = parse_shape(args.spec);
  std::size_t cells = 0;
  BigCount count;
  if (const auto* region = std::get_if<Region2D>(&shape)) {
    cells = region->size();
    count = count_tilings(*region);
  } else {
    const auto& prism = std::get<Prism3D>(shape);
    cells = prism.size();
    count = count_bricks(prism);
  }

  if (args.json) {
    nlohmann::ordered_json record;
    record["spec"] = args.spec;
    record["cells"] = cells;
    record["count"] = to_decimal(count);
    out << record.dump() << '\n';
  } else {
    out << to_decimal(count) << '\n';
  }
  return kExitOk;
}

int cmd_seq(const SeqArgs& args, std::ostream& out) {
  const Family& fam = family(args.family);
  if (args.from < fam.offset())
    throw UsageError("family " + fam.token + " starts at n = " + std::to_string(fam.offset()));
  if (args.to < args.from) throw UsageError("empty range");

  std::vector<BigCount> values;
  if (args.method == "iter") {
    auto all = rec_eval_range(fam.recurrence, args.to);
    values.assign(all.begin() + (args.from - fam.offset()), all.end());
  } else if (args.method == "matpow") {
    for (auto n = args.from; n <= args.to; ++n) values.push_back(rec_eval_matpow(fam.recurrence, n));
  } else if (args.method == "closed") {
    if (!fam.closed_form) throw UsageError("family " + fam.token + " has no closed form");
    for (auto n = args.from; n <= args.to; ++n) values.push_back(closed_eval(*fam.closed_form, n));
  } else {
    throw UsageError("unknown method '" + args.method + "' (expected iter, matpow or closed)");
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto n = args.from + static_cast<std::int64_t>(i);
    if (args.json) {
      nlohmann::ordered_json record;
      record["family"] = fam.token;
      record["n"] = n;
      record["value"] = to_decimal(values[i]);
      out << record.dump() << '\n';
    } else {
      out << n << '\t' << to_decimal(values[i]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  Report report;
  const std::string& s = args.suite;
  if (s == "table1") {
    report = verify_table1(args.max.value_or(10));
  } else if (s == "table2") {
    report = verify_table2(args.max.value_or(10));
  } else if (s == "thm21") {
    report = verify_thm21(args.max_n.value_or(5), args.max_k.value_or(5));
  } else if (s == "crux") {
    report = verify_crux(args.max.value_or(200));
  } else if (s == "thm32") {
    report = verify_thm32(args.max.value_or(200));
  } else if (s == "tauraso") {
    report = verify_tauraso(args.max_n.value_or(10), args.max_k.value_or(10), args.max.value_or(200));
  } else if (s == "recurrences") {
    report = verify_coupled_recurrences(args.max.value_or(500));
  } else if (s == "all") {
    report = verify_all();
  } else {
    throw UsageError("unknown suite '" + s + "'");
  }
  report.sort();
  out << (args.json ? report.to_json_lines() : report.to_text());
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_render(const RenderArgs& args, std::ostream& out) {
  const Shape shape = parse_shape(args.spec);
  const auto* region = std::get_if<Region2D>(&shape);
  if (!region) throw UsageError("render needs a 2D region");
  if (region->empty()) return kExitOk;
  const auto tilings = enumerate_tilings(*region, args.limit);
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    if (i) out << '\n';
    out << render_tiling_ascii(tilings[i]) << '\n';
  }
  return kExitOk;
}

int cmd_bfile(const BfileArgs& args, std::ostream& out) {
  const Family& fam = family(args.family);
  const auto from = args.from.value_or(fam.offset());
  if (from < fam.offset())
    throw UsageError("family " + fam.token + " starts at n = " + std::to_string(fam.offset()));
  if (args.to < from) throw UsageError("empty range");
  const auto values = rec_eval_range(fam.recurrence, args.to);
  for (auto n = from; n <= args.to; ++n) out << n << ' ' << to_decimal(values[n - fam.offset()]) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domino and brick tiling counts"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count tilings of a region or prism");
  count->add_option("spec", count_args.spec, "rect:R,C a:n b:n c:n l2:n,k l3:n,k[,NE|NW|SE|SW] tower:n mtower:n @file")
      ->required();
  count->add_flag("--json", count_args.json, "Emit {spec, cells, count}");

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "Print a range of a sequence family");
  seq->add_option("family", seq_args.family, "F A B C T M L3 L2D")->required();
  seq->add_option("from", seq_args.from)->required();
  seq->add_option("to", seq_args.to)->required();
  seq->add_option("--method", seq_args.method, "iter, matpow or closed")->capture_default_str();
  seq->add_flag("--json", seq_args.json);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the tables and identities");
  verify->add_option("suite", verify_args.suite, "table1 table2 thm21 crux thm32 tauraso recurrences all")
      ->required();
  verify->add_option("--max", verify_args.max, "Upper index for single-parameter suites");
  verify->add_option("--max-n", verify_args.max_n);
  verify->add_option("--max-k", verify_args.max_k);
  verify->add_flag("--json", verify_args.json, "One JSON record per check");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw tilings of a small region");
  render->add_option("spec", render_args.spec)->required();
  render->add_option("--limit", render_args.limit)->capture_default_str()->check(CLI::PositiveNumber);

  BfileArgs bfile_args;
  auto* bfile = app.add_subcommand("bfile", "Write an OEIS-style b-file");
  bfile->add_option("family", bfile_args.family)->required();
  bfile->add_option("--from", bfile_args.from, "Defaults to the family's first index");
  bfile->add_option("--to", bfile_args.to)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(count_args, out);
    if (*seq) return cmd_seq(seq_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*render) return cmd_render(render_args, out);
    if (*bfile) return cmd_bfile(bfile_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace domino::cli
