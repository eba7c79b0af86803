// pfaffinv: invariants of pfaffian ladder ideals from the command line.
//
// Exit codes: 0 ok, 1 computation error, 2 usage error, 3 verification
// mismatch.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pfaff/engine.hpp"
#include "pfaff/families.hpp"
#include "pfaff/formulas.hpp"
#include "pfaff/hvector.hpp"
#include "pfaff/ladder.hpp"
#include "pfaff/oracle/verify.hpp"
#include "pfaff/render.hpp"
#include "pfaff/report.hpp"

namespace {

using namespace pfaff;

constexpr int kOk = 0;
constexpr int kComputeError = 1;
constexpr int kUsageError = 2;
constexpr int kMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Selector {
  std::string family;
  std::string spec_file;
  std::string t, n, j, k;
};

void add_selector(CLI::App* cmd, Selector& sel, bool ranges) {
  cmd->add_option("--family", sel.family, "family name: I, Ln, M, SM, N, SN, Lk, Ljk, Hjk");
  cmd->add_option("--spec", sel.spec_file, "ladder spec JSON file");
  const char* what = ranges ? "value or inclusive range lo..hi" : "value";
  cmd->add_option("--t", sel.t, what);
  cmd->add_option("--n", sel.n, what);
  cmd->add_option("--j", sel.j, what);
  cmd->add_option("--k", sel.k, what);
}

std::pair<int, int> parse_range(const std::string& flag, const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw UsageError("--" + flag + ": expected an integer or lo..hi, got '" + text + "'");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = to_int(text.substr(0, dots));
    int hi = to_int(text.substr(dots + 2));
    if (lo > hi) throw UsageError("--" + flag + ": empty range '" + text + "'");
    return {lo, hi};
  }
  int v = to_int(text);
  return {v, v};
}

const std::string& selector_value(const Selector& sel, const std::string& name) {
  if (name == "t") return sel.t;
  if (name == "n") return sel.n;
  if (name == "j") return sel.j;
  return sel.k;
}

int& param_slot(FamilyParams& p, const std::string& name) {
  if (name == "t") return p.t;
  if (name == "n") return p.n;
  if (name == "j") return p.j;
  return p.k;
}

Family selected_family(const Selector& sel) {
  try {
    return parse_family(sel.family);
  } catch (const Error&) {
    throw UsageError("--family: unknown family '" + sel.family + "'");
  }
}

FamilyParams single_params(const Selector& sel, Family f) {
  FamilyParams p;
  for (const auto& name : family_param_names(f)) {
    const std::string& text = selector_value(sel, name);
    if (text.empty()) throw UsageError("--" + name + " is required for family " + std::string(family_name(f)));
    auto [lo, hi] = parse_range(name, text);
    if (lo != hi) throw UsageError("--" + name + ": a single value is expected here");
    param_slot(p, name) = lo;
  }
  return p;
}

void require_one_selector(const Selector& sel) {
  if (sel.family.empty() == sel.spec_file.empty()) {
    throw UsageError("exactly one of --family or --spec is required");
  }
}

LadderIdealSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--spec: cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return spec_from_string(buf.str());
}

LadderIdealSpec selected_spec(const Selector& sel) {
  require_one_selector(sel);
  if (!sel.spec_file.empty()) return read_spec_file(sel.spec_file);
  Family f = selected_family(sel);
  return make_family(f, single_params(sel, f));
}

void report_pruned(const EngineStats& stats) {
  if (stats.pruned_divisors > 0) {
    std::cerr << "note: " << stats.pruned_divisors << " biliaison step(s) produced a divisor ladder that needed "
              << "redundancy removal\n";
  }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("--format: unsupported value '" + format + "'");
}

// ---------------------------------------------------------------------------

int cmd_invariants(const Selector& sel, const std::string& format) {
  check_format(format, {"json", "text"});
  require_one_selector(sel);
  EngineStats stats;
  InvariantReport r;
  if (!sel.spec_file.empty()) {
    r = report_for_spec(read_spec_file(sel.spec_file), &stats);
  } else {
    Family f = selected_family(sel);
    r = report_for_family(f, single_params(sel, f), &stats);
  }
  report_pruned(stats);
  if (format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.to_text();
  }
  return kOk;
}

int cmd_verify(const Selector& sel, const std::string& dump_gb, std::size_t max_generators, std::size_t max_pairs) {
  oracle::VerifyOptions opts;
  opts.generators.max_generators = max_generators;
  opts.groebner.max_pair_reductions = max_pairs;
  opts.keep_basis = !dump_gb.empty();
  oracle::VerifyReport r = oracle::verify(selected_spec(sel), opts);
  std::cout << r.to_json().dump(2) << "\n";
  if (!dump_gb.empty()) {
    if (dump_gb == "-") {
      std::cout << r.basis_text();
    } else {
      std::ofstream out(dump_gb);
      if (!out) throw UsageError("--dump-gb: cannot write '" + dump_gb + "'");
      out << r.basis_text();
    }
  }
  return r.all_pass() ? kOk : kMismatch;
}

int cmd_table(const Selector& sel, const std::string& format) {
  check_format(format, {"csv", "json", "text"});
  if (sel.family.empty()) throw UsageError("--family is required");
  Family f = selected_family(sel);
  const std::vector<std::string> names = family_param_names(f);
  std::vector<std::pair<int, int>> ranges;
  for (const auto& name : names) {
    const std::string& text = selector_value(sel, name);
    if (text.empty()) throw UsageError("--" + name + " is required for family " + std::string(family_name(f)));
    ranges.push_back(parse_range(name, text));
  }

  // Row-major enumeration: the first parameter varies slowest.
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  for (const auto& r : ranges) cur.push_back(r.first);
  while (true) {
    rows.push_back(cur);
    std::size_t pos = cur.size();
    while (pos > 0) {
      --pos;
      if (cur[pos] < ranges[pos].second) {
        ++cur[pos];
        for (std::size_t q = pos + 1; q < cur.size(); ++q) cur[q] = ranges[q].first;
        break;
      }
      if (pos == 0) {
        pos = cur.size() + 1;
        break;
      }
    }
    if (pos > cur.size()) break;
  }

  Json out = Json::array();
  std::string csv;
  for (std::size_t i = 0; i < names.size(); ++i) csv += names[i] + ",";
  csv += "multiplicity\n";
  std::string text;
  for (const auto& row : rows) {
    FamilyParams p;
    for (std::size_t i = 0; i < names.size(); ++i) param_slot(p, names[i]) = row[i];
    const std::string e = mult_family(f, p).get_str();
    Json cell;
    for (std::size_t i = 0; i < names.size(); ++i) {
      cell[names[i]] = row[i];
      csv += std::to_string(row[i]) + ",";
      text += names[i] + "=" + std::to_string(row[i]) + " ";
    }
    cell["multiplicity"] = e;
    out.push_back(cell);
    csv += e + "\n";
    text += "e=" + e + "\n";
  }
  if (format == "csv") {
    std::cout << csv;
  } else if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return kOk;
}

int cmd_render(const Selector& sel) {
  std::cout << render_ascii(selected_spec(sel));
  return kOk;
}

/// Quick cross-identity suite over the formula layer and the engine.
int cmd_selftest() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  bool ok = true;
  for (int t = 1; t <= 20; ++t)
    ok = ok && mult_Mt(t) == mult_krattenthaler(t, 2 * t + 1) && mult_SMt(t) == mult_krattenthaler(t, 2 * t + 2);
  check("e(M_t), e(SM_t) agree with the closed product formula for t <= 20", ok);

  ok = true;
  for (int t = 2; t <= 4; ++t)
    for (int k = 1; k <= 4; ++k) ok = ok && mult_Ltk(t, k) == mult_generic(make_family(Family::Lk, {.t = t, .k = k}));
  check("L_t(k) recursion matches the biliaison engine for t <= 4, k <= 4", ok);

  ok = true;
  for (int t = 2; t <= 4; ++t) {
    const auto s = make_family(Family::M, {.t = t});
    ok = ok && hvec_generic(s) == hvec_Mt(t) && reg_from_hvector(hvec_Mt(t)) == reg_closed(RegFamily::M, t);
  }
  check("h-vector and regularity of M_t from the engine and closed forms", ok);

  ok = true;
  for (int t = 1; t <= 30; ++t) {
    ok = ok && is_decreasing_type(hvec_Mt(t)) && betti_Mt(t).numerator() == hvec_Mt(t) * one_minus_z_pow(3);
  }
  check("M_t h-vector is of decreasing type and matches its resolution for t <= 30", ok);

  ok = true;
  for (const auto& [f, p] : std::vector<std::pair<Family, FamilyParams>>{
           {Family::M, {.t = 2}}, {Family::N, {.t = 2}}, {Family::Ln, {.t = 2, .n = 6}}}) {
    ok = ok && oracle::verify(make_family(f, p)).all_pass();
  }
  check("oracle agrees on M_2, N_2, L_2^6", ok);

  return failures == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of pfaffian ladder ideals"};
  app.require_subcommand(1);

  Selector inv_sel;
  std::string inv_format = "json";
  auto* inv = app.add_subcommand("invariants", "height, multiplicity, h-vector and regularity");
  add_selector(inv, inv_sel, false);
  inv->add_option("--format", inv_format, "json or text");

  auto* orc = app.add_subcommand("oracle", "Groebner-basis ground truth");
  orc->require_subcommand(1);
  Selector ver_sel;
  std::string dump_gb;
  std::size_t max_generators = 5000;
  std::size_t max_pairs = 2'000'000;
  auto* ver = orc->add_subcommand("verify", "compare the oracle with the formula engines");
  add_selector(ver, ver_sel, false);
  ver->add_option("--dump-gb", dump_gb, "write the reduced Groebner basis to FILE ('-' for stdout)");
  ver->add_option("--max-generators", max_generators, "generator cap");
  ver->add_option("--max-pairs", max_pairs, "pair reduction budget");

  Selector tab_sel;
  std::string tab_format = "text";
  auto* tab = app.add_subcommand("table", "multiplicities over parameter ranges");
  add_selector(tab, tab_sel, true);
  tab->add_option("--format", tab_format, "csv, json or text");

  Selector ren_sel;
  auto* ren = app.add_subcommand("render", "ASCII picture of a ladder");
  add_selector(ren, ren_sel, false);

  auto* self = app.add_subcommand("selftest", "cross-identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_sel, inv_format);
    if (ver->parsed()) return cmd_verify(ver_sel, dump_gb, max_generators, max_pairs);
    if (tab->parsed()) return cmd_table(tab_sel, tab_format);
    if (ren->parsed()) return cmd_render(ren_sel);
    if (self->parsed()) return cmd_selftest();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BadSpecFormat ? kUsageError : kComputeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputeError;
  }
  return kUsageError;
}
