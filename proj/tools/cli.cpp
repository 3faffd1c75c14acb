#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "griesmer/griesmer.hpp"

namespace griesmer::cli {

namespace {

constexpr std::uint64_t kDefaultSearchNodeLimit = 100'000'000;

enum class Format { text, json, csv };

/// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchFlags {
  std::optional<std::uint64_t> node_limit;
  bool no_symmetry = false;
  bool nondeterministic = false;
  unsigned threads = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--node-limit", node_limit, "Maximum symbol placements")->check(CLI::PositiveNumber);
    cmd.add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
    cmd.add_flag("--nondeterministic", nondeterministic, "Allow parallel exploration");
    cmd.add_option("--threads", threads, "Worker threads for --nondeterministic (0 = all cores)");
  }

  SearchOptions options(std::optional<std::uint64_t> default_limit) const {
    SearchOptions o;
    o.node_limit = node_limit ? node_limit : default_limit;
    o.symmetry = !no_symmetry;
    o.deterministic = !nondeterministic;
    o.threads = threads;
    return o;
  }
};

void add_format(CLI::App& cmd, Format& fmt, bool allow_csv) {
  std::map<std::string, Format> names{{"text", Format::text}, {"json", Format::json}};
  if (allow_csv) names.emplace("csv", Format::csv);
  cmd.add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_bound_text(std::ostream& out, const BoundReport& r) {
  out << "q=" << r.q << " k=" << r.k << " d=" << r.d << "\n";
  out << "griesmer  " << r.griesmer << "  (";
  for (std::size_t i = 0; i < r.terms.size(); ++i) out << (i ? " + " : "") << r.terms[i];
  out << ")\n";
  out << "singleton " << r.singleton << "\n";
}

void print_outcome_text(std::ostream& out, const SearchOutcome& o) {
  out << "feasible:       " << yes_no(o.feasible) << "\n";
  out << "exhausted:      " << yes_no(o.exhausted) << "\n";
  out << "nodes explored: " << o.nodes_explored << "\n";
  if (o.witness) {
    out << "witness:\n";
    for (const Word& w : *o.witness) out << "  " << w.str() << "\n";
  }
}

void print_verdict_row(std::ostream& out, const Verdict& v) {
  out << std::left << std::setw(8) << to_string(v.theorem.id) << std::right << std::setw(3) << v.theorem.q
      << std::setw(3) << v.theorem.k << std::setw(3) << v.theorem.d << std::setw(10) << v.griesmer << std::setw(12)
      << v.theorem.critical_n() << "  " << std::left << std::setw(5) << to_string(v.theorem.mode) << std::setw(11)
      << (v.confirmed ? "confirmed" : (v.outcome.exhausted ? "REFUTED" : "incomplete")) << std::right
      << v.outcome.nodes_explored << "\n";
}

void print_verdict_header(std::ostream& out) {
  out << std::left << std::setw(8) << "theorem" << std::right << std::setw(3) << "q" << std::setw(3) << "k"
      << std::setw(3) << "d" << std::setw(10) << "griesmer" << std::setw(12) << "critical_n" << "  " << std::left
      << std::setw(5) << "mode" << std::setw(11) << "verdict" << "nodes\n";
}

int outcome_code(const SearchOutcome& o) { return o.exhausted ? kOk : kNotExhausted; }

int verdicts_code(const std::vector<Verdict>& vs) {
  bool incomplete = false;
  bool refuted = false;
  for (const Verdict& v : vs) {
    if (!v.outcome.exhausted) incomplete = true;
    else if (!v.confirmed) refuted = true;
  }
  if (incomplete) return kNotExhausted;
  return refuted ? kNotConfirmed : kOk;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Griesmer and Singleton bounds for systematic codes, with exhaustive nonexistence searches"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  Format fmt = Format::text;
  // Every subcommand body runs after parsing has succeeded; `action` is set by
  // the parse callbacks and executed afterwards so errors never interleave with
  // partial output.
  std::function<int()> action;

  // bound
  std::int64_t bq = 0, bk = 0, bd = 0;
  auto* bound = app.add_subcommand("bound", "Print the Griesmer and Singleton bounds for (q, k, d)");
  bound->add_option("--q", bq, "Alphabet size")->required();
  bound->add_option("--k", bk, "Message length")->required();
  bound->add_option("--d", bd, "Minimum distance")->required();
  add_format(*bound, fmt, false);
  bound->callback([&] {
    require(bq >= 2, "--q must be >= 2");
    require(bk >= 1, "--k must be >= 1");
    require(bd >= 1, "--d must be >= 1");
    action = [&] {
      const BoundReport r = bound_report(bq, bk, bd);
      if (fmt == Format::json) out << to_json(r).dump() << "\n";
      else print_bound_text(out, r);
      return int{kOk};
    };
  });

  // table
  std::int64_t tq = 0, tkmax = 0, tdmax = 0;
  auto* table = app.add_subcommand("table", "Print bounds for every 1 <= k <= kmax, 1 <= d <= dmax");
  table->add_option("--q", tq, "Alphabet size")->required();
  table->add_option("--kmax", tkmax, "Largest message length")->required();
  table->add_option("--dmax", tdmax, "Largest minimum distance")->required();
  add_format(*table, fmt, true);
  table->callback([&] {
    require(tq >= 2, "--q must be >= 2");
    require(tkmax >= 1, "--kmax must be >= 1");
    require(tdmax >= 1, "--dmax must be >= 1");
    action = [&] {
      const auto rows = bound_table(tq, tkmax, tdmax);
      if (fmt == Format::json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump() << "\n";
      } else if (fmt == Format::csv) {
        out << "q,k,d,griesmer,singleton\n";
        for (const auto& r : rows) out << r.q << "," << r.k << "," << r.d << "," << r.griesmer << "," << r.singleton << "\n";
      } else {
        out << std::setw(4) << "q" << std::setw(6) << "k" << std::setw(6) << "d" << std::setw(10) << "griesmer"
            << std::setw(11) << "singleton" << "\n";
        for (const auto& r : rows) {
          out << std::setw(4) << r.q << std::setw(6) << r.k << std::setw(6) << r.d << std::setw(10) << r.griesmer
              << std::setw(11) << r.singleton << "\n";
        }
      }
      return int{kOk};
    };
  });

  // search-tail
  int sq = 0, sd = 0, stail = -1;
  std::string prefix_file;
  SearchFlags tail_flags;
  std::optional<WitnessSet> witness;
  auto* stail_cmd = app.add_subcommand("search-tail", "Search tails for a witness set of systematic prefixes");
  stail_cmd->add_option("--q", sq, "Alphabet size")->required();
  stail_cmd->add_option("--d", sd, "Minimum distance")->required();
  stail_cmd->add_option("--tail-len", stail, "Tail length n - k")->required();
  stail_cmd->add_option("--prefixes", prefix_file, "Witness-set file")->required();
  tail_flags.add_to(*stail_cmd);
  add_format(*stail_cmd, fmt, false);
  stail_cmd->callback([&] {
    require(sq >= 2 && sq <= kMaxAlphabet, "--q must lie in [2, 256]");
    require(sd >= 1, "--d must be >= 1");
    require(stail >= 0, "--tail-len must be >= 0");
    witness = read_witness_set(std::filesystem::path(prefix_file));
    require(witness->q() == sq, "--q " + std::to_string(sq) + " does not match witness file q = " +
                                    std::to_string(witness->q()));
    action = [&] {
      const SearchOutcome o = tail_search(*witness, stail, sd, tail_flags.options(kDefaultSearchNodeLimit));
      if (fmt == Format::json) out << to_json(o).dump() << "\n";
      else print_outcome_text(out, o);
      return outcome_code(o);
    };
  });

  // search-full
  int fq = 0, fn = 0, fk = 0, fd = 0;
  SearchFlags full_flags;
  auto* sfull_cmd = app.add_subcommand("search-full", "Search for a full (q, n, k, d) systematic code");
  sfull_cmd->add_option("--q", fq, "Alphabet size")->required();
  sfull_cmd->add_option("--n", fn, "Code length")->required();
  sfull_cmd->add_option("--k", fk, "Message length")->required();
  sfull_cmd->add_option("--d", fd, "Minimum distance")->required();
  full_flags.add_to(*sfull_cmd);
  add_format(*sfull_cmd, fmt, false);
  sfull_cmd->callback([&] {
    require(fq >= 2 && fq <= kMaxAlphabet, "--q must lie in [2, 256]");
    const CodeParams params{fq, fn, fk, fd};
    params.validate();
    std::int64_t count = 1;
    for (int i = 0; i < fk && count <= kFullSearchGuard; ++i) count *= fq;
    require(count <= kFullSearchGuard, "q^k exceeds " + std::to_string(kFullSearchGuard) +
                                           "; use search-tail with a witness set instead");
    action = [&, params] {
      const SearchOutcome o = full_search(params, full_flags.options(kDefaultSearchNodeLimit));
      if (fmt == Format::json) out << to_json(o).dump() << "\n";
      else print_outcome_text(out, o);
      return outcome_code(o);
    };
  });

  // verify
  std::string theorem_name;
  int vq = 0, vd = 0, vk = 0;
  SearchFlags verify_flags;
  std::optional<TheoremCase> theorem;
  auto* verify_cmd = app.add_subcommand("verify", "Certify one theorem case at its critical length");
  verify_cmd->add_option("--theorem", theorem_name, "q_ge_d | d12 | d34 | d56_k2 | d56_k3")->required();
  verify_cmd->add_option("--q", vq, "Alphabet size")->required();
  verify_cmd->add_option("--d", vd, "Minimum distance")->required();
  verify_cmd->add_option("--k", vk, "Message length")->required();
  verify_flags.add_to(*verify_cmd);
  add_format(*verify_cmd, fmt, false);
  verify_cmd->callback([&] {
    theorem = witness_set_for(parse_theorem_id(theorem_name), vq, vd, vk);
    action = [&] {
      const Verdict v = verify(*theorem, verify_flags.options(std::nullopt));
      if (fmt == Format::json) {
        out << to_json(v).dump() << "\n";
      } else {
        print_verdict_header(out);
        print_verdict_row(out, v);
      }
      return verdicts_code({v});
    };
  });

  // verify-all
  int kmax = 4;
  SearchFlags all_flags;
  auto* all_cmd = app.add_subcommand("verify-all", "Certify every in-scope theorem case up to kmax");
  all_cmd->add_option("--kmax", kmax, "Largest message length (>= 2)")->capture_default_str();
  all_flags.add_to(*all_cmd);
  add_format(*all_cmd, fmt, false);
  all_cmd->callback([&] {
    require(kmax >= 2, "--kmax must be >= 2");
    action = [&] {
      const auto verdicts = verify_all(kmax, all_flags.options(std::nullopt));
      if (fmt == Format::json) {
        Json arr = Json::array();
        for (const auto& v : verdicts) arr.push_back(to_json(v));
        out << arr.dump() << "\n";
      } else {
        print_verdict_header(out);
        for (const auto& v : verdicts) print_verdict_row(out, v);
        const auto confirmed = std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.confirmed; });
        out << confirmed << "/" << verdicts.size() << " cases confirmed\n";
      }
      return verdicts_code(verdicts);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << first_line(e.what()) << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << first_line(e.what()) << "\n";
    return kUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << first_line(e.what()) << "\n";
    return kUsage;
  }
}

}  // namespace griesmer::cli
