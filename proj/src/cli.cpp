#include "bmparity/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmparity/axioms.hpp"
#include "bmparity/gauss_code.hpp"
#include "bmparity/isomorphism.hpp"
#include "bmparity/knot.hpp"
#include "bmparity/random_moves.hpp"
#include "bmparity/serialize.hpp"

namespace bmparity {

namespace {

using Json = nlohmann::ordered_json;

struct InputItem {
  std::string name;
  std::string echo;
  std::optional<GaussCode> code;
  std::optional<BasedMatrix> matrix;
  std::string error;
};

std::vector<InputItem> collect_inputs(const JobSpec& job) {
  std::vector<InputItem> items;
  auto from_code = [&](std::string name, const std::string& text) {
    InputItem item{std::move(name), text, std::nullopt, std::nullopt, ""};
    try {
      item.code = parse_gauss_code(text);
    } catch (const InputError& e) {
      item.error = e.what();
    }
    items.push_back(std::move(item));
  };
  switch (job.input) {
    case InputKind::kNone:
      throw InputError("no input given (use --code, --matrix or --table)");
    case InputKind::kCode:
      from_code("code", job.input_value);
      break;
    case InputKind::kMatrix: {
      InputItem item{job.input_value, job.input_value, std::nullopt, std::nullopt, ""};
      try {
        item.matrix = load_matrix_file(job.input_value, job.ring);
      } catch (const InputError& e) {
        item.error = e.what();
      }
      items.push_back(std::move(item));
      break;
    }
    case InputKind::kTable: {
      std::ifstream in(job.input_value);
      if (!in) throw InputError("cannot open " + job.input_value);
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
          items.push_back({"line " + std::to_string(line_no), line, std::nullopt, std::nullopt,
                           "table line " + std::to_string(line_no) + " has no tab between name and code"});
          continue;
        }
        from_code(line.substr(0, tab), line.substr(tab + 1));
      }
      break;
    }
  }
  return items;
}

BasedMatrix matrix_of(const InputItem& item, Ring ring) {
  return item.matrix ? *item.matrix : based_matrix_of_diagram(*item.code, ring);
}

void emit_error(const InputItem& item, const JobSpec& job, std::ostream& out) {
  if (job.format == OutputFormat::kStructured) {
    out << Json{{"name", item.name}, {"input", item.echo}, {"error", item.error}}.dump() << '\n';
  } else {
    out << "== " << item.name << "\ninput: " << item.echo << "\nerror: " << item.error << "\n\n";
  }
}

}  // namespace

int cmd_compute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (auto& item : collect_inputs(job)) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<InvariantBundle> bundle;
    if (item.error.empty()) {
      try {
        bundle = item.code ? knot_invariant_bundle(*item.code, job.ring) : matrix_invariant_bundle(*item.matrix);
      } catch (const InputError& e) {
        item.error = e.what();
      }
    }
    if (!bundle) {
      emit_error(item, job, out);
      err << "error in " << item.name << ": " << item.error << '\n';
      status = kExitInputError;
      continue;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (job.format == OutputFormat::kStructured) {
      Json record{{"name", item.name}, {"input", item.echo}};
      const Json fields = Json::parse(bundle_json(*bundle));
      for (const auto& [key, value] : fields.items()) record[key] = value;
      if (job.timing) record["elapsed_ms"] = ms;
      out << record.dump() << '\n';
    } else {
      out << "== " << item.name << "\ninput: " << item.echo << '\n' << format_bundle(*bundle);
      if (job.timing) out << "elapsed: " << ms << " ms\n";
      out << '\n';
    }
  }
  return status;
}

int cmd_verify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  AxiomCheckOptions options;
  options.random_moves = job.moves.value_or(32);
  options.seed = job.seed;
  for (auto& item : collect_inputs(job)) {
    std::optional<BasedMatrix> t;
    if (item.error.empty()) {
      try {
        t = matrix_of(item, job.ring);
      } catch (const InputError& e) {
        item.error = e.what();
      }
    }
    if (!t) {
      emit_error(item, job, out);
      err << "error in " << item.name << ": " << item.error << '\n';
      if (status == kExitOk) status = kExitInputError;
      continue;
    }
    Json record{{"name", item.name}, {"input", item.echo}};
    std::ostringstream text;
    text << "== " << item.name << '\n';
    for (const auto& parity : {gaussian_parity(*t), reduced_parity(*t)}) {
      const auto violations = verify_parity_axioms(*t, parity, options);
      const std::string kind(parity_kind_name(parity.kind));
      Json list = Json::array();
      text << kind << ": " << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violation(s)")
           << '\n';
      for (const auto& v : violations) {
        text << "  " << describe(v) << '\n';
        list.push_back(describe(v));
      }
      record[kind] = list;
      if (!violations.empty()) status = kExitViolation;
    }
    if (job.format == OutputFormat::kStructured) {
      out << record.dump() << '\n';
    } else {
      out << text.str() << '\n';
    }
  }
  return status;
}

namespace {

struct FuzzState {
  BasedMatrix matrix;
  ReducedParity reduced;
};

FuzzState make_state(BasedMatrix m) {
  ReducedParity r = reduced_parity_pipeline(m);
  return FuzzState{std::move(m), std::move(r)};
}

LabelSet zero_tribe_of(const FuzzState& s) {
  const auto& tags = s.reduced.tags;
  if (!tags.zero_block) return {};
  return block_labels(s.matrix, tags.partition.block(*tags.zero_block));
}

LabelSet restricted(const LabelSet& labels, const BasedMatrix& t) {
  LabelSet out;
  for (const auto& l : labels) {
    if (t.index_of(l)) out.push_back(l);
  }
  return out;
}

// Runs one walk; returns a description of the first failed assertion.
std::optional<std::string> fuzz_case(const BasedMatrix& start, std::uint64_t walk_seed, std::size_t moves,
                                     FuzzStatistics* stats) {
  Rng rng(walk_seed);
  auto count = [&](std::size_t FuzzStatistics::*field) {
    if (stats) ++(stats->*field);
  };
  const BasedMatrix primitive = reduce_to_primitive(start).first;
  count(&FuzzStatistics::confluence_checks);
  if (!is_isomorphic(primitive, reduce_randomly(start, rng))) {
    return "random reduction order gives a non-isomorphic primitive matrix";
  }
  FuzzState current = make_state(start);
  for (std::size_t step = 0; step < moves; ++step) {
    std::optional<AppliedMove> move;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) move = apply_random_inverse_move(current.matrix, rng);
    if (!move) move = apply_random_move(current.matrix, rng);
    if (stats) ++stats->moves;
    FuzzState next = make_state(move->result);
    const std::string where = "step " + std::to_string(step + 1) + " (" + (move->inverse ? "inverse " : "") +
                              std::string(move_kind_name(move->kind)) + ")";
    const FuzzState& big = move->inverse ? current : next;
    const FuzzState& small = move->inverse ? next : current;

    count(&FuzzStatistics::restriction_checks);
    if (restrict_partition(big.matrix, big.reduced.tags.partition, small.matrix) !=
        small.reduced.tags.partition) {
      return where + ": stable partition does not restrict";
    }
    count(&FuzzStatistics::zero_tribe_checks);
    if (restricted(zero_tribe_of(big), small.matrix) != zero_tribe_of(small)) {
      return where + ": zero tribe does not restrict";
    }
    count(&FuzzStatistics::parity_checks);
    // Every inverse move is a forward move read backwards.
    const AppliedMove forward{big.matrix, move->kind, false, move->labels};
    const auto violations =
        check_move_functoriality(small.matrix, small.reduced.parity, forward, &big.reduced.parity);
    if (!violations.empty()) return where + ": " + describe(violations.front());
    current = std::move(next);
  }
  count(&FuzzStatistics::confluence_checks);
  if (!is_isomorphic(primitive, reduce_to_primitive(current.matrix).first)) {
    return "walk end reduces to a non-isomorphic primitive matrix";
  }
  return std::nullopt;
}

Rng case_generator(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

}  // namespace

FuzzStatistics run_fuzz(Ring ring, std::size_t count, std::size_t max_size, std::size_t moves,
                        std::uint64_t seed) {
  FuzzStatistics stats;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = case_generator(seed, i);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
    BasedMatrix t = random_based_matrix(rng, size, ring);
    const std::uint64_t walk_seed = rng();
    ++stats.matrices;
    auto failure = fuzz_case(t, walk_seed, moves, &stats);
    if (!failure) continue;

    // Shrink: drop elements while the same walk still fails, then shorten it.
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      for (std::size_t g = 1; g < t.size(); ++g) {
        std::vector<std::size_t> keep;
        for (std::size_t h = 0; h < t.size(); ++h) {
          if (h != g) keep.push_back(h);
        }
        BasedMatrix smaller = t.submatrix(keep);
        if (auto f = fuzz_case(smaller, walk_seed, moves, nullptr)) {
          t = std::move(smaller);
          failure = f;
          shrunk = true;
          break;
        }
      }
    }
    std::size_t shortest = moves;
    for (std::size_t m = 0; m < moves; ++m) {
      if (auto f = fuzz_case(t, walk_seed, m, nullptr)) {
        shortest = m;
        failure = f;
        break;
      }
    }
    stats.counterexamples.push_back("matrix " + std::to_string(i) + " (seed " + std::to_string(seed) +
                                    ", walk seed " + std::to_string(walk_seed) + ", moves " +
                                    std::to_string(shortest) + "): " + *failure + "; reproduction " +
                                    matrix_json(t));
  }
  return stats;
}

int cmd_fuzz(const JobSpec& job, std::ostream& out, std::ostream&) {
  const std::size_t moves = job.moves.value_or(20);
  const FuzzStatistics s = run_fuzz(job.ring, job.count, job.max_size, moves, job.seed);
  if (job.format == OutputFormat::kStructured) {
    out << Json{{"ring", std::string(ring_name(job.ring))},
                {"seed", job.seed},
                {"max_size", job.max_size},
                {"matrices", s.matrices},
                {"moves", s.moves},
                {"confluence_checks", s.confluence_checks},
                {"restriction_checks", s.restriction_checks},
                {"zero_tribe_checks", s.zero_tribe_checks},
                {"parity_checks", s.parity_checks},
                {"counterexamples", s.counterexamples}}
               .dump()
        << '\n';
  } else {
    out << "fuzz ring " << ring_name(job.ring) << ", seed " << job.seed << ", max size " << job.max_size
        << ", " << moves << " moves per walk\n"
        << "matrices: " << s.matrices << "\nmoves applied: " << s.moves
        << "\nconfluence checks: " << s.confluence_checks << "\nrestriction checks: " << s.restriction_checks
        << "\nzero tribe checks: " << s.zero_tribe_checks << "\nparity transport checks: " << s.parity_checks
        << "\ncounterexamples: " << s.counterexamples.size() << '\n';
    for (const auto& c : s.counterexamples) out << "  " << c << '\n';
  }
  return s.counterexamples.empty() ? kExitOk : kExitViolation;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Based matrices of virtual and flat knots and their reduced stable parity"};
  app.require_subcommand(1);
  JobSpec job;
  std::string ring = "z";
  std::string format = "report";
  std::optional<std::string> code, matrix, table;
  std::optional<std::size_t> moves;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", ring, "coefficient ring: z or z2")->check(CLI::IsMember({"z", "z2", "Z", "Z2"}));
    sub->add_option("--format", format, "report or structured")->check(CLI::IsMember({"report", "structured"}));
    sub->add_option("--seed", job.seed, "seed for every randomized step");
    sub->add_option("--moves", moves, "random moves per check or walk");
  };
  auto add_inputs = [&](CLI::App* sub) {
    auto* c = sub->add_option("--code", code, "Gauss code, e.g. O1+O2+U1+U2+");
    auto* m = sub->add_option("--matrix", matrix, "matrix file");
    auto* t = sub->add_option("--table", table, "tab-separated file of name and Gauss code");
    c->excludes(m)->excludes(t);
    m->excludes(t);
  };
  CLI::App* compute = app.add_subcommand("compute", "compute the invariant bundle");
  add_common(compute);
  add_inputs(compute);
  compute->add_flag("--timing", job.timing, "report wall-clock time per record");
  CLI::App* verify = app.add_subcommand("verify", "check the parity axioms");
  add_common(verify);
  add_inputs(verify);
  CLI::App* fuzz = app.add_subcommand("fuzz", "random move walks against the tribe and parity invariants");
  add_common(fuzz);
  fuzz->add_option("--count", job.count, "number of random matrices");
  fuzz->add_option("--max-size", job.max_size, "largest number of elements besides s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }
  job.ring = *parse_ring(ring);
  job.format = format == "structured" ? OutputFormat::kStructured : OutputFormat::kReport;
  job.moves = moves;
  if (code) job.input = InputKind::kCode, job.input_value = *code;
  if (matrix) job.input = InputKind::kMatrix, job.input_value = *matrix;
  if (table) job.input = InputKind::kTable, job.input_value = *table;

  try {
    if (compute->parsed()) {
      job.command = Command::kCompute;
      return cmd_compute(job, out, err);
    }
    if (verify->parsed()) {
      job.command = Command::kVerify;
      return cmd_verify(job, out, err);
    }
    job.command = Command::kFuzz;
    return cmd_fuzz(job, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace bmparity
