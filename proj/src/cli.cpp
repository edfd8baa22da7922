#include "alexcalc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"

#include "alexcalc/balance.hpp"
#include "alexcalc/corpus.hpp"
#include "alexcalc/document.hpp"
#include "alexcalc/errors.hpp"
#include "alexcalc/invariants.hpp"
#include "alexcalc/skein.hpp"

namespace alexcalc {

namespace {

struct Options {
  bool json_output = false;
  std::string file;
  std::string second;
  std::string ring = "Z";
  bool middle_injective = true;
};

template <typename T>
T expect(const Document& doc, const char* command, const char* kind) {
  if (const T* value = std::get_if<T>(&doc)) return *value;
  throw ParseError(std::string(command) + " expects a " + kind + " document");
}

// A path to a laurent document, or inline polynomial text.
LaurentPoly polynomial_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    return expect<LaurentPoly>(load_document(arg), "polynomial argument", "laurent");
  }
  return parse_laurent(arg);
}

class Commands {
 public:
  Commands(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  int alex() const {
    const auto pair = expect<SeifertPair>(load_document(opts_.file), "alex", "seifert_pair");
    const InvariantReport report = alexander_report(pair);
    if (opts_.json_output) {
      emit(to_json(report));
    } else {
      out_ << "determinant: " << report.polynomial << '\n'
           << "Z-class: " << report.class_z.representative() << '\n'
           << "Q-class: " << report.class_q.representative() << '\n';
      for (const auto& [name, value] : report.scalars) out_ << name << ": " << value << '\n';
    }
    return kExitOk;
  }

  int norm() const {
    const auto pair = expect<SeifertPair>(load_document(opts_.file), "norm", "seifert_pair");
    const LaurentPoly f = normalized_alexander({pair, opts_.middle_injective});
    if (opts_.json_output) {
      emit({{"normalized", to_json(f)}, {"middle_injective", opts_.middle_injective}});
    } else {
      out_ << "normalized: " << f << '\n';
    }
    return kExitOk;
  }

  int skein() const {
    const auto triple = expect<Triple>(load_document(opts_.file), "skein", "triple");
    const bool pass = triple.move == MoveKind::Pass;
    const SkeinVerdict v = pass ? check_pass_move(triple.plus, triple.minus, triple.zero)
                                : check_twist_move(triple.plus, triple.minus, triple.zero);
    if (opts_.json_output) {
      json doc = to_json(v);
      doc["move"] = pass ? "pass" : "twist";
      emit(doc);
    } else {
      out_ << "move: " << (pass ? "pass" : "twist") << '\n'
           << "lhs: " << v.lhs << '\n'
           << "rhs: " << v.rhs << '\n'
           << "residual: " << v.residual << '\n'
           << "holds: " << (v.holds ? "true" : "false") << '\n';
    }
    return v.holds ? kExitOk : kExitIdentityFails;
  }

  int alink() const {
    const Document doc = load_document(opts_.file);
    json result = json::object();
    if (const auto* f = std::get_if<LaurentPoly>(&doc)) {
      result["pseudo_alinking"] = to_json(pseudo_alinking_from_poly(*f));
    } else {
      const auto pair = expect<SeifertPair>(doc, "alink", "laurent or seifert_pair");
      result["pseudo_alinking"] = to_json(pseudo_alinking_from_pair(pair));
      result["from_polynomial"] =
          to_json(pseudo_alinking_from_poly(det(alexander_matrix(pair))));
    }
    return emit_scalars(result);
  }

  int twinkle() const {
    const Document doc = load_document(opts_.file);
    json result = json::object();
    if (const auto* f = std::get_if<LaurentPoly>(&doc)) {
      result["first_order_at_one"] = to_json(first_order_at_one(*f));
    } else {
      const auto pair = expect<SeifertPair>(doc, "twinkle", "laurent or seifert_pair");
      result["pseudo_twinkling"] = to_json(pseudo_twinkling_from_pair(pair));
    }
    return emit_scalars(result);
  }

  int arf_command() const {
    const auto data = expect<ArfData>(load_document(opts_.file), "arf", "arf");
    return emit_scalars({{"arf", arf(data)}});
  }

  int balanced_eq() const {
    const RingTag ring = parse_ring(opts_.ring);
    const LaurentPoly f = polynomial_argument(opts_.file);
    const LaurentPoly g = polynomial_argument(opts_.second);
    const bool equal = ring == RingTag::Z ? z_balanced_eq(f, g) : q_balanced_eq(f, g);
    if (opts_.json_output) {
      emit({{"ring", std::string(to_string(ring))}, {"balanced", equal}});
    } else {
      out_ << "balanced: " << (equal ? "true" : "false") << '\n';
    }
    return equal ? kExitOk : kExitIdentityFails;
  }

  int canon() const {
    const RingTag ring = parse_ring(opts_.ring);
    const LaurentPoly f = canonicalize(polynomial_argument(opts_.file), ring);
    if (opts_.json_output) {
      emit(to_json(f));
    } else {
      out_ << f << '\n';
    }
    return kExitOk;
  }

  int find_reps() const {
    const auto triple = expect<Triple>(load_document(opts_.file), "find-reps", "triple");
    if (triple.move != MoveKind::Pass) {
      throw ParseError("find-reps works on pass-move triples of Z[t,t^-1] classes");
    }
    const BalancedClass cp(triple.plus, RingTag::Z);
    const BalancedClass cm(triple.minus, RingTag::Z);
    const BalancedClass c0(triple.zero, RingTag::Z);
    const RepresentativeWitness w = find_representatives(cp, cm, c0);
    const std::int64_t window = representative_window(cp, cm, c0);
    if (opts_.json_output) {
      json doc = to_json(w);
      doc["window"] = window;
      emit(doc);
    } else if (w.found) {
      static constexpr const char* kNames[] = {"plus", "minus", "zero"};
      out_ << "found: true\n";
      for (std::size_t i = 0; i < 3; ++i) {
        out_ << kNames[i] << ": " << w.representatives[i] << "  (sign " << w.shifts[i].sign
             << ", t^" << w.shifts[i].exponent << ")\n";
      }
    } else {
      out_ << "found: false (no witness within exponent window " << window << ")\n";
    }
    return w.found ? kExitOk : kExitIdentityFails;
  }

  int corpus() const {
    const CorpusReport report = run_corpus();
    if (opts_.json_output) {
      json lines = json::array();
      for (const auto& line : report.lines) {
        lines.push_back({{"id", line.id},
                         {"description", line.description},
                         {"passed", line.result.passed},
                         {"detail", line.result.detail}});
      }
      emit({{"entries", lines}, {"all_passed", report.all_passed()}});
    } else {
      for (const auto& line : report.lines) {
        out_ << (line.result.passed ? "PASS " : "FAIL ") << line.id << "  " << line.description;
        if (!line.result.passed) out_ << "  [" << line.result.detail << "]";
        out_ << '\n';
      }
      const auto passed = std::count_if(report.lines.begin(), report.lines.end(),
                                        [](const auto& line) { return line.result.passed; });
      out_ << passed << "/" << report.lines.size() << " corpus entries passed\n";
    }
    return report.all_passed() ? kExitOk : kExitIdentityFails;
  }

 private:
  void emit(const json& doc) const { out_ << doc.dump() << '\n'; }

  int emit_scalars(const json& values) const {
    if (opts_.json_output) {
      emit(values);
    } else {
      for (const auto& [name, value] : values.items()) {
        out_ << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
             << '\n';
      }
    }
    return kExitOk;
  }

  const Options& opts_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert-matrix invariants and local-move identities", "alexcalc"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json_output, "Emit JSON documents instead of text");

  auto file_command = [&](const char* name, const char* help, const char* what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opts.file, what)->required();
    sub->add_flag("--json", opts.json_output, "Emit JSON documents instead of text");
    return sub;
  };

  CLI::App* alex = file_command("alex", "Z and Q Alexander classes of det(tS - N)",
                                "seifert_pair document");
  CLI::App* norm =
      file_command("norm", "Normalized polynomial det(t^1/2 S - t^-1/2 N)", "seifert_pair document");
  norm->add_option("--middle-injective", opts.middle_injective,
                   "Whether the middle Alexander matrix induces an injective map")
      ->default_val(true);
  CLI::App* skein = file_command("skein", "Check a pass- or twist-move identity", "triple document");
  CLI::App* alink =
      file_command("alink", "Pseudo-alinking number", "laurent or seifert_pair document");
  CLI::App* twinkle =
      file_command("twinkle", "Pseudo-twinkling number", "laurent or seifert_pair document");
  CLI::App* arf_cmd = file_command("arf", "Arf invariant from diagonal pairings", "arf document");
  CLI::App* find_reps =
      file_command("find-reps", "Search class representatives satisfying the pass-move identity",
                   "triple document");

  CLI::App* balanced = app.add_subcommand("balanced-eq", "Decide balanced equivalence");
  balanced->add_option("--ring", opts.ring, "Z or Q")->required();
  balanced->add_option("f", opts.file, "laurent document or polynomial text")->required();
  balanced->add_option("g", opts.second, "laurent document or polynomial text")->required();
  balanced->add_flag("--json", opts.json_output, "Emit JSON documents instead of text");

  CLI::App* canon = app.add_subcommand("canon", "Canonical balanced-class representative");
  canon->add_option("--ring", opts.ring, "Z or Q")->required();
  canon->add_option("f", opts.file, "laurent document or polynomial text")->required();
  canon->add_flag("--json", opts.json_output, "Emit JSON documents instead of text");

  CLI::App* corpus = app.add_subcommand("corpus", "Evaluate the bundled worked examples");
  corpus->add_flag("--json", opts.json_output, "Emit JSON documents instead of text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const Commands commands(opts, out);
  try {
    if (alex->parsed()) return commands.alex();
    if (norm->parsed()) return commands.norm();
    if (skein->parsed()) return commands.skein();
    if (alink->parsed()) return commands.alink();
    if (twinkle->parsed()) return commands.twinkle();
    if (arf_cmd->parsed()) return commands.arf_command();
    if (find_reps->parsed()) return commands.find_reps();
    if (balanced->parsed()) return commands.balanced_eq();
    if (canon->parsed()) return commands.canon();
    if (corpus->parsed()) return commands.corpus();
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const NotDivisible& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "error: no command given\n";
  return kExitInputError;
}

}  // namespace alexcalc
