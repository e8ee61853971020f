#include "dualbraid/cli.hpp"

#include <ostream>

#include "CLI11.hpp"

#include "dualbraid/io.hpp"

namespace dualbraid {

namespace {

struct Options {
  int n = 0;
  std::string format = "text";
  std::string word;
  std::string other;
  long k = 0;
  bool delta = false;
  int d = 0;
  int r = 0;
  int bound = kDefaultBruteForceBound;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

void add_strands(CLI::App* cmd, Options& o) {
  cmd->add_option("-n,--strands", o.n, "strand count")->required()->check(CLI::Range(2, kMaxStrands));
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

NormalForm word_nf(const Options& o, const std::string& word) { return normalize(parse_word(word, o.n)); }

NormalForm word_nf(const Options& o) { return word_nf(o, o.word); }

bool json_mode(const Options& o) { return o.format == "json"; }

int print_csp(const CspOutcome& res, const std::string& target, const Options& o, std::ostream& out) {
  if (!res.conjugate()) {
    if (json_mode(o))
      out << non_conjugacy_json(res.reason).dump() << '\n';
    else
      out << "not conjugate: " << res.reason << '\n';
    return exit_code::negative;
  }
  const auto& cert = *res.certificate;
  if (json_mode(o)) {
    out << to_json(cert).dump() << '\n';
  } else {
    out << "target: " << target << " (" << cert.target << ")\n"
        << "gamma: " << cert.gamma.to_string() << '\n'
        << "verified: " << (cert.verified ? "true" : "false") << '\n';
  }
  if (!cert.verified) throw Failure(exit_code::internal, "certificate failed verification");
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual Garside computations in the braid groups"};
  app.require_subcommand(1);
  Options o;

  auto* nf = app.add_subcommand("nf", "left normal form of a word");
  add_strands(nf, o);
  add_format(nf, o);
  nf->add_option("word", o.word, "braid word")->required();

  auto* eq = app.add_subcommand("eq", "whether two words are equal in B_n");
  add_strands(eq, o);
  add_format(eq, o);
  eq->add_option("word", o.word, "first braid word")->required();
  eq->add_option("other", o.other, "second braid word")->required();

  auto* classify = app.add_subcommand("classify", "periodicity type of a braid");
  add_strands(classify, o);
  add_format(classify, o);
  classify->add_option("word", o.word, "braid word")->required();

  auto* csp = app.add_subcommand("csp", "conjugator to epsilon^k (or delta^k with --delta)");
  add_strands(csp, o);
  add_format(csp, o);
  csp->add_option("--k", o.k, "target power")->required();
  csp->add_flag("--delta", o.delta, "target delta^k instead of epsilon^k");
  csp->add_option("word", o.word, "braid word")->required();

  auto* sss = app.add_subcommand("sss", "super summit set of epsilon^d");
  sss->require_subcommand(1);
  auto* sss_count = sss->add_subcommand("count", "size of the super summit set");
  auto* sss_enum = sss->add_subcommand("enumerate", "list the super summit set");
  auto* sss_check = sss->add_subcommand("check", "membership test");
  for (auto* cmd : {sss_count, sss_enum, sss_check}) {
    add_strands(cmd, o);
    add_format(cmd, o);
    cmd->add_option("--d", o.d, "divisor of n-1")->required();
  }
  sss_check->add_option("word", o.word, "braid word")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta polynomial of the noncrossing partition lattice");
  add_format(zeta_cmd, o);
  zeta_cmd->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  zeta_cmd->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle-sss", "super summit set by brute-force closure");
  add_strands(oracle, o);
  add_format(oracle, o);
  oracle->add_option("--bound", o.bound, "largest n accepted")->capture_default_str();
  oracle->add_option("word", o.word, "braid word")->required();

  auto* blocks = app.add_subcommand("blocks", "round reduction blocks S_k");
  add_strands(blocks, o);
  add_format(blocks, o);
  blocks->add_option("--d", o.d)->required();

  auto* draw = app.add_subcommand("draw", "SVG chord diagram of a simple element");
  add_strands(draw, o);
  draw->add_option("word", o.word, "braid word representing a simple element")->required();

  std::vector<const char*> argv{"dualbraid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  using nlohmann::json;
  try {
    if (nf->parsed()) {
      const NormalForm x = word_nf(o);
      out << (json_mode(o) ? to_json(x).dump() : x.to_string()) << '\n';
    } else if (eq->parsed()) {
      const bool same = word_nf(o, o.word) == word_nf(o, o.other);
      out << (json_mode(o) ? json{{"equal", same}}.dump() : std::string(same ? "true" : "false"))
          << '\n';
    } else if (classify->parsed()) {
      const PeriodicClass c = classify_periodic(word_nf(o));
      if (json_mode(o))
        out << to_json(c).dump() << '\n';
      else if (c.kind == PeriodicClass::Kind::non_periodic)
        out << to_string(c.kind) << '\n';
      else
        out << to_string(c.kind) << ' ' << c.m << '\n';
    } else if (csp->parsed()) {
      const NormalForm x = word_nf(o);
      if (o.delta) return print_csp(solve_csp_delta(x, o.k), "d^" + std::to_string(o.k), o, out);
      return print_csp(solve_csp(x, o.k), "e^" + std::to_string(o.k), o, out);
    } else if (sss_count->parsed()) {
      const auto c = count_sss(o.n, o.d);
      out << (json_mode(o) ? json{{"n", o.n}, {"d", o.d}, {"count", c}}.dump() : std::to_string(c))
          << '\n';
    } else if (sss_enum->parsed()) {
      const SssTable table = enumerate_sss(o.n, o.d);
      if (json_mode(o)) {
        out << sss_table_jsonl(table);
      } else {
        for (const auto& x : table.elements) out << x.to_string() << '\n';
      }
    } else if (sss_check->parsed()) {
      const bool member = verify_membership(word_nf(o), o.n, o.d);
      out << (json_mode(o) ? json{{"member", member}}.dump()
                           : std::string(member ? "true" : "false"))
          << '\n';
      return member ? exit_code::ok : exit_code::negative;
    } else if (zeta_cmd->parsed()) {
      const auto z = zeta(o.d, o.r);
      out << (json_mode(o) ? json{{"d", o.d}, {"r", o.r}, {"zeta", z}}.dump() : std::to_string(z))
          << '\n';
    } else if (oracle->parsed()) {
      const auto set = sss_brute_force(word_nf(o), o.bound);
      if (json_mode(o)) {
        json arr = json::array();
        for (const auto& x : set) arr.push_back(to_json(x));
        out << arr.dump() << '\n';
      } else {
        for (const auto& x : set) out << x.to_string() << '\n';
      }
    } else if (blocks->parsed()) {
      const auto bl = round_reduction_blocks(o.n, o.d);
      if (json_mode(o)) {
        out << json(bl).dump() << '\n';
      } else {
        std::string line;
        for (const auto& b : bl) {
          if (!line.empty()) line += ' ';
          line += '{';
          for (std::size_t i = 0; i < b.size(); ++i) line += (i ? "," : "") + std::to_string(b[i]);
          line += '}';
        }
        out << line << '\n';
      }
    } else if (draw->parsed()) {
      const NormalForm x = word_nf(o);
      Simple s = Simple::identity(o.n);
      if (x.infimum() == 1 && x.canonical_length() == 0)
        s = Simple::delta(o.n);
      else if (x.infimum() == 0 && x.canonical_length() <= 1)
        s = x.canonical_length() ? x.factors().front() : s;
      else
        throw Failure(exit_code::usage, "word is not a simple element: " + x.to_string());
      out << chord_diagram_svg(s);
    }
    return exit_code::ok;
  } catch (const Failure& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}

}  // namespace dualbraid
