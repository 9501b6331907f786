#include "commands.hpp"

#include "delaycode/codec.hpp"
#include "delaycode/error.hpp"
#include "delaycode/io.hpp"
#include "delaycode/markov.hpp"
#include "delaycode/orbit.hpp"
#include "delaycode/reduce.hpp"
#include "delaycode/samples.hpp"
#include "delaycode/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace delaycode::cli {

namespace {

std::string exact(const Rational& v) { return to_fraction(v) + " (" + to_decimal(v) + ")"; }

struct Outputs {
  std::ostream& out;
  std::ostream& err;
};

SourceDist pick_mu(const Alphabet& alphabet, const std::string& mu_text,
                   const std::optional<SourceDist>& from_file) {
  if (!mu_text.empty()) {
    return parse_mu_text(alphabet, mu_text);
  }
  if (from_file) {
    return *from_file;
  }
  return SourceDist::uniform(alphabet);
}

void emit_json(const Outputs& io, const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    io.out << text;
  } else {
    write_text_file(path, text);
  }
}

// ---- orbits

int cmd_orbits(const Outputs& io, int k, const std::string& mode) {
  if (mode == "count") {
    io.out << "a_" << k << " = " << count_classes(k) << "\n";
    return 0;
  }
  if (mode == "count-restricted") {
    io.out << "a'_" << k << " = " << count_classes_restricted(k) << "\n";
    return 0;
  }
  if (mode == "enumerate") {
    const auto classes = enumerate_classes(k);
    for (const auto& c : classes) {
      io.out << c.str() << "\n";
    }
    io.out << classes.size() << " classes\n";
    return 0;
  }
  const ClassCheck check = verify_classes(k);
  if (check.ok()) {
    io.out << "OK: " << check.groups << " classes, brute-force agrees\n";
    return 0;
  }
  io.out << "FAIL: " << check.groups << " canonical groups over " << check.subsets
         << " subsets; recurrence " << (check.matches_recurrence ? "agrees" : "disagrees")
         << ", enumeration " << (check.matches_enumeration ? "agrees" : "disagrees")
         << ", orbits " << (check.matches_orbits ? "agree" : "disagree") << "\n";
  return 1;
}

// ---- validate

void print_flag(const Outputs& io, const char* name, bool value) {
  io.out << name << ": " << (value ? "true" : "false") << "\n";
}

int validate_codetuple(const Outputs& io, const CodeTuple& F) {
  const bool regular = is_regular(F);
  const bool ext = is_extendable(F);
  const KDecReport kdec = check_k_dec(F);
  io.out << "kind: codetuple (" << F.size() << " tables, k=" << F.k() << ")\n";
  print_flag(io, "regular", regular);
  print_flag(io, "extendable", ext);
  print_flag(io, "k-dec", kdec.ok);
  if (regular) {
    io.out << "irreducible: "
           << (reachable_core(F).size() == static_cast<std::size_t>(F.size()) ? "true" : "false")
           << "\n";
  }
  if (!ext) {
    const auto levels = pref_levels(F, 1);
    for (int i = 0; i < F.size(); ++i) {
      if (levels[1][static_cast<std::size_t>(i)].empty()) {
        io.out << "  table " << id_str(F.id(i)) << " has an empty P^1\n";
      }
    }
  }
  for (const auto& v : kdec.violations) {
    io.out << "  table " << id_str(F.id(v.table)) << " symbol '" << F.alphabet().name(v.symbol)
           << "'";
    if (v.other >= 0) {
      io.out << " and '" << F.alphabet().name(v.other) << "' share a codeword; targets overlap";
    } else {
      io.out << " target meets longer-codeword continuations";
    }
    io.out << " in " << v.overlap.str() << "\n";
  }
  return regular && ext && kdec.ok ? 0 : 1;
}

int validate_rct(const Outputs& io, const Rct& F) {
  const ValidationReport r = validate(F);
  io.out << "kind: rct (" << F.size() << " tables, k=" << F.k() << ")\n";
  print_flag(io, "compliant", r.compliant);
  print_flag(io, "extendable", r.extendable);
  print_flag(io, "k-dec", r.k_dec);
  print_flag(io, "regular", r.regular);
  for (const auto& issue : r.issues) {
    io.out << "  " << issue << "\n";
  }
  return r.all() ? 0 : 1;
}

int cmd_validate(const Outputs& io, const std::string& path, const std::string& kind_opt) {
  const Json doc = load_json_file(path);
  const std::string kind = kind_opt == "auto" ? document_kind(doc) : kind_opt;
  if (kind == "rct") {
    return validate_rct(io, rct_from_json(doc).rct);
  }
  if (kind == "codetuple") {
    return validate_codetuple(io, codetuple_from_json(doc).F);
  }
  throw ParseError("unknown document kind '" + kind + "'");
}

// ---- analyze

void print_report(const Outputs& io, const CodeTuple& F, const SourceDist& mu, bool with_h) {
  const MarkovReport r = markov_analyze(F, mu);
  io.out << "tables:";
  for (const auto& id : F.ids()) {
    io.out << " " << id_str(id);
  }
  io.out << "\nQ:\n";
  for (const auto& row : r.Q) {
    io.out << " ";
    for (const auto& q : row) {
      io.out << " " << to_fraction(q);
    }
    io.out << "\n";
  }
  io.out << "L_i:\n";
  for (int i = 0; i < F.size(); ++i) {
    io.out << "  " << id_str(F.id(i)) << ": " << exact(r.L_table[static_cast<std::size_t>(i)])
           << "\n";
  }
  if (!r.regular) {
    throw NotRegularError("code-tuple is not regular: R_F is empty, average length undefined");
  }
  io.out << "R_F:";
  for (int i : r.core) {
    io.out << " " << id_str(F.id(i));
  }
  io.out << "\npi:\n";
  for (int i = 0; i < F.size(); ++i) {
    io.out << "  " << id_str(F.id(i)) << ": " << exact(r.pi[static_cast<std::size_t>(i)]) << "\n";
  }
  io.out << "L = " << exact(r.L) << "\n";
  if (with_h) {
    const CodeTuple core = core_restrict(F);
    const auto h = potentials(core, mu);
    io.out << "h (on R_F, anchored at " << id_str(core.id(0)) << "):\n";
    for (int i = 0; i < core.size(); ++i) {
      io.out << "  " << id_str(core.id(i)) << ": " << exact(h[static_cast<std::size_t>(i)])
             << "\n";
    }
  }
}

int cmd_analyze(const Outputs& io, const std::string& path, const std::string& mu_text,
                bool with_h) {
  const Json doc = load_json_file(path);
  if (document_kind(doc) == "rct") {
    const RctDoc d = rct_from_json(doc);
    const SourceDist mu = pick_mu(d.rct.alphabet(), mu_text, d.mu);
    io.out << "direct realization of the RCT\n";
    print_report(io, direct_realization(d.rct), mu, with_h);
    io.out << "L~ = " << exact(average_length(direct_realization(d.rct), mu)) << "\n";
    return 0;
  }
  const CodeTupleDoc d = codetuple_from_json(doc);
  print_report(io, d.F, pick_mu(d.F.alphabet(), mu_text, d.mu), with_h);
  return 0;
}

// ---- reduce / expand

int cmd_reduce(const Outputs& io, const std::string& path, const std::string& mu_text,
               const std::string& out_path, const std::string& trace_path) {
  const CodeTupleDoc d = codetuple_from_json(load_json_file(path));
  const SourceDist mu = pick_mu(d.F.alphabet(), mu_text, d.mu);
  const Reduction r = to_rct(d.F, mu);
  io.err << "L before = " << exact(r.L_input) << "\n";
  io.err << "L~ after = " << exact(r.L_output) << "\n";
  io.err << "tables: " << d.F.size() << " -> " << r.rct.size() << "\n";
  if (!trace_path.empty()) {
    write_text_file(trace_path, trace_to_json(r.trace).dump(2) + "\n");
  }
  emit_json(io, rct_to_json(r.rct, mu), out_path);
  return 0;
}

int cmd_expand(const Outputs& io, const std::string& path, const std::string& seed_text,
               const std::string& mu_text, const std::string& out_path) {
  const RctDoc d = rct_from_json(load_json_file(path));
  const ExpandedIndex seed = seed_text.empty()
                                 ? ExpandedIndex{d.rct.domain(0), PhiMap::identity(d.rct.k())}
                                 : parse_seed(d.rct.k(), seed_text);
  const SourceDist mu = pick_mu(d.rct.alphabet(), mu_text, d.mu);
  const CodeTuple F = expand_minimal(d.rct, seed);
  io.err << "L~ of the RCT = " << exact(average_length(direct_realization(d.rct), mu)) << "\n";
  io.err << "L of the expansion = " << exact(average_length(F, mu)) << "\n";
  io.err << "tables: " << F.size() << "\n";
  emit_json(io, codetuple_to_json(F, mu), out_path);
  return 0;
}

// ---- encode / decode

ExpandedIndex default_seed(const Rct& F) { return {F.domain(0), PhiMap::identity(F.k())}; }

int cmd_encode(const Outputs& io, const std::string& path, const std::string& seed_text,
               const std::string& payload_path, const std::string& text, bool raw,
               const std::string& out_path) {
  const Rct F = rct_from_json(load_json_file(path)).rct;
  const ExpandedIndex seed = seed_text.empty() ? default_seed(F) : parse_seed(F.k(), seed_text);
  F.index_of(seed.A);
  std::string payload = payload_path.empty() ? text : read_text_file(payload_path);
  while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r')) {
    payload.pop_back();
  }
  std::vector<int> x;
  try {
    x = F.alphabet().parse(payload);
  } catch (const DomainError& e) {
    throw ParseError(std::string("payload: ") + e.what());
  }
  Encoder enc(F, seed);
  BitString bits;
  for (int s : x) {
    bits.append(enc.push(s));
  }
  bits.append(flush(F, enc.state()));
  const std::string result = raw ? bits.str() + "\n" : format_stream({F.k(), seed, bits});
  if (out_path.empty()) {
    io.out << result;
  } else {
    write_text_file(out_path, result);
  }
  return 0;
}

int cmd_decode(const Outputs& io, const std::string& path, const std::string& seed_text,
               const std::string& input_path, const std::string& bits_text) {
  const Rct F = rct_from_json(load_json_file(path)).rct;
  ExpandedIndex seed = default_seed(F);
  BitString bits;
  if (!input_path.empty()) {
    const Stream s = parse_stream(read_text_file(input_path));
    if (s.k != F.k()) {
      throw ParseError("stream has k=" + std::to_string(s.k) + " but the RCT has k=" +
                       std::to_string(F.k()));
    }
    seed = s.start;
    bits = s.bits;
  } else {
    try {
      bits = BitString(bits_text);
    } catch (const DomainError& e) {
      throw ParseError(std::string("bits: ") + e.what());
    }
  }
  if (!seed_text.empty()) {
    seed = parse_seed(F.k(), seed_text);
  }
  F.index_of(seed.A);
  io.out << F.alphabet().format(decode(F, seed, bits)) << "\n";
  return 0;
}

// ---- micro-search

int cmd_micro_search(const Outputs& io, const std::string& mu_text,
                     const std::string& alphabet_text, int max_len) {
  std::vector<std::string> names;
  if (alphabet_text.empty()) {
    const auto n = static_cast<std::size_t>(std::count(mu_text.begin(), mu_text.end(), ',') + 1);
    for (std::size_t s = 0; s < n; ++s) {
      names.emplace_back(1, static_cast<char>('a' + s));
    }
  } else {
    std::stringstream ss(alphabet_text);
    std::string name;
    while (std::getline(ss, name, ',')) {
      names.push_back(name);
    }
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (const DomainError& e) {
    throw ParseError(std::string("alphabet: ") + e.what());
  }
  const SourceDist mu = parse_mu_text(alphabet, mu_text);
  const MicroSearchResult r = micro_search(mu, alphabet, max_len);
  io.out << "valid table assignments: " << r.table_assignments << "\n";
  io.out << "huffman = " << exact(r.huffman) << "\n";
  if (!r.best) {
    io.out << "no valid RCT within max_len = " << max_len << "\n";
    return 1;
  }
  io.out << "L~min = " << exact(r.L) << "\n";
  io.out << "matches huffman: " << (r.L == r.huffman ? "yes" : "no") << "\n";
  io.out << rct_to_json(*r.best, mu).dump(2) << "\n";
  return 0;
}

// ---- selftest

int cmd_selftest(const Outputs& io) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    io.out << (ok ? "ok   " : "FAIL ") << name << "\n";
    failures += ok ? 0 : 1;
  };
  check("class counts a_0..a_4", count_classes(0) == 2 && count_classes(1) == 3 &&
                                     count_classes(2) == 6 && count_classes(3) == 21 &&
                                     count_classes(4) == 231);
  check("brute-force classes k=3", verify_classes(3).ok());
  const CodeTuple t1 = samples::three_table_tuple();
  const SourceDist uniform = SourceDist::uniform(t1.alphabet());
  check("f*_0(badb)", f_star(t1, 0, t1.alphabet().parse("badb")).str() == "1000001111110");
  check("L = 85/24", average_length(t1, uniform) == Rational(85, 24));
  const Rct t3 = samples::three_table_rct();
  const ExpandedIndex seed = samples::three_table_seed();
  const auto x = t3.alphabet().parse("acdb");
  const BitString c = encode(t3, seed, x);
  check("encode acdb", c.str() == "10111101");
  check("flush", flush(t3, final_state(t3, seed, x)).str() == "00");
  check("decode", decode(t3, seed, BitString("1011110100")) == x);
  check("RCT validates", validate(t3).all());
  const Reduction red = to_rct(t1, uniform);
  check("reduce keeps L", red.L_output == Rational(85, 24) && red.rct.size() == 3);
  io.out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Outputs io{out, err};
  CLI::App app{"k-bit delay decodable code-tuples and reduced code-tuples"};
  app.require_subcommand(1);

  int k = 0;
  std::string mode = "count";
  auto* orbits = app.add_subcommand("orbits", "count or enumerate classes of subsets of C^k");
  orbits->add_option("--k", k, "bit length")->required()->check(CLI::Range(0, 64));
  orbits->add_option("--mode", mode)->check(
      CLI::IsMember({"count", "count-restricted", "enumerate", "verify"}));

  std::string file;
  std::string kind = "auto";
  auto* validate_cmd = app.add_subcommand("validate", "check a code-tuple or RCT file");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--kind", kind)->check(CLI::IsMember({"auto", "codetuple", "rct"}));

  std::string mu_text;
  bool with_h = false;
  auto* analyze = app.add_subcommand("analyze", "stationary distribution and average length");
  analyze->add_option("file", file)->required();
  analyze->add_option("--mu", mu_text, "probabilities in alphabet order, e.g. 1/2,1/4,1/4");
  analyze->add_flag("--potentials", with_h, "also print the potentials h");

  std::string out_path;
  std::string trace_path;
  auto* reduce = app.add_subcommand("reduce", "reduce a code-tuple to an RCT");
  reduce->add_option("file", file)->required();
  reduce->add_option("--mu", mu_text);
  reduce->add_option("-o,--output", out_path);
  reduce->add_option("--trace", trace_path, "write the reduction trace as JSON");

  std::string seed_text;
  auto* expand = app.add_subcommand("expand", "realize an RCT as a code-tuple");
  expand->add_option("file", file)->required();
  expand->add_option("--seed", seed_text, "start state, e.g. 00,01,10,11|000");
  expand->add_option("--mu", mu_text);
  expand->add_option("-o,--output", out_path);

  std::string payload_path;
  std::string text;
  bool raw = false;
  auto* encode_cmd = app.add_subcommand("encode", "encode symbols with an RCT");
  encode_cmd->add_option("file", file)->required();
  encode_cmd->add_option("--seed", seed_text);
  auto* payload_opt = encode_cmd->add_option("--payload", payload_path, "file of symbols");
  auto* text_opt = encode_cmd->add_option("--text", text, "symbols on the command line");
  payload_opt->excludes(text_opt);
  encode_cmd->add_flag("--raw", raw, "print only the bits, without the stream header");
  encode_cmd->add_option("-o,--output", out_path);

  std::string input_path;
  std::string bits_text;
  auto* decode_cmd = app.add_subcommand("decode", "decode a bit stream with an RCT");
  decode_cmd->add_option("file", file)->required();
  decode_cmd->add_option("--seed", seed_text);
  auto* input_opt = decode_cmd->add_option("--input", input_path, "stream file");
  auto* bits_opt = decode_cmd->add_option("--bits", bits_text, "bits on the command line");
  input_opt->excludes(bits_opt);

  std::string alphabet_text;
  int max_len = 3;
  auto* micro = app.add_subcommand("micro-search", "exhaustive search for a best 1-bit delay RCT");
  micro->add_option("--mu", mu_text)->required();
  micro->add_option("--alphabet", alphabet_text, "comma-separated names (default a,b,c,...)");
  micro->add_option("--max-len", max_len);

  auto* selftest = app.add_subcommand("selftest", "run built-in consistency checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (orbits->parsed()) {
      return cmd_orbits(io, k, mode);
    }
    if (validate_cmd->parsed()) {
      return cmd_validate(io, file, kind);
    }
    if (analyze->parsed()) {
      return cmd_analyze(io, file, mu_text, with_h);
    }
    if (reduce->parsed()) {
      return cmd_reduce(io, file, mu_text, out_path, trace_path);
    }
    if (expand->parsed()) {
      return cmd_expand(io, file, seed_text, mu_text, out_path);
    }
    if (encode_cmd->parsed()) {
      return cmd_encode(io, file, seed_text, payload_path, text, raw, out_path);
    }
    if (decode_cmd->parsed()) {
      if (input_path.empty() && bits_opt->count() == 0) {
        err << "error: decode needs --input or --bits\n";
        return 2;
      }
      return cmd_decode(io, file, seed_text, input_path, bits_text);
    }
    if (micro->parsed()) {
      return cmd_micro_search(io, mu_text, alphabet_text, max_len);
    }
    if (selftest->parsed()) {
      return cmd_selftest(io);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace delaycode::cli
