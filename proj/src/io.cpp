#include "delaycode/io.hpp"

#include "delaycode/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace delaycode {

namespace {

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw ParseError(where + ": expected a string");
  }
  return j.get<std::string>();
}

BitString bits_from(const Json& j, const std::string& where) {
  std::string text = as_string(j, where);
  if (text == "λ") {
    text.clear();
  }
  try {
    return BitString(text);
  } catch (const DomainError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string bits_to(const BitString& b) { return b.str(); }

SubsetK subset_from(int k, const Json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ParseError(where + ": expected a list of " + std::to_string(k) + "-bit strings");
  }
  std::vector<BitString> members;
  for (const auto& m : j) {
    BitString b = bits_from(m, where);
    if (static_cast<int>(b.size()) != k) {
      throw ParseError(where + ": member \"" + b.str() + "\" is not " + std::to_string(k) +
                       " bits long");
    }
    members.push_back(std::move(b));
  }
  return SubsetK::from_members(k, members);
}

Json subset_to(const SubsetK& A) {
  Json out = Json::array();
  for (const auto& m : A.members()) {
    out.push_back(m.str());
  }
  return out;
}

TableId id_from(int k, const Json& j, const std::string& where) {
  if (j.is_array()) {
    return subset_from(k, j, where);
  }
  if (j.is_string()) {
    return j.get<std::string>();
  }
  if (j.is_number_integer()) {
    return std::to_string(j.get<long long>());
  }
  throw ParseError(where + ": a table id is a list of bit strings, a string or an integer");
}

Json id_to(const TableId& id) {
  if (const auto* A = std::get_if<SubsetK>(&id)) {
    return subset_to(*A);
  }
  return std::get<std::string>(id);
}

int read_k(const Json& doc) {
  const Json& k = member(doc, "k", "document");
  if (!k.is_number_integer() || k.get<int>() < 0 || k.get<int>() > kMaxSubsetK) {
    throw ParseError("document: \"k\" must be an integer in 0..6");
  }
  return k.get<int>();
}

Alphabet read_alphabet(const Json& doc) {
  const Json& a = member(doc, "alphabet", "document");
  if (!a.is_array()) {
    throw ParseError("document: \"alphabet\" must be a list of symbol names");
  }
  std::vector<std::string> names;
  for (const auto& s : a) {
    names.push_back(as_string(s, "alphabet"));
  }
  try {
    return Alphabet(std::move(names));
  } catch (const DomainError& e) {
    throw ParseError(std::string("alphabet: ") + e.what());
  }
}

std::optional<SourceDist> read_mu(const Json& doc, const Alphabet& alphabet) {
  if (!doc.contains("mu")) {
    return std::nullopt;
  }
  return mu_from_json(alphabet, doc.at("mu"));
}

// Per-symbol object {sym: value}; every symbol must appear exactly once.
template <typename Fn>
void for_each_symbol(const Json& obj, const Alphabet& alphabet, const std::string& where, Fn fn) {
  if (!obj.is_object()) {
    throw ParseError(where + ": expected an object keyed by symbol");
  }
  for (const auto& [name, value] : obj.items()) {
    try {
      alphabet.index_of(name);
    } catch (const DomainError&) {
      throw ParseError(where + ": unknown symbol '" + name + "'");
    }
  }
  for (int s = 0; s < static_cast<int>(alphabet.size()); ++s) {
    if (!obj.contains(alphabet.name(s))) {
      throw ParseError(where + ": no entry for symbol '" + alphabet.name(s) + "'");
    }
    fn(s, obj.at(alphabet.name(s)));
  }
}

const Json& tables_of(const Json& doc) {
  const Json& t = member(doc, "tables", "document");
  if (!t.is_array() || t.empty()) {
    throw ParseError("document: \"tables\" must be a non-empty list");
  }
  return t;
}

Rational fraction_from(const Json& j, const std::string& where) {
  try {
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
      const auto d = j[1].get<long long>();
      if (d == 0) {
        throw ParseError(where + ": zero denominator");
      }
      return Rational(j[0].get<long long>(), d);
    }
    if (j.is_string()) {
      return parse_fraction(j.get<std::string>());
    }
    if (j.is_number_integer()) {
      return Rational(j.get<long long>());
    }
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  if (j.is_number_float()) {
    throw ParseError(where + ": decimal probabilities are not accepted; write an exact fraction");
  }
  throw ParseError(where + ": expected [n, d], \"n/d\" or an integer");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // locate the byte offset as line:column
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path);
  }
  out << text;
}

Json load_json_file(const std::string& path) {
  try {
    return parse_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string document_kind(const Json& doc) {
  if (doc.is_object() && doc.contains("kind") && doc.at("kind").is_string()) {
    return doc.at("kind").get<std::string>();
  }
  const Json& tables = tables_of(doc);
  return tables.front().is_object() && tables.front().contains("A") ? "rct" : "codetuple";
}

CodeTupleDoc codetuple_from_json(const Json& doc) {
  const int k = read_k(doc);
  Alphabet alphabet = read_alphabet(doc);
  const Json& tables = tables_of(doc);
  std::vector<TableId> ids;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    ids.push_back(id_from(k, member(tables[i], "id", "table " + std::to_string(i)),
                          "table " + std::to_string(i) + " id"));
  }
  std::vector<Table> parsed;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::string where = "table " + id_str(ids[i]);
    Table t;
    t.f.resize(alphabet.size());
    t.tau.resize(alphabet.size());
    for_each_symbol(member(tables[i], "f", where), alphabet, where + " f",
                    [&](int s, const Json& v) {
                      t.f[static_cast<std::size_t>(s)] = bits_from(v, where + " f");
                    });
    for_each_symbol(member(tables[i], "tau", where), alphabet, where + " tau",
                    [&](int s, const Json& v) {
                      const TableId target = id_from(k, v, where + " tau");
                      const auto it = std::find(ids.begin(), ids.end(), target);
                      if (it == ids.end()) {
                        throw ParseError(where + " tau: unknown table " + id_str(target));
                      }
                      t.tau[static_cast<std::size_t>(s)] = static_cast<int>(it - ids.begin());
                    });
    parsed.push_back(std::move(t));
  }
  std::optional<SourceDist> mu = read_mu(doc, alphabet);
  try {
    return {CodeTuple(k, alphabet, std::move(ids), std::move(parsed)), std::move(mu)};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json codetuple_to_json(const CodeTuple& F, const std::optional<SourceDist>& mu) {
  Json out;
  out["kind"] = "codetuple";
  out["k"] = F.k();
  out["alphabet"] = F.alphabet().symbols();
  if (mu) {
    out["mu"] = mu_to_json(F.alphabet(), *mu);
  }
  Json tables = Json::array();
  for (int i = 0; i < F.size(); ++i) {
    Json t;
    t["id"] = id_to(F.id(i));
    Json f = Json::object();
    Json tau = Json::object();
    for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
      f[F.alphabet().name(s)] = bits_to(F.f(i, s));
      tau[F.alphabet().name(s)] = id_to(F.id(F.tau(i, s)));
    }
    t["f"] = std::move(f);
    t["tau"] = std::move(tau);
    tables.push_back(std::move(t));
  }
  out["tables"] = std::move(tables);
  return out;
}

RctDoc rct_from_json(const Json& doc) {
  const int k = read_k(doc);
  Alphabet alphabet = read_alphabet(doc);
  const Json& tables = tables_of(doc);
  std::vector<RctTable> parsed;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::string where = "table " + std::to_string(i);
    RctTable t;
    t.A = subset_from(k, member(tables[i], "A", where), where + " A");
    t.f.resize(alphabet.size());
    t.tau.resize(alphabet.size());
    for_each_symbol(member(tables[i], "f", where), alphabet, where + " f",
                    [&](int s, const Json& v) {
                      t.f[static_cast<std::size_t>(s)] = bits_from(v, where + " f");
                    });
    for_each_symbol(member(tables[i], "tau", where), alphabet, where + " tau",
                    [&](int s, const Json& v) {
                      t.tau[static_cast<std::size_t>(s)] = subset_from(k, v, where + " tau");
                    });
    if (tables[i].contains("psi")) {
      const Json& psi = tables[i].at("psi");
      if (!psi.is_object()) {
        throw ParseError(where + " psi: expected an object keyed by symbol");
      }
      t.psi.resize(alphabet.size());
      for (const auto& [name, value] : psi.items()) {
        int s = 0;
        try {
          s = alphabet.index_of(name);
        } catch (const DomainError&) {
          throw ParseError(where + " psi: unknown symbol '" + name + "'");
        }
        try {
          PhiMap phi = PhiMap::parse(as_string(value, where + " psi"));
          if (phi.k() != k) {
            throw ParseError(where + " psi: map \"" + value.get<std::string>() +
                             "\" does not have 2^k - 1 bits");
          }
          t.psi[static_cast<std::size_t>(s)] = phi;
        } catch (const DomainError& e) {
          throw ParseError(where + " psi: " + e.what());
        }
      }
    }
    parsed.push_back(std::move(t));
  }
  std::optional<SourceDist> mu = read_mu(doc, alphabet);
  return {Rct(k, alphabet, std::move(parsed)), std::move(mu)};
}

Json rct_to_json(const Rct& F, const std::optional<SourceDist>& mu) {
  Json out;
  out["kind"] = "rct";
  out["k"] = F.k();
  out["alphabet"] = F.alphabet().symbols();
  if (mu) {
    out["mu"] = mu_to_json(F.alphabet(), *mu);
  }
  Json tables = Json::array();
  for (int i = 0; i < F.size(); ++i) {
    Json t;
    t["A"] = subset_to(F.domain(i));
    Json f = Json::object();
    Json tau = Json::object();
    Json psi = Json::object();
    for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
      f[F.alphabet().name(s)] = bits_to(F.f(i, s));
      tau[F.alphabet().name(s)] = subset_to(F.tau(i, s));
      if (F.has_psi_override(i, s)) {
        psi[F.alphabet().name(s)] = F.psi(i, s).str();
      }
    }
    t["f"] = std::move(f);
    t["tau"] = std::move(tau);
    if (!psi.empty()) {
      t["psi"] = std::move(psi);
    }
    tables.push_back(std::move(t));
  }
  out["tables"] = std::move(tables);
  return out;
}

Json trace_to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json j;
    j["kind"] = step_kind_name(s.kind);
    j["detail"] = s.detail;
    if (s.merged) {
      j["merged"] = {{"kept", id_str(s.merged->first)}, {"dropped", id_str(s.merged->second)}};
    }
    if (!s.potentials.empty()) {
      Json h = Json::array();
      for (const auto& v : s.potentials) {
        h.push_back(to_fraction(v));
      }
      j["potentials"] = std::move(h);
    }
    j["L_before"] = to_fraction(s.L_before);
    j["L_after"] = to_fraction(s.L_after);
    if (s.k_dec) {
      j["k_dec"] = *s.k_dec;
    }
    j["tables"] = s.tables_after;
    steps.push_back(std::move(j));
  }
  return Json{{"monotone", trace.monotone()}, {"steps", std::move(steps)}};
}

SourceDist mu_from_json(const Alphabet& alphabet, const Json& j) {
  std::vector<Rational> p(alphabet.size());
  for_each_symbol(j, alphabet, "mu", [&](int s, const Json& v) {
    p[static_cast<std::size_t>(s)] = fraction_from(v, "mu '" + alphabet.name(s) + "'");
  });
  try {
    return SourceDist(alphabet, std::move(p));
  } catch (const DomainError& e) {
    throw ParseError(std::string("mu: ") + e.what());
  }
}

Json mu_to_json(const Alphabet& alphabet, const SourceDist& mu) {
  Json out = Json::object();
  for (int s = 0; s < static_cast<int>(alphabet.size()); ++s) {
    out[alphabet.name(s)] = to_fraction(mu[s]);
  }
  return out;
}

SourceDist parse_mu_text(const Alphabet& alphabet, std::string_view text) {
  std::vector<Rational> p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    p.push_back(parse_fraction(text.substr(start, end - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  if (p.size() != alphabet.size()) {
    throw ParseError("mu has " + std::to_string(p.size()) + " entries for " +
                     std::to_string(alphabet.size()) + " symbols");
  }
  try {
    return SourceDist(alphabet, std::move(p));
  } catch (const DomainError& e) {
    throw ParseError(std::string("mu: ") + e.what());
  }
}

ExpandedIndex parse_seed(int k, std::string_view text) {
  const std::size_t bar = text.rfind('|');
  if (bar == std::string_view::npos) {
    throw ParseError("seed must look like 00,01,10,11|000");
  }
  std::string set(text.substr(0, bar));
  const std::string phi(text.substr(bar + 1));
  // strip brackets, braces and quotes, leaving comma-separated members
  std::string members;
  for (char c : set) {
    if (c != '[' && c != ']' && c != '{' && c != '}' && c != '"' && c != ' ') {
      members += c;
    }
  }
  std::vector<BitString> parsed;
  std::size_t start = 0;
  while (!members.empty() && start <= members.size()) {
    const std::size_t comma = members.find(',', start);
    const std::size_t end = comma == std::string::npos ? members.size() : comma;
    std::string m = members.substr(start, end - start);
    if (m == "λ") {
      m.clear();
    }
    try {
      parsed.emplace_back(m);
    } catch (const DomainError& e) {
      throw ParseError(std::string("seed: ") + e.what());
    }
    if (static_cast<int>(parsed.back().size()) != k) {
      throw ParseError("seed member \"" + m + "\" is not " + std::to_string(k) + " bits long");
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  try {
    PhiMap map = PhiMap::parse(phi);
    if (map.k() != k) {
      throw ParseError("seed map \"" + phi + "\" needs 2^k - 1 = " +
                       std::to_string((1 << k) - 1) + " bits");
    }
    return {SubsetK::from_members(k, parsed), map};
  } catch (const DomainError& e) {
    throw ParseError(std::string("seed: ") + e.what());
  }
}

std::string format_seed(const ExpandedIndex& seed) {
  std::string members;
  for (const auto& m : seed.A.members()) {
    members += (members.empty() ? "" : ",") + m.str();
  }
  return members + "|" + seed.phi.str();
}

std::string format_stream(const Stream& s) {
  return "k=" + std::to_string(s.k) + " start=" + format_seed(s.start) + "\n" + s.bits.str() +
         "\n";
}

Stream parse_stream(std::string_view text) {
  const std::size_t nl = text.find('\n');
  const std::string_view header = text.substr(0, nl);
  const std::string_view body = nl == std::string_view::npos ? "" : text.substr(nl + 1);
  Stream s;
  const std::size_t kpos = header.find("k=");
  const std::size_t spos = header.find(" start=");
  if (kpos != 0 || spos == std::string_view::npos) {
    throw ParseError("stream header must be `k=<int> start=<seed>`");
  }
  try {
    s.k = std::stoi(std::string(header.substr(2, spos - 2)));
  } catch (const std::exception&) {
    throw ParseError("stream header has a malformed k");
  }
  if (s.k < 0 || s.k > kMaxSubsetK) {
    throw ParseError("stream header k outside 0..6");
  }
  std::string seed(header.substr(spos + 7));
  while (!seed.empty() && (seed.back() == '\r' || seed.back() == ' ')) {
    seed.pop_back();
  }
  s.start = parse_seed(s.k, seed);
  std::string bits;
  for (char c : body) {
    if (c == '0' || c == '1') {
      bits += c;
    } else if (c != '\n' && c != '\r' && c != ' ' && c != '\t') {
      throw ParseError(std::string("stream body has a non-bit character '") + c + "'");
    }
  }
  s.bits = BitString(bits);
  return s;
}

}  // namespace delaycode
