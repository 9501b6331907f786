#include "delaycode/samples.hpp"

namespace delaycode::samples {

namespace {

Alphabet abcd() { return Alphabet({"a", "b", "c", "d"}); }

SubsetK set2(std::initializer_list<const char*> members) {
  std::vector<std::string> m(members.begin(), members.end());
  return SubsetK::from_strings(2, m);
}

}  // namespace

CodeTuple three_table_tuple() {
  auto row = [](std::initializer_list<std::pair<const char*, int>> cells) {
    Table t;
    for (const auto& [w, target] : cells) {
      t.f.emplace_back(w);
      t.tau.push_back(target);
    }
    return t;
  };
  std::vector<Table> tables = {
      row({{"01", 0}, {"10", 1}, {"0100", 0}, {"01", 2}}),
      row({{"00", 1}, {"", 0}, {"00111", 1}, {"00111", 2}}),
      row({{"1100", 1}, {"1110", 2}, {"111000", 2}, {"110", 2}}),
  };
  return CodeTuple(2, abcd(), {std::string("0"), std::string("1"), std::string("2")},
                   std::move(tables));
}

Rct three_table_rct(bool psi_overrides) {
  const SubsetK s00 = set2({"00"});
  const SubsetK s00_10 = set2({"00", "10"});
  const SubsetK full = SubsetK::full(2);
  auto phi = [](const char* t) { return std::optional<PhiMap>(PhiMap::parse(t)); };
  std::vector<RctTable> tables = {
      {s00,
       {BitString("001"), BitString("000"), BitString("00"), BitString("001")},
       {set2({"01", "10"}), set2({"00"}), set2({"01"}), set2({"00", "11"})},
       {phi("010"), phi("000"), phi("010"), phi("001")}},
      {s00_10,
       {BitString("1"), BitString("1001"), BitString(""), BitString("1000")},
       {set2({"01"}), full, set2({"00"}), full},
       {phi("010"), phi("000"), phi("000"), phi("000")}},
      {full,
       {BitString("1"), BitString("1"), BitString("100"), BitString("0")},
       {set2({"01", "10"}), set2({"11"}), full, full},
       {phi("010"), phi("110"), phi("000"), phi("000")}},
  };
  if (!psi_overrides) {
    for (auto& t : tables) {
      t.psi.clear();
    }
  }
  return Rct(2, abcd(), std::move(tables));
}

ExpandedIndex three_table_seed() { return {SubsetK::full(2), PhiMap::identity(2)}; }

CodeTuple all_empty_tuple() {
  Alphabet ab({"a", "b"});
  std::vector<Table> tables = {{{BitString(""), BitString("")}, {1, 1}},
                               {{BitString(""), BitString("")}, {0, 0}}};
  return CodeTuple(1, ab, {std::string("0"), std::string("1")}, std::move(tables));
}

CodeTuple prefix_code_tuple() {
  Alphabet abc({"a", "b", "c"});
  std::vector<Table> tables = {{{BitString("0"), BitString("10"), BitString("11")}, {0, 0, 0}}};
  return CodeTuple(1, abc, {std::string("0")}, std::move(tables));
}

SourceDist prefix_code_mu() {
  return SourceDist(Alphabet({"a", "b", "c"}), {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
}

CodeTuple mirror_pair() {
  Alphabet ab({"a", "b"});
  std::vector<Table> tables = {{{BitString("00"), BitString("01")}, {1, 1}},
                               {{BitString("11"), BitString("10")}, {0, 0}}};
  return CodeTuple(1, ab, {std::string("0"), std::string("1")}, std::move(tables));
}

}  // namespace delaycode::samples
