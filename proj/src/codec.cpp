#include "delaycode/codec.hpp"

#include "delaycode/error.hpp"

#include <set>

namespace delaycode {

Encoder::Encoder(const Rct& rct, ExpandedIndex start) : rct_(&rct), current_(std::move(start)) {
  rct.index_of(current_.A);
  if (current_.phi.k() != rct.k()) {
    throw DomainError("start map has the wrong k");
  }
}

BitString Encoder::push(int s) {
  auto [bits, next] = expand_index_step(*rct_, current_, s);
  bits_ += bits.size();
  current_ = std::move(next);
  return bits;
}

BitString encode(const Rct& F, const ExpandedIndex& start, const std::vector<int>& x) {
  Encoder enc(F, start);
  BitString out;
  for (int s : x) {
    out.append(enc.push(s));
  }
  return out;
}

ExpandedIndex final_state(const Rct& F, const ExpandedIndex& start, const std::vector<int>& x) {
  Encoder enc(F, start);
  for (int s : x) {
    enc.push(s);
  }
  return enc.state();
}

BitString flush(const Rct& F, const ExpandedIndex& state) {
  const ExpandedMachine m = explore(F, state);
  const CodeTuple machine = m.to_codetuple(F);
  const PrefLevels levels = pref_levels(machine, F.k());
  return terminating_tail(machine, levels, 0);
}

Decoder::Decoder(const Rct& rct, ExpandedIndex start)
    : rct_(&rct), current_(std::move(start)), inverse_(invert(current_.phi)) {
  rct.index_of(current_.A);
  if (current_.phi.k() != rct.k()) {
    throw DomainError("start map has the wrong k");
  }
}

void Decoder::feed(const BitString& bits) {
  if (done_) {
    throw DomainError("decoder already finished");
  }
  if (head_ > 4096) {
    buffer_ = drop_prefix(buffer_, head_);
    head_ = 0;
  }
  buffer_.append(bits);
}

Decoder::Outcome Decoder::try_step(bool final_input, int& symbol) {
  const Rct& F = *rct_;
  const int i = F.index_of(current_.A);
  const std::size_t k = static_cast<std::size_t>(F.k());
  const std::size_t avail = buffer_.size() - head_;
  const std::size_t longest = F.max_codeword_length() + k;

  // b' = φ^{-1}(b), only as many bits as the longest candidate needs
  BitString window;
  for (std::size_t t = 0; t < std::min(avail, longest); ++t) {
    window.push_back(buffer_[head_ + t]);
  }
  const BitString decoded = inverse_.apply(window);

  bool undecided = false;
  int match = -1;
  for (int s = 0; s < static_cast<int>(F.alphabet().size()); ++s) {
    const BitString& w = F.f(i, s);
    const std::size_t need = w.size() + k;
    const std::size_t have = std::min(need, avail);
    bool consistent = true;
    for (std::size_t t = 0; t < std::min(w.size(), have) && consistent; ++t) {
      consistent = decoded[t] == w[t];
    }
    if (!consistent) {
      continue;
    }
    const SubsetK& target = F.tau(i, s);
    if (have == need) {
      std::uint64_t c = 0;
      for (std::size_t t = w.size(); t < need; ++t) {
        c = (c << 1) | (decoded[t] ? 1U : 0U);
      }
      if (!target.contains_value(c)) {
        continue;
      }
      if (match != -1) {
        throw InvalidCodeError("symbols '" + F.alphabet().name(match) + "' and '" +
                               F.alphabet().name(s) + "' both match at bit offset " +
                               std::to_string(consumed_));
      }
      match = s;
      continue;
    }
    if (final_input) {
      continue;
    }
    // partial lookahead: still open if some target member starts with it
    const std::size_t got = have > w.size() ? have - w.size() : 0;
    std::uint64_t head = 0;
    for (std::size_t t = w.size(); t < w.size() + got; ++t) {
      head = (head << 1) | (decoded[t] ? 1U : 0U);
    }
    for (const auto& c : target.members()) {
      if ((c.value() >> (k - got)) == head) {
        undecided = true;
        break;
      }
    }
  }
  if (undecided) {
    return Outcome::kUndecided;
  }
  if (match == -1) {
    return Outcome::kNoMatch;
  }
  symbol = match;
  return Outcome::kMatch;
}

std::vector<int> Decoder::poll() {
  std::vector<int> out;
  std::set<ExpandedIndex> since_advance = {current_};
  for (;;) {
    int s = -1;
    const Outcome o = try_step(done_, s);
    if (o != Outcome::kMatch) {
      break;
    }
    out.push_back(s);
    auto [bits, next] = expand_index_step(*rct_, current_, s);
    head_ += bits.size();
    consumed_ += bits.size();
    current_ = std::move(next);
    inverse_ = invert(current_.phi);
    if (!bits.empty()) {
      since_advance.clear();
    } else if (since_advance.count(current_) != 0) {
      throw InvalidCodeError("empty-codeword transitions cycle at bit offset " +
                             std::to_string(consumed_));
    }
    since_advance.insert(current_);
  }
  return out;
}

std::vector<int> Decoder::finish() {
  done_ = true;
  std::vector<int> out = poll();
  const std::size_t left = buffered();
  const std::size_t k = static_cast<std::size_t>(rct_->k());
  const std::size_t bound = k + rct_->max_codeword_length();
  if (left < k || left > bound) {
    throw CorruptInputError(std::to_string(left) + " bits left undecoded; a valid stream leaves " +
                                "between " + std::to_string(k) + " and " + std::to_string(bound),
                            consumed_);
  }
  return out;
}

std::vector<int> decode(const Rct& F, const ExpandedIndex& start, const BitString& b) {
  Decoder dec(F, start);
  dec.feed(b);
  return dec.finish();
}

}  // namespace delaycode
