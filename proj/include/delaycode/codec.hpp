#pragma once

#include "delaycode/bits.hpp"
#include "delaycode/rct.hpp"

#include <vector>

namespace delaycode {

/// Streaming encoder over an RCT; never builds the expanded machine.
class Encoder {
 public:
  Encoder(const Rct& rct, ExpandedIndex start);

  /// Encodes one symbol and returns the emitted bits.
  BitString push(int s);
  const ExpandedIndex& state() const { return current_; }
  std::size_t bits_emitted() const { return bits_; }

 private:
  const Rct* rct_;
  ExpandedIndex current_;
  std::size_t bits_ = 0;
};

BitString encode(const Rct& F, const ExpandedIndex& start, const std::vector<int>& x);
/// Encoder state after x.
ExpandedIndex final_state(const Rct& F, const ExpandedIndex& start, const std::vector<int>& x);

/// The k bits appended after encoding that ends at `state`: the smallest
/// k-bit string that follows `state` in the expanded machine through a
/// non-empty codeword. Restricting to non-empty codewords keeps the decoder
/// from reading extra empty-codeword symbols out of the tail. FlushError
/// when no such string exists.
BitString flush(const Rct& F, const ExpandedIndex& state);

/// Streaming decoder. A step is taken once every candidate symbol is
/// settled by the buffered input; finish() settles the rest.
class Decoder {
 public:
  Decoder(const Rct& rct, ExpandedIndex start);

  void feed(const BitString& bits);
  /// Decodes as far as the buffered input allows.
  std::vector<int> poll();
  /// Input is complete: decodes the remainder and checks the leftover
  /// length (between k and k + max|f̃| bits), else CorruptInputError.
  std::vector<int> finish();

  const ExpandedIndex& state() const { return current_; }
  std::size_t consumed() const { return consumed_; }
  std::size_t buffered() const { return buffer_.size() - head_; }

 private:
  enum class Outcome { kNoMatch, kMatch, kUndecided };
  Outcome try_step(bool final_input, int& symbol);

  const Rct* rct_;
  ExpandedIndex current_;
  PhiMap inverse_;
  BitString buffer_;
  std::size_t head_ = 0;
  std::size_t consumed_ = 0;
  bool done_ = false;
};

std::vector<int> decode(const Rct& F, const ExpandedIndex& start, const BitString& b);

}  // namespace delaycode
