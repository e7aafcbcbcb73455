#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pairvec/corpus.hpp"

namespace pairvec {

// Instance file: magic "PRC1", little-endian u64 vocab checksum, then
// varint-encoded records (x, y, context-length, context token ids).
inline constexpr char kInstanceMagic[4] = {'P', 'R', 'C', '1'};

class InstanceWriter {
 public:
  InstanceWriter(std::ostream& out, uint64_t vocab_checksum);
  void write(const PairContextInstance& inst);
  uint64_t count() const { return count_; }

 private:
  std::ostream& out_;
  uint64_t count_ = 0;
};

class InstanceReader {
 public:
  // Validates magic; if expected_vocab_checksum is nonzero it must match.
  InstanceReader(std::istream& in, uint64_t expected_vocab_checksum = 0);

  // False at clean end-of-file; throws "truncated" on a partial record.
  bool next(PairContextInstance& inst);

  uint64_t vocab_checksum() const { return checksum_; }

 private:
  std::istream& in_;
  uint64_t checksum_ = 0;
};

void write_instances_file(const std::string& path, uint64_t vocab_checksum,
                          const std::vector<PairContextInstance>& instances);

std::vector<PairContextInstance> read_instances_file(const std::string& path,
                                                     uint64_t expected_vocab_checksum = 0);

}  // namespace pairvec
