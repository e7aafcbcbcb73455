#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "pairvec/rng.hpp"
#include "pairvec/vocab.hpp"

namespace pairvec {

// One training triple: target word ids x, y plus the context token sequence
// with x and y replaced by the X/Y placeholders. The context always has the
// shape [left-neighbor-or-<bos>, X, between..., Y, right-neighbor-or-<eos>],
// so X sits at index 1 and Y at index size()-2.
struct PairContextInstance {
  int32_t x = -1;
  int32_t y = -1;
  std::vector<int32_t> context;

  bool operator==(const PairContextInstance&) const = default;
};

struct SubsampleConfig {
  double threshold = 5e-7;
  uint64_t seed = 1;
};

// Drops out-of-vocabulary tokens, keeping order.
std::vector<int32_t> preprocess_sentence(const std::vector<std::string>& tokens, const Vocab& vocab);

// All ordered pairs (i, j) with 0 < j - i <= window over an already
// preprocessed sentence.
std::vector<PairContextInstance> extract_instances(const std::vector<int32_t>& sentence,
                                                   const Vocab& vocab, int window = 5);

// Pair probability is the product of unigram probabilities; keep with
// probability min(1, sqrt(t / p)).
double keep_probability(int32_t x, int32_t y, const Vocab& vocab, double threshold);

bool keep_instance(const PairContextInstance& inst, const Vocab& vocab, const SubsampleConfig& cfg,
                   Rng& rng);

struct ExtractConfig {
  int window = 5;
  bool subsample = true;
  SubsampleConfig sub;
};

// Full pipeline over a corpus stream: tokenize, preprocess, extract,
// subsample. The per-instance rng is keyed by (seed, sentence-index,
// instance-index) so sharded and serial runs agree.
void extract_corpus(std::istream& corpus, const Vocab& vocab, const ExtractConfig& cfg,
                    const std::function<void(PairContextInstance&&)>& sink);

std::vector<PairContextInstance> extract_corpus_to_vector(std::istream& corpus, const Vocab& vocab,
                                                          const ExtractConfig& cfg);

}  // namespace pairvec
