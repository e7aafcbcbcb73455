#include "pairvec/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <istream>

#include "pairvec/error.hpp"

namespace pairvec {

std::vector<int32_t> preprocess_sentence(const std::vector<std::string>& tokens, const Vocab& vocab) {
  std::vector<int32_t> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    int32_t id = vocab.id(tok);
    if (id >= 0) out.push_back(id);
  }
  return out;
}

std::vector<PairContextInstance> extract_instances(const std::vector<int32_t>& sentence,
                                                   const Vocab& vocab, int window) {
  if (window < 1) throw Error("config", "window must be >= 1");
  std::vector<PairContextInstance> out;
  const int n = static_cast<int>(sentence.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i <= window; ++j) {
      PairContextInstance inst;
      inst.x = sentence[static_cast<size_t>(i)];
      inst.y = sentence[static_cast<size_t>(j)];
      inst.context.reserve(static_cast<size_t>(j - i) + 3);
      inst.context.push_back(i > 0 ? sentence[static_cast<size_t>(i - 1)] : vocab.bos());
      inst.context.push_back(vocab.x_placeholder());
      for (int t = i + 1; t < j; ++t) inst.context.push_back(sentence[static_cast<size_t>(t)]);
      inst.context.push_back(vocab.y_placeholder());
      inst.context.push_back(j + 1 < n ? sentence[static_cast<size_t>(j + 1)] : vocab.eos());
      out.push_back(std::move(inst));
    }
  }
  return out;
}

double keep_probability(int32_t x, int32_t y, const Vocab& vocab, double threshold) {
  if (threshold <= 0.0 || threshold >= 1.0) throw Error("config", "subsample threshold must be in (0, 1)");
  double p = vocab.unigram_prob(x) * vocab.unigram_prob(y);
  if (p <= threshold) return 1.0;
  return std::sqrt(threshold / p);
}

bool keep_instance(const PairContextInstance& inst, const Vocab& vocab, const SubsampleConfig& cfg,
                   Rng& rng) {
  return rng.next_double() < keep_probability(inst.x, inst.y, vocab, cfg.threshold);
}

void extract_corpus(std::istream& corpus, const Vocab& vocab, const ExtractConfig& cfg,
                    const std::function<void(PairContextInstance&&)>& sink) {
  std::string line;
  uint64_t sentence_index = 0;
  while (std::getline(corpus, line)) {
    auto sentence = preprocess_sentence(tokenize(line), vocab);
    auto instances = extract_instances(sentence, vocab, cfg.window);
    for (size_t k = 0; k < instances.size(); ++k) {
      if (cfg.subsample) {
        Rng rng = Rng::keyed(cfg.sub.seed, sentence_index, k);
        if (!keep_instance(instances[k], vocab, cfg.sub, rng)) continue;
      }
      sink(std::move(instances[k]));
    }
    ++sentence_index;
  }
}

std::vector<PairContextInstance> extract_corpus_to_vector(std::istream& corpus, const Vocab& vocab,
                                                          const ExtractConfig& cfg) {
  std::vector<PairContextInstance> out;
  extract_corpus(corpus, vocab, cfg, [&](PairContextInstance&& inst) { out.push_back(std::move(inst)); });
  return out;
}

}  // namespace pairvec
