#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace pairvec {

// Frequency-ranked word table. Ids are dense 0..|V|-1 in descending count
// order, ties broken lexicographically. total_tokens counts the corpus
// occurrences of retained words only.
struct Vocab {
  std::vector<std::string> words;
  std::vector<uint64_t> counts;
  uint64_t total_tokens = 0;

  static constexpr int32_t kDefaultMaxSize = 100000;

  int32_t size() const { return static_cast<int32_t>(words.size()); }

  int32_t id(const std::string& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }

  const std::string& word(int32_t id) const { return words[static_cast<size_t>(id)]; }

  double unigram_prob(int32_t id) const {
    return static_cast<double>(counts[static_cast<size_t>(id)]) / static_cast<double>(total_tokens);
  }

  // Context token space appends the placeholders and boundary symbols after
  // the word ids; the context embedding table has size() + 4 rows.
  int32_t x_placeholder() const { return size(); }
  int32_t y_placeholder() const { return size() + 1; }
  int32_t bos() const { return size() + 2; }
  int32_t eos() const { return size() + 3; }
  int32_t context_vocab_size() const { return size() + 4; }

  // Renders a context token for reports and CLI output.
  std::string context_token(int32_t id) const;

  void rebuild_index();

  // TSV `word<TAB>count`, descending count; line number = id.
  void save_tsv(std::ostream& out) const;
  void save_tsv_file(const std::string& path) const;
  static Vocab load_tsv(std::istream& in);
  static Vocab load_tsv_file(const std::string& path);

  // FNV-1a over the TSV serialization; embedded in instance files and
  // checkpoints so mismatched vocabularies are rejected.
  uint64_t checksum() const;

 private:
  std::unordered_map<std::string, int32_t> index_;
};

// Whitespace split + ASCII lowercasing. Non-ASCII bytes pass through
// untouched.
std::vector<std::string> tokenize(const std::string& line);

// Most frequent max_size tokens over a one-sentence-per-line stream.
Vocab build_vocab(std::istream& corpus, int32_t max_size = Vocab::kDefaultMaxSize);

}  // namespace pairvec
