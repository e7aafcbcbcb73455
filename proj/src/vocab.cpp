#include "pairvec/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pairvec/error.hpp"

namespace pairvec {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char ch : line) {
    if (std::isspace(ch)) {
      if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(static_cast<char>(std::tolower(ch)));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Vocab build_vocab(std::istream& corpus, int32_t max_size) {
  if (max_size <= 0) throw Error("config", "vocab max_size must be positive");
  std::unordered_map<std::string, uint64_t> freq;
  std::string line;
  while (std::getline(corpus, line)) {
    for (auto& tok : tokenize(line)) ++freq[tok];
  }
  if (freq.empty()) throw Error("empty_corpus", "no tokens found in corpus");

  std::vector<std::pair<std::string, uint64_t>> entries(freq.begin(), freq.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (entries.size() > static_cast<size_t>(max_size)) entries.resize(static_cast<size_t>(max_size));

  Vocab v;
  v.words.reserve(entries.size());
  v.counts.reserve(entries.size());
  for (auto& [word, count] : entries) {
    v.words.push_back(std::move(word));
    v.counts.push_back(count);
    v.total_tokens += count;
  }
  v.rebuild_index();
  return v;
}

void Vocab::rebuild_index() {
  index_.clear();
  index_.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) index_.emplace(words[i], static_cast<int32_t>(i));
}

std::string Vocab::context_token(int32_t id) const {
  if (id < size()) return word(id);
  if (id == x_placeholder()) return "X";
  if (id == y_placeholder()) return "Y";
  if (id == bos()) return "<bos>";
  if (id == eos()) return "<eos>";
  throw Error("config", "context token id out of range");
}

void Vocab::save_tsv(std::ostream& out) const {
  for (size_t i = 0; i < words.size(); ++i) out << words[i] << '\t' << counts[i] << '\n';
}

void Vocab::save_tsv_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io", "cannot open vocab file for writing: " + path);
  save_tsv(out);
}

Vocab Vocab::load_tsv(std::istream& in) {
  Vocab v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error("io", "malformed vocab line: " + line);
    v.words.push_back(line.substr(0, tab));
    v.counts.push_back(std::stoull(line.substr(tab + 1)));
    v.total_tokens += v.counts.back();
  }
  if (v.words.empty()) throw Error("empty_corpus", "vocab file has no entries");
  v.rebuild_index();
  return v;
}

Vocab Vocab::load_tsv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open vocab file: " + path);
  return load_tsv(in);
}

uint64_t Vocab::checksum() const {
  std::ostringstream ss;
  save_tsv(ss);
  const std::string s = ss.str();
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace pairvec
