#include "raag/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace raag {

namespace {

void validate_word(const Graph& g, const Word& w) {
  for (const Letter& l : w) {
    if (!g.has_vertex(l.gen))
      throw std::invalid_argument("word uses unknown generator index " +
                                  std::to_string(l.gen));
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

// +1 before -1 within a generator.
bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

// Cancel inverse pairs whose intervening letters all commute with them,
// until no such pair remains. The result represents the same element and is
// geodesic; which pairs are cancellable is a property of the element, so
// the scan order does not affect the resulting element.
void free_reduce(const Graph& g, Word& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].gen == w[i].gen) {
          if (w[j].sign == -w[i].sign) {
            w.erase(w.begin() + j);
            w.erase(w.begin() + i);
            changed = true;
          }
          break;  // same generator blocks either way
        }
        if (!g.adjacent(w[i].gen, w[j].gen)) break;
      }
    }
  }
}

// Lexicographically least shuffle of a reduced word: repeatedly emit the
// least letter among those movable to the front (all earlier letters
// commute with it). Plain bubble passes are not confluent for partial
// commutation, so the selection has to be greedy over the whole prefix.
Word canonical_shuffle(const Graph& g, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    VertexSet movable_mask = VertexSet::full(g.size());
    std::size_t best = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (movable_mask.contains(w[p].gen) &&
          (best == w.size() || letter_less(w[p], w[best])))
        best = p;
      movable_mask = movable_mask.intersect(g.neighbors(w[p].gen));
      if (movable_mask.empty()) break;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

Word multiply(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word multiply(const Word& a, const Word& b, const Word& c) {
  return multiply(multiply(a, b), c);
}

Word conjugate_word(const Word& h, const Word& w) {
  return multiply(h, w, invert(h));
}

Word normal_form(const Graph& g, const Word& w) {
  validate_word(g, w);
  Word v = w;
  free_reduce(g, v);
  return canonical_shuffle(g, std::move(v));
}

bool equal(const Graph& g, const Word& a, const Word& b) {
  return normal_form(g, a) == normal_form(g, b);
}

bool is_identity(const Graph& g, const Word& w) {
  return normal_form(g, w).empty();
}

bool commutes(const Graph& g, const Word& a, const Word& b) {
  return equal(g, multiply(a, b), multiply(b, a));
}

CyclicReduction cyclically_reduce(const Graph& g, const Word& w) {
  CyclicReduction out;
  out.core = normal_form(g, w);
  bool changed = true;
  while (changed) {
    changed = false;
    Word& v = out.core;
    // candidate front letters: all earlier letters commute with them
    VertexSet front_mask = VertexSet::full(g.size());
    for (std::size_t i = 0; i < v.size() && !changed; ++i) {
      if (i > 0) front_mask = front_mask.intersect(g.neighbors(v[i - 1].gen));
      if (!front_mask.contains(v[i].gen) && i > 0) {
        if (front_mask.empty()) break;
        continue;
      }
      // matching back letter: all later letters commute with it
      for (std::size_t j = v.size(); j-- > i + 1;) {
        if (v[j].gen == v[i].gen && v[j].sign == -v[i].sign) {
          out.conjugator.push_back(v[i]);
          v.erase(v.begin() + j);
          v.erase(v.begin() + i);
          v = normal_form(g, v);
          changed = true;
          break;
        }
        if (!g.adjacent(v[j].gen, v[i].gen)) break;
      }
    }
  }
  return out;
}

bool is_cyclically_reduced(const Graph& g, const Word& w) {
  return cyclically_reduce(g, w).conjugator.empty();
}

VertexSet support(const Graph& g, const Word& w) {
  VertexSet out;
  for (const Letter& l : normal_form(g, w)) out.insert(l.gen);
  return out;
}

IntVector abelianize(const Graph& g, const Word& w) {
  validate_word(g, w);
  IntVector out(g.size(), 0);
  for (const Letter& l : w) out[l.gen] += l.sign;
  return out;
}

std::optional<Word> extract_conjugator(const Graph& g, const Word& x,
                                       const Word& y) {
  Word xn = normal_form(g, x);
  CyclicReduction xc = cyclically_reduce(g, xn);
  if (!xc.conjugator.empty())
    throw std::invalid_argument("extract_conjugator: x must be cyclically reduced");
  CyclicReduction yc = cyclically_reduce(g, y);
  if (yc.core == xn) return normal_form(g, yc.conjugator);
  return std::nullopt;
}

std::vector<Word> enumerate_ball(const Graph& g, int radius,
                                 std::optional<VertexSet> support) {
  VertexSet gens = support ? *support : g.all();
  g.check_subset(gens);
  std::vector<int> gen_list = gens.to_vector();

  std::vector<Word> out;
  std::unordered_set<std::string> seen;
  out.push_back({});
  seen.insert(word_key(out.back()));
  std::size_t level_begin = 0;
  for (int k = 1; k <= radius; ++k) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int gen : gen_list) {
        for (int sign : {1, -1}) {
          Word w = out[i];
          w.push_back({gen, sign});
          Word nf = normal_form(g, w);
          if (static_cast<int>(nf.size()) != k) continue;
          if (seen.insert(word_key(nf)).second) out.push_back(std::move(nf));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::string word_to_string(const Graph& g, const Word& w) {
  if (w.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += g.name(w[i].gen);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

Word parse_word(const Graph& g, const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "(empty)") continue;
    int sign = 1;
    std::string name = tok;
    if (auto pos = tok.rfind("^-1"); pos != std::string::npos &&
                                     pos + 3 == tok.size()) {
      sign = -1;
      name = tok.substr(0, pos);
    }
    auto idx = g.find(name);
    if (!idx)
      throw std::invalid_argument("word token '" + tok +
                                  "' does not name a generator");
    out.push_back({*idx, sign});
  }
  return out;
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (const Letter& l : w)
    key.push_back(static_cast<char>((l.gen << 1) | (l.sign < 0 ? 1 : 0)));
  return key;
}

std::string int_vector_to_string(const Graph& g, const IntVector& v) {
  std::string out;
  for (int i = 0; i < g.size() && i < static_cast<int>(v.size()); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += g.name(i) + ":" + std::to_string(v[i]);
  }
  if (out.empty()) return "0";
  return "(" + out + ")";
}

}  // namespace raag
