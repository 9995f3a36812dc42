#include "xdescent/periodic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "xdescent/errors.hpp"

namespace xdescent {

namespace {

const Count kZero = 0;

// Mixed-radix index over sub-contents: coordinate r ranges over 0..full[r].
struct ContentIndexer {
  explicit ContentIndexer(const std::vector<int>& full) : full(full) {
    strides.resize(full.size());
    std::size_t s = 1;
    for (std::size_t r = 0; r < full.size(); ++r) {
      strides[r] = s;
      s *= static_cast<std::size_t>(full[r] + 1);
    }
    states = s;
  }

  std::size_t index(const std::vector<int>& v) const {
    std::size_t idx = 0;
    for (std::size_t r = 0; r < v.size(); ++r) {
      idx += static_cast<std::size_t>(v[r]) * strides[r];
    }
    return idx;
  }

  // Lexicographic odometer; every vector precedes any vector it is obtained
  // from by incrementing one coordinate.
  bool advance(std::vector<int>& v) const {
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (v[r] < full[r]) {
        ++v[r];
        return true;
      }
      v[r] = 0;
    }
    return false;
  }

  std::vector<int> full;
  std::vector<std::size_t> strides;
  std::size_t states = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// ContentVector / ResidueDigraph

ContentVector::ContentVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("content vector: modulus must be positive");
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("content vector: counts must be nonnegative");
  }
}

ContentVector ContentVector::canonical(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("canonical content: bad arguments");
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (int t = 1; t <= n; ++t) ++counts[static_cast<std::size_t>(t % m)];
  return ContentVector(std::move(counts));
}

int ContentVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::string ContentVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t r = 0; r < counts_.size(); ++r) {
    if (r) out << ",";
    out << counts_[r];
  }
  out << ")";
  return out.str();
}

ResidueDigraph::ResidueDigraph(int m) : m_(m), adj_(static_cast<std::size_t>(m) * m, 0) {
  if (m < 1) throw std::invalid_argument("residue digraph: modulus must be positive");
}

ResidueDigraph ResidueDigraph::from_matrix(const ResidueMatrix& f) {
  ResidueDigraph h(f.modulus());
  for (int r = 0; r < f.modulus(); ++r) {
    for (int s = 0; s < f.modulus(); ++s) {
      if (!f.at(r, s)) h.add_edge(r, s);
    }
  }
  return h;
}

ResidueDigraph& ResidueDigraph::add_edge(int r, int s) {
  if (r < 0 || r >= m_ || s < 0 || s >= m_) throw std::out_of_range("residue digraph edge");
  adj_[static_cast<std::size_t>(r * m_ + s)] = 1;
  return *this;
}

// ---------------------------------------------------------------------------
// Fixed-content word DP

Count word_count_empty(const ResidueDigraph& H, const ContentVector& content) {
  const int m = H.modulus();
  if (content.modulus() != m) throw std::invalid_argument("content modulus mismatch");
  const int n = content.total();
  if (n == 0) return 0;  // convention: no length-0 words are counted

  const ContentIndexer indexer(content.counts());
  // table[(idx, r)] = A_H(sub-content; last residue r)
  std::vector<Count> table(indexer.states * static_cast<std::size_t>(m));

  std::vector<int> sub(static_cast<std::size_t>(m), 0);
  do {
    const std::size_t idx = indexer.index(sub);
    const int total = std::accumulate(sub.begin(), sub.end(), 0);
    if (total == 0) continue;
    for (int r = 0; r < m; ++r) {
      if (sub[static_cast<std::size_t>(r)] == 0) continue;
      Count& cell = table[idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
      if (total == 1) {
        cell = 1;  // base case: the single-letter word r
        continue;
      }
      --sub[static_cast<std::size_t>(r)];
      const std::size_t prev = indexer.index(sub);
      ++sub[static_cast<std::size_t>(r)];
      for (int s = 0; s < m; ++s) {
        if (H.has_edge(s, r)) {
          cell += table[prev * static_cast<std::size_t>(m) + static_cast<std::size_t>(s)];
        }
      }
    }
  } while (indexer.advance(sub));

  const std::size_t full = indexer.index(content.counts());
  Count result = 0;
  for (int r = 0; r < m; ++r) {
    result += table[full * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
  }
  return result;
}

Count word_count_with_I(const ResidueMatrix& f, int n, const PositionSet& I,
                        const ContentVector& content) {
  const int m = f.modulus();
  if (content.modulus() != m) throw std::invalid_argument("content modulus mismatch");
  if (content.total() != n) throw std::invalid_argument("content must sum to n");
  if (I.ambient() != n) throw std::invalid_argument("I.n must equal n");
  if (n == 0) return 0;

  const ContentIndexer indexer(content.counts());

  // Sub-contents bucketed by total, so step i touches only its own slice.
  std::vector<std::vector<std::pair<std::size_t, std::vector<int>>>> by_total(
      static_cast<std::size_t>(n) + 1);
  {
    std::vector<int> sub(static_cast<std::size_t>(m), 0);
    do {
      const int total = std::accumulate(sub.begin(), sub.end(), 0);
      if (total >= 1 && total <= n) {
        by_total[static_cast<std::size_t>(total)].push_back({indexer.index(sub), sub});
      }
    } while (indexer.advance(sub));
  }

  std::vector<Count> cur(indexer.states * static_cast<std::size_t>(m));
  std::vector<int> start(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    if (content.at(r) >= 1) {
      start[static_cast<std::size_t>(r)] = 1;
      cur[indexer.index(start) * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)] = 1;
      start[static_cast<std::size_t>(r)] = 0;
    }
  }

  // Step i consumes letter i+1; the allowed transitions flip with membership
  // of i in I.
  for (int i = 1; i < n; ++i) {
    std::vector<Count> next(indexer.states * static_cast<std::size_t>(m));
    const bool want_descent = I.contains(i);
    for (const auto& [idx, sub] : by_total[static_cast<std::size_t>(i)]) {
      for (int r = 0; r < m; ++r) {
        const Count& value =
            cur[idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
        if (value == 0) continue;
        for (int s = 0; s < m; ++s) {
          if (f.at(r, s) != want_descent) continue;
          if (sub[static_cast<std::size_t>(s)] >= content.at(s)) continue;
          next[(idx + indexer.strides[static_cast<std::size_t>(s)]) * static_cast<std::size_t>(m) +
               static_cast<std::size_t>(s)] += value;
        }
      }
    }
    cur.swap(next);
  }

  const std::size_t full = indexer.index(content.counts());
  Count result = 0;
  for (int r = 0; r < m; ++r) {
    result += cur[full * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
  }
  return result;
}

Count d_periodic(const ResidueMatrix& f, int n, const PositionSet& I) {
  const ContentVector content = ContentVector::canonical(f.modulus(), n);
  Count result = word_count_with_I(f, n, I, content);
  for (int r = 0; r < f.modulus(); ++r) {
    result *= factorial(static_cast<unsigned long>(content.at(r)));
  }
  return result;
}

Count d_periodic(const RelationSpec& spec, int n, const PositionSet& I) {
  const ResidueMatrix* f = spec.periodic_matrix();
  if (f == nullptr) {
    throw NotApplicable("periodic counting requires a residue-periodic relation spec");
  }
  return d_periodic(*f, n, I);
}

// ---------------------------------------------------------------------------
// Truncated transfer series

Count TruncatedSeries::coefficient(int n, const ContentVector& content) const {
  if (content.total() != n) {
    throw std::invalid_argument("series coefficient: content must sum to the x-degree");
  }
  auto it = terms_.find({n, content.counts()});
  return it == terms_.end() ? kZero : it->second;
}

void TruncatedSeries::add_term(int n, const std::vector<int>& content, const Count& value) {
  if (value == 0) return;
  terms_[{n, content}] += value;
}

TruncatedSeries transfer_series(const ResidueDigraph& H, int max_degree, int degree_cap) {
  if (max_degree < 1) throw std::invalid_argument("transfer series: max_degree must be >= 1");
  if (max_degree > degree_cap) {
    throw BudgetExceeded("transfer series", static_cast<unsigned long long>(max_degree),
                         static_cast<unsigned long long>(degree_cap));
  }
  const int m = H.modulus();
  TruncatedSeries series(max_degree);

  // state: (content so far, last letter) -> word count; the leading letter's
  // weight is included from the start.
  std::map<std::pair<std::vector<int>, int>, Count> state;
  for (int r = 0; r < m; ++r) {
    std::vector<int> content(static_cast<std::size_t>(m), 0);
    content[static_cast<std::size_t>(r)] = 1;
    state[{content, r}] = 1;
    series.add_term(1, content, 1);
  }

  for (int length = 2; length <= max_degree; ++length) {
    std::map<std::pair<std::vector<int>, int>, Count> next;
    for (const auto& [key, value] : state) {
      const auto& [content, last] = key;
      for (int s = 0; s < m; ++s) {
        if (!H.has_edge(last, s)) continue;
        std::vector<int> grown = content;
        ++grown[static_cast<std::size_t>(s)];
        next[{std::move(grown), s}] += value;
      }
    }
    for (const auto& [key, value] : next) {
      series.add_term(length, key.first, value);
    }
    state.swap(next);
  }
  return series;
}

}  // namespace xdescent
