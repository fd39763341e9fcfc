#include "algqe/invariants.hpp"

#include <set>
#include <sstream>

namespace algqe {

WordTree WordTree::leaf(int letter) {
  if (letter < 1) throw std::invalid_argument("word letters are numbered from 1");
  return WordTree(std::make_shared<const Node>(Node{letter, 1, {}}));
}

WordTree WordTree::node(WordTree left, WordTree right) {
  const int len = left.length() + right.length();
  return WordTree(std::make_shared<const Node>(Node{0, len, {std::move(left), std::move(right)}}));
}

std::string WordTree::str() const {
  if (is_leaf()) return std::to_string(letter());
  return "(" + left().str() + "." + right().str() + ")";
}

AlgTerm WordTree::term(std::span<const AlgTerm> letters) const {
  if (is_leaf()) return letters[letter() - 1];
  return AlgTerm::mul(left().term(letters), right().term(letters));
}

namespace {

// Shapes carry placeholder letter 1 on every leaf.
std::vector<WordTree> shapes(int n) {
  if (n == 1) return {WordTree::leaf(1)};
  std::vector<WordTree> out;
  for (int k = 1; k < n; ++k)
    for (const auto& l : shapes(k))
      for (const auto& r : shapes(n - k)) out.push_back(WordTree::node(l, r));
  return out;
}

WordTree relabel(const WordTree& shape, const std::vector<int>& labels, std::size_t& next) {
  if (shape.is_leaf()) return WordTree::leaf(labels[next++]);
  WordTree l = relabel(shape.left(), labels, next);
  WordTree r = relabel(shape.right(), labels, next);
  return WordTree::node(std::move(l), std::move(r));
}

}  // namespace

std::vector<WordTree> enum_words(int m, int maxlen) {
  if (m < 1 || maxlen < 1) throw std::invalid_argument("enum_words needs m >= 1 and maxlen >= 1");
  std::vector<WordTree> out;
  for (int n = 1; n <= maxlen; ++n) {
    for (const auto& shape : shapes(n)) {
      std::vector<int> labels(n, 1);
      for (;;) {
        std::size_t next = 0;
        out.push_back(relabel(shape, labels, next));
        int pos = n - 1;
        while (pos >= 0 && labels[pos] == m) labels[pos--] = 1;
        if (pos < 0) break;
        ++labels[pos];
      }
    }
  }
  return out;
}

std::size_t word_count(int m, int maxlen) {
  // Catalan(n-1) shapes with n leaves.
  std::size_t total = 0, catalan = 1, power = 1;
  for (int n = 1; n <= maxlen; ++n) {
    power *= static_cast<std::size_t>(m);
    total += catalan * power;
    catalan = catalan * 2 * (2 * n - 1) / (n + 1);
  }
  return total;
}

std::vector<std::string> default_tuple_vars(int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

namespace {

AlgTerm twice_re(const AlgTerm& t) { return AlgTerm::add(t, AlgTerm::conj(t)); }
AlgTerm twice_im(const AlgTerm& t) { return AlgTerm::sub(t, AlgTerm::conj(t)); }

std::string index_label(const char* head, std::initializer_list<std::size_t> idx) {
  std::string out = std::string(head) + "[";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "]";
}

void attach_polys(InvariantScheme& s) {
  std::vector<AlgTerm> terms;
  terms.reserve(s.entries.size());
  for (const auto& e : s.entries) terms.push_back(e.term);
  const auto coords = realify_terms(terms, Realification{s.algebra, true});
  for (std::size_t i = 0; i < s.entries.size(); ++i) s.entries[i].poly = coords[i][0];
}

}  // namespace

InvariantScheme quat_scheme(const std::vector<std::string>& vars) {
  InvariantScheme s{Algebra::Quaternion, vars, {}};
  const std::size_t m = vars.size();
  std::vector<AlgTerm> v, d;
  for (const auto& name : vars) {
    v.push_back(AlgTerm::var(name));
    d.push_back(twice_im(v.back()));
  }
  for (std::size_t i = 0; i < m; ++i) s.entries.push_back({index_label("L1", {i}), twice_re(v[i]), {}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      s.entries.push_back({index_label("L2", {i, j}), twice_re(AlgTerm::mul(d[i], d[j])), {}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const AlgTerm dij = AlgTerm::mul(d[i], d[j]);
      for (std::size_t k = 0; k < m; ++k)
        s.entries.push_back({index_label("L3", {i, j, k}), twice_re(AlgTerm::mul(dij, d[k])), {}});
    }
  attach_polys(s);
  return s;
}

InvariantScheme quat_scheme(int m) { return quat_scheme(default_tuple_vars(m)); }

InvariantScheme oct_scheme(const std::vector<std::string>& vars, bool dedup) {
  InvariantScheme s{Algebra::Octonion, vars, {}};
  if (vars.empty()) return s;
  std::vector<AlgTerm> letters;
  for (const auto& name : vars) letters.push_back(AlgTerm::var(name));
  for (const auto& w : enum_words(static_cast<int>(vars.size()))) {
    s.entries.push_back({"W" + w.str(), twice_re(w.term(letters)), {}});
  }
  attach_polys(s);
  return dedup ? dedup_scheme(std::move(s)) : s;
}

InvariantScheme oct_scheme(int m, bool dedup) { return oct_scheme(default_tuple_vars(m), dedup); }

InvariantScheme make_scheme(Algebra a, const std::vector<std::string>& vars, bool dedup) {
  if (a == Algebra::Quaternion) return dedup ? dedup_scheme(quat_scheme(vars)) : quat_scheme(vars);
  return oct_scheme(vars, dedup);
}

InvariantScheme dedup_scheme(InvariantScheme s) {
  std::set<Poly> seen;
  std::vector<InvariantEntry> kept;
  for (auto& e : s.entries)
    if (seen.insert(e.poly).second) kept.push_back(std::move(e));
  s.entries = std::move(kept);
  return s;
}

std::string dump_scheme(const InvariantScheme& s) {
  std::ostringstream os;
  for (const auto& e : s.entries) os << e.label << '\t' << e.term.str() << '\t' << e.poly.str() << '\n';
  return os.str();
}

}  // namespace algqe
