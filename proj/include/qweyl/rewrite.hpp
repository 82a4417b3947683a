// Confluent rewriting to PBW normal form for quadratic-linear permutation
// presentations: every out-of-order adjacent product g_b g_a (b > a) carries
// one rule whose right side is strictly smaller in graded-lex order.
// Confluence is certified by resolving all degree-3 overlap ambiguities.
#pragma once

#include "qweyl/ncpoly.hpp"

#include <optional>

namespace qweyl {

class RewriteSystem {
public:
  // rules given explicitly as ordered-pair -> replacement
  static RewriteSystem from_rules(Alphabet alpha,
                                  const std::map<std::pair<int, int>, NCPoly>& rules,
                                  bool certify_now = true) {
    RewriteSystem rs(std::move(alpha));
    for (auto& [key, rhs] : rules) rs.set_rule(key.first, key.second, rhs);
    rs.require_complete();
    if (certify_now) rs.certify_or_throw();
    return rs;
  }

  // orient a quadratic-linear relation span (relations are the polynomials
  // that vanish) into rewrite rules by row reduction over the word basis
  static RewriteSystem from_relations(Alphabet alpha,
                                      const std::vector<NCPoly>& relations,
                                      bool certify_now = true) {
    RewriteSystem rs(std::move(alpha));
    rs.orient(relations);
    rs.require_complete();
    if (certify_now) rs.certify_or_throw();
    return rs;
  }

  const Alphabet& alphabet() const { return alpha_; }
  bool certified() const { return certified_; }
  int num_generators() const { return alpha_.size(); }

  bool has_rule(int b, int a) const { return rule_index(b, a) >= 0 && bool(rules_[rule_index(b, a)]); }
  const NCPoly& rule(int b, int a) const { return *rules_[rule_index(b, a)]; }

  // One redex per word per pass, merging like terms between passes; this
  // keeps the branching of symmetric expressions from exploding.
  NCPoly normal_form(const NCPoly& p) const {
    NCPoly cur = p;
    NCPoly done;
    while (!cur.is_zero()) {
      NCPoly next;
      for (auto& [w, c] : cur.terms()) {
        int pos = first_redex(w);
        if (pos < 0) {
          done.add_term(w, c);
          continue;
        }
        int b = int(static_cast<unsigned char>(w[size_t(pos)]));
        int a = int(static_cast<unsigned char>(w[size_t(pos) + 1]));
        const NCPoly& rhs = rule(b, a);
        Word prefix = w.substr(0, size_t(pos)), suffix = w.substr(size_t(pos) + 2);
        for (auto& [rw, rc] : rhs.terms())
          next.add_term(prefix + rw + suffix, c * rc);
      }
      cur = std::move(next);
    }
    return done;
  }

  bool is_normal(const NCPoly& p) const {
    for (auto& [w, c] : p.terms())
      if (first_redex(w) >= 0) return false;
    return true;
  }

  // All degree-3 overlaps g_c g_b g_a (c > b > a) must resolve identically.
  // Returns the first offending word, or nothing when confluent.
  std::optional<Word> find_confluence_witness() const {
    int n = alpha_.size();
    for (int c = n - 1; c >= 2; --c)
      for (int b = c - 1; b >= 1; --b)
        for (int a = b - 1; a >= 0; --a) {
          Word w;
          w.push_back(char(c));
          w.push_back(char(b));
          w.push_back(char(a));
          // reduce the left pair first
          NCPoly left = rule(c, b) * NCPoly::gen(a);
          // reduce the right pair first
          NCPoly right = NCPoly::gen(c) * rule(b, a);
          if (normal_form(left) != normal_form(right)) return w;
        }
    return std::nullopt;
  }

  void certify_or_throw() {
    auto witness = find_confluence_witness();
    if (witness) {
      std::string msg = "rewrite system not confluent; overlap witness:";
      for (char g : *witness)
        msg += " " + alpha_.gen(int(static_cast<unsigned char>(g))).name;
      throw std::invalid_argument(msg);
    }
    certified_ = true;
  }

  // parse an expression over the registered generator names
  NCPoly parse(const std::string& src) const;

private:
  explicit RewriteSystem(Alphabet alpha)
      : alpha_(std::move(alpha)),
        rules_(size_t(alpha_.size()) * size_t(alpha_.size())) {}

  int rule_index(int b, int a) const {
    if (b <= a) return -1;
    return b * alpha_.size() + a;
  }

  int first_redex(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      int b = int(static_cast<unsigned char>(w[i]));
      int a = int(static_cast<unsigned char>(w[i + 1]));
      if (b > a) return int(i);
    }
    return -1;
  }

  void set_rule(int b, int a, NCPoly rhs) {
    if (b <= a || b >= alpha_.size() || a < 0)
      throw std::invalid_argument("RewriteSystem: rule must rewrite g_b g_a with b > a");
    Word lhs;
    lhs.push_back(char(b));
    lhs.push_back(char(a));
    WordOrder less;
    for (auto& [w, c] : rhs.terms()) {
      if (!less(w, lhs))
        throw std::invalid_argument("RewriteSystem: rule does not decrease the word order");
      if (w.size() > 2)
        throw std::invalid_argument("RewriteSystem: rule exceeds filtration degree 2");
    }
    rules_[size_t(rule_index(b, a))] = std::move(rhs);
  }

  void require_complete() const {
    for (int b = 1; b < alpha_.size(); ++b)
      for (int a = 0; a < b; ++a)
        if (!rules_[size_t(b * alpha_.size() + a)])
          throw std::invalid_argument(
              "RewriteSystem: no rule for pair " + alpha_.gen(b).name + " " +
              alpha_.gen(a).name + " (presentation is not PBW-orientable)");
  }

  void orient(const std::vector<NCPoly>& relations) {
    // Collect the words spanned by the relations, sorted descending.
    std::vector<Word> words;
    {
      std::map<Word, int, WordOrder> seen;
      for (auto& rel : relations)
        for (auto& [w, c] : rel.terms()) seen.emplace(w, 0);
      for (auto& [w, k] : seen) words.push_back(w);
      std::reverse(words.begin(), words.end());
    }
    std::map<Word, int, WordOrder> col;
    for (size_t i = 0; i < words.size(); ++i) col[words[i]] = int(i);
    // Row-reduce the relation span.
    std::vector<std::vector<Scalar>> m;
    for (auto& rel : relations) {
      if (rel.is_zero()) continue;
      std::vector<Scalar> row(words.size());
      for (auto& [w, c] : rel.terms()) row[size_t(col[w])] = c;
      m.push_back(std::move(row));
    }
    int rows = int(m.size()), cols = int(words.size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (!m[i][c].is_zero()) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(m[r], m[piv]);
      Scalar inv = m[r][c].inv();
      for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || m[i][c].is_zero()) continue;
        Scalar f = m[i][c];
        for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
      }
      // leading word of this row must be an out-of-order adjacent pair
      const Word& lead = words[size_t(c)];
      if (lead.size() != 2 ||
          !(static_cast<unsigned char>(lead[0]) > static_cast<unsigned char>(lead[1])))
        throw std::invalid_argument(
            "RewriteSystem: relation span is not oriented by out-of-order pairs");
      NCPoly rhs;
      for (int j = c + 1; j < cols; ++j)
        if (!m[r][j].is_zero()) rhs.add_term(words[size_t(j)], -m[r][j]);
      set_rule(int(static_cast<unsigned char>(lead[0])),
               int(static_cast<unsigned char>(lead[1])), std::move(rhs));
      ++r;
    }
  }

  Alphabet alpha_;
  std::vector<std::optional<NCPoly>> rules_;
  bool certified_ = false;
};

// Counit-style evaluation: after normal form, every maximal right factor of
// derivative-like letters collapses to the product of its epsilon values.
inline NCPoly evaluate_counit(const NCPoly& p, const RewriteSystem& rs,
                              const std::vector<Scalar>& eps) {
  NCPoly nf = rs.normal_form(p);
  NCPoly out;
  for (auto& [w, c] : nf.terms()) {
    size_t cut = w.size();
    while (cut > 0 &&
           rs.alphabet().gen(int(static_cast<unsigned char>(w[cut - 1]))).derivative_like)
      --cut;
    Scalar v = c;
    for (size_t i = cut; i < w.size() && !v.is_zero(); ++i)
      v *= eps[size_t(static_cast<unsigned char>(w[i]))];
    out.add_term(w.substr(0, cut), v);
  }
  return out;
}

// ---- expression parsing over generator names -------------------------------

namespace detail {

class NCParser {
public:
  NCParser(const Alphabet& alpha, const std::string& src)
      : alpha_(alpha), s_(src) {}

  NCPoly run() {
    NCPoly v = sum();
    skip();
    if (p_ != s_.size()) throw ParseError("unexpected trailing input", p_);
    return v;
  }

private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  NCPoly sum() {
    NCPoly v = product();
    while (true) {
      skip();
      if (p_ < s_.size() && (s_[p_] == '+' || s_[p_] == '-')) {
        char op = s_[p_++];
        NCPoly w = product();
        v = (op == '+') ? v + w : v - w;
      } else {
        return v;
      }
    }
  }
  NCPoly product() {
    NCPoly v = power();
    while (true) {
      skip();
      if (p_ < s_.size() && s_[p_] == '*') {
        ++p_;
        v = v * power();
      } else if (p_ < s_.size() && s_[p_] == '/') {
        ++p_;
        NCPoly w = power();
        // division only by central scalars
        if (w.terms().size() != 1 || !w.terms().begin()->first.empty())
          throw ParseError("division only by scalars", p_);
        v = v.scaled(w.terms().begin()->second.inv());
      } else {
        return v;
      }
    }
  }
  NCPoly power() {
    NCPoly v = atom();
    skip();
    while (p_ < s_.size() && s_[p_] == '^') {
      ++p_;
      skip();
      size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (p_ == start) throw ParseError("expected integer exponent", p_);
      v = v.pow(std::stoi(s_.substr(start, p_ - start)));
      skip();
    }
    return v;
  }
  NCPoly atom() {
    skip();
    if (p_ >= s_.size()) throw ParseError("unexpected end of input", p_);
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      NCPoly v = sum();
      skip();
      if (p_ >= s_.size() || s_[p_] != ')') throw ParseError("expected ')'", p_);
      ++p_;
      return v;
    }
    if (c == '-') { ++p_; return atom().scaled(Scalar(-1)); }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return NCPoly(Scalar::rational(BigRat(BigInt(s_.substr(start, p_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // longest match over registered generator names first
      int best = -1;
      size_t best_len = 0;
      for (int g = 0; g < alpha_.size(); ++g) {
        const std::string& name = alpha_.gen(g).name;
        if (s_.compare(p_, name.size(), name) == 0 && name.size() > best_len) {
          best = g;
          best_len = name.size();
        }
      }
      if (best >= 0) {
        p_ += best_len;
        return NCPoly::gen(best);
      }
      size_t start = p_;
      while (p_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
        ++p_;
      std::string name = s_.substr(start, p_ - start);
      if (name == "i") return NCPoly(Scalar::i());
      if (name == "h") return NCPoly(Scalar::var(VH));
      if (name == "q") return NCPoly(Scalar::var(VQ));
      throw ParseError("unknown generator '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", p_);
  }

  const Alphabet& alpha_;
  const std::string& s_;
  size_t p_ = 0;
};

} // namespace detail

inline NCPoly RewriteSystem::parse(const std::string& src) const {
  return detail::NCParser(alpha_, src).run();
}

} // namespace qweyl
