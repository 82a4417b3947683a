// Free-algebra polynomials over an ordered generator alphabet. Words are
// byte strings of generator ids; the term order is graded lexicographic.
#pragma once

#include "qweyl/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qweyl {

struct GenInfo {
  std::string name;
  bool derivative_like = false;
};

class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<GenInfo> gens) : gens_(std::move(gens)) {
    if (gens_.size() > 200)
      throw std::invalid_argument("Alphabet: too many generators");
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        if (gens_[i].name == gens_[j].name)
          throw std::invalid_argument("Alphabet: duplicate generator name");
  }
  int size() const { return int(gens_.size()); }
  const GenInfo& gen(int i) const { return gens_[size_t(i)]; }
  int find(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return int(i);
    return -1;
  }

private:
  std::vector<GenInfo> gens_;
};

using Word = std::string; // bytes are generator ids

// graded lex: degree first, then byte order (generator ids follow the
// alphabet's total order)
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
public:
  using TermMap = std::map<Word, Scalar, WordOrder>;

  NCPoly() = default;
  explicit NCPoly(Scalar c) {
    if (!c.is_zero()) t_.emplace(Word(), std::move(c));
  }
  static NCPoly gen(int id) {
    NCPoly p;
    p.t_.emplace(Word(1, char(id)), Scalar(1));
    return p;
  }
  static NCPoly word(Word w, Scalar c = Scalar(1)) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(std::move(w), std::move(c));
    return p;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const {
    int d = -1;
    for (auto& [w, c] : t_) d = std::max(d, int(w.size()));
    return d;
  }
  Scalar coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) {
    for (auto& [w, c] : b.t_) a.add_term(w, c);
    return a;
  }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) {
    for (auto& [w, c] : b.t_) a.add_term(w, -c);
    return a;
  }
  NCPoly& operator+=(const NCPoly& o) { *this = *this + o; return *this; }
  NCPoly& operator-=(const NCPoly& o) { *this = *this - o; return *this; }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [wa, ca] : a.t_)
      for (auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { *this = *this * o; return *this; }

  NCPoly scaled(const Scalar& s) const {
    if (s.is_zero()) return NCPoly();
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = c * s;
    return r;
  }
  friend NCPoly operator*(const Scalar& s, const NCPoly& p) { return p.scaled(s); }

  NCPoly pow(int n) const {
    NCPoly r(Scalar(1)), b = *this;
    while (n) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  // coefficientwise variable substitution (e.g. h -> 0)
  NCPoly subst_coeff(int v, const Scalar& value) const {
    NCPoly r;
    for (auto& [w, c] : t_) r.add_term(w, c.subst(v, value));
    return r;
  }

  // i -> -i on all coefficients
  NCPoly conjugate_coeffs() const {
    NCPoly r;
    for (auto& [w, c] : t_) {
      MPoly n, d;
      for (auto& t : c.num().terms()) n += MPoly::term(t.m, t.c.conj());
      for (auto& t : c.den().terms()) d += MPoly::term(t.m, t.c.conj());
      r.add_term(w, Scalar(n, d));
    }
    return r;
  }

  std::string str(const Alphabet& alpha) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (char g : w) os << "*" << alpha.gen(int(static_cast<unsigned char>(g))).name;
    }
    return os.str();
  }

private:
  TermMap t_;
};

} // namespace qweyl
