#include "spherealg/opalg/param_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace spherealg {

ParamPoly ParamPoly::constant(GaussianRational v) {
  ParamPoly p;
  if (!v.is_zero()) p.terms_.emplace(ParamExponents{}, std::move(v));
  return p;
}

ParamPoly ParamPoly::parameter(Param p) {
  ParamPoly r;
  ParamExponents e;
  e.e[static_cast<int>(p)] = 1;
  r.terms_.emplace(e, GaussianRational(1));
  return r;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExponents{});
}

GaussianRational ParamPoly::constant_term() const {
  auto it = terms_.find(ParamExponents{});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void ParamPoly::add_term(const ParamExponents& e, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ParamExponents e;
      for (int k = 0; k < 4; ++k) e.e[k] = static_cast<std::uint8_t>(ea.e[k] + eb.e[k]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ParamPoly operator-(const ParamPoly& a) {
  ParamPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly operator*(const ParamPoly& a, const GaussianRational& s) {
  if (s.is_zero()) return {};
  ParamPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
  return r;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

ParamPoly ParamPoly::substituted(const std::map<Param, GaussianRational>& values) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    GaussianRational coeff = c;
    ParamExponents rest;
    for (int k = 0; k < 4; ++k) {
      auto it = values.find(static_cast<Param>(k));
      if (it == values.end()) {
        rest.e[k] = e.e[k];
        continue;
      }
      for (int j = 0; j < e.e[k]; ++j) coeff *= it->second;
    }
    r.add_term(rest, coeff);
  }
  return r;
}

ParamPoly ParamPoly::substituted_poly(Param from, const ParamPoly& value) const {
  const int idx = static_cast<int>(from);
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    ParamExponents rest = e;
    rest.e[idx] = 0;
    ParamPoly term;
    term.terms_.emplace(rest, c);
    for (int j = 0; j < e.e[idx]; ++j) term = term * value;
    r += term;
  }
  return r;
}

std::set<Param> ParamPoly::parameters_used() const {
  std::set<Param> out;
  for (const auto& [e, c] : terms_)
    for (int k = 0; k < 4; ++k)
      if (e.e[k] > 0) out.insert(static_cast<Param>(k));
  return out;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

int ParamPoly::degree_in(Param p) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e.e[static_cast<int>(p)]);
  return d;
}

std::vector<ParamPoly> ParamPoly::univariate_coefficients(Param p) const {
  const int idx = static_cast<int>(p);
  std::vector<ParamPoly> out(static_cast<std::size_t>(degree_in(p)) + 1);
  for (const auto& [e, c] : terms_) {
    ParamExponents rest = e;
    rest.e[idx] = 0;
    out[e.e[idx]].add_term(rest, c);
  }
  return out;
}

std::complex<double> ParamPoly::eval(const std::array<std::complex<double>, 4>& values) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < e.e[k]; ++j) t *= values[k];
    acc += t;
  }
  return acc;
}

GaussianRational ParamPoly::eval_exact(const std::array<GaussianRational, 4>& values) const {
  GaussianRational acc;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < e.e[k]; ++j) t *= values[k];
    acc += t;
  }
  return acc;
}

GaussianRational ParamPoly::leading_coefficient() const {
  if (terms_.empty()) return {};
  return terms_.rbegin()->second;
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return {};
  GaussianRational lead = leading_coefficient();
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / lead);
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first reads like hand-written algebra.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string vars;
    for (int k = 0; k < 4; ++k) {
      if (e.e[k] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += kParamNames[k];
      if (e.e[k] > 1) vars += "^" + std::to_string(e.e[k]);
    }
    std::string term;
    if (vars.empty()) {
      term = spherealg::to_string(c);
    } else if (c == GaussianRational(1)) {
      term = vars;
    } else if (c == GaussianRational(-1)) {
      term = "-" + vars;
    } else if (c.is_real() || sgn(c.re) == 0) {
      term = spherealg::to_string(c) + "*" + vars;
    } else {
      term = "(" + spherealg::to_string(c) + ")*" + vars;
    }
    if (first) {
      os << term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
  }
  return os.str();
}

namespace {

// Minimal recursive-descent reader for the canonical polynomial text.
class PolyReader {
 public:
  explicit PolyReader(const std::string& text) : s_(text) {}

  ParamPoly read() {
    ParamPoly out = read_term();
    skip_ws();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      char op = s_[pos_++];
      ParamPoly t = read_term();
      out += (op == '+') ? t : -t;
      skip_ws();
    }
    if (pos_ != s_.size()) throw std::invalid_argument("trailing text in polynomial: " + s_);
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  ParamPoly read_term() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = (s_[pos_] == '-');
      ++pos_;
      skip_ws();
    }
    ParamPoly acc = ParamPoly::one();
    bool expect_factor = true;
    while (expect_factor) {
      acc = acc * read_factor();
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else {
        expect_factor = false;
      }
    }
    return neg ? -acc : acc;
  }

  ParamPoly read_factor() {
    skip_ws();
    if (pos_ >= s_.size()) throw std::invalid_argument("unexpected end of polynomial");
    char ch = s_[pos_];
    if (ch == '(') {
      std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced paren in polynomial");
      GaussianRational g = parse_gaussian_rational(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return ParamPoly::constant(g);
    }
    if (ch == 'i' && !next_is_power()) {
      ++pos_;
      return ParamPoly::imaginary_unit();
    }
    for (int k = 0; k < 4; ++k) {
      if (ch == kParamNames[k]) {
        ++pos_;
        int power = read_power();
        ParamPoly p = ParamPoly::parameter(static_cast<Param>(k));
        ParamPoly acc = ParamPoly::one();
        for (int j = 0; j < power; ++j) acc = acc * p;
        return acc;
      }
    }
    // Rational literal, possibly followed by a bare imaginary marker via '*i'
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                s_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) throw std::invalid_argument("bad polynomial factor at: " + s_.substr(pos_));
    return ParamPoly::constant(GaussianRational(parse_rational(s_.substr(start, pos_ - start))));
  }

  bool next_is_power() const { return pos_ + 1 < s_.size() && s_[pos_ + 1] == '^'; }

  int read_power() {
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) throw std::invalid_argument("missing exponent in polynomial");
      return std::stoi(s_.substr(start, pos_ - start));
    }
    return 1;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(const std::string& text) { return PolyReader(text).read(); }

}  // namespace spherealg
