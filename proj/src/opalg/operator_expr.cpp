#include "spherealg/opalg/operator_expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spherealg {

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

std::vector<Generator> Monomial::word() const {
  std::vector<Generator> w;
  w.reserve(static_cast<std::size_t>(total_degree()));
  for (int k = 0; k < kGeneratorCount; ++k)
    for (int j = 0; j < exp[k]; ++j) w.push_back(static_cast<Generator>(k));
  return w;
}

std::string Monomial::to_string() const {
  std::string s;
  for (int k = 0; k < kGeneratorCount; ++k) {
    if (exp[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += generator_name(static_cast<Generator>(k));
    if (exp[k] > 1) s += "^" + std::to_string(exp[k]);
  }
  return s.empty() ? "1" : s;
}

void OperatorExpr::add_term(const Monomial& m, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr OperatorExpr::from_coeff_monomial(ParamPoly coeff, const Monomial& m) {
  OperatorExpr e;
  if (!m.is_canonical()) {
    // Route through the rewriter so the unit-norm relation is applied.
    return normal_form(coeff, m.word());
  }
  e.add_term(m, coeff);
  return e;
}

namespace {
struct WorkItem {
  GaussianRational factor;
  std::vector<Generator> word;
};
}  // namespace

OperatorExpr OperatorExpr::normal_form(const ParamPoly& coeff, std::span<const Generator> word) {
  OperatorExpr out;
  if (coeff.is_zero()) return out;

  std::vector<WorkItem> stack;
  stack.push_back({GaussianRational(1), std::vector<Generator>(word.begin(), word.end())});

  while (!stack.empty()) {
    WorkItem item = std::move(stack.back());
    stack.pop_back();
    auto& w = item.word;

    // Bubble the first out-of-order adjacent pair; the commutator branch
    // shortens the word by one, so this terminates.
    std::size_t i = 0;
    bool unsorted = false;
    for (; i + 1 < w.size(); ++i) {
      if (static_cast<int>(w[i]) > static_cast<int>(w[i + 1])) {
        unsorted = true;
        break;
      }
    }
    if (unsorted) {
      GeneratorCommutator comm = commute_generators(w[i], w[i + 1]);
      if (!comm.zero) {
        std::vector<Generator> contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(i));
        contracted.push_back(comm.result);
        contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        stack.push_back({item.factor * comm.coeff, std::move(contracted)});
      }
      std::swap(w[i], w[i + 1]);
      stack.push_back({std::move(item.factor), std::move(w)});
      continue;
    }

    Monomial m;
    for (Generator g : w) ++m.exp[static_cast<int>(g)];

    // Eliminate N_z^2 = 1 - N_x^2 - N_y^2 at the exponent level.
    std::vector<std::pair<GaussianRational, Monomial>> elim;
    elim.emplace_back(std::move(item.factor), m);
    while (!elim.empty()) {
      auto [f, mm] = std::move(elim.back());
      elim.pop_back();
      if (mm.exp[2] >= 2) {
        Monomial base = mm;
        base.exp[2] = static_cast<std::uint8_t>(base.exp[2] - 2);
        Monomial with_x = base;
        with_x.exp[0] = static_cast<std::uint8_t>(with_x.exp[0] + 2);
        Monomial with_y = base;
        with_y.exp[1] = static_cast<std::uint8_t>(with_y.exp[1] + 2);
        elim.emplace_back(f, base);
        elim.emplace_back(-f, with_x);
        elim.emplace_back(-f, with_y);
      } else {
        out.add_term(mm, coeff * f);
      }
    }
  }
  return out;
}

OperatorExpr OperatorExpr::normal_form(std::span<const RawTerm> raw) {
  OperatorExpr out;
  for (const auto& t : raw) out += normal_form(t.coeff, t.word);
  return out;
}

int OperatorExpr::degree_N() const {
  int d = 0;
  for (const auto& [m, p] : terms_) d = std::max(d, m.position_degree());
  return d;
}

int OperatorExpr::degree_L() const {
  int d = 0;
  for (const auto& [m, p] : terms_) d = std::max(d, m.angular_degree());
  return d;
}

const ParamPoly& OperatorExpr::coefficient(const Monomial& m) const {
  static const ParamPoly kZero;
  auto it = terms_.find(m);
  return it == terms_.end() ? kZero : it->second;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [m, p] : o.terms_) add_term(m, p);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [m, p] : o.terms_) add_term(m, -p);
  return *this;
}

OperatorExpr operator-(const OperatorExpr& a) {
  OperatorExpr r;
  for (const auto& [m, p] : a.terms_) r.terms_.emplace(m, -p);
  return r;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [ma, pa] : a.terms_) {
    const std::vector<Generator> wa = ma.word();
    for (const auto& [mb, pb] : b.terms_) {
      std::vector<Generator> w = wa;
      const std::vector<Generator> wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      out += OperatorExpr::normal_form(pa * pb, w);
    }
  }
  return out;
}

OperatorExpr operator*(const ParamPoly& s, const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [m, p] : a.terms()) {
    ParamPoly q = s * p;
    if (!q.is_zero()) out.add_term(m, q);
  }
  return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out = a * b;
  out -= b * a;
  return out;
}

OperatorExpr adjoint(const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [m, p] : a.terms()) {
    std::vector<Generator> w = m.word();
    std::reverse(w.begin(), w.end());
    out += OperatorExpr::normal_form(p.conj(), w);
  }
  return out;
}

OperatorExpr OperatorExpr::substituted(const std::map<Param, GaussianRational>& values) const {
  for (Param p : parameters_used())
    if (!values.count(p)) throw MissingParameterError(p);
  OperatorExpr out;
  for (const auto& [m, poly] : terms_) out.add_term(m, poly.substituted(values));
  return out;
}

OperatorExpr OperatorExpr::with_param_identified(Param from, Param to) const {
  OperatorExpr out;
  for (const auto& [m, poly] : terms_)
    out.add_term(m, poly.substituted_poly(from, ParamPoly::parameter(to)));
  return out;
}

std::set<Param> OperatorExpr::parameters_used() const {
  std::set<Param> out;
  for (const auto& [m, poly] : terms_) out.merge(poly.parameters_used());
  return out;
}

namespace {

// Attempts to write a commutative N_x/N_y layer as a polynomial in
// s = N_x^2 + N_y^2; returns the coefficient list c_k of s^k on success.
// `layer` maps (p1, p2) to coefficients.
bool layer_as_radial_series(std::map<std::pair<int, int>, ParamPoly> layer,
                            std::vector<ParamPoly>* series) {
  int max_deg = 0;
  for (const auto& [e, p] : layer) max_deg = std::max(max_deg, e.first + e.second);
  const int kmax = max_deg / 2;
  series->assign(static_cast<std::size_t>(kmax) + 1, ParamPoly{});
  // Binomial table for (N_x^2 + N_y^2)^k.
  for (int k = kmax; k >= 0; --k) {
    auto it = layer.find({2 * k, 0});
    if (it == layer.end() || it->second.is_zero()) continue;
    ParamPoly ck = it->second;
    (*series)[k] = ck;
    Rational binom(1);
    for (int j = 0; j <= k; ++j) {
      // binom = C(k, j);  subtract ck * C(k,j) * NX^{2(k-j)} NY^{2j}
      ParamPoly sub = ck * GaussianRational(binom);
      auto key = std::make_pair(2 * (k - j), 2 * j);
      auto lit = layer.find(key);
      if (lit == layer.end()) {
        layer.emplace(key, -sub);
      } else {
        lit->second -= sub;
        if (lit->second.is_zero()) layer.erase(lit);
      }
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (const auto& [e, p] : layer)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

OperatorExpr::PreElimination OperatorExpr::pre_elimination() const {
  PreElimination out;
  // Group terms by (angular part, N_z parity layer).
  using GroupKey = std::pair<std::array<std::uint8_t, 3>, int>;
  std::map<GroupKey, std::map<std::pair<int, int>, ParamPoly>> groups;
  for (const auto& [m, p] : terms_) {
    GroupKey key{{m.exp[3], m.exp[4], m.exp[5]}, m.exp[2]};
    groups[key][{m.exp[0], m.exp[1]}] += p;
  }
  for (const auto& [key, layer] : groups) {
    std::vector<ParamPoly> series;
    if (layer_as_radial_series(layer, &series)) {
      // s^k -> (1 - N_z^2)^k, expanded in powers of N_z^2.
      for (int k = 0; k < static_cast<int>(series.size()); ++k) {
        if (series[k].is_zero()) continue;
        Rational binom(1);
        for (int j = 0; j <= k; ++j) {
          Monomial m;
          m.exp[2] = static_cast<std::uint8_t>(2 * j + key.second);
          m.exp[3] = key.first[0];
          m.exp[4] = key.first[1];
          m.exp[5] = key.first[2];
          Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
          ParamPoly contrib = series[k] * GaussianRational(sign * binom);
          auto [it, inserted] = out.terms.emplace(m, contrib);
          if (!inserted) {
            it->second += contrib;
            if (it->second.is_zero()) out.terms.erase(it);
          }
          binom = binom * (k - j) / (j + 1);
        }
      }
    } else {
      // Not a polynomial in N_z alone: keep the group verbatim and flag it.
      for (const auto& [e, p] : layer) {
        Monomial m;
        m.exp[0] = static_cast<std::uint8_t>(e.first);
        m.exp[1] = static_cast<std::uint8_t>(e.second);
        m.exp[2] = static_cast<std::uint8_t>(key.second);
        m.exp[3] = key.first[0];
        m.exp[4] = key.first[1];
        m.exp[5] = key.first[2];
        out.terms.emplace(m, p);
        out.unreconstructed.push_back(m);
      }
    }
  }
  return out;
}

ParamPoly OperatorExpr::coefficient_pre_elimination(const Monomial& query) const {
  // Restrict to the group sharing the query's angular part before rewriting.
  OperatorExpr group;
  for (const auto& [m, p] : terms_) {
    if (m.exp[3] == query.exp[3] && m.exp[4] == query.exp[4] && m.exp[5] == query.exp[5])
      group.add_term(m, p);
  }
  PreElimination pre = group.pre_elimination();
  if (!pre.complete()) {
    throw PreEliminationError("angular group of " + query.to_string() +
                              " is not a polynomial in N_z alone");
  }
  auto it = pre.terms.find(query);
  return it == pre.terms.end() ? ParamPoly{} : it->second;
}

std::string OperatorExpr::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")";
    if (!m.is_unit()) os << "*" << m.to_string();
  }
  return os.str();
}

OperatorExpr OperatorExpr::parse_text(const std::string& text) {
  OperatorExpr out;
  if (text == "0") return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in operator text");
    // Find the matching close paren (coefficients may nest one level).
    int depth = 0;
    std::size_t k = pos;
    for (; k < text.size(); ++k) {
      if (text[k] == '(') ++depth;
      if (text[k] == ')' && --depth == 0) break;
    }
    if (k == text.size()) throw std::invalid_argument("unbalanced parens in operator text");
    ParamPoly coeff = ParamPoly::parse(text.substr(pos + 1, k - pos - 1));
    pos = k + 1;
    Monomial m;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      while (pos < text.size()) {
        // generator token: letter '_' letter
        if (pos + 2 >= text.size()) throw std::invalid_argument("truncated generator name");
        auto gen = generator_from_name(text.substr(pos, 3));
        if (!gen) throw std::invalid_argument("bad generator at: " + text.substr(pos));
        pos += 3;
        int power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          power = std::stoi(text.substr(start, pos - start));
        }
        m.exp[static_cast<int>(*gen)] = static_cast<std::uint8_t>(m.exp[static_cast<int>(*gen)] + power);
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          continue;
        }
        break;
      }
    }
    if (!m.is_canonical()) throw std::invalid_argument("non-canonical monomial in operator text");
    out.add_term(m, coeff);
    if (pos == text.size()) break;
    if (text.compare(pos, 3, " + ") != 0)
      throw std::invalid_argument("expected ' + ' between operator terms");
    pos += 3;
  }
  return out;
}

}  // namespace spherealg
