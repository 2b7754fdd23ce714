#include "fchar/laurent.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace fchar {

LaurentPoly LaurentPoly::constant(VarSpec vars, const BigInt& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(ExpVec(p.nvars(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarSpec vars, ExpVec e, const BigInt& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

int LaurentPoly::find_var(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return (int)i;
  return -1;
}

BigInt LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
  if (e.size() != vars_.size()) throw VarMismatchError("add_term: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (vars_ != o.vars_) throw VarMismatchError("polynomials over different variable lists");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly r(a.vars_);
  LaurentPoly::ExpVec e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::mul_scalar(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& delta) const {
  if (delta.size() != vars_.size()) throw VarMismatchError("shifted: exponent arity mismatch");
  LaurentPoly r(vars_);
  ExpVec e(nvars());
  for (const auto& [e0, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) e[i] = e0[i] + delta[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(uint64_t n) const {
  LaurentPoly r = constant(vars_, 1);
  for (uint64_t i = 0; i < n; ++i) r = r * *this;
  return r;
}

BigInt LaurentPoly::coeff_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

// ---- specialization -----------------------------------------------------

namespace {

struct RatPoly {
  // accumulator for specialization: rational coefficients over the
  // remaining variables
  std::map<LaurentPoly::ExpVec, BigRat> terms;

  void add(const LaurentPoly::ExpVec& e, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

}  // namespace

LaurentPoly::SpecResult LaurentPoly::specialize(
    const std::map<std::string, SpecValue>& bindings) const {
  // Split variables into bound and remaining.
  std::vector<int> bound(nvars(), 0);
  for (const auto& [name, value] : bindings) {
    int i = find_var(name);
    if (i < 0) throw SpecializeError("specialize: unknown variable " + name);
    bound[i] = 1;
    (void)value;
  }
  VarSpec rem;
  std::vector<int> rem_pos(nvars(), -1);
  for (size_t i = 0; i < nvars(); ++i) {
    if (!bound[i]) {
      rem_pos[i] = (int)rem.size();
      rem.push_back(vars_[i]);
    }
  }
  // Polynomial bindings must live over a subset of the remaining
  // variables, with identical steps.
  for (const auto& [name, value] : bindings) {
    if (const LaurentPoly* bp = std::get_if<LaurentPoly>(&value)) {
      for (const Variable& v : bp->vars()) {
        bool ok = false;
        for (const Variable& rv : rem)
          if (rv == v) ok = true;
        if (!ok)
          throw SpecializeError("specialize: binding for " + name +
                                " uses a variable that is bound or mismatched: " + v.name);
      }
    }
  }

  RatPoly acc;
  for (const auto& [e, c] : terms_) {
    // Start from the unbound part of this term.
    ExpVec base(rem.size(), 0);
    for (size_t i = 0; i < nvars(); ++i)
      if (rem_pos[i] >= 0) base[rem_pos[i]] = e[i];
    BigRat scalar(c);
    LaurentPoly polypart = LaurentPoly::monomial(rem, base, 1);

    for (const auto& [name, value] : bindings) {
      int i = find_var(name);
      int64_t se = e[i];       // stored exponent
      int step = vars_[i].step;
      if (se == 0) continue;
      if (const BigRat* rv = std::get_if<BigRat>(&value)) {
        auto p = pow_rat_exact(*rv, (long)se, step);
        if (!p)
          throw SpecializeError("specialize: no exact value for " + name + "^(" +
                                std::to_string(se) + "/" + std::to_string(step) + ")");
        scalar *= *p;
      } else {
        const LaurentPoly& bp = std::get<LaurentPoly>(value);
        LaurentPoly blift = embed(bp, rem);
        if (se % step == 0) {
          int64_t n = se / step;
          if (n > 0) {
            polypart = polypart * blift.pow((uint64_t)n);
          } else {
            // negative integer power: need an invertible monomial
            if (blift.term_count() != 1)
              throw SpecializeError("specialize: negative power of a non-monomial for " + name);
            const auto& [be, bc] = *blift.terms().begin();
            auto cpow = pow_rat_exact(BigRat(bc), (long)n, 1);
            if (!cpow)
              throw SpecializeError("specialize: coefficient not invertible for " + name);
            scalar *= *cpow;
            ExpVec d(be.size());
            for (size_t t = 0; t < be.size(); ++t) d[t] = be[t] * n;
            polypart = polypart.shifted(d);
          }
        } else {
          // fractional power: only an exact monomial root works
          if (blift.term_count() != 1)
            throw SpecializeError("specialize: fractional power of a non-monomial for " + name);
          const auto& [be, bc] = *blift.terms().begin();
          auto cpow = pow_rat_exact(BigRat(bc), (long)se, step);
          if (!cpow)
            throw SpecializeError("specialize: coefficient has no exact root for " + name);
          scalar *= *cpow;
          ExpVec d(be.size());
          for (size_t t = 0; t < be.size(); ++t) {
            int64_t num = be[t] * se;
            if (num % step != 0)
              throw SpecializeError("specialize: non-representable fractional exponent for " +
                                    name);
            d[t] = num / step;
          }
          polypart = polypart.shifted(d);
        }
      }
    }
    for (const auto& [pe, pc] : polypart.terms()) acc.add(pe, scalar * BigRat(pc));
  }

  if (rem.empty()) {
    auto it = acc.terms.find(ExpVec{});
    return it == acc.terms.end() ? BigRat(0) : it->second;
  }
  LaurentPoly out(rem);
  for (const auto& [e, c] : acc.terms) {
    if (c.get_den() != 1)
      throw SpecializeError("specialize: non-integer coefficient in partial specialization");
    out.add_term(e, BigInt(c.get_num()));
  }
  return out;
}

// ---- serialization ------------------------------------------------------

nlohmann::ordered_json LaurentPoly::to_json() const {
  nlohmann::ordered_json j;
  std::vector<std::string> names;
  bool half_ok = true;
  for (const Variable& v : vars_) {
    names.push_back(v.name);
    if (v.step != 1 && v.step != 2) half_ok = false;
  }
  j["vars"] = names;
  if (half_ok) {
    std::vector<bool> hs;
    for (const Variable& v : vars_) hs.push_back(v.step == 2);
    j["halfstep"] = hs;
  } else {
    std::vector<int> st;
    for (const Variable& v : vars_) st.push_back(v.step);
    j["step"] = st;
  }
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["e"] = e;
    t["c"] = to_decimal(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ParseError("LaurentPoly: expected object with vars/terms");
  VarSpec vars;
  for (const auto& n : j.at("vars")) vars.push_back({n.get<std::string>(), 1});
  if (j.contains("halfstep")) {
    const auto& hs = j.at("halfstep");
    if (hs.size() != vars.size()) throw ParseError("LaurentPoly: halfstep arity mismatch");
    for (size_t i = 0; i < vars.size(); ++i) vars[i].step = hs[i].get<bool>() ? 2 : 1;
  } else if (j.contains("step")) {
    const auto& st = j.at("step");
    if (st.size() != vars.size()) throw ParseError("LaurentPoly: step arity mismatch");
    for (size_t i = 0; i < vars.size(); ++i) {
      vars[i].step = st[i].get<int>();
      if (vars[i].step < 1) throw ParseError("LaurentPoly: step must be positive");
    }
  } else {
    throw ParseError("LaurentPoly: missing halfstep/step");
  }
  {
    std::set<std::string> seen;
    for (const Variable& v : vars)
      if (!seen.insert(v.name).second) throw ParseError("LaurentPoly: duplicate variable");
  }
  LaurentPoly p(vars);
  for (const auto& t : j.at("terms")) {
    ExpVec e = t.at("e").get<ExpVec>();
    if (e.size() != vars.size()) throw ParseError("LaurentPoly: exponent arity mismatch");
    const auto& cj = t.at("c");
    BigInt c = cj.is_string() ? bigint_from_decimal(cj.get<std::string>())
                              : BigInt((long)cj.get<int64_t>());
    p.add_term(e, c);
  }
  return p;
}

namespace {

// stored exponent as a mathematical exponent string, e.g. 3 with step 2
// prints as 3/2
std::string exp_str(int64_t e, int step) {
  int64_t g = std::gcd(e < 0 ? -e : e, (int64_t)step);
  int64_t num = e / g, den = step / g;
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      std::string es = exp_str(e[i], vars_[i].step);
      factors.push_back(es == "1" ? vars_[i].name : vars_[i].name + "^(" + es + ")");
    }
    if (factors.empty()) {
      os << to_decimal(a);
    } else {
      if (a != 1) os << to_decimal(a) << "*";
      for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
  }
  return os.str();
}

std::string LaurentPoly::to_csv() const {
  std::ostringstream os;
  for (size_t i = 0; i < vars_.size(); ++i) os << vars_[i].name << ",";
  os << "coeff\n";
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < vars_.size(); ++i) os << exp_str(e[i], vars_[i].step) << ",";
    os << to_decimal(c) << "\n";
  }
  return os.str();
}

LaurentPoly embed(const LaurentPoly& p, const VarSpec& target,
                  const std::map<std::string, std::string>& rename) {
  std::vector<int> pos(p.nvars(), -1);
  for (size_t i = 0; i < p.nvars(); ++i) {
    const Variable& v = p.vars()[i];
    std::string want = v.name;
    if (auto it = rename.find(v.name); it != rename.end()) want = it->second;
    for (size_t t = 0; t < target.size(); ++t) {
      if (target[t].name == want) {
        if (target[t].step != v.step)
          throw VarMismatchError("embed: step mismatch for variable " + want);
        pos[i] = (int)t;
        break;
      }
    }
    if (pos[i] < 0) throw VarMismatchError("embed: target lacks variable " + want);
  }
  LaurentPoly r(target);
  LaurentPoly::ExpVec e(target.size());
  for (const auto& [e0, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (size_t i = 0; i < e0.size(); ++i) e[pos[i]] = e0[i];
    r.add_term(e, c);
  }
  return r;
}

}  // namespace fchar
