#include "toroidal/lie/toroidal.hpp"

#include <cctype>
#include <sstream>

#include "toroidal/error.hpp"

namespace toroidal {

ToroidalElement::ToroidalElement(const GeneratorKey& key, const Scalar& coeff) { add(key, coeff); }

void ToroidalElement::add(const GeneratorKey& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar ToroidalElement::coeff(const GeneratorKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

ToroidalElement& ToroidalElement::operator+=(const ToroidalElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k, c);
  return *this;
}

ToroidalElement& ToroidalElement::operator-=(const ToroidalElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k, -c);
  return *this;
}

ToroidalElement& ToroidalElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

ToroidalAlgebra::ToroidalAlgebra(LieDataPtr lie, int rank) : lie_(std::move(lie)), rank_(rank) {
  if (!lie_) throw Error(Errc::InvalidArgument, "null Lie algebra");
  if (rank_ < 0) throw Error(Errc::InvalidArgument, "rank must be non-negative");
}

void ToroidalAlgebra::validate(const GeneratorKey& key) const {
  auto check_rank = [&](const MultiIndex& n) {
    if (n.rank() != rank_) {
      throw Error(Errc::RankMismatch, "multi-index " + n.str() + " has rank " + std::to_string(n.rank()) +
                                          ", expected " + std::to_string(rank_));
    }
  };
  if (const auto* g = std::get_if<LoopKey>(&key)) {
    if (g->basis < 0 || g->basis >= lie_->dimension()) {
      throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(g->basis));
    }
    check_rank(g->n);
  } else if (const auto* k0 = std::get_if<K0Key>(&key)) {
    check_rank(k0->n);
  } else {
    const int i = std::get<KiKey>(key).i;
    if (i < 1 || i > rank_) throw Error(Errc::IndexOutOfRange, "K" + std::to_string(i) + " with rank " + std::to_string(rank_));
  }
}

ToroidalElement ToroidalAlgebra::bracket(const GeneratorKey& u, const GeneratorKey& v) const {
  validate(u);
  validate(v);
  ToroidalElement out;
  const auto* a = std::get_if<LoopKey>(&u);
  const auto* b = std::get_if<LoopKey>(&v);
  if (!a || !b) return out;
  const MultiIndex nm = a->n + b->n;
  const int n0m0 = a->n0 + b->n0;
  for (const auto& t : lie_->bracket_basis(a->basis, b->basis)) out.add(LoopKey{t.index, n0m0, nm}, t.coeff);
  const Scalar& form = lie_->form(a->basis, b->basis);
  if (!form.is_zero() && n0m0 == 0) {
    out.add(K0Key{nm}, Scalar(a->n0) * form);
    if (nm.is_zero()) {
      for (int i = 1; i <= rank_; ++i) out.add(KiKey{i}, Scalar(a->n[i - 1]) * form);
    }
  }
  return out;
}

ToroidalElement ToroidalAlgebra::bracket(const ToroidalElement& u, const ToroidalElement& v) const {
  ToroidalElement out;
  for (const auto& [ku, cu] : u.terms()) {
    if (is_central(ku)) {
      validate(ku);
      continue;
    }
    for (const auto& [kv, cv] : v.terms()) {
      auto b = bracket(ku, kv);
      b *= cu * cv;
      out += b;
    }
  }
  for (const auto& [kv, cv] : v.terms()) validate(kv);
  return out;
}

bool ToroidalAlgebra::jacobi_check(const ToroidalElement& u, const ToroidalElement& v, const ToroidalElement& w) const {
  return (bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))).is_zero();
}

ToroidalElement ToroidalAlgebra::loop(const LieElement& x, int n0, const MultiIndex& n) const {
  if (x.dimension() != lie_->dimension()) throw Error(Errc::InvalidArgument, "Lie element dimension mismatch");
  ToroidalElement out;
  for (int i = 0; i < x.dimension(); ++i) out.add(LoopKey{i, n0, n}, x[i]);
  for (const auto& [k, c] : out.terms()) validate(k);
  return out;
}

namespace {

class KeyParser {
 public:
  explicit KeyParser(std::string_view s) : s_(s) {}

  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  MultiIndex tuple() {
    expect('(');
    std::vector<int> v;
    if (!consume(')')) {
      do {
        v.push_back(integer());
      } while (consume(','));
      expect(')');
    }
    return MultiIndex(std::move(v));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "generator '" + std::string(s_) + "': " + what);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorKey ToroidalAlgebra::parse_key(std::string_view text) const {
  std::size_t open = text.find('(');
  std::string head(text.substr(0, open));
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.erase(head.begin());
  KeyParser p(open == std::string_view::npos ? std::string_view() : text.substr(open));

  GeneratorKey key;
  if (auto idx = lie_->index_of(head); idx && open != std::string_view::npos) {
    p.expect('(');
    const int n0 = p.integer();
    MultiIndex n;
    if (p.consume(',')) n = p.tuple();
    p.expect(')');
    key = LoopKey{*idx, n0, n};
  } else if (head == "K0") {
    MultiIndex n;
    if (open != std::string_view::npos) {
      p.expect('(');
      n = p.tuple();
      p.expect(')');
    }
    key = K0Key{n};
  } else if (head.size() > 1 && head[0] == 'K' && open == std::string_view::npos &&
             head.find_first_not_of("0123456789", 1) == std::string::npos) {
    key = KiKey{std::stoi(head.substr(1))};
  } else {
    throw Error(Errc::ParseError, "generator '" + std::string(text) + "': unknown generator '" + head + "'");
  }
  if (!p.done()) p.fail("trailing characters");
  validate(key);
  return key;
}

std::string ToroidalAlgebra::key_str(const GeneratorKey& key) const {
  std::ostringstream os;
  if (const auto* g = std::get_if<LoopKey>(&key)) {
    os << lie_->label(g->basis) << '(' << g->n0;
    if (g->n.rank() > 0) os << ',' << g->n.str();
    os << ')';
  } else if (const auto* k0 = std::get_if<K0Key>(&key)) {
    os << "K0";
    if (k0->n.rank() > 0) os << '(' << k0->n.str() << ')';
  } else {
    os << 'K' << std::get<KiKey>(key).i;
  }
  return os.str();
}

std::string ToroidalAlgebra::element_str(const ToroidalElement& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << c << ")*";
    os << key_str(k);
  }
  return os.str();
}

}  // namespace toroidal
