#include "toroidal/lie/simple_lie.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toroidal/error.hpp"

namespace toroidal {

LieElement LieElement::basis(int dimension, int index) {
  if (index < 0 || index >= dimension) throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(index));
  LieElement e(std::vector<Scalar>(static_cast<std::size_t>(dimension)));
  e[index] = 1;
  return e;
}

bool LieElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

LieElement& LieElement::operator+=(const LieElement& rhs) {
  if (rhs.dimension() != dimension()) throw Error(Errc::InvalidArgument, "Lie element dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& rhs) {
  if (rhs.dimension() != dimension()) throw Error(Errc::InvalidArgument, "Lie element dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

LieElement operator*(const Scalar& s, LieElement a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

namespace {

DenseMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  DenseMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidLieData, what); }

// Coordinates of x in the span of `basis`, or nullopt when x lies outside it.
std::optional<std::vector<Scalar>> coordinates(const std::vector<DenseMatrix>& basis, const DenseMatrix& x) {
  const std::size_t d = basis.size();
  const std::size_t n = x.rows();
  DenseMatrix gram(d, d);
  std::vector<Scalar> rhs(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Scalar s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s += basis[a](i, j) * basis[b](i, j);
      }
      gram(a, b) = s;
    }
    Scalar s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s += basis[a](i, j) * x(i, j);
    }
    rhs[a] = s;
  }
  auto c = solve(gram, rhs);
  if (!c) return std::nullopt;
  DenseMatrix back(n, n);
  for (std::size_t a = 0; a < d; ++a) back = back + basis[a] * (*c)[a];
  if (!(back == x)) return std::nullopt;
  return c;
}

}  // namespace

SimpleLieData SimpleLieData::from_matrices(std::string name, std::vector<std::string> labels,
                                           std::vector<DenseMatrix> matrices, std::vector<int> root_vectors,
                                           std::vector<int> cartan, std::vector<LieElement> nilpotent_basis) {
  SimpleLieData g;
  g.name_ = std::move(name);
  g.dim_ = static_cast<int>(matrices.size());
  if (labels.size() != matrices.size()) invalid("label count differs from basis size");
  g.labels_ = std::move(labels);
  const auto d = static_cast<std::size_t>(g.dim_);
  g.brackets_.resize(d * d);
  g.form_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const DenseMatrix comm = matrices[i] * matrices[j] - matrices[j] * matrices[i];
      auto c = coordinates(matrices, comm);
      if (!c) invalid("matrix span is not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k) {
        if (!(*c)[k].is_zero()) g.brackets_[i * d + j].push_back({static_cast<int>(k), (*c)[k]});
      }
      g.form_[i * d + j] = (matrices[i] * matrices[j]).trace();
    }
  }
  g.root_vectors_ = std::move(root_vectors);
  g.cartan_ = std::move(cartan);
  g.nilpotent_ = std::move(nilpotent_basis);
  g.matrices_ = std::move(matrices);
  g.validate();
  return g;
}

SimpleLieData SimpleLieData::sl2() {
  DenseMatrix h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  const auto e = unit_matrix(2, 0, 1);
  const auto f = unit_matrix(2, 1, 0);
  // (h + e - f)^2 = 0 as a 2x2 matrix
  std::vector<LieElement> nil = {LieElement({1, 0, 0}), LieElement({0, 1, 0}), LieElement({1, -1, 1})};
  return from_matrices("sl2", {"e", "f", "h"}, {e, f, h}, {0, 1}, {2}, std::move(nil));
}

SimpleLieData SimpleLieData::sl3() {
  std::vector<DenseMatrix> m = {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2),
                                unit_matrix(3, 1, 0), unit_matrix(3, 2, 1), unit_matrix(3, 2, 0)};
  DenseMatrix h1(3, 3), h2(3, 3);
  h1(0, 0) = 1;
  h1(1, 1) = -1;
  h2(1, 1) = 1;
  h2(2, 2) = -1;
  m.push_back(h1);
  m.push_back(h2);
  std::vector<LieElement> nil;
  for (int i = 0; i < 6; ++i) nil.push_back(LieElement::basis(8, i));
  // h1 + e1 - f1 and h2 + e2 - f2 are square-zero 3x3 matrices
  nil.push_back(LieElement({1, 0, 0, -1, 0, 0, 1, 0}));
  nil.push_back(LieElement({0, 1, 0, 0, -1, 0, 0, 1}));
  return from_matrices("sl3", {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2"}, std::move(m), {0, 1, 2, 3, 4, 5},
                       {6, 7}, std::move(nil));
}

SimpleLieData SimpleLieData::from_json(const json& j) {
  auto field = [&](const char* key) -> const json& {
    if (!j.is_object() || !j.contains(key)) {
      throw Error(Errc::InvalidDescriptor, std::string("Lie table: missing field '") + key + "'");
    }
    return j.at(key);
  };
  SimpleLieData g;
  try {
    g.dim_ = field("dimension").get<int>();
    if (g.dim_ <= 0) invalid("dimension must be positive");
    const auto d = static_cast<std::size_t>(g.dim_);
    g.name_ = j.value("name", std::string("custom"));
    if (j.contains("labels")) {
      g.labels_ = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < d; ++i) g.labels_.push_back("b" + std::to_string(i));
    }
    if (g.labels_.size() != d) throw Error(Errc::InvalidDescriptor, "Lie table: field 'labels' has wrong length");

    std::map<std::pair<int, int>, std::map<int, Scalar>> table;
    for (const auto& entry : field("brackets")) {
      if (!entry.is_array() || entry.size() != 4) {
        throw Error(Errc::InvalidDescriptor, "Lie table: field 'brackets' entries must be [i,j,k,\"c\"]");
      }
      const int a = entry[0].get<int>(), b = entry[1].get<int>(), k = entry[2].get<int>();
      for (int idx : {a, b, k}) {
        if (idx < 0 || idx >= g.dim_) throw Error(Errc::InvalidDescriptor, "Lie table: field 'brackets' index out of range");
      }
      table[{a, b}][k] += scalar_field(entry[3], "brackets");
    }
    // one orientation suffices; the other is filled by antisymmetry
    auto given = table;
    for (const auto& [ij, terms] : given) {
      const std::pair<int, int> ji{ij.second, ij.first};
      if (ij.first != ij.second && !given.count(ji)) {
        for (const auto& [k, c] : terms) table[ji][k] = -c;
      }
    }
    g.brackets_.resize(d * d);
    for (const auto& [ij, terms] : table) {
      for (const auto& [k, c] : terms) {
        if (!c.is_zero()) {
          g.brackets_[static_cast<std::size_t>(ij.first) * d + static_cast<std::size_t>(ij.second)].push_back({k, c});
        }
      }
    }

    const auto& form = field("form");
    if (!form.is_array() || form.size() != d) throw Error(Errc::InvalidDescriptor, "Lie table: field 'form' must be dim x dim");
    g.form_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!form[i].is_array() || form[i].size() != d) {
        throw Error(Errc::InvalidDescriptor, "Lie table: field 'form' must be dim x dim");
      }
      for (std::size_t k = 0; k < d; ++k) g.form_[i * d + k] = scalar_field(form[i][k], "form");
    }
    g.root_vectors_ = field("root_vectors").get<std::vector<int>>();
    g.cartan_ = field("cartan").get<std::vector<int>>();
    if (j.contains("nilpotent_basis")) {
      for (const auto& row : j.at("nilpotent_basis")) {
        std::vector<Scalar> coords;
        for (const auto& c : row) coords.push_back(scalar_field(c, "nilpotent_basis"));
        if (coords.size() != d) throw Error(Errc::InvalidDescriptor, "Lie table: field 'nilpotent_basis' has wrong width");
        g.nilpotent_.emplace_back(std::move(coords));
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidDescriptor, std::string("Lie table: ") + e.what());
  }
  g.validate();
  return g;
}

json SimpleLieData::to_json() const {
  json j;
  j["name"] = name_;
  j["dimension"] = dim_;
  j["labels"] = labels_;
  json br = json::array();
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      for (const auto& t : bracket_basis(i, k)) br.push_back({i, k, t.index, t.coeff.str()});
    }
  }
  j["brackets"] = br;
  json form = json::array();
  for (int i = 0; i < dim_; ++i) {
    json row = json::array();
    for (int k = 0; k < dim_; ++k) row.push_back(this->form(i, k).str());
    form.push_back(row);
  }
  j["form"] = form;
  j["root_vectors"] = root_vectors_;
  j["cartan"] = cartan_;
  json nil = json::array();
  for (const auto& a : nilpotent_) {
    json row = json::array();
    for (const auto& c : a.coords()) row.push_back(c.str());
    nil.push_back(row);
  }
  j["nilpotent_basis"] = nil;
  return j;
}

const std::string& SimpleLieData::label(int i) const {
  if (i < 0 || i >= dim_) throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(i));
  return labels_[static_cast<std::size_t>(i)];
}

std::optional<int> SimpleLieData::index_of(std::string_view label) const {
  for (int i = 0; i < dim_; ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

const std::vector<SimpleLieData::Term>& SimpleLieData::bracket_basis(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw Error(Errc::IndexOutOfRange, "bracket index");
  return brackets_[static_cast<std::size_t>(i * dim_ + j)];
}

const Scalar& SimpleLieData::form(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw Error(Errc::IndexOutOfRange, "form index");
  return form_[static_cast<std::size_t>(i * dim_ + j)];
}

bool SimpleLieData::is_root_vector(int i) const {
  return std::find(root_vectors_.begin(), root_vectors_.end(), i) != root_vectors_.end();
}

LieElement SimpleLieData::bracket(const LieElement& a, const LieElement& b) const {
  if (a.dimension() != dim_ || b.dimension() != dim_) throw Error(Errc::InvalidArgument, "Lie element dimension mismatch");
  LieElement out(std::vector<Scalar>(static_cast<std::size_t>(dim_)));
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : bracket_basis(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

Scalar SimpleLieData::invariant_form(const LieElement& a, const LieElement& b) const {
  if (a.dimension() != dim_ || b.dimension() != dim_) throw Error(Errc::InvalidArgument, "Lie element dimension mismatch");
  Scalar s = 0;
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!b[j].is_zero()) s += a[i] * b[j] * form(i, j);
    }
  }
  return s;
}

DenseMatrix SimpleLieData::ad(const LieElement& a) const {
  const auto d = static_cast<std::size_t>(dim_);
  DenseMatrix m(d, d);
  for (int j = 0; j < dim_; ++j) {
    const auto col = bracket(a, LieElement::basis(dim_, j));
    for (int i = 0; i < dim_; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[i];
  }
  return m;
}

std::optional<std::vector<Scalar>> SimpleLieData::cartan_weight(int i) const {
  std::vector<Scalar> weight;
  const auto bi = LieElement::basis(dim_, i);
  for (int h : cartan_) {
    const auto image = bracket(LieElement::basis(dim_, h), bi);
    const Scalar lambda = image[i];
    if (!(image == lambda * bi)) return std::nullopt;
    weight.push_back(lambda);
  }
  return weight;
}

std::vector<Scalar> SimpleLieData::root_lengths_squared() const {
  std::vector<Scalar> out;
  for (int e : root_vectors_) {
    std::optional<int> partner;
    for (int f : root_vectors_) {
      if (!form(e, f).is_zero()) {
        partner = f;
        break;
      }
    }
    if (!partner) invalid("root vector " + label(e) + " has no partner with nonzero pairing");
    const auto xe = LieElement::basis(dim_, e);
    const auto h = bracket(xe, LieElement::basis(dim_, *partner));
    for (int k = 0; k < dim_; ++k) {
      if (!h[k].is_zero() && std::find(cartan_.begin(), cartan_.end(), k) == cartan_.end()) {
        invalid("[x_alpha, x_-alpha] for " + label(e) + " leaves the Cartan subalgebra");
      }
    }
    const auto he = bracket(h, xe);
    const Scalar c = he[e];
    if (c.is_zero() || !(he == c * xe)) invalid("root vector " + label(e) + " is not an ad(h) eigenvector");
    const auto coroot = (Scalar(2) / c) * h;
    out.push_back(Scalar(4) / invariant_form(coroot, coroot));
  }
  return out;
}

std::vector<LieElement> SimpleLieData::nilpotent_basis() const {
  if (nilpotent_.empty()) throw Error(Errc::BasisSearchFailed, "no nilpotent basis stored for " + name_);
  const auto d = static_cast<std::size_t>(dim_);
  DenseMatrix span(d, d);
  for (std::size_t k = 0; k < nilpotent_.size(); ++k) {
    const auto& a = nilpotent_[k];
    if (a.dimension() != dim_) throw Error(Errc::BasisSearchFailed, "nilpotent basis element has wrong dimension");
    if (!invariant_form(a, a).is_zero()) throw Error(Errc::BasisSearchFailed, "<a,a> != 0 for a stored basis element");
    if (!bracket(a, a).is_zero()) throw Error(Errc::BasisSearchFailed, "[a,a] != 0 for a stored basis element");
    DenseMatrix power = ad(a);
    for (int i = 1; i < dim_; ++i) power = power * ad(a);
    if (!power.is_zero()) throw Error(Errc::BasisSearchFailed, "ad(a) is not nilpotent for a stored basis element");
    if (k < d) {
      for (std::size_t i = 0; i < d; ++i) span(k, i) = a[static_cast<int>(i)];
    }
  }
  if (nilpotent_.size() != d || rank(span) != d) throw Error(Errc::BasisSearchFailed, "stored elements do not form a basis");
  return nilpotent_;
}

void SimpleLieData::validate() const {
  const int d = dim_;
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) invalid("duplicate basis labels");
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto a = bracket(LieElement::basis(d, i), LieElement::basis(d, j));
      auto b = bracket(LieElement::basis(d, j), LieElement::basis(d, i));
      if (!(a + b).is_zero()) invalid("bracket is not antisymmetric at (" + label(i) + "," + label(j) + ")");
      if (!(form(i, j) == form(j, i))) invalid("form is not symmetric");
    }
  }
  for (int i = 0; i < d; ++i) {
    const auto bi = LieElement::basis(d, i);
    for (int j = 0; j < d; ++j) {
      const auto bj = LieElement::basis(d, j);
      const auto bij = bracket(bi, bj);
      for (int k = 0; k < d; ++k) {
        const auto bk = LieElement::basis(d, k);
        auto jac = bracket(bi, bracket(bj, bk)) + bracket(bj, bracket(bk, bi)) + bracket(bk, bij);
        if (!jac.is_zero()) invalid("Jacobi identity fails on (" + label(i) + "," + label(j) + "," + label(k) + ")");
        if (!(invariant_form(bij, bk) == invariant_form(bi, bracket(bj, bk)))) invalid("form is not invariant");
      }
    }
  }
  DenseMatrix gram(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = form(i, j);
  }
  if (rank(gram) != static_cast<std::size_t>(d)) invalid("form is degenerate");
  for (int idx : root_vectors_) {
    if (idx < 0 || idx >= d) invalid("root vector index out of range");
    if (!form(idx, idx).is_zero()) invalid("root vector " + label(idx) + " is not isotropic");
  }
  for (int a : cartan_) {
    if (a < 0 || a >= d) invalid("Cartan index out of range");
    for (int b : cartan_) {
      if (!bracket(LieElement::basis(d, a), LieElement::basis(d, b)).is_zero()) invalid("Cartan subalgebra is not abelian");
    }
  }
  if (!root_vectors_.empty()) {
    const auto lengths = root_lengths_squared();
    const auto longest = *std::max_element(lengths.begin(), lengths.end());
    if (!(longest == Scalar(2))) invalid("form is not normalized: long roots have squared length " + longest.str());
  }
}

LieDataPtr builtin_algebra(std::string_view name) {
  static const LieDataPtr sl2 = std::make_shared<const SimpleLieData>(SimpleLieData::sl2());
  static const LieDataPtr sl3 = std::make_shared<const SimpleLieData>(SimpleLieData::sl3());
  if (name == "sl2") return sl2;
  if (name == "sl3") return sl3;
  throw Error(Errc::InvalidDescriptor, "unknown algebra '" + std::string(name) + "' (expected sl2 or sl3)");
}

}  // namespace toroidal
