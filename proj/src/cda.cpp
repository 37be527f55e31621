#include "msq/cda.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "msq/errors.hpp"

namespace msq {

std::string_view label_name(AlgLabel l) {
  switch (l) {
    case AlgLabel::R: return "R";
    case AlgLabel::C: return "C";
    case AlgLabel::H: return "H";
    case AlgLabel::O: return "O";
    case AlgLabel::C_S: return "C_S";
    case AlgLabel::H_S: return "H_S";
    case AlgLabel::O_S: return "O_S";
  }
  return "?";
}

AlgLabel parse_label(std::string_view s) {
  std::string t;
  for (char ch : s) {
    if (ch != '_') t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (t == "R") return AlgLabel::R;
  if (t == "C") return AlgLabel::C;
  if (t == "H") return AlgLabel::H;
  if (t == "O") return AlgLabel::O;
  if (t == "CS") return AlgLabel::C_S;
  if (t == "HS") return AlgLabel::H_S;
  if (t == "OS") return AlgLabel::O_S;
  throw Error(ErrorCode::kBadParams, "unknown algebra label '" + std::string(s) + "'");
}

std::vector<int> cd_params(AlgLabel l) {
  switch (l) {
    case AlgLabel::R: return {};
    case AlgLabel::C: return {-1};
    case AlgLabel::C_S: return {1};
    case AlgLabel::H: return {-1, -1};
    case AlgLabel::H_S: return {-1, 1};
    case AlgLabel::O: return {-1, -1, -1};
    case AlgLabel::O_S: return {-1, -1, 1};
  }
  return {};
}

CompAlgebra::CompAlgebra(std::vector<int> params, std::string label)
    : params_(std::move(params)), label_(std::move(label)) {
  if (params_.size() > 3) throw Error(ErrorCode::kBadParams, "at most three doubling levels");
  table_ = {{SignedIndex{1, 0}}};
  dim_ = 1;
  for (int g : params_) {
    if (g != 1 && g != -1) throw Error(ErrorCode::kBadParams, "doubling parameter must be +-1");
    const std::size_t h = dim_;
    std::vector<std::vector<SignedIndex>> next(2 * h, std::vector<SignedIndex>(2 * h));
    auto cs = [](std::size_t i) { return i == 0 ? 1 : -1; };
    for (std::size_t i = 0; i < 2 * h; ++i) {
      for (std::size_t j = 0; j < 2 * h; ++j) {
        const bool iu = i >= h, ju = j >= h;
        const std::size_t a = i % h, c = j % h;
        SignedIndex r;
        if (!iu && !ju) {
          r = table_[a][c];  // ac
        } else if (iu && ju) {
          // (0,b)(0,d) = (g conj(d) b, 0)
          const SignedIndex p = table_[c][a];
          r = {g * cs(c) * p.sign, p.index};
        } else if (!iu && ju) {
          // (a,0)(0,d) = (0, d a)
          const SignedIndex p = table_[c][a];
          r = {p.sign, p.index + h};
        } else {
          // (0,b)(c,0) = (0, b conj(c))
          const SignedIndex p = table_[a][c];
          r = {cs(c) * p.sign, p.index + h};
        }
        next[i][j] = r;
      }
    }
    table_ = std::move(next);
    dim_ *= 2;
  }
}

CompAlgebra::CompAlgebra(AlgLabel l) : CompAlgebra(cd_params(l), std::string(label_name(l))) {}

CompAlgebra CompAlgebra::from_table(std::vector<std::vector<SignedIndex>> table, std::string label) {
  CompAlgebra a;
  a.dim_ = table.size();
  a.table_ = std::move(table);
  a.label_ = std::move(label);
  return a;
}

int CompAlgebra::norm_sign(std::size_t i) const {
  // Re(conj(e_i) e_i)
  return conj_sign(i) * table_[i][i].sign;
}

VecQ CompAlgebra::mul(const VecQ& x, const VecQ& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::kDimMismatch, "element size");
  VecQ out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const SignedIndex p = table_[i][j];
      if (p.sign > 0) {
        out[p.index] += x[i] * y[j];
      } else {
        out[p.index] -= x[i] * y[j];
      }
    }
  }
  return out;
}

VecQ CompAlgebra::conj(const VecQ& x) const {
  VecQ out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

Rational CompAlgebra::inner(const VecQ& x, const VecQ& y) const {
  // Re(conj(x) y)
  return mul(conj(x), y)[0];
}

VecQ CompAlgebra::commutator(const VecQ& x, const VecQ& y) const { return mul(x, y) - mul(y, x); }

VecQ CompAlgebra::associator(const VecQ& x, const VecQ& y, const VecQ& z) const {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

MatrixQ CompAlgebra::left_matrix(const VecQ& x) const {
  MatrixQ m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const VecQ col = mul(x, unit_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

MatrixQ CompAlgebra::right_matrix(const VecQ& x) const {
  MatrixQ m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const VecQ col = mul(unit_vec(dim_, j), x);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

namespace {

void same_algebra(const CElement& x, const CElement& y) {
  if (x.alg == nullptr || y.alg == nullptr || !(*x.alg == *y.alg)) {
    throw Error(ErrorCode::kMixedAlgebras, "operands belong to different algebras");
  }
}

}  // namespace

CElement mul(const CompAlgebra& a, const CElement& x, const CElement& y) {
  same_algebra(x, y);
  if (!(*x.alg == a)) throw Error(ErrorCode::kMixedAlgebras, "operand not in this algebra");
  return {&a, a.mul(x.c, y.c)};
}

CElement conj(const CElement& x) { return {x.alg, x.alg->conj(x.c)}; }

Rational real_part(const CElement& x) { return x.c.at(0); }

Rational inner(const CElement& x, const CElement& y) {
  same_algebra(x, y);
  return x.alg->inner(x.c, y.c);
}

MatrixQ derivation_map(const CompAlgebra& a, const VecQ& x, const VecQ& y) {
  const MatrixQ lx = a.left_matrix(x), ly = a.left_matrix(y);
  const MatrixQ rx = a.right_matrix(x), ry = a.right_matrix(y);
  return commutator(lx, ly) + commutator(rx, ry) + commutator(lx, ry);
}

VecQ derivation_apply(const CompAlgebra& a, const VecQ& x, const VecQ& y, const VecQ& z) {
  VecQ out = a.commutator(a.commutator(x, y), z);
  axpy(out, Rational(-3), a.associator(x, y, z));
  return out;
}

SparseMatrixQ leibniz_system(const CompAlgebra& a) {
  const std::size_t n = a.dim();
  SparseMatrixQ m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SignedIndex p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // D(e_i e_j)_k = sign * D[k][p.index]
        VecQ row(n * n);
        row[k * n + p.index] += p.sign;
        // (D(e_i) e_j)_k = sum_m D[m][i] (e_m e_j)_k
        for (std::size_t m2 = 0; m2 < n; ++m2) {
          const SignedIndex q = a.product(m2, j);
          if (q.index == k) row[m2 * n + i] -= q.sign;
          const SignedIndex r = a.product(i, m2);
          if (r.index == k) row[m2 * n + j] -= r.sign;
        }
        SparseVecQ s = to_sparse(row);
        if (!s.empty()) m.rows.push_back(std::move(s));
      }
    }
  }
  return m;
}

std::vector<MatrixQ> derivation_basis(const CompAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<MatrixQ> out;
  for (auto& v : nullspace(leibniz_system(a))) out.push_back(MatrixQ::from_flat(n, n, std::move(v)));
  return out;
}

namespace {

SignedIndex compose(const CompAlgebra& a, SignedIndex x, SignedIndex y) {
  const SignedIndex p = a.product(x.index, y.index);
  return {x.sign * y.sign * p.sign, p.index};
}

// Images of all basis units from generator images. Unit i of a doubled
// algebra is the nested product of the generators e_1, e_2, e_4 selected by
// its bits; for other tables the same words are evaluated in `sub` first.
std::optional<std::vector<SignedIndex>> extend_generators(const CompAlgebra& sub,
                                                          const CompAlgebra& sup,
                                                          const std::vector<SignedIndex>& gens) {
  std::vector<SignedIndex> img(sub.dim());
  std::vector<bool> seen(sub.dim(), false);
  img[0] = {1, 0};
  seen[0] = true;
  for (std::size_t i = 1; i < sub.dim(); ++i) {
    bool first = true;
    SignedIndex acc{1, 0}, word{1, 0};
    for (std::size_t t = 0; (std::size_t{1} << t) < sub.dim(); ++t) {
      if (!(i & (std::size_t{1} << t))) continue;
      const SignedIndex g{1, std::size_t{1} << t};
      acc = first ? gens[t] : compose(sup, acc, gens[t]);
      word = first ? g : compose(sub, word, g);
      first = false;
    }
    if (seen[word.index]) return std::nullopt;
    seen[word.index] = true;
    img[word.index] = {acc.sign * word.sign, acc.index};
  }
  std::vector<bool> used(sup.dim(), false);
  for (const auto& s : img) {
    if (used[s.index]) return std::nullopt;
    used[s.index] = true;
  }
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      const SignedIndex lhs = compose(sup, img[i], img[j]);
      const SignedIndex p = sub.product(i, j);
      const SignedIndex rhs{p.sign * img[p.index].sign, img[p.index].index};
      if (!(lhs == rhs)) return std::nullopt;
    }
  }
  return img;
}

bool search(const CompAlgebra& sub, const CompAlgebra& sup, std::vector<SignedIndex>& gens,
            std::size_t ngen, std::vector<SignedIndex>& found) {
  if (gens.size() == ngen) {
    if (auto r = extend_generators(sub, sup, gens)) {
      found = *r;
      return true;
    }
    return false;
  }
  for (std::size_t idx = 1; idx < sup.dim(); ++idx) {
    for (int s : {1, -1}) {
      gens.push_back({s, idx});
      if (search(sub, sup, gens, ngen, found)) return true;
      gens.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<SignedIndex>> find_embedding(const CompAlgebra& sub, const CompAlgebra& sup) {
  if (sub.dim() > sup.dim()) return std::nullopt;
  std::size_t ngen = 0;
  while ((std::size_t{1} << ngen) < sub.dim()) ++ngen;
  std::vector<SignedIndex> gens, found;
  if (!search(sub, sup, gens, ngen, found)) return std::nullopt;
  return found;
}

std::optional<std::vector<SignedIndex>> find_signed_isomorphism(const CompAlgebra& a,
                                                                const CompAlgebra& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  return find_embedding(a, b);
}

namespace {

constexpr std::array<std::array<std::size_t, 3>, 7> kFanoLines = {{
    {1, 2, 3}, {1, 5, 6}, {1, 4, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 5}, {3, 6, 7},
}};

std::vector<std::vector<SignedIndex>> fano_table(unsigned orientation, bool split) {
  std::vector<std::vector<SignedIndex>> t(8, std::vector<SignedIndex>(8));
  for (std::size_t i = 0; i < 8; ++i) {
    t[0][i] = {1, i};
    t[i][0] = {1, i};
  }
  for (std::size_t i = 1; i < 8; ++i) t[i][i] = {-1, 0};
  for (std::size_t l = 0; l < kFanoLines.size(); ++l) {
    auto [a, b, c] = kFanoLines[l];
    if (orientation & (1u << l)) std::swap(b, c);
    t[a][b] = {1, c};
    t[b][c] = {1, a};
    t[c][a] = {1, b};
    t[b][a] = {-1, c};
    t[c][b] = {-1, a};
    t[a][c] = {-1, b};
  }
  if (split) {
    for (std::size_t i = 4; i < 8; ++i) {
      for (std::size_t j = 4; j < 8; ++j) t[i][j].sign = -t[i][j].sign;
    }
  }
  return t;
}

bool composes(const CompAlgebra& a) {
  // Norm multiplicativity on a fixed family of small integer elements.
  const std::size_t n = a.dim();
  for (std::size_t s = 0; s < 24; ++s) {
    VecQ x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<long>((s * 7 + i * 3 + 1) % 5) - 2;
      y[i] = static_cast<long>((s * 5 + i * i + 2) % 7) - 3;
    }
    const VecQ xy = a.mul(x, y);
    if (a.inner(xy, xy) != a.inner(x, x) * a.inner(y, y)) return false;
  }
  return true;
}

}  // namespace

CompAlgebra fano_octonions(bool split) {
  for (unsigned o = 0; o < (1u << kFanoLines.size()); ++o) {
    CompAlgebra a = CompAlgebra::from_table(fano_table(o, split), split ? "O_S(fano)" : "O(fano)");
    if (composes(a)) return a;
  }
  throw Error(ErrorCode::kUnsupported, "no Fano orientation composes");
}

}  // namespace msq
