#include "fchar/repmodule.hpp"

#include <array>

#include "fchar/errors.hpp"

namespace fchar {

std::vector<BigInt> SparseIntMat::apply(const std::vector<BigInt>& x) const {
  if ((int64_t)x.size() != n) throw ParamError("SparseIntMat::apply: size mismatch");
  std::vector<BigInt> y(n, BigInt(0));
  for (const auto& [r, c, v] : entries) y[r] += BigInt((long)v) * x[c];
  return y;
}

std::vector<std::vector<BigInt>> SparseIntMat::to_dense() const {
  std::vector<std::vector<BigInt>> d(n, std::vector<BigInt>(n, BigInt(0)));
  for (const auto& [r, c, v] : entries) d[r][c] += (long)v;
  return d;
}

std::vector<std::vector<BigInt>> commutator_dense(const SparseIntMat& a, const SparseIntMat& b) {
  if (a.n != b.n) throw ParamError("commutator_dense: size mismatch");
  const int64_t n = a.n;
  std::vector<std::vector<BigInt>> d(n, std::vector<BigInt>(n, BigInt(0)));
  for (const auto& [r1, c1, v1] : a.entries)
    for (const auto& [r2, c2, v2] : b.entries) {
      if (c1 == r2) d[r1][c2] += BigInt((long)v1) * (long)v2;  // A B
      if (c2 == r1) d[r2][c1] -= BigInt((long)v2) * (long)v1;  // - B A
    }
  return d;
}

namespace {

// e/f/h actions in the fixed weight basis of pi_l
void sl2_entries(int64_t l, SparseIntMat& e, SparseIntMat& f, SparseIntMat& h,
                 int64_t offset) {
  for (int64_t j = 0; j <= l; ++j) {
    if (j < l) e.add(offset + j + 1, offset + j, j + 1);
    if (j > 0) f.add(offset + j - 1, offset + j, l - j + 1);
    h.add(offset + j, offset + j, 2 * j - l);
  }
}

}  // namespace

RepModule build_sl2_irrep(int64_t l) {
  if (l < 0) throw ParamError("build_sl2_irrep: need l >= 0");
  RepModule M;
  M.name = "pi_" + std::to_string(l);
  M.dim = l + 1;
  SparseIntMat e{M.dim, {}}, f{M.dim, {}}, h{M.dim, {}};
  sl2_entries(l, e, f, h, 0);
  M.generators = {{"e", e}, {"f", f}, {"h", h}};
  std::vector<int64_t> hw(M.dim);
  for (int64_t j = 0; j <= l; ++j) hw[j] = 2 * j - l;
  M.weight_ops = {{"h", hw}};
  M.cyclic.assign(M.dim, 0);
  M.cyclic[0] = 1;  // lowest weight vector
  return M;
}

RepModule build_varpi(int64_t k) {
  if (k < 0) throw ParamError("build_varpi: need k >= 0");
  RepModule M;
  M.name = "varpi_" + std::to_string(k);
  M.dim = 0;
  for (int64_t l = 0; l <= k; ++l) M.dim += (l + 1) * (l + 1);
  SparseIntMat e1{M.dim, {}}, f1{M.dim, {}}, h1{M.dim, {}};
  SparseIntMat e2{M.dim, {}}, f2{M.dim, {}}, h2{M.dim, {}};
  std::vector<int64_t> w1(M.dim), w2(M.dim);
  M.cyclic.assign(M.dim, 0);
  int64_t off = 0;
  for (int64_t l = 0; l <= k; ++l) {
    const int64_t d = l + 1;
    // basis phi_i x w_j at off + i*d + j
    SparseIntMat e{d, {}}, f{d, {}}, h{d, {}};
    sl2_entries(l, e, f, h, 0);
    // first copy acts on the dual slot by -x^T: (i',i) entry of -x^T is
    // -x(i,i'), tensored with identity on j
    auto add_dual = [&](SparseIntMat& dst, const SparseIntMat& src) {
      for (const auto& [r, c, v] : src.entries)
        for (int64_t j = 0; j < d; ++j) dst.add(off + c * d + j, off + r * d + j, -v);
    };
    add_dual(e1, e);
    add_dual(f1, f);
    add_dual(h1, h);
    // second copy acts on the plain slot
    auto add_plain = [&](SparseIntMat& dst, const SparseIntMat& src) {
      for (const auto& [r, c, v] : src.entries)
        for (int64_t i = 0; i < d; ++i) dst.add(off + i * d + r, off + i * d + c, v);
    };
    add_plain(e2, e);
    add_plain(f2, f);
    add_plain(h2, h);
    for (int64_t i = 0; i < d; ++i)
      for (int64_t j = 0; j < d; ++j) {
        w1[off + i * d + j] = -(2 * i - l);  // dual weight
        w2[off + i * d + j] = 2 * j - l;
      }
    for (int64_t j = 0; j < d; ++j) M.cyclic[off + j * d + j] = 1;  // sum_j phi_j x w_j
    off += d * d;
  }
  M.generators = {{"e1", e1}, {"f1", f1}, {"h1", h1}, {"e2", e2}, {"f2", f2}, {"h2", h2}};
  M.weight_ops = {{"h1", std::move(w1)}, {"h2", std::move(w2)}};
  return M;
}

namespace {

RepModule build_pi_sum_impl(int64_t m, bool dual_charge) {
  if (m < 0) throw ParamError("build_pi_sum: need m >= 0");
  RepModule M;
  M.name = (dual_charge ? "pibar_sum_" : "pi_sum_") + std::to_string(m);
  M.dim = 0;
  for (int64_t l = 0; l <= m; ++l) M.dim += l + 1;
  SparseIntMat e{M.dim, {}}, f{M.dim, {}}, h{M.dim, {}};
  std::vector<int64_t> hw(M.dim), ht(M.dim);
  M.cyclic.assign(M.dim, 0);
  int64_t off = 0;
  for (int64_t l = 0; l <= m; ++l) {
    sl2_entries(l, e, f, h, off);
    for (int64_t j = 0; j <= l; ++j) {
      hw[off + j] = 2 * j - l;
      ht[off + j] = dual_charge ? -l : l;
    }
    M.cyclic[off + (dual_charge ? l : 0)] = 1;  // highest resp. lowest
    off += l + 1;
  }
  SparseIntMat htm{M.dim, {}};
  for (int64_t i = 0; i < M.dim; ++i) htm.add(i, i, ht[i]);
  M.generators = {{"e", e}, {"f", f}, {"h", h}, {"ht", htm}};
  M.weight_ops = {{"h", std::move(hw)}, {"ht", std::move(ht)}};
  return M;
}

// index of monomial (a1,a2,a3), a1+a2+a3 = m, enumerated with a1 outer,
// a2 inner descending loops; returns a map for clarity
struct Sl3Basis {
  int64_t m;
  std::vector<std::array<int64_t, 3>> mons;
  std::map<std::array<int64_t, 3>, int64_t> index;
  explicit Sl3Basis(int64_t m_) : m(m_) {
    for (int64_t a1 = m; a1 >= 0; --a1)
      for (int64_t a2 = m - a1; a2 >= 0; --a2) {
        std::array<int64_t, 3> a{a1, a2, m - a1 - a2};
        index.emplace(a, (int64_t)mons.size());
        mons.push_back(a);
      }
  }
};

}  // namespace

RepModule build_pi_sum(int64_t m) { return build_pi_sum_impl(m, false); }
RepModule build_pibar_sum(int64_t m) { return build_pi_sum_impl(m, true); }

RepModule build_sl3_sym(int64_t m) {
  if (m < 0) throw ParamError("build_sl3_sym: need m >= 0");
  Sl3Basis B(m);
  RepModule M;
  M.name = "sym3_" + std::to_string(m);
  M.dim = (int64_t)B.mons.size();
  auto unit = [&](int64_t u, int64_t v) {  // e_uv, 1-based indices
    SparseIntMat g{M.dim, {}};
    for (int64_t i = 0; i < M.dim; ++i) {
      auto a = B.mons[i];
      if (a[v - 1] == 0) continue;
      auto b = a;
      --b[v - 1];
      ++b[u - 1];
      g.add(B.index.at(b), i, a[v - 1]);
    }
    return g;
  };
  SparseIntMat h12{M.dim, {}}, h23{M.dim, {}};
  std::vector<int64_t> w12(M.dim), w23(M.dim);
  for (int64_t i = 0; i < M.dim; ++i) {
    auto a = B.mons[i];
    w12[i] = a[0] - a[1];
    w23[i] = a[1] - a[2];
    h12.add(i, i, w12[i]);
    h23.add(i, i, w23[i]);
  }
  M.generators = {{"e12", unit(1, 2)}, {"e13", unit(1, 3)}, {"e23", unit(2, 3)},
                  {"e21", unit(2, 1)}, {"e31", unit(3, 1)}, {"e32", unit(3, 2)},
                  {"h12", h12},        {"h23", h23}};
  M.weight_ops = {{"h12", std::move(w12)}, {"h23", std::move(w23)}};
  M.cyclic.assign(M.dim, 0);
  M.cyclic[B.index.at({0, 0, m})] = 1;  // x3^m
  return M;
}

RepModule build_sl3_sym_dual(int64_t m) {
  if (m < 0) throw ParamError("build_sl3_sym_dual: need m >= 0");
  Sl3Basis B(m);
  RepModule M;
  M.name = "sym3dual_" + std::to_string(m);
  M.dim = (int64_t)B.mons.size();
  auto unit = [&](int64_t u, int64_t v) {
    SparseIntMat g{M.dim, {}};
    for (int64_t i = 0; i < M.dim; ++i) {
      auto a = B.mons[i];
      if (a[u - 1] == 0) continue;
      auto b = a;
      --b[u - 1];
      ++b[v - 1];
      g.add(B.index.at(b), i, -a[u - 1]);
    }
    return g;
  };
  SparseIntMat h12{M.dim, {}}, h23{M.dim, {}};
  std::vector<int64_t> w12(M.dim), w23(M.dim);
  for (int64_t i = 0; i < M.dim; ++i) {
    auto a = B.mons[i];
    w12[i] = -(a[0] - a[1]);
    w23[i] = -(a[1] - a[2]);
    h12.add(i, i, w12[i]);
    h23.add(i, i, w23[i]);
  }
  M.generators = {{"e12", unit(1, 2)}, {"e13", unit(1, 3)}, {"e23", unit(2, 3)},
                  {"e21", unit(2, 1)}, {"e31", unit(3, 1)}, {"e32", unit(3, 2)},
                  {"h12", h12},        {"h23", h23}};
  M.weight_ops = {{"h12", std::move(w12)}, {"h23", std::move(w23)}};
  M.cyclic.assign(M.dim, 0);
  M.cyclic[B.index.at({m, 0, 0})] = 1;  // y1^m
  return M;
}

}  // namespace fchar
