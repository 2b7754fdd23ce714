#include "fchar/fusion.hpp"

#include <algorithm>
#include <random>

#include "fchar/linalg.hpp"
#include "fchar/qcomb.hpp"

namespace fchar {

int64_t GradedDims::total() const {
  int64_t s = 0;
  for (const auto& [k, v] : dims) s += v;
  return s;
}

LaurentPoly GradedDims::to_poly(const std::vector<WeightAxis>& axes) const {
  VarSpec vars{kVarQ};
  for (const WeightAxis& a : axes) vars.push_back({a.var, a.step});
  LaurentPoly p(vars);
  LaurentPoly::ExpVec e(vars.size());
  for (const auto& [key, dim] : dims) {
    e[0] = key.first;
    for (size_t i = 0; i < key.second.size(); ++i) e[i + 1] = key.second[i];
    p.add_term(e, BigInt((long)dim));
  }
  return p;
}

nlohmann::ordered_json GradedDims::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, dim] : dims) {
    nlohmann::ordered_json entry;
    entry["q"] = key.first;
    entry["w"] = key.second;
    entry["dim"] = dim;
    arr.push_back(std::move(entry));
  }
  return arr;
}

namespace {

// Everything below is templated on the coefficient ring; FpRing for the
// fast modular runs, RatRing for the exact cross-check.
template <class R>
class Engine {
 public:
  using Elt = typename R::Elt;

  Engine(const FusionProblem& fp, const FusionRun& run) : fp_(fp), ring_(make_ring(run)) {
    nfac_ = (int64_t)fp.factors.size();
    total_ = 1;
    strides_.resize(nfac_);
    for (int64_t a = nfac_; a-- > 0;) {
      strides_[a] = total_;
      total_ *= fp.factors[a].dim;
      if (total_ > (int64_t)1 << 24) throw ParamError("fusion: tensor dimension too large");
    }
    for (const RepModule& f : fp.factors) {
      for (const std::string& g : fp.acting)
        if (!f.generators.count(g))
          throw ParamError("fusion: factor " + f.name + " lacks generator " + g);
      for (const WeightAxis& ax : fp.axes)
        for (const auto& [w, c] : ax.combo)
          if (!f.weight_ops.count(w))
            throw ParamError("fusion: factor " + f.name + " lacks weight op " + w);
    }
    draw_zetas(run);
    build_classes();
  }

  const std::vector<uint64_t>& zeta_residues() const { return zeta_residues_; }
  int64_t total_dim() const { return total_; }

  // ---- main entry points ------------------------------------------------

  GradedDims fusion_dims() {
    filtrate();
    GradedDims out;
    for (int64_t d = 0; d <= dsat_; ++d) {
      for (size_t cl = 0; cl < class_weights_.size(); ++cl) {
        const int64_t prev = d ? level_class_dims_[d - 1][cl] : 0;
        const int64_t cur = level_class_dims_[d][cl];
        if (cur > prev) out.dims[{d, class_weights_[cl]}] += cur - prev;
      }
    }
    if (out.total() != total_) throw Error("fusion: graded dims do not sum to total dimension");
    return out;
  }

  GradedDims quotient_dims(const std::vector<IdealOp>& ops, QuotientMode mode) {
    filtrate();
    std::vector<std::pair<typename DenseOps<R>::Mat, int64_t>> mats;  // (matrix, total tdeg)
    for (const IdealOp& op : ops) mats.emplace_back(realize(op), op.power * op.tdeg);
    GradedDims out;
    if (mode == QuotientMode::graded) {
      for (int64_t d = 0; d <= dsat_; ++d) {
        WeightedSpan<R> T = make_span();
        if (d > 0) insert_accepted_prefix(T, level_end_[d - 1]);
        std::vector<Elt> img;
        for (const auto& [mat, tdeg] : mats) {
          const int64_t s = d - tdeg;
          if (s < 0) continue;
          const int64_t upto = level_end_[std::min(s, dsat_)];
          for (int64_t r = 0; r < upto; ++r) {
            DenseOps<R>::apply(ring_, mat, accepted_[r], img);
            T.insert(img);
          }
        }
        if (!T.check()) throw Error("fusion: quotient span not weight-invariant");
        for (size_t cl = 0; cl < class_weights_.size(); ++cl) {
          const int64_t q = level_class_dims_[d][cl] - T.class_dim(cl);
          if (q < 0) throw Error("fusion: quotient dimension negative");
          if (q > 0) out.dims[{d, class_weights_[cl]}] += q;
        }
      }
    } else {
      WeightedSpan<R> Q = make_span();
      std::vector<Elt> img;
      for (const auto& [mat, tdeg] : mats) {
        (void)tdeg;
        for (const auto& row : accepted_) {
          DenseOps<R>::apply(ring_, mat, row, img);
          Q.insert(img);
        }
      }
      if (!Q.check()) throw Error("fusion: ideal span not weight-invariant");
      std::vector<int64_t> prev(class_weights_.size());
      for (size_t cl = 0; cl < class_weights_.size(); ++cl) prev[cl] = Q.class_dim(cl);
      int64_t row = 0;
      for (int64_t d = 0; d <= dsat_; ++d) {
        for (; row < level_end_[d]; ++row) Q.insert(accepted_[row]);
        if (!Q.check()) throw Error("fusion: quotient span not weight-invariant");
        for (size_t cl = 0; cl < class_weights_.size(); ++cl) {
          const int64_t q = Q.class_dim(cl) - prev[cl];
          prev[cl] = Q.class_dim(cl);
          if (q > 0) out.dims[{d, class_weights_[cl]}] += q;
        }
      }
    }
    return out;
  }

 private:
  static R make_ring(const FusionRun& run) {
    if constexpr (std::is_same_v<R, FpRing>) {
      return FpRing(run.prime);
    } else {
      (void)run;
      return RatRing{};
    }
  }

  void draw_zetas(const FusionRun& run) {
    zetas_.clear();
    zeta_residues_.clear();
    if constexpr (std::is_same_v<R, FpRing>) {
      if (ring_.p - 1 < (uint64_t)nfac_)
        throw ParamError("fusion: prime too small for distinct nonzero evaluation points");
      std::mt19937_64 rng(run.seed);
      while ((int64_t)zetas_.size() < nfac_) {
        uint64_t z = rng() % (ring_.p - 1) + 1;
        if (std::find(zeta_residues_.begin(), zeta_residues_.end(), z) != zeta_residues_.end())
          continue;
        zeta_residues_.push_back(z);
        zetas_.push_back(z);
      }
    } else {
      for (int64_t a = 0; a < nfac_; ++a) {
        zetas_.push_back(ring_.from_int(a + 1));
        zeta_residues_.push_back((uint64_t)(a + 1));
      }
    }
  }

  void build_classes() {
    const size_t nax = fp_.axes.size();
    class_of_col_.assign(total_, 0);
    std::map<std::vector<int64_t>, int> ids;
    std::vector<int64_t> w(nax);
    std::vector<int64_t> idx(std::max<int64_t>(nfac_, 1));
    for (int64_t coord = 0; coord < total_; ++coord) {
      int64_t rest = coord;
      for (int64_t a = 0; a < nfac_; ++a) {
        idx[a] = rest / strides_[a];
        rest %= strides_[a];
      }
      for (size_t x = 0; x < nax; ++x) {
        int64_t s = 0;
        for (const auto& [name, coef] : fp_.axes[x].combo)
          for (int64_t a = 0; a < nfac_; ++a)
            s += coef * fp_.factors[a].weight_ops.at(name)[idx[a]];
        w[x] = s;
      }
      auto [it, inserted] = ids.emplace(w, (int)class_weights_.size());
      if (inserted) class_weights_.push_back(w);
      class_of_col_[coord] = it->second;
    }
  }

  // action of gen@t^i on the tensor space: sum_a zeta_a^i gen^(a)
  FieldMat<R> lift(const std::string& gen, int64_t i) const {
    FieldMat<R> M;
    M.n = total_;
    for (int64_t a = 0; a < nfac_; ++a) {
      Elt scale = ring_.one();
      for (int64_t t = 0; t < i; ++t) scale = ring_.mul(scale, zetas_[a]);
      const SparseIntMat& g = fp_.factors[a].generators.at(gen);
      const int64_t inner = strides_[a];
      const int64_t outer = total_ / (inner * fp_.factors[a].dim);
      for (const auto& [r, c, v] : g.entries) {
        const Elt fv = ring_.mul(scale, ring_.from_int(v));
        if (ring_.is_zero(fv)) continue;
        for (int64_t o = 0; o < outer; ++o)
          for (int64_t in = 0; in < inner; ++in) {
            const int64_t base = o * fp_.factors[a].dim * inner + in;
            M.entries.emplace_back((int32_t)(base + r * inner), (int32_t)(base + c * inner), fv);
          }
      }
    }
    return M;
  }

  typename DenseOps<R>::Mat realize(const IdealOp& op) const {
    auto d = lift(op.gen, op.tdeg).to_dense(ring_);
    if (op.shift != 0) DenseOps<R>::add_scalar_diag(ring_, d, ring_.from_int(op.shift));
    auto r = DenseOps<R>::identity(ring_, total_);
    for (int64_t i = 0; i < op.power; ++i) r = DenseOps<R>::mul(ring_, r, d);
    return r;
  }

  WeightedSpan<R> make_span() const {
    return WeightedSpan<R>(&ring_, total_, &class_of_col_, (int64_t)class_weights_.size());
  }

  void insert_accepted_prefix(WeightedSpan<R>& S, int64_t upto) {
    for (int64_t r = 0; r < upto; ++r) S.insert(accepted_[r]);
  }

  void record_level() {
    // each filtration level is a weight-invariant subspace, so its class
    // projections must tile it exactly
    if (!span_.check()) throw Error("fusion: filtration level not weight-invariant");
    std::vector<int64_t> cls(class_weights_.size());
    for (size_t cl = 0; cl < cls.size(); ++cl) cls[cl] = span_.class_dim((int64_t)cl);
    level_class_dims_.push_back(std::move(cls));
    level_end_.push_back((int64_t)accepted_.size());
  }

  void try_insert(std::vector<Elt> v) {
    if (span_.insert(v)) accepted_.push_back(std::move(v));
  }

  // close the span under the degree-0 generators
  void close0(std::vector<int64_t>& cur0) {
    std::vector<Elt> img;
    bool moved = true;
    while (moved) {
      moved = false;
      for (size_t g = 0; g < fp_.acting.size(); ++g) {
        while (cur0[g] < (int64_t)accepted_.size()) {
          acting0_[g].apply(ring_, accepted_[cur0[g]], img);
          ++cur0[g];
          try_insert(img);
          moved = true;
        }
      }
    }
  }

  void filtrate() {
    if (filtrated_) return;
    filtrated_ = true;
    span_ = make_span();
    accepted_.clear();

    // tensor of the factor cyclic vectors
    std::vector<Elt> cyc(total_, ring_.zero());
    for (int64_t coord = 0; coord < total_; ++coord) {
      int64_t rest = coord;
      int64_t prod = 1;
      for (int64_t a = 0; a < nfac_ && prod != 0; ++a) {
        prod *= fp_.factors[a].cyclic[rest / strides_[a]];
        rest %= strides_[a];
      }
      if (prod != 0) cyc[coord] = ring_.from_int(prod);
    }
    try_insert(std::move(cyc));
    if (accepted_.empty()) throw Error("fusion: cyclic vector is zero");

    acting0_.clear();
    for (const std::string& g : fp_.acting) acting0_.push_back(lift(g, 0));
    std::vector<FieldMat<R>> acting_pos;  // [g + (i-1)*ngen] for i = 1..N-1
    const int64_t ngen = (int64_t)fp_.acting.size();
    for (int64_t i = 1; i < nfac_; ++i)
      for (const std::string& g : fp_.acting) acting_pos.push_back(lift(g, i));

    std::vector<int64_t> cur0(ngen, 0);
    close0(cur0);
    record_level();  // level 0

    // cursor per (i,g) into accepted_: rows already hit by gen@t^i
    std::vector<int64_t> cur(acting_pos.size(), 0);
    std::vector<Elt> img;
    int64_t stall = 0;
    const int64_t window = std::max<int64_t>(nfac_ - 1, 1);
    for (int64_t d = 1; span_.dim() < total_; ++d) {
      const int64_t before = span_.dim();
      for (int64_t i = 1; i < nfac_ && i <= d; ++i) {
        const int64_t upto = level_end_[d - i];
        for (int64_t g = 0; g < ngen; ++g) {
          int64_t& c = cur[(i - 1) * ngen + g];
          // rows past `upto` are handled at a later degree
          for (; c < upto; ++c) {
            acting_pos[(i - 1) * ngen + g].apply(ring_, accepted_[c], img);
            try_insert(img);
          }
        }
        close0(cur0);
      }
      record_level();
      stall = (span_.dim() == before) ? stall + 1 : 0;
      if (stall >= window && span_.dim() < total_) {
        // with random evaluation points a stall means we drew badly;
        // with fixed ones it is a genuine cyclicity failure
        if (std::is_same_v<R, FpRing> && nfac_ >= 2)
          throw DegeneracyError("fusion: span stalled below full dimension");
        throw Error("fusion: cyclic span does not reach the full tensor space");
      }
    }
    dsat_ = (int64_t)level_end_.size() - 1;
  }

  const FusionProblem& fp_;
  R ring_;
  int64_t nfac_ = 0;
  int64_t total_ = 0;
  std::vector<int64_t> strides_;
  std::vector<Elt> zetas_;
  std::vector<uint64_t> zeta_residues_;

  std::vector<int> class_of_col_;
  std::vector<std::vector<int64_t>> class_weights_;

  bool filtrated_ = false;
  WeightedSpan<R> span_;
  std::vector<FieldMat<R>> acting0_;
  std::vector<std::vector<Elt>> accepted_;
  std::vector<int64_t> level_end_;
  std::vector<std::vector<int64_t>> level_class_dims_;
  int64_t dsat_ = 0;
};

template <class R>
FusionResult run_engine(const FusionProblem& fp, const std::vector<IdealOp>* ops,
                        QuotientMode mode, const FusionRun& run) {
  Engine<R> eng(fp, run);
  FusionResult res;
  res.dims = ops ? eng.quotient_dims(*ops, mode) : eng.fusion_dims();
  res.zetas = eng.zeta_residues();
  res.total_dim = eng.total_dim();
  return res;
}

}  // namespace

FusionResult fusion_graded_character(const FusionProblem& fp, const FusionRun& run) {
  return run.rational ? run_engine<RatRing>(fp, nullptr, QuotientMode::graded, run)
                      : run_engine<FpRing>(fp, nullptr, QuotientMode::graded, run);
}

FusionResult graded_quotient_character(const FusionProblem& fp, const std::vector<IdealOp>& ops,
                                       QuotientMode mode, const FusionRun& run) {
  return run.rational ? run_engine<RatRing>(fp, &ops, mode, run)
                      : run_engine<FpRing>(fp, &ops, mode, run);
}

}  // namespace fchar
