#include "idalg/algebra/classifier.hpp"

#include <array>

#include "idalg/algebra/catalog.hpp"
#include "idalg/algebra/closure.hpp"
#include "idalg/error.hpp"

namespace idalg {

namespace {

constexpr std::array<const char*, 6> kFamilyNames{"SL_N2", "LIST_I", "LIST_II", "LIST_III", "SO_CONJ", "G_PLUS_W"};

bool is_list(Family f) { return f == Family::LIST_I || f == Family::LIST_II || f == Family::LIST_III; }

// (p, q, V8) membership for each list index.
struct Extras {
  bool p, q, v8;
};
constexpr std::array<Extras, 6> kExtras{{{false, false, false},
                                          {true, false, false},
                                          {false, true, false},
                                          {false, false, true},
                                          {true, false, true},
                                          {false, true, true}}};

std::optional<int> index_of(Extras e) {
  for (int k = 0; k < 6; ++k) {
    if (kExtras[k].p == e.p && kExtras[k].q == e.q && kExtras[k].v8 == e.v8) return k + 1;
  }
  return std::nullopt;
}

bool contains_v8(const ClassLabel& l) { return is_list(l.family) && kExtras[l.index - 1].v8; }

std::pair<GaussScalar, GaussScalar> normalize_pair(const GaussScalar& a, const GaussScalar& b) {
  if (!a.is_zero()) return {GaussScalar(1), b / a};
  return {GaussScalar(0), GaussScalar(1)};
}

Subspace with_extras(Subspace base, Extras e, const Catalog& cat) {
  if (e.p) base = sum(base, cat.module("p").space);
  if (e.q) base = sum(base, cat.module("q").space);
  if (e.v8) base = sum(base, cat.module("V8").space);
  return base;
}

Subspace so_conj_from_square(const GaussScalar& r2, const Catalog& cat) {
  std::vector<OperatorN> ops;
  for (const auto& a : traceless_basis(cat.n())) ops.push_back(r2 * trace_times(a) - trace_against(a));
  return sum(cat.ambient("so2m1"), span_of(as_vectors(ops), cat.ambient_dim()));
}

Subspace add_ft(const Subspace& base, const std::pair<GaussScalar, GaussScalar>& ft, std::size_t n) {
  std::vector<Vector> v{t_matrix(ft.first, ft.second, n).vec()};
  return sum(base, span_of(v, base.ambient_dim()));
}

}  // namespace

std::string ClassLabel::kind() const {
  std::string s = kFamilyNames[static_cast<int>(family)];
  if (is_list(family)) s += "_" + std::to_string(index);
  return s;
}

ClassLabel label_from_kind(const std::string& kind) {
  for (int f = 0; f < 6; ++f) {
    const std::string name = kFamilyNames[f];
    ClassLabel l;
    l.family = static_cast<Family>(f);
    if (!is_list(l.family)) {
      if (kind == name) return l;
      continue;
    }
    if (kind.size() == name.size() + 2 && kind.compare(0, name.size() + 1, name + "_") == 0) {
      const char c = kind.back();
      if (c >= '1' && c <= '6') {
        l.index = c - '0';
        return l;
      }
    }
  }
  throw Error(Errc::Parse, "unknown label kind '" + kind + "'");
}

ClassLabel canonicalize(const ClassLabel& label, std::size_t n) {
  ClassLabel out = label;
  if (out.family == Family::SO_CONJ) {
    if (out.t_ratio) out.t_ratio_sq = *out.t_ratio * *out.t_ratio;
    if (out.t_ratio_sq) out.t_ratio = out.t_ratio_sq->sqrt();
  }
  if (out.ft) {
    out.ft = normalize_pair(out.ft->first, out.ft->second);
    if (contains_v8(out)) out.ft = std::pair{GaussScalar(1), GaussScalar(1)};
  }
  (void)n;
  return out;
}

Subspace construct(const ClassLabel& label, std::size_t n) {
  const Catalog& cat = Catalog::get(n);
  if (is_list(label.family) && (label.index < 1 || label.index > 6)) {
    throw Error(Errc::InvalidParameters, "list index must be 1..6");
  }
  if (label.ft) {
    const auto& [a, b] = *label.ft;
    if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidParameters, "ft direction is zero");
    if ((a * GaussScalar(static_cast<std::int64_t>(n * n - 1)) + b).is_zero()) {
      throw Error(Errc::InvalidParameters, "ft direction lies in sl(n^2)");
    }
    if ((label.family == Family::SO_CONJ || label.family == Family::G_PLUS_W) && a != b) {
      throw Error(Errc::InvalidParameters, "only t = 1 extends t so(n^2) t^-1 or g + W(lambda)");
    }
  }
  Subspace base;
  switch (label.family) {
    case Family::SL_N2:
      base = cat.ambient("sl2");
      break;
    case Family::LIST_I:
      base = with_extras(cat.ambient("sl2m1"), kExtras[label.index - 1], cat);
      break;
    case Family::LIST_II:
      base = with_extras(cat.ambient("so2m1"), kExtras[label.index - 1], cat);
      break;
    case Family::LIST_III:
      base = with_extras(cat.g(), kExtras[label.index - 1], cat);
      break;
    case Family::SO_CONJ:
      if (label.t_ratio) {
        if (label.t_ratio->is_zero()) throw Error(Errc::InvalidParameters, "t_ratio must be nonzero");
        base = conjugate(cat.ambient("so2"), t_matrix(*label.t_ratio, GaussScalar(1), n));
      } else if (label.t_ratio_sq) {
        if (label.t_ratio_sq->is_zero()) throw Error(Errc::InvalidParameters, "t_ratio must be nonzero");
        base = so_conj_from_square(*label.t_ratio_sq, cat);
      } else {
        throw Error(Errc::InvalidParameters, "SO_CONJ needs t_ratio");
      }
      break;
    case Family::G_PLUS_W:
      if (!label.lambda) throw Error(Errc::InvalidParameters, "G_PLUS_W needs lambda");
      try {
        base = sum(cat.g(), cat.w_lambda(*label.lambda));
      } catch (const Error& e) {
        throw Error(Errc::InvalidParameters, e.what());
      }
      break;
  }
  return label.ft ? add_ft(base, *label.ft, n) : base;
}

namespace {

ClassLabel classify_sl_part(const Subspace& l, const Catalog& cat) {
  ClassLabel out;
  if (l == cat.ambient("sl2")) return out;
  const Extras e{contains(l, cat.module("p").space), contains(l, cat.module("q").space),
                 contains(l, cat.module("V8").space)};
  const bool has_sl1 = contains(l, cat.ambient("sl2m1"));
  const bool has_so1 = has_sl1 || contains(l, cat.ambient("so2m1"));
  out.family = has_sl1 ? Family::LIST_I : (has_so1 ? Family::LIST_II : Family::LIST_III);
  if (auto idx = index_of(e)) {
    const Subspace& core = has_sl1 ? cat.ambient("sl2m1") : (has_so1 ? cat.ambient("so2m1") : cat.g());
    if (with_extras(core, e, cat) == l) {
      out.index = *idx;
      return out;
    }
  }
  const std::size_t n = cat.n();
  const auto basis = traceless_basis(n);
  if (out.family == Family::LIST_II) {
    // A simple module in p + q other than p, q: spanned by r^2 P_a - Q_a.
    const Subspace w = intersect(l, sum(cat.module("p").space, cat.module("q").space));
    if (w.dim() == 0) throw Error(Errc::Unclassifiable, "no p+q component beside so(n^2-1)");
    std::vector<Vector> frame;
    for (const auto& a : basis) frame.push_back(trace_times(a).vec());
    for (const auto& a : basis) frame.push_back(trace_against(a).vec());
    auto c = coordinates(frame, w.basis()[0]);
    if (!c) throw Error(Errc::Unclassifiable, "p+q component has no coordinates");
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const GaussScalar& pc = (*c)[k];
      const GaussScalar& qc = (*c)[basis.size() + k];
      if (!qc.is_zero() && !pc.is_zero()) {
        out.family = Family::SO_CONJ;
        out.t_ratio_sq = -pc / qc;
        out.t_ratio = out.t_ratio_sq->sqrt();
        return out;
      }
    }
    throw Error(Errc::Unclassifiable, "p+q component is not of conjugated type");
  }
  if (out.family == Family::LIST_III) {
    const Subspace w =
        intersect(l, sum(sum(cat.module("V4").space, cat.module("p").space), cat.module("q").space));
    if (w.dim() == 0) throw Error(Errc::Unclassifiable, "no V4+p+q component beside g");
    std::vector<Vector> frame;
    for (const auto& a : basis) frame.push_back(v_map(a).vec());
    for (const auto& a : basis) frame.push_back(trace_times(a).vec());
    for (const auto& a : basis) frame.push_back(trace_against(a).vec());
    auto c = coordinates(frame, w.basis()[0]);
    if (!c) throw Error(Errc::Unclassifiable, "V4+p+q component has no coordinates");
    const std::size_t m = basis.size();
    for (std::size_t k = 0; k < m; ++k) {
      const GaussScalar& vc = (*c)[k];
      if (vc.is_zero()) continue;
      const GaussScalar lam = (*c)[m + k] / vc;
      const GaussScalar mu = (*c)[2 * m + k] / vc;
      GaussScalar expected;
      try {
        expected = mu_of(lam, n);
      } catch (const Error&) {
        throw Error(Errc::Unclassifiable, "recovered lambda is -2/n");
      }
      if (expected != mu) throw Error(Errc::Unclassifiable, "q-coefficient inconsistent with lambda");
      out.family = Family::G_PLUS_W;
      out.lambda = lam;
      return out;
    }
    throw Error(Errc::Unclassifiable, "component has no V4 part");
  }
  throw Error(Errc::Unclassifiable, "algebra between sl(n^2-1) and sl(n^2) not on the list");
}

}  // namespace

ClassLabel classify(const Subspace& s, std::size_t n) {
  if (n < 5) throw Error(Errc::UnsupportedN, "classification requires n >= 5");
  const Catalog& cat = Catalog::get(n);
  if (s.ambient_dim() != cat.ambient_dim()) throw Error(Errc::DimensionMismatch, "not a subspace of gl(n^2)");
  if (!contains(s, cat.g())) throw Error(Errc::NotContainingG, "algebra does not contain g");
  if (!is_lie_closed(s, n)) throw Error(Errc::NotLieClosed, "subspace is not a Lie algebra");

  const Subspace l = intersect(s, cat.ambient("sl2"));
  ClassLabel out = classify_sl_part(l, cat);
  if (s.dim() == l.dim() + 1) {
    std::vector<OperatorN> t0{OperatorN::identity(n), trace_one(n)};
    const Subspace ft = intersect(s, span_of(as_vectors(t0), cat.ambient_dim()));
    if (ft.dim() == 2 || out.family == Family::SL_N2) {
      out.ft = std::pair{GaussScalar(1), GaussScalar(1)};
    } else if (ft.dim() == 1) {
      // x id + y tr(.)1 = t_matrix(x, x + n y).
      auto c = coordinates(as_vectors(t0), ft.basis()[0]);
      if (!c) throw Error(Errc::Unclassifiable, "ft direction has no coordinates");
      const GaussScalar alpha = (*c)[0];
      const GaussScalar beta = alpha + GaussScalar(static_cast<std::int64_t>(n)) * (*c)[1];
      out.ft = normalize_pair(alpha, beta);
    } else {
      throw Error(Errc::Unclassifiable, "extra direction outside T_0");
    }
  } else if (s.dim() != l.dim()) {
    throw Error(Errc::Unclassifiable, "sl(n^2) part has codimension above one");
  }
  out = canonicalize(out, n);
  Subspace rebuilt;
  try {
    rebuilt = construct(out, n);
  } catch (const Error& e) {
    throw Error(Errc::Unclassifiable, std::string("reconstruction rejected: ") + e.what());
  }
  if (rebuilt != s) throw Error(Errc::Unclassifiable, "reconstruction differs from input (" + out.kind() + ")");
  return out;
}

std::vector<ClassLabel> sweep_labels() {
  const std::vector<std::pair<GaussScalar, GaussScalar>> fts{
      {GaussScalar(1), GaussScalar(0)}, {GaussScalar(0), GaussScalar(1)},
      {GaussScalar(1), GaussScalar(1)}, {GaussScalar(2), GaussScalar(3)}};
  std::vector<ClassLabel> out;
  ClassLabel sl;
  out.push_back(sl);
  sl.ft = std::pair{GaussScalar(1), GaussScalar(1)};
  out.push_back(sl);
  for (Family f : {Family::LIST_I, Family::LIST_II, Family::LIST_III}) {
    for (int k = 1; k <= 6; ++k) {
      ClassLabel l;
      l.family = f;
      l.index = k;
      out.push_back(l);
      for (const auto& ft : fts) {
        l.ft = ft;
        out.push_back(l);
      }
    }
  }
  const GaussScalar one(1);
  for (const GaussScalar& r : {GaussScalar(1), GaussScalar(2), GaussScalar(-3), GaussScalar::i()}) {
    ClassLabel l;
    l.family = Family::SO_CONJ;
    l.t_ratio = r;
    out.push_back(l);
    l.ft = std::pair{one, one};
    out.push_back(l);
  }
  for (std::int64_t lam : {0, 1, -1, 3}) {
    ClassLabel l;
    l.family = Family::G_PLUS_W;
    l.lambda = GaussScalar(lam);
    out.push_back(l);
    l.ft = std::pair{one, one};
    out.push_back(l);
  }
  return out;
}

}  // namespace idalg
