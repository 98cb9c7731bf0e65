#include "pvs/liealg.hpp"

namespace pvs {

namespace {

const GaussianRational kI = GaussianRational::i();

QMatrix diag3(int a, int b, int c) { return QMatrix::diagonal({a, b, c}); }

}  // namespace

std::vector<GaussianRational> to_gaussian(const std::vector<Rational>& v) {
  return {v.begin(), v.end()};
}

RealFormTransport real_form(int i) {
  if (i != 1 && i != 2) throw Error("real form index must be 1 or 2");
  RealFormTransport rf;
  rf.i = i;
  rf.d = i == 1 ? diag3(1, -1, -1) : diag3(1, 1, 1);
  rf.h_form = i == 1 ? diag3(1, 1, -1) : diag3(1, 1, 1);
  rf.q = QMatrix(kDim, kDim);
  rf.h = CMatrix(kDim, kDim);
  for (int r = 0; r < 3; ++r) {
    const Rational dr = rf.d(r, r);
    rf.q(r, r + 3) = dr;
    rf.q(r + 3, r) = dr;
    rf.h(r, r) = 1;
    rf.h(r, r + 3) = dr;
    rf.h(r + 3, r) = kI;
    rf.h(r + 3, r + 3) = -kI * dr;
  }
  for (int r = 6; r < 8; ++r) {
    rf.q(r, r) = -1;
    rf.h(r, r) = kI;
  }

  const CMatrix q = CMatrix::from(rf.q);
  if (!(rf.q * rf.q == QMatrix::identity(kDim))) throw Error("q_D does not square to the identity");
  if (!(rf.h.inverse() * rf.h.conj() == q)) throw Error("q_D differs from h_D^-1 conj(h_D)");
  if (!(rf.h.det() == GaussianRational(Rational(0), Rational(-8)))) throw Error("unexpected det h_D");
  const auto wi = act(GroupElement<GaussianRational>(GaussianRational(1), rf.h), Trivector<GaussianRational>::from(builtin_w()));
  for (const auto& [t, c] : wi.terms()) {
    if (!c.is_real()) throw Error("h_D w is not rational");
    rf.w_i.add(t[0], t[1], t[2], c.re());
  }
  return rf;
}

CMatrix p_h(const QMatrix& h_form, const CMatrix& x) {
  const CMatrix h = CMatrix::from(h_form);
  return GaussianRational(-1) * (h * x.conj().transpose() * h.inverse());
}

bool su_check(const QMatrix& h_form, const CMatrix& x) { return p_h(h_form, x) == x; }

bool su_check_hermitian(const QMatrix& h_form, const CMatrix& x) {
  const CMatrix h = CMatrix::from(h_form);
  return (h * x.conj().transpose() + x * h).is_zero();
}

CMatrix to_su(int i, const std::vector<Rational>& v) {
  static const CMatrix hinv1 = real_form(1).h.inverse();
  static const CMatrix hinv2 = real_form(2).h.inverse();
  if (i != 1 && i != 2) throw Error("real form index must be 1 or 2");
  return coords_to_matrix((i == 1 ? hinv1 : hinv2) * to_gaussian(v));
}

std::pair<int, int> signature(const QMatrix& gram) {
  if (!gram.square()) throw DimensionMismatch("signature needs a square matrix");
  if (!(gram == gram.transpose())) throw Error("signature needs a symmetric matrix");
  QMatrix a = gram;
  const int n = a.rows();
  std::vector<bool> active(n, true);
  int pos = 0, neg = 0, remaining = n;
  auto eliminate = [&](const std::vector<int>& piv) {
    // Schur complement against the pivot block (1x1 or 2x2).
    if (piv.size() == 1) {
      const int p = piv[0];
      const Rational inv = Rational(1) / a(p, p);
      for (int r = 0; r < n; ++r) {
        if (!active[r] || r == p || a(r, p).is_zero()) continue;
        const Rational f = a(r, p) * inv;
        for (int c = 0; c < n; ++c)
          if (active[c] && c != p) a(r, c) -= f * a(p, c);
      }
    } else {
      const int p = piv[0], s = piv[1];
      // Block [[a_pp, a_ps], [a_sp, a_ss]] with nonzero determinant.
      const Rational det = a(p, p) * a(s, s) - a(p, s) * a(s, p);
      const Rational i00 = a(s, s) / det, i01 = -a(p, s) / det, i11 = a(p, p) / det;
      std::vector<std::pair<Rational, Rational>> coef(n);
      for (int r = 0; r < n; ++r) {
        if (!active[r] || r == p || r == s) continue;
        coef[r] = {a(r, p) * i00 + a(r, s) * i01, a(r, p) * i01 + a(r, s) * i11};
      }
      for (int r = 0; r < n; ++r) {
        if (!active[r] || r == p || r == s) continue;
        for (int c = 0; c < n; ++c)
          if (active[c] && c != p && c != s) a(r, c) -= coef[r].first * a(p, c) + coef[r].second * a(s, c);
      }
    }
    for (int p : piv) active[p] = false;
    remaining -= static_cast<int>(piv.size());
  };
  while (remaining > 0) {
    int diag = -1;
    for (int r = 0; r < n && diag < 0; ++r)
      if (active[r] && !a(r, r).is_zero()) diag = r;
    if (diag >= 0) {
      (a(diag, diag).sign() > 0 ? pos : neg) += 1;
      eliminate({diag});
      continue;
    }
    int pr = -1, pc = -1;
    for (int r = 0; r < n && pr < 0; ++r)
      for (int c = r + 1; c < n; ++c)
        if (active[r] && active[c] && !a(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;  // the remaining block is zero
    // Zero diagonal, nonzero off-diagonal: one positive and one negative direction.
    ++pos;
    ++neg;
    eliminate({pr, pc});
  }
  return {pos, neg};
}

std::optional<GroupElement<GaussianRational>> builtin_transport(const std::string& name) {
  if (name == "w") return GroupElement<GaussianRational>::identity();
  if (name == "w1" || name == "w2") return GroupElement<GaussianRational>(GaussianRational(1), real_form(name == "w1" ? 1 : 2).h);
  return std::nullopt;
}

json to_json(const RealFormTransport& rf) {
  return json{{"i", rf.i},
              {"D", to_json(rf.d)},
              {"H", to_json(rf.h_form)},
              {"q", to_json(rf.q)},
              {"h", to_json(rf.h)},
              {"det_h", to_json(rf.h.det())},
              {"w_i", to_json(rf.w_i)}};
}

}  // namespace pvs
