#include "cx2/lemmas.hpp"

#include "cx2/linsys.hpp"
#include "fp.hpp"

#include <array>

namespace cx2 {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

template <class T>
T need(std::optional<T> x, const std::string& what) {
    if (!x) throw ValidationError("no solution: " + what);
    return std::move(*x);
}

// One equation left * N * right = rhs on the component N of a cell.
struct CellEq {
    std::optional<BaseMorphism> left, right;
    BaseMorphism rhs;
};

std::optional<TwoCell> solveCell(const TwoMorphism& from, const TwoMorphism& to, const std::vector<CellEq>& eqs) {
    LinSys s(from.src.ring());
    const int n = s.unknown(from.src.bottom(), from.tgt.top());
    s.equation({{.var = n, .left = std::nullopt, .right = from.src.d}}, from.u1 - to.u1);
    s.equation({{.var = n, .left = from.tgt.d, .right = std::nullopt}}, from.u0 - to.u0);
    for (const CellEq& e : eqs) s.equation({{.var = n, .left = e.left, .right = e.right}}, e.rhs);
    const auto r = s.solve();
    if (!r) return std::nullopt;
    return TwoCell(from, to, (*r)[size_t(n)]);
}

TwoCell nullCell(const TwoCell& c) { return TwoCell(c.from, zero2(c.from.src, c.from.tgt), c.a); }

// mu_x = zeta k . q kappa^-1.
TwoCell muOf(const KernelData& K, const CokernelData& Q) { return adjacentLoop(K.k, K.kappa, Q.q, Q.zeta); }

bool allTrue(const std::vector<bool>& v) {
    for (bool b : v)
        if (!b) return false;
    return true;
}

// chi: x => k x' for a fixed x', with kappa x' . u chi = theta.
TwoCell liftCell(const KernelData& K, const TwoMorphism& x, const TwoMorphism& xp, const TwoCell& theta) {
    return need(solveCell(x, K.k * xp, {{K.u.u1, std::nullopt, theta.a - K.kappa.a * xp.u0}}), "square into a kernel");
}

// chi: y => y' q for a fixed y', with y' zeta . chi u = theta.
TwoCell descendCell(const CokernelData& Q, const TwoMorphism& y, const TwoMorphism& yp, const TwoCell& theta) {
    return need(solveCell(y, yp * Q.q, {{std::nullopt, Q.u.u0, theta.a - yp.u1 * Q.zeta.a}}),
                "square out of a cokernel");
}

}  // namespace

bool SnakeResult::allExact() const { return allTrue(exact); }

bool SnakeResult::identitiesHold() const {
    for (const auto& [n, ok] : muIdentities)
        if (!ok) return false;
    return true;
}

SnakeColumns canonicalColumns(const SnakeDiagram& D) {
    return {kernelData(kernel2(D.a)),     kernelData(kernel2(D.b)),     kernelData(kernel2(D.c)),
            cokernelData(cokernel2(D.a)), cokernelData(cokernel2(D.b)), cokernelData(cokernel2(D.c))};
}

bool snakeCommutes(const SnakeDiagram& D) {
    require(D.eta.from == D.g * D.f && isZero2(D.eta.to), "eta has the wrong shape");
    require(D.etap.from == D.gp * D.fp && isZero2(D.etap.to), "eta' has the wrong shape");
    require(D.phi.from == D.b * D.f && D.phi.to == D.fp * D.a, "phi has the wrong shape");
    require(D.psi.from == D.c * D.g && D.psi.to == D.gp * D.b, "psi has the wrong shape");
    return D.psi.a * D.f.u0 + D.gp.u1 * D.phi.a + D.etap.a * D.a.u0 == D.c.u1 * D.eta.a;
}

std::string snakeHypothesisFailure(const SnakeDiagram& D, const SnakeColumns& cols, bool extensions) {
    if (!snakeCommutes(D)) return "the diagram does not commute";
    if (extensions) {
        if (!isExtension(D.f, D.eta, D.g)) return "(f, eta, g) is not an extension";
        if (!isExtension(D.fp, D.etap, D.gp)) return "(f', eta', g') is not an extension";
    } else {
        if (!isCokernelData({D.f, D.g, D.eta})) return "(g, eta) is not a cokernel of f";
        if (!isKernelData({D.gp, D.fp, D.etap})) return "(f', eta') is not a kernel of g'";
    }
    const std::pair<const KernelData*, const TwoMorphism*> ks[] = {{&cols.ka, &D.a}, {&cols.kb, &D.b}, {&cols.kc, &D.c}};
    const std::pair<const CokernelData*, const TwoMorphism*> qs[] = {{&cols.qa, &D.a}, {&cols.qb, &D.b}, {&cols.qc, &D.c}};
    const char* names = "abc";
    for (int i = 0; i < 3; ++i) {
        if (!(ks[i].first->u == *ks[i].second) || !isKernelData(*ks[i].first))
            return std::string("(k_") + names[i] + ", kappa_" + names[i] + ") is not a kernel of " + names[i];
        if (!(qs[i].first->u == *qs[i].second) || !isCokernelData(*qs[i].first))
            return std::string("(q_") + names[i] + ", zeta_" + names[i] + ") is not a cokernel of " + names[i];
    }
    return "";
}

SnakeResult snake(const SnakeDiagram& D, const std::optional<SnakeColumns>& colsIn, const SnakeOverrides& ov,
                  bool extensions) {
    SnakeResult R;
    R.cols = colsIn ? *colsIn : canonicalColumns(D);
    if (const std::string fail = snakeHypothesisFailure(D, R.cols, extensions); !fail.empty())
        throw HypothesisError(fail);
    const KernelData &ka = R.cols.ka, &kb = R.cols.kb, &kc = R.cols.kc;
    const CokernelData &qa = R.cols.qa, &qb = R.cols.qb, &qc = R.cols.qc;
    const TwoMorphism &f = D.f, &g = D.g, &fp = D.fp, &gp = D.gp, &a = D.a, &b = D.b, &c = D.c;

    // Rows of kernels.
    const TwoCell thF = vcomp2(whiskerPre(D.phi, ka.k), whiskerPost(fp, ka.kappa));
    if (ov.fbar) {
        R.fbar = *ov.fbar;
        R.phibar = liftCell(kb, f * ka.k, R.fbar, nullCell(thF));
    } else {
        const Lift L = need(liftKernel(kb, f * ka.k, nullCell(thF)), "kernel row f");
        R.fbar = L.map;
        R.phibar = L.cell;
    }
    const TwoCell thG = vcomp2(whiskerPre(D.psi, kb.k), whiskerPost(gp, kb.kappa));
    if (ov.gbar) {
        R.gbar = *ov.gbar;
        R.psibar = liftCell(kc, g * kb.k, R.gbar, nullCell(thG));
    } else {
        const Lift L = need(liftKernel(kc, g * kb.k, nullCell(thG)), "kernel row g");
        R.gbar = L.map;
        R.psibar = L.cell;
    }
    if (ov.etabar) {
        R.etabar = *ov.etabar;
    } else {
        const TwoCell th = vcomp2(vcomp2(whiskerPre(inverse2(R.psibar), R.fbar), whiskerPost(g, inverse2(R.phibar))),
                                  whiskerPre(D.eta, ka.k));
        R.etabar = need(liftNullCell(kc, R.gbar * R.fbar, nullCell(th)), "kernel row cell");
    }

    // Rows of cokernels.
    const TwoCell thFp = vcomp2(whiskerPost(qb.q, inverse2(D.phi)), whiskerPre(qb.zeta, f));
    if (ov.fbarp) {
        R.fbarp = *ov.fbarp;
        R.phibarp = descendCell(qa, qb.q * fp, R.fbarp, nullCell(thFp));
    } else {
        const Lift L = need(descendCokernel(qa, qb.q * fp, nullCell(thFp)), "cokernel row f'");
        R.fbarp = L.map;
        R.phibarp = L.cell;
    }
    const TwoCell thGp = vcomp2(whiskerPost(qc.q, inverse2(D.psi)), whiskerPre(qc.zeta, g));
    if (ov.gbarp) {
        R.gbarp = *ov.gbarp;
        R.psibarp = descendCell(qb, qc.q * gp, R.gbarp, nullCell(thGp));
    } else {
        const Lift L = need(descendCokernel(qb, qc.q * gp, nullCell(thGp)), "cokernel row g'");
        R.gbarp = L.map;
        R.psibarp = L.cell;
    }
    if (ov.etabarp) {
        R.etabarp = *ov.etabarp;
    } else {
        const TwoCell th =
            vcomp2(vcomp2(whiskerPost(R.gbarp, inverse2(R.phibarp)), whiskerPre(inverse2(R.psibarp), fp)),
                   whiskerPost(qc.q, D.etap));
        R.etabarp = need(descendNullCell(qa, R.gbarp * R.fbarp, nullCell(th)), "cokernel row cell");
    }

    // Kernel of g and cokernel of f', with the comparisons m and n'.
    const Kernel2 KG = kernel2(g);
    const Cokernel2 QF = cokernel2(fp);
    const TwoMorphism &fh = KG.k, &gph = QF.q;
    const TwoMorphism m = kernelFactor(KG, f, D.eta);
    const TwoMorphism np = cokernelFactor(QF, gp, D.etap);
    const Lift AH = need(liftKernel({gp, fp, D.etap}, b * fh,
                                    nullCell(vcomp2(whiskerPre(inverse2(D.psi), fh), whiskerPost(c, KG.kappa)))),
                         "restriction of b");
    const TwoMorphism& ah = AH.map;   // Ker g -> A'
    const TwoCell& phih = AH.cell;    // b fh => f' ah
    const Lift CH = need(descendCokernel({f, g, D.eta}, gph * b,
                                         nullCell(vcomp2(whiskerPost(gph, D.phi), whiskerPre(QF.zeta, a)))),
                         "corestriction of b");
    const TwoMorphism& ch = CH.map;          // C -> Coker f'
    const TwoCell psih = inverse2(CH.cell);  // ch g => gph b

    const TwoCell nu = need(solveCell(c, np * ch, {{std::nullopt, g.u0, D.psi.a - np.u1 * psih.a}}), "nu");
    const TwoCell kappaCh = need(solveCell(ch * kc.k, zero2(kc.k.src, ch.tgt), {{np.u1, std::nullopt, kc.kappa.a - nu.a * kc.k.u0}}),
                                 "kernel cell of ch");
    const TwoCell mu = need(solveCell(a, ah * m, {{fp.u1, std::nullopt, phih.a * m.u0 - D.phi.a}}), "mu");
    const TwoCell zetaAh = need(solveCell(qa.q * ah, zero2(ah.src, qa.q.tgt), {{std::nullopt, m.u0, qa.zeta.a - qa.q.u1 * mu.a}}),
                                "cokernel cell of ah");

    // Pushout I of fh and ah.
    const TwoObject &B = b.src, &Ap = a.tgt, &Bp = b.tgt, &C = c.src;
    const TwoMorphism P = pair2(fh, -ah);
    const Cokernel2 IQ = cokernel2(P);
    const Biproduct2 S = biproduct2(B, Ap);
    const TwoObject& I = IQ.obj;
    const TwoMorphism ap = IQ.q * S.i1;
    const TwoMorphism gz = copair2(g, zero2(Ap, C));
    const TwoMorphism j = cokernelFactor(IQ, gz, TwoCell(gz * P, zero2(P.src, C), KG.kappa.a));
    const TwoMorphism bf = copair2(b, fp);
    const TwoMorphism cp = cokernelFactor(IQ, bf, TwoCell(bf * P, zero2(P.src, Bp), phih.a));
    const TwoCell psi2(ch * j, gph * cp, copair(psih.a, -QF.zeta.a));

    // k'_c with xi: k_c => j k'_c and kappa'_c: c' k'_c => 0.
    const TwoObject& Kc = kc.k.src;
    LinSys s(I.ring());
    const int k1 = s.unknown(Kc.top(), I.top()), k0 = s.unknown(Kc.bottom(), I.bottom());
    const int xv = s.unknown(Kc.bottom(), C.top()), yv = s.unknown(Kc.bottom(), Bp.top());
    s.equation({{.var = k1, .left = I.d}, {.var = k0, .right = Kc.d, .negative = true}}, zeroMap(Kc.top(), I.bottom()));
    s.equation({{.var = k1, .left = j.u1}, {.var = xv, .right = Kc.d}}, kc.k.u1);
    s.equation({{.var = k0, .left = j.u0}, {.var = xv, .left = C.d}}, kc.k.u0);
    s.equation({{.var = k1, .left = cp.u1}, {.var = yv, .right = Kc.d, .negative = true}}, zeroMap(Kc.top(), Bp.top()));
    s.equation({{.var = k0, .left = cp.u0}, {.var = yv, .left = Bp.d, .negative = true}},
               zeroMap(Kc.bottom(), Bp.bottom()));
    s.equation({{.var = xv, .left = ch.u1}, {.var = k0, .left = psi2.a}, {.var = yv, .left = gph.u1}}, kappaCh.a);
    const auto sol = need(s.solve(), "lift of k_c into the pushout");
    const TwoMorphism kpc(Kc, I, sol[size_t(k1)], sol[size_t(k0)]);
    const TwoCell xi(kc.k, j * kpc, sol[size_t(xv)]);
    const TwoCell kappaPc(cp * kpc, zero2(Kc, Bp), sol[size_t(yv)]);

    const TwoCell xip = need(solveCell(ap * kb.k, kpc * R.gbar,
                                       {{cp.u1, std::nullopt, kb.kappa.a - kappaPc.a * R.gbar.u0},
                                        {j.u1, std::nullopt, xi.a * R.gbar.u0 + R.psibar.a}}),
                             "xi'");

    const TwoMorphism zq = copair2(zero2(B, qa.q.tgt), qa.q);
    const TwoMorphism qpa = cokernelFactor(IQ, zq, TwoCell(zq * P, zero2(P.src, qa.q.tgt), -zetaAh.a));
    const TwoCell piP(qb.q * cp, R.fbarp * qpa, copair(qb.zeta.a, R.phibarp.a));

    R.d = qpa * kpc;
    R.delta = nullCell(whiskerPost(qpa, inverse2(xip)));
    R.deltaPrime = nullCell(vcomp2(whiskerPre(inverse2(piP), kpc), whiskerPost(qb.q, kappaPc)));

    R.sixTerm = makeSequence({R.fbar, R.gbar, R.d, R.fbarp, R.gbarp}, {R.etabar, R.delta, R.deltaPrime, R.etabarp});
    R.muIdentities = {
        {"delta fbar . d etabar^-1 = mu_a", adjacentLoop(R.fbar, R.etabar, R.d, R.delta) == muOf(ka, qa)},
        {"delta' gbar . fbar' delta^-1 = mu_b^-1",
         adjacentLoop(R.gbar, R.delta, R.fbarp, R.deltaPrime) == inverse2(muOf(kb, qb))},
        {"etabar' d . gbar' delta'^-1 = mu_c", adjacentLoop(R.d, R.deltaPrime, R.gbarp, R.etabarp) == muOf(kc, qc)},
    };
    R.exact = R.sixTerm.exactness();
    return R;
}

bool AnacondaResult::allExact() const { return allTrue(exact); }

bool AnacondaResult::loopsMatch() const {
    for (int s : loopSigns)
        if (s == 0) return false;
    return true;
}

AnacondaResult anaconda(const SnakeDiagram& D) {
    AnacondaResult R;
    R.snake = snake(D, std::nullopt, {}, true);
    const SnakeResult& S = R.snake;
    const SnakeColumns& cols = S.cols;
    const TwoObject &Ka = cols.ka.k.src, &Kb = cols.kb.k.src, &Kc = cols.kc.k.src;
    const TwoObject &Qa = cols.qa.q.tgt, &Qb = cols.qb.q.tgt, &Qc = cols.qc.q.tgt;
    const TwoObject Z = TwoObject::zero(Ka.ring());
    const LoopSuspension lka = loopSuspension(Ka), lkb = loopSuspension(Kb), lkc = loopSuspension(Kc);
    const LoopSuspension lqa = loopSuspension(Qa), lqb = loopSuspension(Qb), lqc = loopSuspension(Qc);

    // Left: Puppe data of gbar with kernel (fbar, etabar).
    const TwoMorphism of = omegaMap(S.fbar), og = omegaMap(S.gbar);
    require(isZero2(og * of), "loop functor does not kill etabar");
    const Lift L = need(liftKernel({S.gbar, S.fbar, S.etabar}, zero2(lkc.omega, Kb), inverse2(lkc.omegaLoop)),
                        "connecting map into Ker a");
    const TwoMorphism& dl = L.map;
    const TwoCell deltaL = nullCell(inverse2(L.cell));
    const TwoCell epsL = need(solveCell(dl * og, zero2(lkb.omega, Ka),
                                        {{S.fbar.u1, std::nullopt, deltaL.a * og.u0 - lkb.omegaLoop.a}}),
                              "left epsilon");

    // Right: Puppe data of fbar' with cokernel (gbar', etabar').
    const TwoMorphism sf = sigmaMap(S.fbarp), sg = sigmaMap(S.gbarp);
    require(isZero2(sg * sf), "suspension functor does not kill etabar'");
    const Lift Rr = need(descendCokernel({S.fbarp, S.gbarp, S.etabarp}, zero2(Qb, lqa.sigma), lqa.sigmaLoop),
                         "connecting map out of Coker c");
    const TwoMorphism& dr = Rr.map;
    const TwoCell deltaR = nullCell(inverse2(Rr.cell));
    const TwoCell epsR = need(solveCell(sf * dr, zero2(Qc, lqb.sigma),
                                        {{std::nullopt, S.gbarp.u0, lqb.sigmaLoop.a + sf.u1 * deltaR.a}}),
                              "right epsilon");

    R.sequence = makeSequence(
        {zero2(Z, lka.omega), of, og, dl, S.fbar, S.gbar, S.d, S.fbarp, S.gbarp, dr, sf, sg, zero2(lqc.sigma, Z)},
        {identityCell(zero2(Z, lkb.omega)), identityCell(og * of), epsL, deltaL, S.etabar, S.delta, S.deltaPrime,
         S.etabarp, deltaR, epsR, identityCell(sg * sf), identityCell(zero2(lqb.sigma, Z))});
    R.labels = {"0",     "Pip a", "Pip b", "Pip c", "Ker a",   "Ker b",   "Ker c",
                "Coker a", "Coker b", "Coker c", "Copip a", "Copip b", "Copip c", "0"};
    R.exact = R.sequence.exactness();

    const std::vector<TwoCell> loops = R.sequence.loops();
    const std::vector<std::pair<std::string, TwoCell>> expected = {
        {"omega_Ker a", lka.omegaLoop},   {"omega_Ker b", lkb.omegaLoop},   {"omega_Ker c", lkc.omegaLoop},
        {"mu_a", muOf(cols.ka, cols.qa)}, {"mu_b", muOf(cols.kb, cols.qb)}, {"mu_c", muOf(cols.kc, cols.qc)},
        {"sigma_Coker a", lqa.sigmaLoop}, {"sigma_Coker b", lqb.sigmaLoop}, {"sigma_Coker c", lqc.sigmaLoop},
    };
    for (size_t i = 0; i < expected.size(); ++i) {
        const TwoCell& got = loops[i + 1];
        const TwoCell& want = expected[i].second;
        R.loopNames.push_back(expected[i].first);
        R.loopSigns.push_back(got == want ? 1 : got == inverse2(want) ? -1 : 0);
    }
    return R;
}

namespace {

// A complex extended by zeros on both sides.
struct Padded {
    const ComplexSequence& s;
    TwoObject Z;

    explicit Padded(const ComplexSequence& c) : s(c), Z(TwoObject::zero(c.objects.front().ring())) {}
    bool inside(int n) const { return n >= s.lo && n <= s.hi(); }
    TwoObject obj(int n) const { return inside(n) ? s.objects[size_t(n - s.lo)] : Z; }
    TwoMorphism map(int n) const {
        return inside(n) && inside(n + 1) ? s.maps[size_t(n - s.lo)] : zero2(obj(n), obj(n + 1));
    }
    TwoCell cell(int n) const {
        return inside(n) && inside(n + 2) ? s.cells[size_t(n - s.lo)] : identityCell(map(n + 1) * map(n));
    }
};

struct PaddedMorphism {
    const ComplexMorphism& m;
    const Padded &X, &Y;

    bool inside(int n) const { return X.inside(n); }
    TwoMorphism map(int n) const { return inside(n) ? m.maps[size_t(n - X.s.lo)] : zero2(X.obj(n), Y.obj(n)); }
    // b_n f_n => f_{n+1} a_n
    TwoCell cell(int n) const {
        return inside(n) && inside(n + 1) ? m.cells[size_t(n - X.s.lo)] : identityCell(Y.map(n) * map(n));
    }
};

TwoCell omegaAt(const ComplexExtension& E, const PaddedMorphism& f, const PaddedMorphism& g, int n) {
    return f.inside(n) ? E.omega[size_t(n - E.A.lo)] : identityCell(g.map(n) * f.map(n));
}

// h_n: Q_n -> K_n, from the relative cokernel at A_n to the relative kernel at A_{n+1}.
struct DegreeData {
    RelCokernel2 Q;
    RelKernel2 K;
    TwoMorphism h;
};

DegreeData degreeData(const Padded& X, int n) {
    DegreeData d{relCokernel2(X.map(n - 2), X.map(n - 1), X.cell(n - 2)),
                 relKernel2(X.map(n + 1), X.map(n + 2), X.cell(n + 1)),
                 {}};
    const TwoMorphism check = relCokernelFactor(d.Q, X.map(n), X.cell(n - 1));
    const TwoCell checkCell(X.map(n + 1) * check, zero2(d.Q.obj, X.obj(n + 2)), X.cell(n).a);
    d.h = relKernelFactor(d.K, check, checkCell);
    return d;
}

CokernelData relCokernelData(const RelCokernel2& Q) { return {Q.coker.u, Q.q, Q.zeta}; }
KernelData relKernelData(const RelKernel2& K) { return {K.ker.u, K.k, K.kappa}; }

// Coker h_n -> Ker h_{n+1}, through Q_{n+1} k_n.
TwoMorphism homologyComparison(const DegreeData& D, const DegreeData& E) {
    const TwoMorphism t = E.Q.q * D.K.k;
    const TwoCell c1 = need(descendNullCell(relCokernelData(D.Q), t * D.h,
                                            TwoCell(t * D.h * D.Q.q, zero2(D.Q.q.src, t.tgt), E.Q.zeta.a)),
                            "homology comparison, first cell");
    const Cokernel2 CH = cokernel2(D.h);
    const TwoMorphism tb = cokernelFactor(CH, t, c1);
    const TwoMorphism ht = E.h * t;
    const TwoCell c2 = need(liftNullCell(relKernelData(E.K), ht, TwoCell(E.K.k * ht, zero2(ht.src, E.K.k.tgt), D.K.kappa.a)),
                            "homology comparison, second cell");
    const TwoMorphism htb = E.h * tb;
    const TwoCell c2b = need(descendNullCell(cokernelData(CH), htb, TwoCell(htb * CH.q, zero2(CH.q.src, htb.tgt), c2.a)),
                             "homology comparison, descended cell");
    return kernelFactor(kernel2(E.h), tb, c2b);
}

// dim ker d and dim coker d of an object over F_p.
std::pair<Eigen::Index, Eigen::Index> homotopyRanks(const TwoObject& x) {
    const Eigen::Index r = fp::rank(x.d.m, x.ring().p);
    return {x.top().size() - r, x.bottom().size() - r};
}

// Classical exactness of a sequence of linear maps at every interior point.
bool classicallyExact(const std::vector<BaseMorphism>& maps, std::int64_t p) {
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
        if (!isZero(maps[i + 1] * maps[i])) return false;
        if (fp::rank(maps[i].m, p) + fp::rank(maps[i + 1].m, p) != maps[i].tgt.size()) return false;
    }
    return true;
}

std::string checkComplex(const ComplexSequence& s, const char* name) {
    s.validate();
    for (size_t i = 0; i + 1 < s.cells.size(); ++i)
        if (!isCompatible(s.maps[i], s.maps[i + 1], s.maps[i + 2], s.cells[i], s.cells[i + 1]))
            return std::string(name) + ": cells " + std::to_string(i) + " and " + std::to_string(i + 1) +
                   " are not compatible";
    return "";
}

std::string checkMorphism(const ComplexMorphism& f, const ComplexSequence& A, const ComplexSequence& B,
                          const char* name) {
    const std::string n(name);
    require(f.maps.size() == A.objects.size() && f.cells.size() == A.maps.size(), n + " has the wrong length");
    for (size_t i = 0; i < f.maps.size(); ++i)
        require(f.maps[i].src == A.objects[i] && f.maps[i].tgt == B.objects[i], n + " is misplaced");
    for (size_t i = 0; i < f.cells.size(); ++i)
        require(f.cells[i].from == B.maps[i] * f.maps[i] && f.cells[i].to == f.maps[i + 1] * A.maps[i],
                n + ": square " + std::to_string(i) + " has the wrong shape");
    for (size_t i = 0; i + 1 < f.cells.size(); ++i) {
        const BaseMorphism lhs = B.maps[i + 1].u1 * f.cells[i].a + f.cells[i + 1].a * A.maps[i].u0 +
                                 f.maps[i + 2].u1 * A.cells[i].a;
        if (lhs != B.cells[i].a * f.maps[i].u0)
            return n + ": squares " + std::to_string(i) + " and " + std::to_string(i + 1) +
                   " do not commute with the cells";
    }
    return "";
}

}  // namespace

void validateComplexExtension(const ComplexExtension& E) {
    require(E.A.lo == E.B.lo && E.B.lo == E.C.lo && E.A.objects.size() == E.B.objects.size() &&
                E.B.objects.size() == E.C.objects.size(),
            "complexes live on different windows");
    for (const std::string& fail : {checkComplex(E.A, "A"), checkComplex(E.B, "B"), checkComplex(E.C, "C"),
                                    checkMorphism(E.f, E.A, E.B, "f"), checkMorphism(E.g, E.B, E.C, "g")})
        if (!fail.empty()) throw HypothesisError(fail);
    require(E.omega.size() == E.A.objects.size(), "omega has the wrong length");
    for (size_t n = 0; n < E.omega.size(); ++n) {
        const TwoMorphism &f = E.f.maps[n], &g = E.g.maps[n];
        require(E.omega[n].from == g * f && isZero2(E.omega[n].to), "omega has the wrong shape");
        if (n + 1 < E.omega.size()) {
            const BaseMorphism lhs = E.g.cells[n].a * f.u0 + E.g.maps[n + 1].u1 * E.f.cells[n].a +
                                     E.omega[n + 1].a * E.A.maps[n].u0;
            if (lhs != E.C.maps[n].u1 * E.omega[n].a)
                throw HypothesisError("degree " + std::to_string(E.A.lo + int(n)) +
                                      ": the squares do not commute with omega");
        }
        if (!isExtension(f, E.omega[n], g))
            throw HypothesisError("degree " + std::to_string(E.A.lo + int(n)) + " is not an extension");
    }
}

bool LesResult::allExact() const { return allTrue(exact) && allTrue(identities); }

LesResult lesHomology(const ComplexExtension& E) {
    validateComplexExtension(E);
    const Padded A(E.A), B(E.B), C(E.C);
    const PaddedMorphism f{E.f, A, B}, g{E.g, B, C};
    LesResult R;
    R.lo = E.A.lo;
    R.hi = E.A.hi();
    const int first = R.lo - 1, last = R.hi + 1;

    std::vector<std::array<DegreeData, 3>> deg;
    for (int n = first; n <= last; ++n) deg.push_back({degreeData(A, n), degreeData(B, n), degreeData(C, n)});
    auto at = [&](int n) -> std::array<DegreeData, 3>& { return deg[size_t(n - first)]; };

    // Maps induced on Q_n and K_n by a morphism of complexes.
    auto qmap = [](const DegreeData& X, const DegreeData& Y, const PaddedMorphism& u, int n) {
        const TwoCell beta = vcomp2(whiskerPost(Y.Q.q, inverse2(u.cell(n - 1))), whiskerPre(Y.Q.zeta, u.map(n - 1)));
        return relCokernelFactor(X.Q, Y.Q.q * u.map(n), nullCell(beta));
    };
    auto kmap = [](const DegreeData& X, const DegreeData& Y, const PaddedMorphism& u, int n) {
        const TwoCell beta = vcomp2(whiskerPre(u.cell(n + 1), X.K.k), whiskerPost(u.map(n + 2), X.K.kappa));
        return relKernelFactor(Y.K, u.map(n + 1) * X.K.k, nullCell(beta));
    };

    std::vector<TwoMorphism> maps;
    std::vector<TwoCell> cells;
    std::optional<SnakeOverrides> carry;
    for (int n = first; n < last; ++n) {
        const auto& [dA, dB, dC] = at(n);
        SnakeDiagram D;
        D.f = qmap(dA, dB, f, n);
        D.g = qmap(dB, dC, g, n);
        D.fp = kmap(dA, dB, f, n);
        D.gp = kmap(dB, dC, g, n);
        D.a = dA.h;
        D.b = dB.h;
        D.c = dC.h;
        D.eta = TwoCell(D.g * D.f, zero2(D.f.src, D.g.tgt), dC.Q.q.u1 * omegaAt(E, f, g, n).a);
        D.etap = TwoCell(D.gp * D.fp, zero2(D.fp.src, D.gp.tgt), omegaAt(E, f, g, n + 1).a * dA.K.k.u0);
        D.phi = TwoCell(D.b * D.f, D.fp * D.a, f.cell(n).a);
        D.psi = TwoCell(D.c * D.g, D.gp * D.b, g.cell(n).a);

        SnakeColumns cols;
        const DegreeData* ds[3] = {&dA, &dB, &dC};
        KernelData* ks[3] = {&cols.ka, &cols.kb, &cols.kc};
        CokernelData* qs[3] = {&cols.qa, &cols.qb, &cols.qc};
        for (int i = 0; i < 3; ++i) {
            *ks[i] = kernelData(kernel2(ds[i]->h));
            const TwoMorphism e = homologyComparison(*ds[i], at(n + 1)[size_t(i)]);
            const Cokernel2 Q = cokernel2(ds[i]->h);
            *qs[i] = {ds[i]->h, e * Q.q, nullCell(whiskerPost(e, Q.zeta))};
        }
        const SnakeResult S = snake(D, cols, carry.value_or(SnakeOverrides{}), false);
        carry = SnakeOverrides{.fbar = S.fbarp, .gbar = S.gbarp, .etabar = S.etabarp};
        R.H.push_back({cols.ka.k.src, cols.kb.k.src, cols.kc.k.src});
        maps.insert(maps.end(), {S.fbar, S.gbar, S.d});
        cells.insert(cells.end(), {S.etabar, S.delta, S.deltaPrime});
        for (const auto& [name, ok] : S.muIdentities) R.identities.push_back(ok);
        R.snakes.push_back(S);
    }
    const SnakeResult& L = R.snakes.back();
    R.H.push_back({L.cols.qa.q.tgt, L.cols.qb.q.tgt, L.cols.qc.q.tgt});
    maps.insert(maps.end(), {L.fbarp, L.gbarp});
    cells.push_back(L.etabarp);
    R.sequence = makeSequence(maps, cells, 0);
    R.exact = R.sequence.exactness();

    const BaseRing ring = A.Z.ring();
    if (ring.isField()) {
        const Padded* cs[3] = {&A, &B, &C};
        for (int n = first; n <= last; ++n)
            for (int i = 0; i < 3; ++i) {
                const Padded& X = *cs[i];
                const HomologyResult h = homologyAt(X.map(n - 2), X.cell(n - 2), X.map(n - 1), X.cell(n - 1),
                                                    X.map(n), X.cell(n), X.map(n + 1));
                R.homologyMatches.push_back(homotopyRanks(h.H) == homotopyRanks(R.H[size_t(n - first)][size_t(i)]));
            }
        std::vector<BaseMorphism> p0, om;
        for (const TwoMorphism& m : R.sequence.maps) {
            p0.push_back(pi0Map(m).u0);
            om.push_back(omegaMap(m).u0);
        }
        R.pi0Exact = classicallyExact(p0, ring.p);
        R.omegaExact = classicallyExact(om, ring.p);
    }
    return R;
}

std::vector<bool> relativeExactPadded(const TwoMorphism& f, const TwoCell& eta, const TwoMorphism& g) {
    const TwoObject &A = f.src, &C = g.tgt;
    const TwoObject Z = TwoObject::zero(A.ring());
    const TwoMorphism zz = zero2(Z, Z), za = zero2(Z, A), cz = zero2(C, Z);
    return {
        relativeExactAt(zz, identityCell(za * zz), za, identityCell(f * za), f, eta, g),
        relativeExactAt(za, identityCell(f * za), f, eta, g, identityCell(cz * g), cz),
        relativeExactAt(f, eta, g, identityCell(cz * g), cz, identityCell(zz * cz), zz),
    };
}

Report3x3 check3x3(const Grid3x3& G) {
    Report3x3 R;
    auto shapes = [&] {
        for (int i = 0; i < 3; ++i)
            if (!(G.eta[i].from == G.g[i] * G.f[i] && isZero2(G.eta[i].to))) return false;
        for (int i = 0; i < 2; ++i) {
            if (!(G.phi[i].from == G.b[i] * G.f[i] && G.phi[i].to == G.f[i + 1] * G.a[i])) return false;
            if (!(G.psi[i].from == G.c[i] * G.g[i] && G.psi[i].to == G.g[i + 1] * G.b[i])) return false;
        }
        return G.alpha.from == G.a[1] * G.a[0] && isZero2(G.alpha.to) && G.beta.from == G.b[1] * G.b[0] &&
               isZero2(G.beta.to) && G.gamma.from == G.c[1] * G.c[0] && isZero2(G.gamma.to);
    };
    R.hypotheses.push_back({"cells have the expected shapes", shapes()});
    if (R.hypotheses.back().second) {
        R.hypotheses.push_back({"the f squares commute with alpha and beta",
                                G.b[1].u1 * G.phi[0].a + G.phi[1].a * G.a[0].u0 + G.f[2].u1 * G.alpha.a ==
                                    G.beta.a * G.f[0].u0});
        R.hypotheses.push_back({"the g squares commute with beta and gamma",
                                G.c[1].u1 * G.psi[0].a + G.psi[1].a * G.b[0].u0 + G.g[2].u1 * G.beta.a ==
                                    G.gamma.a * G.g[0].u0});
        for (int i = 0; i < 2; ++i)
            R.hypotheses.push_back({"rows " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " commute",
                                    G.psi[i].a * G.f[i].u0 + G.g[i + 1].u1 * G.phi[i].a + G.eta[i + 1].a * G.a[i].u0 ==
                                        G.c[i].u1 * G.eta[i].a});
        R.hypotheses.push_back({"column A is an extension", isExtension(G.a[0], G.alpha, G.a[1])});
        R.hypotheses.push_back({"column B is an extension", isExtension(G.b[0], G.beta, G.b[1])});
        R.hypotheses.push_back({"column C is an extension", isExtension(G.c[0], G.gamma, G.c[1])});
        R.hypotheses.push_back({"row 2 is an extension", isExtension(G.f[1], G.eta[1], G.g[1])});
        R.hypotheses.push_back({"row 3 is an extension", isExtension(G.f[2], G.eta[2], G.g[2])});
    }
    for (const auto& [name, ok] : R.hypotheses)
        if (!ok) {
            R.failure = name;
            return R;
        }
    R.firstRowRelativeExact = allTrue(relativeExactPadded(G.f[0], G.eta[0], G.g[0]));
    R.firstRowExtension = isExtension(G.f[0], G.eta[0], G.g[0]);
    R.middleRelativeExact = allTrue(relativeExactPadded(G.f[1], G.eta[1], G.g[1])) &&
                            allTrue(relativeExactPadded(G.b[0], G.beta, G.b[1]));
    if (R.middleRelativeExact) {
        R.allRelativeExact = R.firstRowRelativeExact;
        for (int i = 1; i < 3; ++i) R.allRelativeExact &= allTrue(relativeExactPadded(G.f[i], G.eta[i], G.g[i]));
        R.allRelativeExact &= allTrue(relativeExactPadded(G.a[0], G.alpha, G.a[1])) &&
                              allTrue(relativeExactPadded(G.c[0], G.gamma, G.c[1]));
    }
    return R;
}

bool ShortFiveReport::holds() const {
    return failure.empty() && equivalenceHolds && faithfulHolds && cofaithfulHolds && fullyFaithfulHolds &&
           fullyCofaithfulHolds;
}

bool ShortFiveReport::refinedHolds() const { return failure.empty() && faithfulHolds && fullHolds && cofaithfulHolds; }

ShortFiveReport checkShortFive(const SnakeDiagram& D) {
    ShortFiveReport R;
    if (!snakeCommutes(D))
        R.failure = "the diagram does not commute";
    else if (!isExtension(D.f, D.eta, D.g))
        R.failure = "(f, eta, g) is not an extension";
    else if (!isExtension(D.fp, D.etap, D.gp))
        R.failure = "(f', eta', g') is not an extension";
    if (!R.failure.empty()) return R;
    R.a = classify2(D.a);
    R.b = classify2(D.b);
    R.c = classify2(D.c);
    auto implies = [&](bool ArrowClassification::*flag) { return !(R.a.*flag && R.c.*flag) || R.b.*flag; };
    R.equivalenceHolds = implies(&ArrowClassification::equivalence);
    R.faithfulHolds = implies(&ArrowClassification::faithful);
    R.fullHolds = implies(&ArrowClassification::full);
    R.cofaithfulHolds = implies(&ArrowClassification::cofaithful);
    R.fullyFaithfulHolds = implies(&ArrowClassification::fullyFaithful);
    R.fullyCofaithfulHolds = implies(&ArrowClassification::fullyCofaithful);
    return R;
}

bool RelativeDecomposition::holds() const { return allTrue(extensions) && allTrue(recomposes); }

RelativeDecomposition decomposeRelativeExact(const ComplexSequence& s) {
    s.validate();
    const Padded X(s);
    const int first = s.lo - 1, last = s.hi();
    // I_n = K(a_{n+1}, alpha_{n+1}) inside A_{n+1}, with q_n: A_n -> I_n.
    std::vector<RelKernel2> I;
    std::vector<TwoMorphism> q;
    for (int n = first; n <= last; ++n) {
        I.push_back(relKernel2(X.map(n + 1), X.map(n + 2), X.cell(n + 1)));
        q.push_back(relKernelFactor(I.back(), X.map(n), X.cell(n)));
    }
    RelativeDecomposition R;
    for (int n = first; n < last; ++n) {
        const size_t i = size_t(n - first);
        const TwoMorphism& k = I[i].k;
        const TwoMorphism& qn = q[i + 1];
        const TwoMorphism qk = qn * k;
        const TwoCell phi = need(liftNullCell(relKernelData(I[i + 1]), qk,
                                              TwoCell(I[i + 1].k * qk, zero2(qk.src, I[i + 1].k.tgt), I[i].kappa.a)),
                                 "decomposition cell");
        R.pieces.push_back({k, qn, phi});
        R.extensions.push_back(isExtension(k, phi, qn));
        R.recomposes.push_back(I[i + 1].k.u1 * phi.a * q[i].u0 == X.cell(n).a);
    }
    return R;
}

}  // namespace cx2
