"""Verifiers for the spectral-spread inequality family.

Each check_* function evaluates one inequality on concrete matrices and
returns a Verdict carrying the full margin data: the submajorization report,
entrywise margins where the entrywise form is the interesting contrast, and
any norm-form side conditions. A False verdict on a theorem's hypothesis
class indicates an implementation bug, so the whole family doubles as a
self-test; the known entrywise failures are recorded, not judged.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimMismatch,
    NotHermitian,
    NotPositive,
    NotProjection,
    NotProjectionSum,
    RangeNotContained,
)
from .major import gauge, maj_tol, schatten, seq_product, submajorizes
from .spectra import SpreadSeq, compact_scale, matrix_scale, spread_plus

POS_GATE = 1e-10
DOUGLAS_TOL = 1e-8
PINV_CUTOFF = 1e-10


@dataclass(frozen=True)
class Verdict:
    """Outcome of one inequality check on one instance."""

    ineq_id: str
    holds: bool
    report: object | None
    witness: str
    mode: str
    entrywise_margins: np.ndarray | None = None
    entrywise_holds: bool | None = None
    extras: dict = field(default_factory=dict)


def _digest(*mats) -> str:
    h = hashlib.sha256()
    for m in mats:
        a = np.ascontiguousarray(np.asarray(m, dtype=np.complex128))
        h.update(repr(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()


def _scale_seq(seq: SpreadSeq, c: float) -> SpreadSeq:
    return SpreadSeq(values=c * seq.values, tail=c * seq.tail, mode=seq.mode)


def _add_seq(a: SpreadSeq, b: SpreadSeq) -> SpreadSeq:
    k = max(len(a), len(b))
    return SpreadSeq(values=a.padded(k) + b.padded(k), tail=a.tail + b.tail, mode="compact")


def _spr(m, k: int | None = None) -> SpreadSeq:
    """Compact-model spectral spread of a Hermitian matrix."""
    return spread_plus(compact_scale(m, k))


def _require_positive(m, what: str) -> np.ndarray:
    h = linalg.as_hermitian(m)
    w = linalg.eigh(h).values
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    if w.size and float(w[-1]) < -POS_GATE * scale:
        raise NotPositive(f"{what} has eigenvalue {w[-1]:.3e}")
    return h

def _is_positive(m) -> bool:
    w = linalg.eigh(m).values
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    return not w.size or float(w[-1]) >= -POS_GATE * scale


def _psd_sqrt(m) -> np.ndarray:
    w, v = linalg.eigh(m)
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    if w.size and float(w[-1]) < -POS_GATE * scale:
        raise NotPositive(f"square root of a non-positive matrix ({w[-1]:.3e})")
    r = np.sqrt(np.clip(w, 0.0, None))
    return v @ np.diag(r) @ v.conj().T


def _entry_tol(rhs: np.ndarray) -> float:
    return 1e-9 * max(1.0, float(np.max(np.abs(rhs))) if len(rhs) else 0.0)


def check_tao_positive(f, split: int | None = None) -> Verdict:
    """Off-diagonal block bound for a positive 2x2 block matrix.

    For F = [[A, B], [B*, C]] >= 0 with top-left block of size `split`,
    checks 2 s_i(B) <= s_i(F) for every i up to the number of singular
    values of B.
    """
    fm = _require_positive(f, "F")
    d = fm.shape[0]
    if split is None:
        split = d // 2
    if not 1 <= split <= d - 1:
        raise DimMismatch(f"split {split} does not cut a {d}x{d} matrix")
    b = fm[:split, split:]
    sb = linalg.sv_array(b)
    sf = linalg.eigh(fm).values
    margins = sf[: len(sb)] - 2.0 * sb
    ok = bool(len(margins) == 0 or float(np.min(margins)) >= -_entry_tol(sf))
    return Verdict(
        ineq_id="tao_positive", holds=ok, report=None, witness=_digest(fm),
        mode="matrix", entrywise_margins=margins, entrywise_holds=ok,
        extras={"split": split},
    )


def check_key(a, split: int | None = None) -> Verdict:
    """Doubled off-diagonal block of a Hermitian matrix vs its spread.

    For Hermitian A with corner block B (rows < split, columns >= split):
    2 s(B) weakly submajorized by the compact-model spread of A.
    """
    am = linalg.as_hermitian(a)
    d = am.shape[0]
    if split is None:
        split = d // 2
    if not 1 <= split <= d - 1:
        raise DimMismatch(f"split {split} does not cut a {d}x{d} matrix")
    b = am[:split, split:]
    lhs = _scale_seq(linalg.svd_values(b, horizon=2 * d), 2.0)
    rhs = _spr(am)
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="key", holds=rep.holds, report=rep, witness=_digest(am),
        mode="compact", extras={"split": split},
    )


def check_trace_pairing(a, b) -> Verdict:
    """tr(AB) bounded by the index-paired product of the two-sided scales."""
    am = linalg.as_hermitian(a)
    bm = linalg.as_hermitian(b)
    if am.shape != bm.shape:
        raise DimMismatch(f"shapes {am.shape} and {bm.shape} differ")
    d = am.shape[0]
    lhs = float(np.trace(am @ bm).real)
    sa = compact_scale(am, 2 * d)
    sb = compact_scale(bm, 2 * d)
    rhs = float(np.dot(sa.pos, sb.pos) + np.dot(sa.neg, sb.neg))
    margin = rhs - lhs
    tol = 1e-9 * max(1.0, abs(rhs), abs(lhs))
    wa = linalg.eigh(am).values
    cutoff = 1e-10 * max(1.0, float(np.max(np.abs(wa))))
    rank = int(np.sum(np.abs(wa) > cutoff))
    return Verdict(
        ineq_id="trace_pairing", holds=bool(margin >= -tol), report=None,
        witness=_digest(am, bm), mode="compact",
        extras={"lhs": lhs, "rhs": rhs, "margin": margin, "rank_a": rank},
    )


def check_commutator_scale(a, x) -> Verdict:
    """Positive scale of i[A,X] vs half the product of the two spreads."""
    am = linalg.as_hermitian(a)
    xm = linalg.as_hermitian(x)
    if am.shape != xm.shape:
        raise DimMismatch(f"shapes {am.shape} and {xm.shape} differ")
    comm = 1j * (am @ xm - xm @ am)
    lhs = SpreadSeq(values=compact_scale(comm).pos, tail=0.0, mode="compact")
    rhs = _scale_seq(seq_product(_spr(am), _spr(xm)), 0.5)
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="commutator_scale", holds=rep.holds, report=rep,
        witness=_digest(am, xm), mode="compact",
    )


_NORM_IDS = ("op", "schatten:1", "schatten:2")


def check_commutator_sv(a, x) -> Verdict:
    """s([A,X]) vs half the product of the doubled spreads, plus norm forms."""
    am = linalg.as_hermitian(a)
    xm = linalg.as_hermitian(x)
    if am.shape != xm.shape:
        raise DimMismatch(f"shapes {am.shape} and {xm.shape} differ")
    d = am.shape[0]
    lhs = linalg.svd_values(am @ xm - xm @ am, horizon=4 * d)
    rhs = _scale_seq(
        seq_product(_spr(linalg.direct_sum(am, am)), _spr(linalg.direct_sum(xm, xm))),
        0.5,
    )
    rep = submajorizes(lhs, rhs)
    norms = {}
    ok = rep.holds
    for nid in _NORM_IDS:
        lv = gauge(lhs, nid)
        bv = gauge(rhs, nid)
        good = bool(lv <= bv + 1e-9 * max(1.0, bv))
        norms[nid] = {"lhs": lv, "bound": bv, "ok": good}
        ok = ok and good
    return Verdict(
        ineq_id="commutator_sv", holds=bool(ok), report=rep,
        witness=_digest(am, xm), mode="compact", extras={"norms": norms},
    )


def check_mixed_commutator(a, b, x) -> Verdict:
    """s(AX-XB) vs spread-of-direct-sum times s(X); entrywise form recorded.

    The submajorization is the claim; the entrywise comparison is kept in the
    verdict because it can fail (and does, on the documented fixture).
    """
    am = linalg.as_hermitian(a)
    bm = linalg.as_hermitian(b)
    xm = linalg.as_cmatrix(x)
    m, n = am.shape[0], bm.shape[0]
    if xm.shape != (m, n):
        raise DimMismatch(f"X is {xm.shape}, expected {(m, n)}")
    k = 2 * (m + n)
    lhs_vals = linalg.sv_array(am @ xm - xm @ bm)
    lhs = linalg.svd_values(am @ xm - xm @ bm, horizon=k)
    rhs = seq_product(_spr(linalg.direct_sum(am, bm)), linalg.svd_values(xm, horizon=k))
    rep = submajorizes(lhs, rhs)
    q = len(lhs_vals)
    margins = rhs.values[:q] - lhs_vals
    e_ok = bool(q == 0 or float(np.min(margins)) >= -_entry_tol(rhs.values))
    return Verdict(
        ineq_id="mixed_commutator", holds=rep.holds, report=rep,
        witness=_digest(am, bm, xm), mode="compact",
        entrywise_margins=margins, entrywise_holds=e_ok,
    )


def _herm_parts(m) -> tuple[np.ndarray, np.ndarray]:
    c = linalg.as_cmatrix(m)
    if c.shape[0] != c.shape[1]:
        raise DimMismatch(f"matrix is {c.shape[0]}x{c.shape[1]}, not square")
    return (c + c.conj().T) / 2.0, (c - c.conj().T) / 2j


def check_general_commutator(a, b, x) -> Verdict:
    """s(AX-XB) for non-normal A, B via their Hermitian parts.

    Bound: (spread of the real parts' direct sum plus spread of the
    imaginary parts') times s(X). Also evaluates the scalar corollary
    using the extreme eigenvalues of each part, for the op, trace, and
    Frobenius norms.
    """
    a1, a2 = _herm_parts(a)
    b1, b2 = _herm_parts(b)
    xm = linalg.as_cmatrix(x)
    m, n = a1.shape[0], b1.shape[0]
    if xm.shape != (m, n):
        raise DimMismatch(f"X is {xm.shape}, expected {(m, n)}")
    k = 2 * (m + n)
    am = linalg.as_cmatrix(a)
    bm = linalg.as_cmatrix(b)
    lhs = linalg.svd_values(am @ xm - xm @ bm, horizon=k)
    spread_sum = _add_seq(
        _spr(linalg.direct_sum(a1, b1)), _spr(linalg.direct_sum(a2, b2))
    )
    rhs = seq_product(spread_sum, linalg.svd_values(xm, horizon=k))
    rep = submajorizes(lhs, rhs)
    w_a1, w_b1 = linalg.eigh(a1).values, linalg.eigh(b1).values
    w_a2, w_b2 = linalg.eigh(a2).values, linalg.eigh(b2).values
    scalar = (
        max(w_a1[0], w_b1[0]) - min(w_a1[-1], w_b1[-1])
        + max(w_a2[0], w_b2[0]) - min(w_a2[-1], w_b2[-1])
    )
    sx = linalg.sv_array(xm)
    corollary = {}
    ok = rep.holds
    for nid in _NORM_IDS:
        lv = gauge(lhs, nid)
        bv = scalar * gauge(SpreadSeq(values=sx), nid)
        good = bool(lv <= bv + 1e-9 * max(1.0, bv))
        corollary[nid] = {"lhs": lv, "bound": bv, "ok": good}
        ok = ok and good
    return Verdict(
        ineq_id="general_commutator", holds=bool(ok), report=rep,
        witness=_digest(am, bm, xm), mode="compact",
        extras={"scalar": float(scalar), "corollary": corollary},
    )


def check_unitary_conj(a, x) -> Verdict:
    """s(A - U*AU) with U = e^{iX}, against the doubled-spread product."""
    am = linalg.as_hermitian(a)
    xm = linalg.as_hermitian(x)
    if am.shape != xm.shape:
        raise DimMismatch(f"shapes {am.shape} and {xm.shape} differ")
    d = am.shape[0]
    u = linalg.unitary_exp(xm)
    lhs = linalg.svd_values(am - u.conj().T @ am @ u, horizon=4 * d)
    rhs = _scale_seq(
        seq_product(_spr(linalg.direct_sum(xm, xm)), _spr(linalg.direct_sum(am, am))),
        0.5,
    )
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="unitary_conj", holds=rep.holds, report=rep,
        witness=_digest(am, xm), mode="compact",
    )


def _pinv(b, cutoff: float = PINV_CUTOFF) -> np.ndarray:
    """Spectral pseudoinverse at a relative singular-value cutoff."""
    m = linalg.as_cmatrix(b)
    w, v = linalg.eigh(m.conj().T @ m)
    s = np.sqrt(np.clip(w, 0.0, None))
    smax = float(s[0]) if s.size else 0.0
    keep = s > cutoff * max(smax, 1e-300)
    if not np.any(keep):
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    vr = v[:, keep]
    sr = s[keep]
    ur = m @ vr / sr
    return vr @ np.diag(1.0 / sr) @ ur.conj().T


def douglas_factorize(a, b, tol: float = DOUGLAS_TOL) -> np.ndarray:
    """Solve A = BC for the unique C with range(C) orthogonal to ker(B).

    Args:
        a: matrix whose range must lie inside range(B).
        b: factor matrix; its pseudoinverse is cut off at PINV_CUTOFF.
        tol: residual gate, relative to max(1, ||A||_F).

    Raises:
        RangeNotContained: ||(I - BB+)A||_F exceeds the gate.
    """
    am = linalg.as_cmatrix(a)
    bm = linalg.as_cmatrix(b)
    if am.shape[0] != bm.shape[0]:
        raise DimMismatch(f"row counts {am.shape[0]} and {bm.shape[0]} differ")
    bp = _pinv(bm)
    c = bp @ am
    resid = float(np.linalg.norm(am - bm @ c))
    if resid > tol * max(1.0, float(np.linalg.norm(am))):
        raise RangeNotContained(f"projection residual {resid:.3e} exceeds the gate")
    return c


def _require_splitting(s, c, proj_tol: float = 1e-8) -> np.ndarray:
    """Validate C*C + S*S as an orthogonal projection; return it."""
    sm = linalg.as_cmatrix(s)
    cm = linalg.as_cmatrix(c)
    if sm.shape != cm.shape:
        raise DimMismatch(f"shapes {sm.shape} and {cm.shape} differ")
    p = cm.conj().T @ cm + sm.conj().T @ sm
    try:
        return linalg.as_projection(p, tol=proj_tol)
    except (NotProjection, NotHermitian) as exc:
        raise NotProjectionSum(f"C*C + S*S is not a projection: {exc}") from exc


def check_agm_projection(s, c, e) -> Verdict:
    """Doubled s(SEC*) vs the spread of the compressed operator plus a zero block."""
    em = linalg.as_hermitian(e)
    p = _require_splitting(s, c)
    if p.shape != em.shape:
        raise DimMismatch(f"shapes {p.shape} and {em.shape} differ")
    d = em.shape[0]
    sm, cm = linalg.as_cmatrix(s), linalg.as_cmatrix(c)
    k = 4 * d
    lhs = _scale_seq(linalg.svd_values(sm @ em @ cm.conj().T, horizon=k), 2.0)
    rhs = _spr(linalg.direct_sum(p @ em @ p, np.zeros((d, d))), k)
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="agm_projection", holds=rep.holds, report=rep,
        witness=_digest(sm, cm, em), mode="compact",
    )


def check_agm_pair(s, c, e1, e2=None) -> Verdict:
    """s(S E1 C + C E2 S) for a positive splitting pair C^2 + S^2 = P.

    With E1 = E2 = E the arithmetic-geometric-mean corollary
    s(Re(SEC)) weakly below s(E)/2 is evaluated as well, along with the
    identity spread(E oplus -E) = 2 s(E) it rests on.
    """
    sm = _require_positive(s, "S")
    cm = _require_positive(c, "C")
    p = _require_splitting(sm, cm)
    same = e2 is None
    e1m = linalg.as_hermitian(e1)
    e2m = e1m if same else linalg.as_hermitian(e2)
    if e1m.shape != p.shape or e2m.shape != p.shape:
        raise DimMismatch("operator dimensions do not match the splitting")
    d = p.shape[0]
    k = 4 * d
    lhs = linalg.svd_values(sm @ e1m @ cm + cm @ e2m @ sm, horizon=k)
    rhs = _scale_seq(_spr(linalg.direct_sum(p @ e1m @ p, -(p @ e2m @ p)), k), 0.5)
    rep = submajorizes(lhs, rhs)
    ok = rep.holds
    extras = {}
    if same:
        re_sec = (sm @ e1m @ cm + cm @ e1m @ sm) / 2.0
        coro = submajorizes(
            linalg.svd_values(re_sec, horizon=2 * d),
            _scale_seq(linalg.svd_values(e1m, horizon=2 * d), 0.5),
        )
        spr_pair = _spr(linalg.direct_sum(e1m, -e1m), 4 * d)
        doubled = _scale_seq(linalg.svd_values(e1m, horizon=4 * d), 2.0)
        defect = float(np.max(np.abs(spr_pair.values - doubled.values)))
        id_ok = bool(defect <= 1e-9 * max(1.0, float(np.max(doubled.values, initial=0.0))))
        extras = {
            "coro_holds": coro.holds,
            "identity_defect": defect,
            "identity_ok": id_ok,
        }
        ok = ok and coro.holds and id_ok
    return Verdict(
        ineq_id="agm_pair", holds=bool(ok), report=rep,
        witness=_digest(sm, cm, e1m, e2m), mode="compact", extras=extras,
    )


def check_agm_compact(s, c, e) -> Verdict:
    """Doubled s(SEC*) vs the compact-model spread of E itself.

    Also records: the compression monotonicity spread(PEP) <= spread(E)
    entrywise, the Frobenius comparison against the compact bound, and the
    identity-model Frobenius bound ||SEC*||_2 <= ||E||_2 / 2, which is only a
    theorem for positive E and fails on the documented indefinite fixture.
    """
    em = linalg.as_hermitian(e)
    p = _require_splitting(s, c)
    if p.shape != em.shape:
        raise DimMismatch(f"shapes {p.shape} and {em.shape} differ")
    d = em.shape[0]
    sm, cm = linalg.as_cmatrix(s), linalg.as_cmatrix(c)
    k = 2 * d
    sec = sm @ em @ cm.conj().T
    lhs = _scale_seq(linalg.svd_values(sec, horizon=k), 2.0)
    rhs = _spr(em, k)
    rep = submajorizes(lhs, rhs)
    spr_pep = _spr(p @ em @ p, k)
    margins = rhs.values - spr_pep.values
    sub_ok = bool(float(np.min(margins)) >= -_entry_tol(rhs.values)) if len(margins) else True
    fro_lhs = schatten(linalg.sv_array(sec), 2)
    compact_bound = 0.5 * schatten(rhs, 2)
    identity_bound = 0.5 * schatten(linalg.sv_array(em), 2)
    e_positive = _is_positive(em)
    extras = {
        "compression_monotone": sub_ok,
        "fro": {
            "lhs": fro_lhs,
            "compact_bound": compact_bound,
            "identity_bound": identity_bound,
            "compact_ok": bool(fro_lhs <= compact_bound + 1e-9 * max(1.0, compact_bound)),
            "identity_ok": bool(fro_lhs <= identity_bound + 1e-9 * max(1.0, identity_bound)),
        },
        "e_positive": e_positive,
    }
    ok = rep.holds and sub_ok and extras["fro"]["compact_ok"]
    if e_positive:
        pos_norms = {}
        for nid in _NORM_IDS:
            lv = gauge(linalg.svd_values(sec), nid)
            bv = 0.5 * gauge(linalg.svd_values(em), nid)
            good = bool(lv <= bv + 1e-9 * max(1.0, bv))
            pos_norms[nid] = {"lhs": lv, "bound": bv, "ok": good}
            ok = ok and good
        extras["positive_norms"] = pos_norms
    return Verdict(
        ineq_id="agm_compact", holds=bool(ok), report=rep,
        witness=_digest(sm, cm, em), mode="compact",
        entrywise_margins=margins, entrywise_holds=sub_ok, extras=extras,
    )


def check_agm_general(a, b, e) -> Verdict:
    """s(AEB*) vs half the spread of F^(1/2) E F^(1/2), F = A*A + B*B.

    Verified in the compact model and again with an explicit appended zero
    block; the entrywise comparison is recorded because it fails on the
    documented 3x3 fixture. For positive E the equivalent formulation
    2 s(AEB*) weakly below s(E^(1/2) F E^(1/2)) is cross-checked.
    """
    am = linalg.as_cmatrix(a)
    bm = linalg.as_cmatrix(b)
    em = linalg.as_hermitian(e)
    d = em.shape[0]
    if am.shape != (d, d) or bm.shape != (d, d):
        raise DimMismatch("A, B, E must share one square dimension")
    f2 = am.conj().T @ am + bm.conj().T @ bm
    froot = _psd_sqrt(f2)
    g = froot @ em @ froot
    gh = linalg.as_hermitian(g, tol=1e-8)
    aeb = am @ em @ bm.conj().T
    k = 2 * d
    lhs = linalg.svd_values(aeb, horizon=k)
    rhs = _scale_seq(_spr(gh, k), 0.5)
    rep = submajorizes(lhs, rhs)
    rhs0 = _scale_seq(_spr(linalg.direct_sum(gh, np.zeros((d, d))), 4 * d), 0.5)
    rep0 = submajorizes(linalg.svd_values(aeb, horizon=4 * d), rhs0)
    s_aeb = linalg.sv_array(aeb)
    spr_g = _spr(gh, k).values
    margins = spr_g[:d] - 2.0 * s_aeb
    e_ok = bool(float(np.min(margins)) >= -_entry_tol(spr_g)) if len(margins) else True
    ok = rep.holds and rep0.holds
    extras = {"zero_block_holds": rep0.holds}
    if _is_positive(em):
        eroot = _psd_sqrt(em)
        cross = submajorizes(
            _scale_seq(linalg.svd_values(aeb, horizon=k), 2.0),
            linalg.svd_values(eroot @ f2 @ eroot, horizon=k),
        )
        extras["positive_cross_holds"] = cross.holds
        ok = ok and cross.holds
    return Verdict(
        ineq_id="agm_general", holds=bool(ok), report=rep,
        witness=_digest(am, bm, em), mode="compact",
        entrywise_margins=margins, entrywise_holds=e_ok, extras=extras,
    )


def check_zhan(e, f) -> Verdict:
    """s(E - F) vs the compact-model spread of E oplus F."""
    em = linalg.as_hermitian(e)
    fm = linalg.as_hermitian(f)
    if em.shape != fm.shape:
        raise DimMismatch(f"shapes {em.shape} and {fm.shape} differ")
    d = em.shape[0]
    k = 4 * d
    lhs = linalg.svd_values(em - fm, horizon=k)
    rhs = _spr(linalg.direct_sum(em, fm), k)
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="zhan", holds=rep.holds, report=rep,
        witness=_digest(em, fm), mode="compact",
    )


def check_offdiag_projection(e, p) -> Verdict:
    """Doubled corner s-values vs the d-dimensional spread of E.

    This is the bounded-operator form: the spread is taken in the matrix
    model (no zero padding of the spectrum), and the comparison runs over
    the ceil(d/2) entries that model carries. The corner PE(I-P) has rank
    at most floor(d/2)-ish, never more than ceil(d/2); the discarded
    singular values are asserted to vanish.
    """
    em = linalg.as_hermitian(e)
    pm = linalg.as_projection(p)
    if em.shape != pm.shape:
        raise DimMismatch(f"shapes {em.shape} and {pm.shape} differ")
    d = em.shape[0]
    half = math.ceil(d / 2)
    corner = pm @ em @ (np.eye(d) - pm)
    sv = linalg.sv_array(corner)
    # rank(PE(I-P)) <= floor(d/2), so the discarded values are noise; they
    # come from the Gram matrix, whose zero roots float at sqrt(eps) * scale
    dropped = float(np.max(sv[half:], initial=0.0))
    lhs = 2.0 * sv[:half]
    rhs = spread_plus(matrix_scale(em)).values
    rep = submajorizes(lhs, rhs)
    noise_ok = dropped <= 1e-7 * max(1.0, float(np.max(sv, initial=0.0)))
    return Verdict(
        ineq_id="equiv1", holds=bool(rep.holds and noise_ok), report=rep,
        witness=_digest(em, pm), mode="matrix", extras={"dropped_sv": dropped},
    )


def check_offdiag_compact(e, p) -> Verdict:
    """Doubled corner s-values vs the compact-model spread of E."""
    em = linalg.as_hermitian(e)
    pm = linalg.as_projection(p)
    if em.shape != pm.shape:
        raise DimMismatch(f"shapes {em.shape} and {pm.shape} differ")
    d = em.shape[0]
    corner = pm @ em @ (np.eye(d) - pm)
    lhs = _scale_seq(linalg.svd_values(corner, horizon=2 * d), 2.0)
    rhs = _spr(em)
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="equiv_compact1", holds=rep.holds, report=rep,
        witness=_digest(em, pm), mode="compact",
    )


def check_identity_split(s, c, e) -> Verdict:
    """Full splitting C*C + S*S = I: doubled s(SEC*) vs spread of E plus a zero block."""
    em = linalg.as_hermitian(e)
    p = _require_splitting(s, c)
    d = em.shape[0]
    if p.shape != em.shape:
        raise DimMismatch(f"shapes {p.shape} and {em.shape} differ")
    if float(np.max(np.abs(p - np.eye(d)))) > 1e-8:
        raise NotProjectionSum("C*C + S*S must equal the identity here")
    sm, cm = linalg.as_cmatrix(s), linalg.as_cmatrix(c)
    k = 4 * d
    lhs = _scale_seq(linalg.svd_values(sm @ em @ cm.conj().T, horizon=k), 2.0)
    rhs = _spr(linalg.direct_sum(em, np.zeros((d, d))), k)
    rep = submajorizes(lhs, rhs)
    return Verdict(
        ineq_id="equiv5", holds=rep.holds, report=rep,
        witness=_digest(sm, cm, em), mode="compact",
    )


def control_kittaneh_positive(c, d, x) -> Verdict:
    """Entrywise s_i(CX - XD) <= ||X|| s_i(C oplus D) for positive C, D."""
    cm = _require_positive(c, "C")
    dm = _require_positive(d, "D")
    xm = linalg.as_cmatrix(x)
    if xm.shape != (cm.shape[0], dm.shape[0]):
        raise DimMismatch(f"X is {xm.shape}, expected {(cm.shape[0], dm.shape[0])}")
    lhs = linalg.sv_array(cm @ xm - xm @ dm)
    rhs = linalg.opnorm(xm) * linalg.sv_array(linalg.direct_sum(cm, dm))[: len(lhs)]
    margins = rhs - lhs
    ok = bool(len(margins) == 0 or float(np.min(margins)) >= -_entry_tol(rhs))
    return Verdict(
        ineq_id="control_kittaneh", holds=ok, report=None,
        witness=_digest(cm, dm, xm), mode="matrix",
        entrywise_margins=margins, entrywise_holds=ok,
    )


def control_bhatia_kittaneh(a, b) -> Verdict:
    """Entrywise 2 s_i(AB*) <= s_i(A*A + B*B)."""
    am = linalg.as_cmatrix(a)
    bm = linalg.as_cmatrix(b)
    if am.shape != bm.shape:
        raise DimMismatch(f"shapes {am.shape} and {bm.shape} differ")
    lhs = 2.0 * linalg.sv_array(am @ bm.conj().T)
    rhs = linalg.sv_array(am.conj().T @ am + bm.conj().T @ bm)[: len(lhs)]
    margins = rhs - lhs
    ok = bool(len(margins) == 0 or float(np.min(margins)) >= -_entry_tol(rhs))
    return Verdict(
        ineq_id="control_bhatia_kittaneh", holds=ok, report=None,
        witness=_digest(am, bm), mode="matrix",
        entrywise_margins=margins, entrywise_holds=ok,
    )


def control_strict_gap(e) -> Verdict:
    """Strict Frobenius gap ||E||_2 < g_2(spread(E)) for indefinite E."""
    em = linalg.as_hermitian(e)
    w = linalg.eigh(em).values
    if not (w.size and w[0] > 0.0 and w[-1] < 0.0):
        raise NotPositive("an indefinite operator (both signs present) is required")
    fro = schatten(linalg.sv_array(em), 2)
    g2 = schatten(_spr(em), 2)
    margin = g2 - fro
    ok = bool(margin > 1e-9 * fro)
    return Verdict(
        ineq_id="control_strict_gap", holds=ok, report=None,
        witness=_digest(em), mode="compact",
        extras={"fro": fro, "g2_spread": g2, "margin": margin},
    )


EQUIV_IDS = (
    "equiv1", "equiv2", "equiv3", "equiv4", "equiv5",
    "equiv_compact1", "equiv_compact2",
)


def equivalence_suite(seed: int, trials: int = 200, dims: tuple[int, int] = (2, 8)) -> list[Verdict]:
    """Fuzz each member of the equivalent-inequalities family independently.

    Returns one aggregated Verdict per family, in EQUIV_IDS order; a family
    holds when every trial holds.
    """
    from . import harness

    out = []
    for fam in EQUIV_IDS:
        summary = harness.fuzz(fam, trials=trials, dims=dims, seed=seed)
        out.append(
            Verdict(
                ineq_id=fam,
                holds=summary.failures == 0,
                report=None,
                witness=_digest(np.array([[seed, trials]], dtype=float)),
                mode="matrix" if fam == "equiv1" else "compact",
                extras={
                    "trials": summary.trials,
                    "failures": summary.failures,
                    "worst_margin": summary.worst_margin,
                    "worst_seed": summary.worst_seed,
                },
            )
        )
    return out
