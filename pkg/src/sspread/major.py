"""Rearrangements, partial-sum margins, and (sub)majorization verdicts.

Conventions by input category:
    raw 1-d arrays      - R^n convention: equal lengths required, plain sorted
                          partial sums, classic majorization includes total-sum
                          equality.
    SpreadSeq           - non-negative one-sided sequences; zero-padding to a
                          common horizon is legal in compact mode only; tails
                          are compared and feed the tail verdict.
    TwoSidedSeq         - two-sided sequences over Z0. Upper partial sums in
                          compact/diag mode clip entries at 0 from below
                          (an infinite zero pool is always available to a
                          k-subset), lower sums clip at 0 from above. Matrix
                          mode uses the plain 2K-entry multiset.
    Interleaved         - a pair (a, b) occupying the negative/positive index
                          rays; flattened to its multiset and judged with the
                          compact clipping rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import HorizonMismatch, ModeError
from .spectra import TAIL_TOL, SpreadSeq, TwoSidedSeq


def maj_tol(b_inf: float, k: int) -> float:
    """Comparison tolerance scaled to the bound's magnitude and horizon."""
    return 1e-9 * max(1.0, abs(b_inf) * max(k, 1))


@dataclass(frozen=True)
class Interleaved:
    """Two-sided sequence built from a pair: a on indices < 0, b on indices > 0."""

    neg_values: np.ndarray
    pos_values: np.ndarray
    neg_tail: float = 0.0
    pos_tail: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "neg_values", np.asarray(self.neg_values, dtype=float))
        object.__setattr__(self, "pos_values", np.asarray(self.pos_values, dtype=float))

    def multiset(self) -> np.ndarray:
        return np.concatenate([self.neg_values, self.pos_values])


@dataclass(frozen=True)
class MajorizationReport:
    """Margins of a (sub)majorization comparison a vs b.

    margins_upper[k-1] = (sum of k largest of b) - (sum of k largest of a);
    margins_lower, for two-sided or classic majorization, is the mirrored
    lower-sum slack (a's lower sums minus b's). All margins must be
    >= -tol for the relation to hold. worst_k is 1-based; a negative value
    -k marks the k-th lower margin as the worst.
    """

    kind: str
    margins_upper: np.ndarray
    margins_lower: np.ndarray | None
    holds: bool
    worst_k: int
    tail_verdict: str
    tol: float
    sum_defect: float | None = None

    def min_margin(self) -> float:
        m = float(np.min(self.margins_upper)) if len(self.margins_upper) else math.inf
        if self.margins_lower is not None and len(self.margins_lower):
            m = min(m, float(np.min(self.margins_lower)))
        return m

    def holds_at(self, tol: float) -> bool:
        """Re-judge the stored margins at a different tolerance."""
        if self.tail_verdict == "tail_violated":
            return False
        ok = self.min_margin() >= -tol
        if self.sum_defect is not None:
            ok = ok and abs(self.sum_defect) <= tol
        return ok


def dec_rearrange(x) -> np.ndarray:
    """Decreasing rearrangement of a finite real multiset."""
    a = np.asarray(x, dtype=float).ravel()
    return np.sort(a)[::-1]


def updown_rearrange(x, k: int | None = None) -> TwoSidedSeq:
    """Up-down rearrangement of a finitely supported sequence.

    Positive entries are listed downward on the positive index ray, negative
    entries upward on the negative ray, zeros fill both sides; this is the
    scale of the diagonal operator the multiset defines. Accepts a flat
    multiset, an Interleaved pair, or a compact TwoSidedSeq.
    """
    if isinstance(x, TwoSidedSeq):
        if x.mode != "compact":
            raise ModeError(f"up-down rearrangement undefined in {x.mode} mode")
        vals = np.concatenate([x.pos, x.neg])
    elif isinstance(x, Interleaved):
        vals = x.multiset()
    else:
        vals = np.asarray(x, dtype=float).ravel()
    if k is None:
        k = len(vals)
    plus = np.sort(vals[vals > 0.0])[::-1]
    minus = np.sort(vals[vals < 0.0])
    if k < max(len(plus), len(minus)):
        raise HorizonMismatch(f"horizon {k} cannot hold {len(vals)} signed entries")
    pos = np.concatenate([plus, np.zeros(k - len(plus))])
    neg = np.concatenate([minus, np.zeros(k - len(minus))])
    return TwoSidedSeq(pos=pos, neg=neg, pos_tail=0.0, neg_tail=0.0, K=k, mode="compact")


def interleave(a, b) -> Interleaved:
    """Pair two equal-length sequences into a two-sided sequence (a | b)."""
    av, at = _values_and_tail(a)
    bv, bt = _values_and_tail(b)
    if len(av) != len(bv):
        raise HorizonMismatch(f"lengths {len(av)} and {len(bv)} differ")
    return Interleaved(neg_values=av, pos_values=bv, neg_tail=at, pos_tail=bt)


def seq_product(a, b) -> SpreadSeq:
    """Entrywise product of two non-negative non-increasing sequences."""
    av, at = _values_and_tail(a)
    bv, bt = _values_and_tail(b)
    if len(av) != len(bv):
        raise HorizonMismatch(f"lengths {len(av)} and {len(bv)} differ")
    mode = "compact"
    for s in (a, b):
        if isinstance(s, SpreadSeq) and s.mode != "compact":
            mode = s.mode
    return SpreadSeq(values=av * bv, tail=at * bt, mode=mode)


def _values_and_tail(x) -> tuple[np.ndarray, float]:
    if isinstance(x, SpreadSeq):
        return x.values, x.tail
    return np.asarray(x, dtype=float).ravel(), 0.0


def _spread_pair(a: SpreadSeq, b: SpreadSeq) -> tuple[np.ndarray, np.ndarray]:
    if len(a) == len(b):
        return a.values, b.values
    k = max(len(a), len(b))
    return a.padded(k), b.padded(k)


def _upper_sums_twosided(t: TwoSidedSeq | Interleaved) -> np.ndarray:
    if isinstance(t, TwoSidedSeq) and t.mode == "matrix":
        vals = np.sort(np.concatenate([t.pos, t.neg]))[::-1]
    else:
        vals = np.maximum(dec_rearrange(_multiset(t)), 0.0)
    return np.cumsum(vals)

def _lower_sums_twosided(t: TwoSidedSeq | Interleaved) -> np.ndarray:
    if isinstance(t, TwoSidedSeq) and t.mode == "matrix":
        vals = np.sort(np.concatenate([t.pos, t.neg]))
    else:
        vals = np.minimum(np.sort(_multiset(t)), 0.0)
    return np.cumsum(vals)


def _multiset(t: TwoSidedSeq | Interleaved) -> np.ndarray:
    if isinstance(t, Interleaved):
        return t.multiset()
    return np.concatenate([t.pos, t.neg])


def _sup(v: np.ndarray) -> float:
    return float(np.max(np.abs(v))) if len(v) else 0.0


def _pad_twosided(t: TwoSidedSeq, k: int) -> TwoSidedSeq:
    if t.K == k:
        return t
    if t.mode != "compact":
        raise ModeError(f"zero-padding undefined in {t.mode} mode")
    if k < t.K:
        raise HorizonMismatch(f"cannot shrink horizon {t.K} to {k}")
    z = np.zeros(k - t.K)
    return TwoSidedSeq(
        pos=np.concatenate([t.pos, z]), neg=np.concatenate([t.neg, z]),
        pos_tail=0.0, neg_tail=0.0, K=k, mode="compact",
    )


def _tail_verdict(a_tail, b_tail, a_settled, b_settled) -> str:
    if a_tail is not None and b_tail is not None and a_tail > b_tail + TAIL_TOL:
        return "tail_violated"
    if a_settled and b_settled:
        return "conclusive"
    return "horizon_limited"


def _finish(kind, upper, lower, verdict, tol, sum_defect=None) -> MajorizationReport:
    worst_k = 1
    worst = math.inf
    for i, m in enumerate(upper):
        if m < worst:
            worst, worst_k = float(m), i + 1
    if lower is not None:
        for i, m in enumerate(lower):
            if m < worst:
                worst, worst_k = float(m), -(i + 1)
    holds = verdict != "tail_violated" and worst >= -tol
    if sum_defect is not None:
        holds = holds and abs(sum_defect) <= tol
    return MajorizationReport(
        kind=kind, margins_upper=np.asarray(upper, dtype=float),
        margins_lower=None if lower is None else np.asarray(lower, dtype=float),
        holds=bool(holds), worst_k=worst_k, tail_verdict=verdict, tol=tol,
        sum_defect=sum_defect,
    )


def submajorizes(a, b, tol: float | None = None) -> MajorizationReport:
    """Weak submajorization a <=_w b with margin bookkeeping.

    Accepts a pair of raw arrays (equal length), SpreadSeqs, TwoSidedSeqs
    (same mode), or Interleaved pairs. Margins are the bound's partial sums
    minus the candidate's; the relation holds when every margin clears -tol
    and the tails are compatible.
    """
    if isinstance(a, (TwoSidedSeq, Interleaved)) or isinstance(b, (TwoSidedSeq, Interleaved)):
        return _sub_twosided(a, b, tol)
    if isinstance(a, SpreadSeq) and isinstance(b, SpreadSeq):
        av, bv = _spread_pair(a, b)
        verdict = _tail_verdict(a.tail, b.tail, a.settled(), b.settled())
        b_inf = max(_sup(bv), abs(b.tail))
        t = maj_tol(b_inf, len(bv)) if tol is None else tol
        upper = np.cumsum(dec_rearrange(bv)) - np.cumsum(dec_rearrange(av))
        return _finish("submajorization", upper, None, verdict, t)
    av = np.asarray(a, dtype=float).ravel()
    bv = np.asarray(b, dtype=float).ravel()
    if len(av) != len(bv):
        raise HorizonMismatch(
            f"plain arrays compare at equal length only ({len(av)} vs {len(bv)})"
        )
    b_inf = float(np.max(np.abs(bv))) if len(bv) else 0.0
    t = maj_tol(b_inf, len(bv)) if tol is None else tol
    upper = np.cumsum(dec_rearrange(bv)) - np.cumsum(dec_rearrange(av))
    return _finish("submajorization", upper, None, "conclusive", t)


def _sub_twosided(a, b, tol) -> MajorizationReport:
    a, b = _align_twosided(a, b)
    ua, ub = _upper_sums_twosided(a), _upper_sums_twosided(b)
    k = min(len(ua), len(ub))
    upper = ub[:k] - ua[:k]
    at, bt = _pos_tail(a), _pos_tail(b)
    verdict = _tail_verdict(at, bt, _settled(a), _settled(b))
    b_inf = max(_sup(_multiset(b)), abs(bt or 0.0))
    t = maj_tol(b_inf, k) if tol is None else tol
    return _finish("submajorization", upper, None, verdict, t)


def _align_twosided(a, b):
    if isinstance(a, TwoSidedSeq) and isinstance(b, TwoSidedSeq):
        if a.mode != b.mode:
            raise ModeError(f"modes differ: {a.mode} vs {b.mode}")
        if a.K != b.K:
            if a.mode != "compact":
                raise HorizonMismatch(f"horizons {a.K} and {b.K} differ in {a.mode} mode")
            k = max(a.K, b.K)
            a, b = _pad_twosided(a, k), _pad_twosided(b, k)
    return a, b


def _pos_tail(t) -> float | None:
    if isinstance(t, Interleaved):
        return max(t.pos_tail, t.neg_tail)
    return t.pos_tail


def _settled(t) -> bool:
    if isinstance(t, Interleaved):
        return True
    return t.settled()


def majorizes(a, b, tol: float | None = None) -> MajorizationReport:
    """Majorization a <= b: upper and lower partial-sum conditions.

    For raw equal-length arrays this is classic R^n majorization and the
    total sums must agree (sum_defect tracks the difference). For
    TwoSidedSeqs (or Interleaved pairs) it is the two-sided relation: b's
    upper sums dominate and b's lower sums are dominated, with no total-sum
    condition.
    """
    if isinstance(a, (TwoSidedSeq, Interleaved)) or isinstance(b, (TwoSidedSeq, Interleaved)):
        a, b = _align_twosided(a, b)
        ua, ub = _upper_sums_twosided(a), _upper_sums_twosided(b)
        la, lb = _lower_sums_twosided(a), _lower_sums_twosided(b)
        k = min(len(ua), len(ub))
        upper = ub[:k] - ua[:k]
        lower = la[:k] - lb[:k]
        t = maj_tol(_sup(_multiset(b)), k) if tol is None else tol
        verdict = "conclusive" if _settled(a) and _settled(b) else "horizon_limited"
        if _pos_tail(a) is not None and _pos_tail(b) is not None:
            if _pos_tail(a) > _pos_tail(b) + TAIL_TOL:
                verdict = "tail_violated"
        return _finish("majorization", upper, lower, verdict, t)
    av, at_ = _values_and_tail(a)
    bv, bt_ = _values_and_tail(b)
    if len(av) != len(bv):
        raise HorizonMismatch(
            f"plain arrays compare at equal length only ({len(av)} vs {len(bv)})"
        )
    b_inf = float(np.max(np.abs(bv))) if len(bv) else 0.0
    t = maj_tol(b_inf, len(bv)) if tol is None else tol
    upper = np.cumsum(dec_rearrange(bv)) - np.cumsum(dec_rearrange(av))
    lower = np.cumsum(np.sort(av)) - np.cumsum(np.sort(bv))
    defect = float(np.sum(av) - np.sum(bv))
    return _finish("majorization", upper, lower, "conclusive", t, sum_defect=defect)


def ky_fan(a, k: int) -> float:
    """Ky Fan value: sum of the k largest entries of a non-negative sequence."""
    if k < 1:
        raise ValueError("k must be >= 1")
    v, _ = _values_and_tail(a)
    return float(np.sum(dec_rearrange(v)[:k]))


def schatten(a, p: float) -> float:
    """(sum a_i^p)^(1/p) for p >= 1; math.inf gives the top entry."""
    if p != math.inf and p < 1.0:
        raise ValueError(f"p = {p} is below 1, not a norm")
    v, _ = _values_and_tail(a)
    if len(v) == 0:
        return 0.0
    if p == math.inf:
        return float(np.max(v))
    return float(np.sum(np.abs(v) ** p) ** (1.0 / p))


def gauge(a, norm_id: str) -> float:
    """Evaluate a named symmetric gauge: 'op', 'kyfan:k', or 'schatten:p'."""
    if norm_id == "op":
        return ky_fan(a, 1)
    if norm_id.startswith("kyfan:"):
        return ky_fan(a, int(norm_id.split(":", 1)[1]))
    if norm_id.startswith("schatten:"):
        arg = norm_id.split(":", 1)[1]
        return schatten(a, math.inf if arg in ("inf", "oo") else float(arg))
    raise ValueError(f"unknown gauge {norm_id!r}")
