"""Closed-form generating functions, basis-driven assembly, identity checks,
and three-route coefficient-by-coefficient verification.

Every class admits three independent series routes:
  oracle  - brute-force enumeration of members,
  basis   - basis polynomials fed through the separability machinery,
  closed  - the closed-form multi-sum evaluated with exact series arithmetic.
``verify`` compares all three term-by-term.

Erratum: the printed closed form for the last-occurrence bounded-run class
carries a stray q^m factor on its overlined terms (the prefactor q^m is
already outside the braces).  The default evaluation follows the
proof-level per-(m, s) formula, which the oracle confirms; the literal
printed form is kept available as theorem id ``"Lr-literal"`` and is
expected to mismatch.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources

from .bases import basis_gf
from .objects import ClassSpec, enumerate_g, refined_gf
from .series import Series, g_poly, gaussian, monomial

# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    subject: object             # ClassSpec or identity descriptor dict
    trunc: int
    routes: tuple
    status: str                 # "match" | "mismatch"
    first_discrepancy: dict | None
    elapsed: float

    @property
    def matched(self):
        return self.status == "match"

    def to_json_dict(self):
        subject = (self.subject.to_json_dict()
                   if isinstance(self.subject, ClassSpec) else self.subject)
        return {
            "spec": subject,
            "N": self.trunc,
            "routes": list(self.routes),
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def compare_routes(named_series, subject, trunc, started=None):
    """Build a report from named series; the first discrepancy is the
    lexicographically least (q, marks) key where any two routes differ."""
    names = tuple(named_series)
    keys = set()
    for s in named_series.values():
        keys.update(s.terms)
    disc = None
    for key in sorted(keys):
        coeffs = {name: named_series[name].terms.get(key, 0)
                  for name in names}
        if len(set(coeffs.values())) > 1:
            q, marks = key
            disc = {"q": q, "marks": list(marks),
                    "coeffs": {name: str(c) for name, c in coeffs.items()}}
            break
    elapsed = (time.perf_counter() - started) if started else 0.0
    return VerificationReport(
        subject, trunc, names,
        "match" if disc is None else "mismatch", disc, elapsed)


# ---------------------------------------------------------------------------
# closed forms (theorem level)
# ---------------------------------------------------------------------------

def _inverse_pochhammer(series, k, m):
    """Apply the factor 1/(q^k; q^k)_m."""
    for i in range(1, m + 1):
        if k * i > series.trunc:
            break
        series = series.div_one_minus(k * i)
    return series


def closed_form_gf(spec, trunc, theorem_id=None):
    """The displayed closed-form series for the class, exactly truncated.

    ``theorem_id`` defaults to the class kind; pass ``"Lr-literal"`` to
    evaluate the printed (uncorrected) last-occurrence bounded-run form.
    """
    if theorem_id is None:
        theorem_id = spec.kind
    dispatch = {
        "P": _closed_p, "Pprime": _closed_pprime,
        "R": _closed_r, "Rr": _closed_rr,
        "Fbar": _closed_fbar, "Lbar": _closed_lbar,
        "Fr": _closed_fr,
        "Lr": lambda s, n: _closed_lr(s, n, literal=False),
        "Lr-literal": lambda s, n: _closed_lr(s, n, literal=True),
    }
    if theorem_id not in dispatch:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    base = theorem_id.split("-")[0]
    if base != spec.kind:
        raise ValueError(f"theorem {theorem_id!r} does not apply to "
                         f"{spec.kind}")
    return dispatch[theorem_id](spec, trunc)


def _closed_p(spec, trunc):
    a, b, k, r = spec.a, spec.b, spec.k, spec.r
    markers = spec.markers
    total = Series.one(trunc, markers)
    m = 1
    while m * a <= trunc:
        inner = monomial(m * a, (m, 0), 1, trunc, markers)
        for s in range(1, m + 1):
            for h in range((r - 1) * s + 1):
                if m - h - s + 1 < s:
                    break
                e = (m - h - s) * a + (h + s) * b + k * (s * s - s)
                if e > trunc:
                    break
                gauss = gaussian(m - h - s + 1, s, k, trunc, markers)
                g = g_poly(k, r, h, s, trunc, markers)
                if gauss.is_zero() or g.is_zero():
                    continue
                mono = monomial(e, (m - h - s, h + s), 1, trunc, markers)
                inner = inner + mono * gauss * g
        total = total + _inverse_pochhammer(inner, k, m)
        m += 1
    return total


def _closed_pprime(spec, trunc):
    a, b, k, r = spec.a, spec.b, spec.k, spec.r
    markers = spec.markers
    total = Series.one(trunc, markers)
    m = 1
    while m * a <= trunc:
        inner = monomial(m * b, (0, m), 1, trunc, markers) \
            if m * b <= trunc else Series.zero(trunc, markers)
        for s in range(1, m + 1):
            for h in range((r - 1) * s + 1):
                if m - h - s < s - 1:
                    break
                e = (h + s) * a + (m - h - s) * b + k * (s - 1) ** 2
                if e > trunc:
                    continue
                g = g_poly(k, r, h, s, trunc, markers)
                if g.is_zero():
                    continue
                bracket = gaussian(m - h - s, s - 1, k, trunc, markers)
                extra = k * (h + 2 * s - 1)
                if extra <= trunc:
                    bracket = bracket + \
                        monomial(extra, (0,) * len(markers), 1, trunc,
                                 markers) * \
                        gaussian(m - h - s, s, k, trunc, markers)
                if bracket.is_zero():
                    continue
                mono = monomial(e, (h + s, m - h - s), 1, trunc, markers)
                inner = inner + mono * bracket * g
        total = total + _inverse_pochhammer(inner, k, m)
        m += 1
    return total


def _closed_r(spec, trunc):
    a, b, c, k = spec.a, spec.b, spec.c, spec.k
    markers = spec.markers
    total = Series.one(trunc, markers)
    m = 1
    while m * a <= trunc:
        inner = Series.zero(trunc, markers)
        for s in range(m + 1):
            for h in range(m - s + 1):
                e = (m - h - s) * a + h * b + s * c + k * (s * s - s) // 2
                if e > trunc:
                    break
                left = gaussian(h + s, s, k, trunc, markers)
                right = gaussian(m - h, s, k, trunc, markers)
                if left.is_zero() or right.is_zero():
                    continue
                mono = monomial(e, (m - h - s, h, s), 1, trunc, markers)
                inner = inner + mono * left * right
        total = total + _inverse_pochhammer(inner, k, m)
        m += 1
    return total


def _closed_rr(spec, trunc):
    a, b, c, k, r = spec.a, spec.b, spec.c, spec.k, spec.r
    markers = spec.markers
    total = Series.one(trunc, markers)
    m = 1
    while m * a <= trunc:
        inner = Series.zero(trunc, markers)
        for s in range(m + 1):
            for h in range(m - s + 1):
                e = (m - h - s) * a + h * b + s * c + k * (s * s - s) // 2
                if e > trunc:
                    break
                right = gaussian(m - h, s, k, trunc, markers)
                g = g_poly(k, r, h, s + 1, trunc, markers)
                if right.is_zero() or g.is_zero():
                    continue
                mono = monomial(e, (m - h - s, h, s), 1, trunc, markers)
                inner = inner + mono * right * g
        total = total + _inverse_pochhammer(inner, k, m)
        m += 1
    return total


def _closed_fbar(spec, trunc):
    markers = spec.markers
    total = Series.one(trunc, markers)
    for m in range(1, trunc + 1):
        inner = Series.zero(trunc, markers)
        for s in range(m + 1):
            e = m + s * s - s
            if e > trunc or m - s + 1 < s:
                break
            gauss = gaussian(m - s + 1, s, 1, trunc, markers)
            inner = inner + monomial(e, (s,), 1, trunc, markers) * gauss
        total = total + _inverse_pochhammer(inner, 1, m)
    return total


def _closed_lbar(spec, trunc):
    markers = spec.markers
    total = Series.one(trunc, markers)
    for m in range(1, trunc + 1):
        inner = Series.zero(trunc, markers)
        for s in range(m + 1):
            # the two bracket terms carry exponents m+(s-1)^2 and m+s^2
            e1 = m + (s - 1) ** 2
            e2 = m + s * s
            if e1 <= trunc:
                inner = inner + monomial(e1, (s,), 1, trunc, markers) * \
                    gaussian(m - s, s - 1, 1, trunc, markers)
            if e2 <= trunc:
                inner = inner + monomial(e2, (s,), 1, trunc, markers) * \
                    gaussian(m - s, s, 1, trunc, markers)
            if min(e1, e2) > trunc:
                break
        total = total + _inverse_pochhammer(inner, 1, m)
    return total


def _closed_fr(spec, trunc):
    r = spec.r
    markers = spec.markers
    total = Series.one(trunc, markers)
    for m in range(1, trunc + 1):
        inner = Series.zero(trunc, markers)
        for s in range(m + 1):
            e = m + (s * s - s) // 2
            if e > trunc:
                break
            g = g_poly(1, r, m - s, s + 1, trunc, markers)
            if g.is_zero():
                continue
            inner = inner + monomial(e, (s,), 1, trunc, markers) * g
        total = total + _inverse_pochhammer(inner, 1, m)
    return total


def _closed_lr(spec, trunc, literal=False):
    r = spec.r
    markers = spec.markers
    total = Series.one(trunc, markers)
    for m in range(1, trunc + 1):
        inner = Series.zero(trunc, markers)
        if m <= r - 1 and m <= trunc:
            inner = inner + monomial(m, (0,), 1, trunc, markers)
        extra = m if literal else 0
        for s in range(1, m + 1):
            e = m + (s * s - s) // 2 + extra
            if e > trunc:
                break
            g = g_poly(1, r, m - s, s, trunc, markers)
            if not g.is_zero():
                inner = inner + monomial(e, (s,), 1, trunc, markers) * g
            for j in range(1, r):
                ej = 2 * m - j + (s * s - s) // 2 + extra
                if ej > trunc:
                    continue
                gj = g_poly(1, r, m - j - s, s, trunc, markers)
                if gj.is_zero():
                    continue
                inner = inner + monomial(ej, (s,), 1, trunc, markers) * gj
        total = total + _inverse_pochhammer(inner, 1, m)
    return total


# ---------------------------------------------------------------------------
# closed forms (basis / lemma level)
# ---------------------------------------------------------------------------

def basis_closed_form(formula_id, spec, m, trunc, s=None):
    """Lemma-level basis polynomial for the m-part basis (or its slice).

    Partition-class ids: bp-total, bp-smallest-a, bp-smallest-b,
    bpp-total, bpp-smallest-a, bpp-smallest-b, br-total, brr-total.
    Overpartition ids (per overline count s, summed over s when omitted):
    bf-over, bf-run, bl-over, bl-run.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    partition_ids = {
        "bp-total": ("P", _bp_total),
        "bp-smallest-a": ("P", _bp_smallest_a),
        "bp-smallest-b": ("P", _bp_smallest_b),
        "bpp-total": ("Pprime", _bpp_total),
        "bpp-smallest-a": ("Pprime", _bpp_smallest_a),
        "bpp-smallest-b": ("Pprime", _bpp_smallest_b),
        "br-total": ("R", _br_total),
        "brr-total": ("Rr", _brr_total),
    }
    over_ids = {
        "bf-over": ("Fbar", _bf_over_ms),
        "bf-run": ("Fr", _bf_run_ms),
        "bl-over": ("Lbar", _bl_over_ms),
        "bl-run": ("Lr", _bl_run_ms),
    }
    if formula_id in partition_ids:
        kind, fn = partition_ids[formula_id]
        if spec.kind != kind:
            raise ValueError(f"{formula_id} applies to {kind}, not "
                             f"{spec.kind}")
        if s is not None:
            raise ValueError(f"{formula_id} has no per-s slice")
        return fn(spec, m, trunc)
    if formula_id in over_ids:
        kind, fn = over_ids[formula_id]
        if spec.kind != kind:
            raise ValueError(f"{formula_id} applies to {kind}, not "
                             f"{spec.kind}")
        if s is not None:
            return fn(spec, m, s, trunc)
        total = Series.zero(trunc, spec.markers)
        for si in range(m + 1):
            total = total + fn(spec, m, si, trunc)
        return total
    raise ValueError(f"unknown basis formula id {formula_id!r}")


def _bp_sum(spec, m, trunc, tail_shift):
    """Shared double sum for the smallest-part slices of the P basis.

    The b-slice (tail_shift=True) drops the Gaussian column by one and adds
    the extra k(m-h-2s+1) exponent."""
    a, b, k, r = spec.a, spec.b, spec.k, spec.r
    markers = spec.markers
    total = Series.zero(trunc, markers)
    for s in range(1, m + 1):
        for h in range((r - 1) * s + 1):
            if m - h - s < 0:
                break
            e = (m - h - s) * a + (h + s) * b + k * (s * s - s)
            if tail_shift:
                e += k * (m - h - 2 * s + 1)
            if e > trunc or e < 0:
                continue
            gauss = gaussian(m - h - s, s - 1 if tail_shift else s,
                             k, trunc, markers)
            g = g_poly(spec.k, r, h, s, trunc, markers)
            if gauss.is_zero() or g.is_zero():
                continue
            total = total + \
                monomial(e, (m - h - s, h + s), 1, trunc, markers) * \
                gauss * g
    return total


def _bp_smallest_a(spec, m, trunc):
    out = _bp_sum(spec, m, trunc, False)
    if m * spec.a <= trunc:
        out = out + monomial(m * spec.a, (m, 0), 1, trunc, spec.markers)
    return out


def _bp_smallest_b(spec, m, trunc):
    return _bp_sum(spec, m, trunc, True)


def _bp_total(spec, m, trunc):
    a, b, k, r = spec.a, spec.b, spec.k, spec.r
    markers = spec.markers
    total = Series.zero(trunc, markers)
    if m * a <= trunc:
        total = total + monomial(m * a, (m, 0), 1, trunc, markers)
    for s in range(1, m + 1):
        for h in range((r - 1) * s + 1):
            if m - h - s + 1 < s:
                break
            e = (m - h - s) * a + (h + s) * b + k * (s * s - s)
            if e > trunc:
                break
            gauss = gaussian(m - h - s + 1, s, k, trunc, markers)
            g = g_poly(k, r, h, s, trunc, markers)
            if gauss.is_zero() or g.is_zero():
                continue
            total = total + \
                monomial(e, (m - h - s, h + s), 1, trunc, markers) * \
                gauss * g
    return total


def _bpp_smallest_a(spec, m, trunc):
    a, b, k, r = spec.a, spec.b, spec.k, spec.r
    markers = spec.markers
    total = Series.zero(trunc, markers)
    for s in range(1, m + 1):
        for h in range((r - 1) * s + 1):
            if m - h - s < s - 1:
                break
            e = (h + s) * a + (m - h - s) * b + k * (s - 1) ** 2
            if e > trunc:
                continue
            gauss = gaussian(m - h - s, s - 1, k, trunc, markers)
            g = g_poly(k, r, h, s, trunc, markers)
            if gauss.is_zero() or g.is_zero():
                continue
            total = total + \
                monomial(e, (h + s, m - h - s), 1, trunc, markers) * \
                gauss * g
    return total


def _bpp_smallest_b(spec, m, trunc):
    a, b, k, r = spec.a, spec.b, spec.k, spec.r
    markers = spec.markers
    total = Series.zero(trunc, markers)
    if m * b <= trunc:
        total = total + monomial(m * b, (0, m), 1, trunc, markers)
    for s in range(1, m + 1):
        for h in range((r - 1) * s + 1):
            if m - h - s < s:
                break
            e = (h + s) * a + (m - h - s) * b + k * s * s + k * h
            if e > trunc:
                continue
            gauss = gaussian(m - h - s, s, k, trunc, markers)
            g = g_poly(k, r, h, s, trunc, markers)
            if gauss.is_zero() or g.is_zero():
                continue
            total = total + \
                monomial(e, (h + s, m - h - s), 1, trunc, markers) * \
                gauss * g
    return total


def _bpp_total(spec, m, trunc):
    return _bpp_smallest_a(spec, m, trunc) + _bpp_smallest_b(spec, m, trunc)


def _br_total(spec, m, trunc):
    a, b, c, k = spec.a, spec.b, spec.c, spec.k
    markers = spec.markers
    total = Series.zero(trunc, markers)
    for s in range(m + 1):
        for h in range(m - s + 1):
            e = (m - h - s) * a + h * b + s * c + k * (s * s - s) // 2
            if e > trunc:
                break
            left = gaussian(h + s, s, k, trunc, markers)
            right = gaussian(m - h, s, k, trunc, markers)
            if left.is_zero() or right.is_zero():
                continue
            total = total + \
                monomial(e, (m - h - s, h, s), 1, trunc, markers) * \
                left * right
    return total


def _brr_total(spec, m, trunc):
    a, b, c, k, r = spec.a, spec.b, spec.c, spec.k, spec.r
    markers = spec.markers
    total = Series.zero(trunc, markers)
    for s in range(m + 1):
        for h in range(m - s + 1):
            e = (m - h - s) * a + h * b + s * c + k * (s * s - s) // 2
            if e > trunc:
                break
            right = gaussian(m - h, s, k, trunc, markers)
            g = g_poly(k, r, h, s + 1, trunc, markers)
            if right.is_zero() or g.is_zero():
                continue
            total = total + \
                monomial(e, (m - h - s, h, s), 1, trunc, markers) * \
                right * g
    return total


def _bf_over_ms(spec, m, s, trunc):
    markers = spec.markers
    e = m + s * s - s
    if e > trunc or m - s + 1 < s:
        return Series.zero(trunc, markers)
    return monomial(e, (s,), 1, trunc, markers) * \
        gaussian(m - s + 1, s, 1, trunc, markers)


def _bf_run_ms(spec, m, s, trunc):
    markers = spec.markers
    e = m + (s * s - s) // 2
    if e > trunc:
        return Series.zero(trunc, markers)
    return monomial(e, (s,), 1, trunc, markers) * \
        g_poly(1, spec.r, m - s, s + 1, trunc, markers)


def _bl_over_ms(spec, m, s, trunc):
    markers = spec.markers
    total = Series.zero(trunc, markers)
    if s == 0:
        if m <= trunc:
            total = total + monomial(m, (0,), 1, trunc, markers)
        return total
    e1 = m + (s - 1) ** 2
    e2 = m + s * s
    if e1 <= trunc:
        total = total + monomial(e1, (s,), 1, trunc, markers) * \
            gaussian(m - s, s - 1, 1, trunc, markers)
    if e2 <= trunc:
        total = total + monomial(e2, (s,), 1, trunc, markers) * \
            gaussian(m - s, s, 1, trunc, markers)
    return total


def _bl_run_ms(spec, m, s, trunc):
    r = spec.r
    markers = spec.markers
    total = Series.zero(trunc, markers)
    if s == 0:
        if m <= r - 1 and m <= trunc:
            total = total + monomial(m, (0,), 1, trunc, markers)
        return total
    e = m + (s * s - s) // 2
    if e <= trunc:
        g = g_poly(1, r, m - s, s, trunc, markers)
        if not g.is_zero():
            total = total + monomial(e, (s,), 1, trunc, markers) * g
    for j in range(1, r):
        ej = 2 * m - j + (s * s - s) // 2
        if ej > trunc:
            continue
        gj = g_poly(1, r, m - j - s, s, trunc, markers)
        if gj.is_zero():
            continue
        total = total + monomial(ej, (s,), 1, trunc, markers) * gj
    return total


# ---------------------------------------------------------------------------
# basis-driven assembly
# ---------------------------------------------------------------------------

def basis_driven_gf(spec, trunc):
    """1 + sum over m of basis polynomial times 1/(q^modulus; q^modulus)_m.

    The m loop stops once the minimal basis weight for m parts exceeds the
    truncation order (every part of a basis element is at least the least
    admissible bottom value).
    """
    k = spec.modulus
    min_part = 1 if spec.is_overpartition_class else spec.a
    total = Series.one(trunc, spec.markers)
    m = 1
    while m * min_part <= trunc:
        poly = basis_gf(spec, m, trunc)
        if not poly.is_zero():
            total = total + _inverse_pochhammer(poly, k, m)
        m += 1
    return total


# ---------------------------------------------------------------------------
# identities and verification
# ---------------------------------------------------------------------------

def _g_counting_gf(gspec, trunc):
    terms = {}
    for p in enumerate_g(gspec):
        if p.weight <= trunc:
            terms[(p.weight, ())] = terms.get((p.weight, ()), 0) + 1
    return Series(trunc, (), None, terms)


IDENTITY_IDS = ("cauchy1", "cauchy2", "vanishing", "g-vs-enumeration",
                "g-binomial-r2", "g-closed-r2", "qbinom-recurrence",
                "gaussian-division")


def check_identity(identity_id, params, trunc):
    """Compare the two sides of one of the supporting identities."""
    started = time.perf_counter()
    subject = {"identity": identity_id, "params": dict(params)}
    p = dict(params)
    if identity_id == "cauchy1":
        s = p["s"]
        lhs = Series.one(trunc, ("z",))
        for i in range(s):
            factor = Series.one(trunc, ("z",)) - \
                monomial(i, (1,), 1, trunc, ("z",))
            lhs = lhs * factor
        rhs = Series.zero(trunc, ("z",))
        for i in range(s + 1):
            e = (i * i - i) // 2
            if e > trunc:
                break
            sign = -1 if i % 2 else 1
            rhs = rhs + monomial(e, (i,), sign, trunc, ("z",)) * \
                gaussian(s, i, 1, trunc, ("z",))
        sides = {"product": lhs, "sum": rhs}
    elif identity_id == "cauchy2":
        s = p["s"]
        lhs = Series.one(trunc, ("z",))
        for i in range(s):
            lhs = lhs.div_one_minus(i, (1,))
        rhs = Series.zero(trunc, ("z",))
        for i in range(trunc + 1):
            rhs = rhs + monomial(0, (i,), 1, trunc, ("z",)) * \
                gaussian(i + s - 1, s - 1, 1, trunc, ("z",))
        sides = {"product": lhs, "sum": rhs}
    elif identity_id == "vanishing":
        k, r, h, s = p["k"], p["r"], p["h"], p["s"]
        if h <= (r - 1) * s:
            raise ValueError("vanishing requires h > (r-1)s")
        sides = {"sum": g_poly(k, r, h, s, trunc),
                 "zero": Series.zero(trunc)}
    elif identity_id == "g-vs-enumeration":
        d, k, r, h, s = p["d"], p["k"], p["r"], p["h"], p["s"]
        gspec = ClassSpec("Gset", d=d, k=k, r=r, h=h, s=s)
        closed = monomial(h * d, (), 1, trunc) * g_poly(k, r, h, s, trunc) \
            if h * d <= trunc else Series.zero(trunc)
        sides = {"closed": closed, "enumeration": _g_counting_gf(gspec, trunc)}
    elif identity_id == "g-binomial-r2":
        d, k, h, s = p["d"], p["k"], p["h"], p["s"]
        gspec = ClassSpec("Gset", d=d, k=k, r=2, h=h, s=s)
        e = h * d + k * (h * h - h) // 2
        closed = monomial(e, (), 1, trunc) * gaussian(s, h, k, trunc) \
            if e <= trunc else Series.zero(trunc)
        sides = {"closed": closed, "enumeration": _g_counting_gf(gspec, trunc)}
    elif identity_id == "g-closed-r2":
        k, h, s = p["k"], p["h"], p["s"]
        e = k * (h * h - h) // 2
        rhs = monomial(e, (), 1, trunc) * gaussian(s, h, k, trunc) \
            if e <= trunc else Series.zero(trunc)
        sides = {"sum": g_poly(k, 2, h, s, trunc), "binomial": rhs}
    elif identity_id == "qbinom-recurrence":
        A, B, k = p["A"], p["B"], p["k"]
        lhs = gaussian(A, B, k, trunc)
        rhs = gaussian(A - 1, B, k, trunc)
        shift = k * (A - B)
        if shift <= trunc:
            rhs = rhs + monomial(shift, (), 1, trunc) * \
                gaussian(A - 1, B - 1, k, trunc)
        sides = {"binomial": lhs, "recurrence": rhs}
    elif identity_id == "gaussian-division":
        from .series import gaussian_by_division
        A, B, k = p["A"], p["B"], p["k"]
        sides = {"recurrence": gaussian(A, B, k, trunc),
                 "division": gaussian_by_division(A, B, k, trunc)}
    else:
        raise ValueError(f"unknown identity id {identity_id!r}")
    return compare_routes(sides, subject, trunc, started)


def verify(spec, trunc, closed_theorem_id=None):
    """Three-route check: oracle vs basis-driven vs closed form."""
    started = time.perf_counter()
    routes = {
        "oracle": refined_gf(spec, trunc),
        "basis": basis_driven_gf(spec, trunc),
        "closed": closed_form_gf(spec, trunc, closed_theorem_id),
    }
    return compare_routes(routes, spec, trunc, started)


# ---------------------------------------------------------------------------
# verification grid
# ---------------------------------------------------------------------------

def load_grid(path=None):
    """Load a verification grid: (trunc, list of ClassSpec).

    The default grid ships with the package as a JSON config so CI can
    extend it without touching code.
    """
    if path is None:
        data = json.loads(
            resources.files("sepclass.data")
            .joinpath("verify_grid.json").read_text())
    else:
        with open(path) as fh:
            data = json.load(fh)
    specs = [ClassSpec.from_json_dict(entry) for entry in data["specs"]]
    return data["trunc"], specs
