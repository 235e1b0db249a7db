"""Partitions, overpartitions, class parameter records, membership tests,
exhaustive enumeration and brute-force refined generating functions.

Eight restricted classes are supported (four on partitions, four on
overpartitions) plus the auxiliary bounded-multiplicity sets used by the
closed-form machinery.

Terminology note: the run restrictions are deliberately asymmetric and are
implemented exactly as defined per class.  P/Pprime forbid r+1 consecutive
parts in the restricted residue class (r consecutive are allowed), while
Rr, Fr and Lr forbid r consecutive parts of the restricted sort.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Series

FIRST = "first"
LAST = "last"

PARTITION_KINDS = ("P", "Pprime", "R", "Rr", "Gset")
OVERPARTITION_KINDS = ("Fbar", "Lbar", "Fr", "Lr")


class KindMismatchError(TypeError):
    """Object kind (partition vs overpartition/convention) does not match
    the class spec."""


@dataclass(frozen=True)
class Partition:
    """A finite non-increasing sequence of positive integers."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError("parts must be non-increasing")

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def residue_count(self, k, d):
        """Number of parts congruent to d modulo k."""
        return sum(1 for p in self.parts if p % k == d % k)

    def to_json_dict(self):
        return {"parts": list(self.parts)}

    @classmethod
    def from_json_dict(cls, data):
        return cls(tuple(data["parts"]))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Overpartition:
    """Non-increasing magnitudes with at most one overlined part per distinct
    magnitude.  The overlined occurrence sits first (``first`` convention) or
    last (``last`` convention) among equal magnitudes; the constructor
    enforces this canonical placement."""

    parts: tuple = ()          # tuple of (magnitude, overlined)
    convention: str = FIRST

    def __post_init__(self):
        if self.convention not in (FIRST, LAST):
            raise ValueError(f"unknown convention {self.convention!r}")
        parts = tuple((int(m), bool(o)) for m, o in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, (m, _) in enumerate(parts):
            if m < 1:
                raise ValueError("magnitudes must be positive")
            if i and parts[i - 1][0] < m:
                raise ValueError("magnitudes must be non-increasing")
        # canonical overline placement within each run of equal magnitudes
        i = 0
        while i < len(parts):
            j = i
            while j < len(parts) and parts[j][0] == parts[i][0]:
                j += 1
            flags = [o for _, o in parts[i:j]]
            if sum(flags) > 1:
                raise ValueError("at most one overline per distinct magnitude")
            if sum(flags) == 1:
                pos = flags.index(True)
                want = 0 if self.convention == FIRST else len(flags) - 1
                if pos != want:
                    raise ValueError(
                        f"overline must sit at the {self.convention} "
                        f"occurrence of magnitude {parts[i][0]}")
            i = j

    @property
    def weight(self):
        return sum(m for m, _ in self.parts)

    def __len__(self):
        return len(self.parts)

    @property
    def overline_count(self):
        return sum(1 for _, o in self.parts if o)

    @property
    def magnitudes(self):
        return tuple(m for m, _ in self.parts)

    def to_json_dict(self):
        return {"convention": self.convention,
                "parts": [{"m": m, "over": o} for m, o in self.parts]}

    @classmethod
    def from_json_dict(cls, data):
        return cls(tuple((p["m"], p["over"]) for p in data["parts"]),
                   data["convention"])

    def __str__(self):
        def fmt(m, o):
            return f"{m}~" if o else str(m)
        return "(" + ",".join(fmt(m, o) for m, o in self.parts) + ")"


@dataclass(frozen=True)
class ClassSpec:
    """Parameter record selecting one class (or an auxiliary bounded set).

    kind: P, Pprime, R, Rr, Fbar, Lbar, Fr, Lr or Gset.
    Validation is eager; invalid parameter combinations are rejected here.
    """

    kind: str
    a: int | None = None
    b: int | None = None
    c: int | None = None
    k: int | None = None
    r: int | None = None
    d: int | None = None
    h: int | None = None
    s: int | None = None

    def __post_init__(self):
        kind = self.kind
        if kind in ("P", "Pprime"):
            a, b, k, r = self.a, self.b, self.k, self.r
            if None in (a, b, k, r):
                raise ValueError(f"{kind} requires a, b, k, r")
            if not (k >= b > a >= 1):
                raise ValueError(f"{kind} requires k >= b > a >= 1")
            if r < 1:
                raise ValueError("r must be >= 1")
        elif kind in ("R", "Rr"):
            a, b, c, k = self.a, self.b, self.c, self.k
            if None in (a, b, c, k):
                raise ValueError(f"{kind} requires a, b, c, k")
            if not (k >= c > b > a >= 1):
                raise ValueError(f"{kind} requires k >= c > b > a >= 1")
            if kind == "Rr":
                if self.r is None or self.r < 1:
                    raise ValueError("Rr requires r >= 1")
        elif kind in ("Fbar", "Lbar"):
            pass
        elif kind in ("Fr", "Lr"):
            if self.r is None or self.r < 1:
                raise ValueError(f"{kind} requires r >= 1")
        elif kind == "Gset":
            d, k, r, h, s = self.d, self.k, self.r, self.h, self.s
            if None in (d, k, r, h, s):
                raise ValueError("Gset requires d, k, r, h, s")
            if not (k >= d >= 1):
                raise ValueError("Gset requires k >= d >= 1")
            if r < 1 or s < 1 or h < 0:
                raise ValueError("Gset requires r >= 1, s >= 1, h >= 0")
        else:
            raise ValueError(f"unknown class kind {kind!r}")

    # -- derived attributes --------------------------------------------------

    @property
    def is_overpartition_class(self):
        return self.kind in OVERPARTITION_KINDS

    @property
    def convention(self):
        if self.kind in ("Fbar", "Fr"):
            return FIRST
        if self.kind in ("Lbar", "Lr"):
            return LAST
        return None

    @property
    def modulus(self):
        """Padding modulus of the separable class (1 for overpartitions)."""
        return 1 if self.is_overpartition_class else self.k

    @property
    def markers(self):
        """Marker variable names of the refined generating function."""
        if self.kind in ("P", "Pprime"):
            return ("mu", "nu")
        if self.kind in ("R", "Rr"):
            return ("mu", "nu", "om")
        if self.is_overpartition_class:
            return ("z",)
        return ()

    def marker_exponents(self, obj):
        """Marker exponent tuple recorded for one class member."""
        if self.kind in ("P", "Pprime"):
            return (obj.residue_count(self.k, self.a),
                    obj.residue_count(self.k, self.b))
        if self.kind in ("R", "Rr"):
            return (obj.residue_count(self.k, self.a),
                    obj.residue_count(self.k, self.b),
                    obj.residue_count(self.k, self.c))
        if self.is_overpartition_class:
            return (obj.overline_count,)
        return ()

    def to_json_dict(self):
        out = {"class": self.kind}
        for name in ("a", "b", "c", "k", "r", "d", "h", "s"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    @classmethod
    def from_json_dict(cls, data):
        data = dict(data)
        kind = data.pop("class", None) or data.pop("kind")
        return cls(kind, **data)

    def label(self):
        """Short stable identifier, used for golden-file paths."""
        bits = [self.kind]
        for name in ("a", "b", "c", "k", "r", "d", "h", "s"):
            value = getattr(self, name)
            if value is not None:
                bits.append(f"{name}{value}")
        return "_".join(bits)

    def __str__(self):
        return self.label()


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def _check_kind(spec, obj):
    if spec.is_overpartition_class:
        if not isinstance(obj, Overpartition):
            raise KindMismatchError(f"{spec.kind} expects an overpartition")
        if obj.convention != spec.convention:
            raise KindMismatchError(
                f"{spec.kind} expects the {spec.convention}-occurrence "
                f"convention, got {obj.convention}")
    else:
        if not isinstance(obj, Partition):
            raise KindMismatchError(f"{spec.kind} expects a partition")


def _max_run(flags):
    best = run = 0
    for f in flags:
        run = run + 1 if f else 0
        best = max(best, run)
    return best


def is_member(spec, obj):
    """True iff obj satisfies every clause of the class definition."""
    _check_kind(spec, obj)
    kind = spec.kind
    if kind in ("P", "Pprime"):
        a, b, k, r = spec.a, spec.b, spec.k, spec.r
        parts = obj.parts
        if any(p % k not in (a % k, b % k) for p in parts):
            return False
        bad = a if kind == "Pprime" else b
        return _max_run([p % k == bad % k for p in parts]) <= r
    if kind in ("R", "Rr"):
        a, b, c, k = spec.a, spec.b, spec.c, spec.k
        parts = obj.parts
        res = [p % k for p in parts]
        if any(x not in (a % k, b % k, c % k) for x in res):
            return False
        for i in range(len(parts) - 1):
            if res[i] == c % k and parts[i] == parts[i + 1]:
                return False        # c-parts must be distinct
            if res[i] == a % k and res[i + 1] not in (a % k, c % k):
                return False
        if kind == "Rr":
            if _max_run([x == b % k for x in res]) >= spec.r:
                return False
        return True
    if kind == "Gset":
        d, k, r, h, s = spec.d, spec.k, spec.r, spec.h, spec.s
        parts = obj.parts
        if len(parts) != h:
            return False
        if any(p % k != d % k or p > k * (s - 1) + d for p in parts):
            return False
        for i in range(len(parts)):
            if i >= r - 1 and parts[i - (r - 1)] == parts[i]:
                return False        # multiplicity at most r-1
        return True
    # overpartition classes
    flags = [o for _, o in obj.parts]
    if kind in ("Fbar", "Lbar"):
        return all(not (flags[i] and flags[i + 1])
                   for i in range(len(flags) - 1))
    # Fr / Lr: no r consecutive non-overlined parts
    return _max_run([not f for f in flags]) < spec.r


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _enumerate_partition_class(spec, n):
    kind = spec.kind
    a, b, c, k, r = spec.a, spec.b, spec.c, spec.k, spec.r
    if kind in ("P", "Pprime"):
        allowed = {a % k, b % k}
    else:
        allowed = {a % k, b % k, c % k}
    out = []
    prefix = []

    def ok_next(v):
        res = v % k
        if res not in allowed:
            return False
        if kind == "P" or kind == "Pprime":
            bad = (b if kind == "P" else a) % k
            if res == bad:
                run = 1
                for p in reversed(prefix):
                    if p % k == bad:
                        run += 1
                    else:
                        break
                if run > r:
                    return False
        else:
            if prefix:
                prev = prefix[-1]
                if prev % k == c % k and prev == v:
                    return False
                if prev % k == a % k and res not in (a % k, c % k):
                    return False
            if kind == "Rr" and res == b % k:
                run = 1
                for p in reversed(prefix):
                    if p % k == b % k:
                        run += 1
                    else:
                        break
                if run >= spec.r:
                    return False
        return True

    def extend(remaining, max_part):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for v in range(min(remaining, max_part), 0, -1):
            if not ok_next(v):
                continue
            prefix.append(v)
            extend(remaining - v, v)
            prefix.pop()

    extend(n, n if n else 0)
    return out


def all_partitions(n, max_part=None):
    """All partitions of n in lexicographically decreasing order."""
    out = []
    prefix = []

    def extend(remaining, cap):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for v in range(min(remaining, cap), 0, -1):
            prefix.append(v)
            extend(remaining - v, v)
            prefix.pop()

    extend(n, max_part if max_part is not None else n)
    return out


def all_overpartitions(n, convention=FIRST):
    """All canonical overpartitions of n, deterministic order."""
    out = []
    for mags in all_partitions(n):
        distinct = sorted(set(mags), reverse=True)
        for mask in range(1 << len(distinct)):
            chosen = {distinct[i] for i in range(len(distinct))
                      if mask >> i & 1}
            parts = []
            for i, m in enumerate(mags):
                if m in chosen:
                    if convention == FIRST:
                        over = i == 0 or mags[i - 1] != m
                    else:
                        over = i + 1 == len(mags) or mags[i + 1] != m
                else:
                    over = False
                parts.append((m, over))
            out.append(Overpartition(tuple(parts), convention))
    out.sort(key=lambda op: tuple((-m, o) for m, o in op.parts))
    return out


def enumerate_members(spec, n):
    """All class members of weight n, deterministic decreasing order."""
    if n == 0:
        if spec.kind == "Gset":
            return [Partition()] if spec.h == 0 else []
        if spec.is_overpartition_class:
            return [Overpartition((), spec.convention)]
        return [Partition()]
    if spec.kind == "Gset":
        return [p for p in enumerate_g(spec) if p.weight == n]
    if spec.is_overpartition_class:
        return [op for op in all_overpartitions(n, spec.convention)
                if is_member(spec, op)]
    return _enumerate_partition_class(spec, n)


def enumerate_g(spec):
    """All members of the bounded-multiplicity auxiliary set: exactly h
    parts, all congruent to d mod k, each at most k(s-1)+d, multiplicity
    at most r-1."""
    if spec.kind != "Gset":
        raise KindMismatchError("enumerate_g requires a Gset spec")
    d, k, r, h, s = spec.d, spec.k, spec.r, spec.h, spec.s
    values = [k * i + d for i in range(s - 1, -1, -1)]   # descending
    out = []

    def extend(idx, remaining, acc):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if idx >= len(values):
            return
        for count in range(min(r - 1, remaining), -1, -1):
            extend(idx + 1, remaining - count, acc + [values[idx]] * count)

    extend(0, h, [])
    out.sort(key=lambda p: tuple(-x for x in p.parts))
    return out


def refined_gf(spec, trunc):
    """Brute-force refined generating function: sum over all members of
    weight at most trunc of marker-monomial times q^weight."""
    markers = spec.markers
    terms = {}
    for n in range(trunc + 1):
        for obj in enumerate_members(spec, n):
            key = (n, spec.marker_exponents(obj))
            terms[key] = terms.get(key, 0) + 1
    return Series(trunc, markers, None, terms)
