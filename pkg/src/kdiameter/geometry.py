"""Exact point representations for Hamming, integer l1/linf, and sphere-lattice l2 space.

Every accept/reject comparison here is integer or rational arithmetic; floats
only ever appear in diagnostic renderings.  Squared Euclidean distances between
sphere-lattice points are kept in the surd form 1 - m/sqrt(n1*n2) and compared
by sign analysis followed by squaring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


class DimensionMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# points


class BitVector:
    """Fixed-length 0/1 word, stored as an integer with bit i = coordinate i."""

    __slots__ = ("length", "word")

    def __init__(self, length, word=0):
        if length <= 0:
            raise ValueError("length must be positive")
        if word < 0 or word >> length:
            raise ValueError("word out of range for length")
        self.length = length
        self.word = word

    @classmethod
    def from_bits(cls, bits):
        bits = list(bits)
        word = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError("bits must be 0/1")
            word |= b << i
        return cls(len(bits), word)

    @classmethod
    def from_string(cls, s):
        return cls.from_bits(int(c) for c in s)

    @property
    def bits(self):
        return tuple((self.word >> i) & 1 for i in range(self.length))

    def complement(self):
        mask = (1 << self.length) - 1
        return BitVector(self.length, self.word ^ mask)

    def concat(self, other):
        return BitVector(self.length + other.length,
                         self.word | (other.word << self.length))

    def to_string(self):
        return "".join(str(b) for b in self.bits)

    def __eq__(self, other):
        return (isinstance(other, BitVector)
                and self.length == other.length and self.word == other.word)

    def __hash__(self):
        return hash((self.length, self.word))

    def __repr__(self):
        return f"BitVector({self.to_string()!r})"


def hamming_distance(u, v):
    if u.length != v.length:
        raise DimensionMismatch(f"lengths differ: {u.length} != {v.length}")
    return (u.word ^ v.word).bit_count()


class IntVector:
    """Integer coordinate vector for the l1/linf constructions."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(int(e) for e in entries)
        if not self.entries:
            raise ValueError("dimension must be positive")

    @property
    def dimension(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, IntVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntVector({list(self.entries)!r})"


def l1_distance(u, v):
    if u.dimension != v.dimension:
        raise DimensionMismatch("dimension mismatch")
    return sum(abs(a - b) for a, b in zip(u.entries, v.entries))


def linf_distance(u, v):
    if u.dimension != v.dimension:
        raise DimensionMismatch("dimension mismatch")
    return max(abs(a - b) for a, b in zip(u.entries, v.entries))


class SphereLatticePoint:
    """Lattice point of a three-axis sphere region, kept symbolically.

    The represented real point is (x/|x|) * sqrt(2)/2 where x has entry
    +alpha at the positive axis and -alpha at the other two axes.  Two
    instances denote the same real point iff their sign-reduced integer
    supports coincide, which is what `key` captures.
    """

    __slots__ = ("axes", "positive_axis", "coeffs", "kappa", "key")

    def __init__(self, axes, positive_axis, coeffs, kappa):
        axes = tuple(axes)
        coeffs = tuple(int(c) for c in coeffs)
        if len(axes) != 3 or len(set(axes)) != 3:
            raise ValueError("axes must be three distinct indices")
        if positive_axis not in axes:
            raise ValueError("positive_axis must be one of the axes")
        if any(c < 0 for c in coeffs) or sum(coeffs) != kappa or kappa <= 0:
            raise ValueError("coefficients must be nonnegative and sum to kappa")
        self.axes = axes
        self.positive_axis = positive_axis
        self.coeffs = coeffs
        self.kappa = kappa
        entries = {}
        for axis, alpha in zip(axes, coeffs):
            if alpha:
                entries[axis] = alpha if axis == positive_axis else -alpha
        g = 0
        for val in entries.values():
            g = gcd(g, abs(val))
        self.key = tuple(sorted((a, v // g) for a, v in entries.items()))

    def signed_entries(self):
        return dict(self.key)

    def norm_sq_int(self):
        """Squared norm of the reduced integer support vector."""
        return sum(v * v for _, v in self.key)

    def float_coords(self, dim):
        """Float rendering in R^dim; diagnostics only."""
        from math import sqrt
        scale = sqrt(0.5 / self.norm_sq_int())
        out = [0.0] * dim
        for a, v in self.key:
            out[a] = v * scale
        return out

    def __eq__(self, other):
        return isinstance(other, SphereLatticePoint) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SphereLatticePoint(key={self.key!r})"


def axis_point(axis, other_axes, kappa=1, negative=False):
    """The pure axis point e_axis (or its antipode) as a lattice point."""
    a, b = other_axes
    if negative:
        # all weight on `axis` as a negative coordinate: pick a region where
        # `axis` is a negative axis
        return SphereLatticePoint((a, axis, b), a, (0, kappa, 0), kappa)
    return SphereLatticePoint((axis, a, b), axis, (kappa, 0, 0), kappa)


# ---------------------------------------------------------------------------
# exact squared distances


def _cmp_ratio_vs_fraction(m, big_n, c):
    """Sign of m/sqrt(big_n) - c for integer m, positive integer big_n, Fraction c."""
    if m == 0:
        return -_sign_fraction(c)
    if c == 0:
        return 1 if m > 0 else -1
    sm, sc = (1 if m > 0 else -1), (1 if c > 0 else -1)
    if sm != sc:
        return sm
    # same sign: compare m^2 / big_n with c^2, flipping for negatives
    lhs = m * m * c.denominator * c.denominator
    rhs = c.numerator * c.numerator * big_n
    if lhs == rhs:
        return 0
    out = 1 if lhs > rhs else -1
    return out if sm > 0 else -out


def _sign_fraction(c):
    return (c > 0) - (c < 0)


class SqDistance:
    """Exact squared Euclidean distance 1 - m/sqrt(n1*n2) between sphere points."""

    __slots__ = ("m", "n1", "n2", "big_n")

    def __init__(self, m, n1, n2):
        if n1 <= 0 or n2 <= 0:
            raise ValueError("norms must be positive")
        self.m = m
        self.n1 = n1
        self.n2 = n2
        self.big_n = n1 * n2

    def cmp_fraction(self, t_sq):
        """Sign of (self - t_sq) for a rational t_sq."""
        t_sq = Fraction(t_sq)
        # self - t = (1 - t) - m/sqrt(N)
        return -_cmp_ratio_vs_fraction(self.m, self.big_n, 1 - t_sq)

    def exceeds(self, t_sq):
        return self.cmp_fraction(t_sq) > 0

    def exceeds_one_plus_half_sqrt2(self):
        """Decide self > 1 + sqrt(2)/2 exactly (the coordinate-rule diameter bound)."""
        # 1 - m/sqrt(N) > 1 + sqrt(1/2)  iff  -m/sqrt(N) > sqrt(1/2)
        return self.m < 0 and 2 * self.m * self.m > self.big_n

    def as_fraction(self):
        """Rational value when the surd collapses; None otherwise."""
        if self.m == 0:
            return Fraction(1)
        r = isqrt(self.big_n)
        if r * r == self.big_n:
            return 1 - Fraction(self.m, r)
        return None

    def _cmp(self, other):
        if isinstance(other, SqDistance):
            # self - other has the sign of m_o/sqrt(N_o) - m_s/sqrt(N_s)
            mo, ms = other.m, self.m
            if ms == mo == 0:
                return 0
            so = (mo > 0) - (mo < 0)
            ss = (ms > 0) - (ms < 0)
            if so != ss:
                # opposite signs decide immediately; a zero side defers to
                # the other side's sign
                return so if so != 0 else -ss
            lhs = mo * mo * self.big_n
            rhs = ms * ms * other.big_n
            if lhs == rhs:
                return 0
            out = 1 if lhs > rhs else -1
            return out if so > 0 else -out
        return self.cmp_fraction(Fraction(other))

    def __eq__(self, other):
        if not isinstance(other, (SqDistance, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        f = self.as_fraction()
        if f is not None:
            return hash(f)
        # reduce m^2/N to lowest terms for a representation-independent hash
        frac = Fraction(self.m * self.m, self.big_n)
        return hash((frac, self.m > 0))

    def __float__(self):
        return 1.0 - self.m / (self.big_n ** 0.5)

    def __repr__(self):
        return f"SqDistance(m={self.m}, n1={self.n1}, n2={self.n2})"


def sphere_point_sq_distance(p, s):
    """Exact squared distance between two sphere-lattice points."""
    pe = dict(p.key)
    m = sum(v * pe.get(a, 0) for a, v in s.key)
    return SqDistance(m, p.norm_sq_int(), s.norm_sq_int())


def sq_distance_exceeds(p, s, threshold_sq):
    """Decide ||p-s||^2 > t^2 with no floating point; threshold_sq is t^2."""
    threshold_sq = Fraction(threshold_sq)
    if threshold_sq <= 0:
        raise ValueError("threshold must be positive")
    return sphere_point_sq_distance(p, s).exceeds(threshold_sq)


# ---------------------------------------------------------------------------
# pointsets

METRICS = ("hamming", "l1_int", "linf_int", "l2_sphere_lattice")

_DISTANCE = {
    "hamming": hamming_distance,
    "l1_int": l1_distance,
    "linf_int": linf_distance,
    "l2_sphere_lattice": sphere_point_sq_distance,
}


@dataclass
class Pointset:
    """Homogeneous list of points under one metric.

    For `l2_sphere_lattice` all distances are *squared* (SqDistance values);
    for the other metrics they are plain integers.
    """

    metric: str
    points: list
    labels: list | None = None

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.labels is not None:
            if len(self.labels) != len(self.points):
                raise ValueError("labels must match points")
            if len(set(self.labels)) != len(self.labels):
                raise ValueError("labels must be unique")

    def distance(self, i, j):
        return _DISTANCE[self.metric](self.points[i], self.points[j])

    def __len__(self):
        return len(self.points)

    # -- serialization ------------------------------------------------------

    def to_dict(self):
        dim = self._dimension()
        return {
            "metric": self.metric,
            "dim": dim,
            "points": [_point_to_json(self.metric, p) for p in self.points],
            "labels": self.labels,
        }

    def _dimension(self):
        if not self.points:
            return 0
        p = self.points[0]
        if self.metric == "hamming":
            return p.length
        if self.metric in ("l1_int", "linf_int"):
            return p.dimension
        return 1 + max(a for q in self.points for a, _ in q.key)

    @classmethod
    def from_dict(cls, d):
        metric = d["metric"]
        points = [_point_from_json(metric, p) for p in d["points"]]
        return cls(metric, points, d.get("labels"))

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))

    def canonical_order(self):
        """Indices sorted lexicographically by serialized form (stable file diffs)."""
        serialized = [json.dumps(_point_to_json(self.metric, p), sort_keys=True)
                      for p in self.points]
        return sorted(range(len(self.points)), key=serialized.__getitem__)


def _point_to_json(metric, p):
    if metric == "hamming":
        return p.to_string()
    if metric in ("l1_int", "linf_int"):
        return list(p.entries)
    return {"axes": list(p.axes), "pos": p.positive_axis,
            "coeffs": list(p.coeffs), "kappa": p.kappa}


def _point_from_json(metric, obj):
    if metric == "hamming":
        return BitVector.from_string(obj)
    if metric in ("l1_int", "linf_int"):
        return IntVector(obj)
    return SphereLatticePoint(obj["axes"], obj["pos"], obj["coeffs"], obj["kappa"])


def pointset_diameter(pointset):
    """Maximum pairwise distance; 0 for a singleton; error on empty input."""
    n = len(pointset)
    if n == 0:
        raise ValueError("empty pointset has no diameter")
    if n == 1:
        return 0
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            d = pointset.distance(i, j)
            if best is None or d > best:
                best = d
    return best
