"""Exact linear algebra substrate: coefficient fields, sparse multivariate
polynomials, and incremental row spaces with fraction-free elimination.

Everything here is exact: rationals use ``fractions.Fraction``, prime fields
use machine integers mod p.  Row spaces keep a fully reduced echelon basis so
that span membership and trace extraction are one-pass operations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np


class ExactLAError(Exception):
    pass


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The rationals; elements are ``Fraction`` instances."""

    name = "rational"
    characteristic = 0

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into the rational field")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(x)

    def to_str(self, x):
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field of integers mod p; elements are ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"
        self.characteristic = p

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(x, -1, self.p)

    def to_str(self, x):
        return str(x % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = RationalField()

DEFAULT_PRIME = 1000003


def field_from_name(name):
    """Parse 'rational' or 'fp:<p>' into a field object."""
    if name == "rational":
        return QQ
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field spec {name!r} (expected 'rational' or 'fp:<p>')")


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
#
# Monomials are dense exponent tuples over the declared variable list; the
# repo-wide monomial order is graded lexicographic (degree first, then the
# exponent tuple with earlier variables weighing more).


def monomial_degree(exps):
    return sum(exps)


def monomial_mul(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def glex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    """Sparse polynomial over a declared variable list and an exact field.

    ``terms`` maps exponent tuples to nonzero coefficients.  Instances are
    treated as immutable values.
    """

    __slots__ = ("vars", "field", "terms")

    def __init__(self, vars, field, terms=None):
        self.vars = tuple(vars)
        self.field = field
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise ExactLAError("exponent tuple does not match variable list")
            c = field.of(coeff)
            if c != field.zero:
                clean[exps] = c
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, vars, field=QQ):
        return cls(vars, field, {})

    @classmethod
    def constant(cls, vars, value, field=QQ):
        n = len(tuple(vars))
        return cls(vars, field, {(0,) * n: field.of(value)})

    @classmethod
    def one(cls, vars, field=QQ):
        return cls.constant(vars, 1, field)

    @classmethod
    def variable(cls, vars, name, field=QQ):
        vars = tuple(vars)
        i = vars.index(name)
        exps = tuple(1 if k == i else 0 for k in range(len(vars)))
        return cls(vars, field, {exps: field.of(1)})

    @classmethod
    def monomial(cls, vars, exps, coeff=1, field=QQ):
        return cls(vars, field, {tuple(exps): field.of(coeff)})

    # -- ring operations

    def _check(self, other):
        if self.vars != other.vars or self.field != other.field:
            raise ExactLAError("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, self.field.zero) + c
        return Polynomial(self.vars, self.field, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.vars, self.field, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        terms = {}
        zero = self.field.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                terms[e] = terms.get(e, zero) + c1 * c2
        return Polynomial(self.vars, self.field, terms)

    def scale(self, c):
        c = self.field.of(c)
        return Polynomial(self.vars, self.field, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.vars == other.vars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, self.field, frozenset(self.terms.items())))

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, d):
        return Polynomial(
            self.vars, self.field, {e: c for e, c in self.terms.items() if sum(e) == d}
        )

    def top_degree_form(self):
        """Highest-degree homogeneous component (zero poly maps to itself)."""
        return self.homogeneous_component(self.degree())

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of field elements."""
        if len(point) != len(self.vars):
            raise ExactLAError("point dimension does not match variable list")
        total = self.field.zero
        for exps, coeff in self.terms.items():
            val = coeff
            for i, e in enumerate(exps):
                if e:
                    val = val * point[i] ** e
            total = total + val
        if self.field.characteristic:
            total %= self.field.characteristic
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, key=glex_key, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                self.vars[i] if e == 1 else f"{self.vars[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                piece = self.field.to_str(c)
            elif c == self.field.one:
                piece = mono
            elif self.field.characteristic == 0 and c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{self.field.to_str(c)}*{mono}"
            bits.append(piece)
        out = bits[0]
        for piece in bits[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


def elementary_symmetric(d, polys):
    """e_d of a nonempty list of polynomials; e_0 = 1."""
    polys = list(polys)
    if not polys:
        raise ExactLAError("elementary_symmetric needs at least one polynomial")
    if d < 0 or d > len(polys):
        raise ExactLAError(f"e_{d} of {len(polys)} polynomials is out of range")
    vars, field = polys[0].vars, polys[0].field
    total = Polynomial.zero(vars, field)
    for combo in combinations(polys, d):
        prod = Polynomial.one(vars, field)
        for p in combo:
            prod = prod * p
        total = total + prod
    return total


# ---------------------------------------------------------------------------
# row spaces
#
# Both implementations keep a *fully reduced* echelon basis: each basis row
# owns a pivot column in which every other row is zero.  Reduction of any
# vector against the basis is then a single pass, and expansion coefficients
# can be read off at the pivots.


def apply_point_permutation(vec, perm):
    """Push a coordinate vector forward along j -> perm[j]."""
    out = [None] * len(vec)
    for j, v in zip(perm, vec):
        out[j] = v
    return out


_NORMALIZE_BITS = 512  # renormalize integer rows once entries exceed this


class RationalRowSpace:
    """Row space over Q, stored as primitive integer rows (fraction-free)."""

    def __init__(self, ambient):
        self.ambient = ambient
        self.rows = []  # primitive int rows, positive pivot entries
        self.pivots = []  # pivot column of each row; columns are exclusive

    @property
    def rank(self):
        return len(self.rows)

    def copy(self):
        dup = RationalRowSpace(self.ambient)
        dup.rows = [row[:] for row in self.rows]
        dup.pivots = list(self.pivots)
        return dup

    def _intvec(self, vec):
        if len(vec) != self.ambient:
            raise ExactLAError("vector length does not match ambient dimension")
        vec = [Fraction(v) if not isinstance(v, Fraction) else v for v in vec]
        mult = 1
        for v in vec:
            mult = mult * v.denominator // math.gcd(mult, v.denominator)
        return [int(v * mult) for v in vec]

    def _reduce(self, v):
        # one pass suffices: pivot columns are exclusive to their rows
        for row, j in zip(self.rows, self.pivots):
            a = v[j]
            if a:
                p = row[j]
                v = [p * x - a * y for x, y in zip(v, row)]
                if max(map(abs, v), default=0).bit_length() > _NORMALIZE_BITS:
                    g = 0
                    for x in v:
                        g = math.gcd(g, x)
                        if g == 1:
                            break
                    if g > 1:
                        v = [x // g for x in v]
        return v

    @staticmethod
    def _primitive(v):
        g = 0
        for x in v:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            v = [x // g for x in v]
        return v

    def insert(self, vec):
        """Add a vector to the span; returns True iff the rank increased."""
        v = self._reduce(self._intvec(vec))
        j = next((k for k, x in enumerate(v) if x), None)
        if j is None:
            return False
        if v[j] < 0:
            v = [-x for x in v]
        v = self._primitive(v)
        for i, row in enumerate(self.rows):
            a = row[j]
            if a:
                p = v[j]
                new = [p * x - a * y for x, y in zip(row, v)]
                self.rows[i] = self._primitive(new)
        self.rows.append(v)
        self.pivots.append(j)
        return True

    def contains(self, vec):
        v = self._reduce(self._intvec(vec))
        return not any(v)

    def expansion_coefficients(self, vec):
        """Coefficients of vec on the basis rows, or None if outside the span."""
        frac = [Fraction(v) if not isinstance(v, Fraction) else v for v in vec]
        coeffs = [Fraction(frac[j], row[j]) for row, j in zip(self.rows, self.pivots)]
        residual = list(frac)
        for c, row in zip(coeffs, self.rows):
            if c:
                residual = [r - c * x for r, x in zip(residual, row)]
        if any(residual):
            return None
        return coeffs

    def trace_under_permutation(self, perm):
        """Trace of the coordinate permutation j -> perm[j] restricted to the span.

        Raises if the span is not invariant under the permutation.
        """
        total = Fraction(0)
        for row, j in zip(self.rows, self.pivots):
            moved = apply_point_permutation(row, perm)
            if any(self._reduce(list(moved))):
                raise ExactLAError("subspace is not invariant under the permutation")
            total += Fraction(moved[j], row[j])
        return total


class FpRowSpace:
    """Row space over F_p backed by numpy; rows are pivot-normalized."""

    def __init__(self, ambient, p):
        self.ambient = ambient
        self.p = p
        self._store = np.zeros((16, ambient), dtype=np.int64)
        self._rank = 0
        self.pivots = []
        # float64 matmul is exact as long as every dot product stays < 2^53
        self._float_ok = ambient * (p - 1) * (p - 1) < 2**53

    @property
    def rank(self):
        return self._rank

    @property
    def _basis(self):
        return self._store[: self._rank]

    def copy(self):
        dup = FpRowSpace(self.ambient, self.p)
        dup._store = self._store[: self._rank].copy()
        dup._rank = self._rank
        dup.pivots = list(self.pivots)
        return dup

    def _vec(self, vec):
        v = np.asarray(vec, dtype=np.int64)
        if v.shape != (self.ambient,):
            raise ExactLAError("vector length does not match ambient dimension")
        return v % self.p

    def _combine(self, coeffs, matrix):
        if self._float_ok:
            prod = coeffs.astype(np.float64) @ matrix.astype(np.float64)
            return prod.astype(np.int64) % self.p
        return (coeffs @ matrix) % self.p

    def _reduce(self, v):
        if self._rank:
            coeffs = v[self.pivots]
            if coeffs.any():
                v = (v - self._combine(coeffs, self._basis)) % self.p
        return v

    def insert(self, vec):
        v = self._reduce(self._vec(vec))
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        j = int(nz[0])
        v = v * pow(int(v[j]), -1, self.p) % self.p
        if self._rank:
            col = self._basis[:, j].copy()
            if col.any():
                self._store[: self._rank] = (self._basis - np.outer(col, v)) % self.p
        if self._rank == len(self._store):
            grown = np.zeros((max(16, 2 * len(self._store)), self.ambient), dtype=np.int64)
            grown[: self._rank] = self._basis
            self._store = grown
        self._store[self._rank] = v
        self._rank += 1
        self.pivots.append(j)
        return True

    def contains(self, vec):
        return not self._reduce(self._vec(vec)).any()

    def expansion_coefficients(self, vec):
        v = self._vec(vec)
        coeffs = [int(v[j]) for j in self.pivots]
        residual = self._reduce(v.copy())
        if residual.any():
            return None
        return coeffs

    def trace_under_permutation(self, perm):
        total = 0
        perm = np.asarray(perm)
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(len(perm))
        for row, j in zip(self._basis, self.pivots):
            moved = row[inverse]  # moved[perm[k]] = row[k]
            if self._reduce(moved.copy()).any():
                raise ExactLAError("subspace is not invariant under the permutation")
            total = (total + int(moved[j])) % self.p
        return total


def make_rowspace(ambient, field):
    if field.characteristic == 0:
        return RationalRowSpace(ambient)
    return FpRowSpace(ambient, field.characteristic)
