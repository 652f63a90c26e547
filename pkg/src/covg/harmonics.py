"""Point loci, graded Hilbert series via evaluation spans, graded-ideal
membership, ideal presentations, and NBC bases.

The engine never materializes the graded vanishing ideal: every dimension or
membership question about the quotient by it is answered through the spans
E_d of evaluation vectors of monomials of degree <= d on the locus.  The
Hilbert coefficient in degree d is rank E_d - rank E_{d-1}, and a homogeneous
form of degree d lies in the graded ideal exactly when its evaluation vector
already lies in E_{d-1}.

Monomial candidates in each degree are variable multiples of the standard
(rank-increasing) monomials one degree down; a monomial all of whose degree-d
divisors failed to increase rank cannot increase it either, because the
pointwise product of a spanned vector with a coordinate vector is spanned by
products of earlier monomials.  This prunes the search without changing any
rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from .com import contract, flats_of, topes
from .config import DEFAULT_LIMITS
from .exactla import QQ, Polynomial, elementary_symmetric, make_rowspace
from .matroidal import (
    basic_sets,
    circuits,
    codim,
    default_basic_set,
    minimal_nonbasic_sets,
    nbc_sets,
)
from .realize import braid_com, fraction_to_str
from . import permstats


class HarmonicsError(Exception):
    pass


class EmptyLocusError(HarmonicsError):
    pass


# ---------------------------------------------------------------------------
# loci


@dataclass(frozen=True)
class PointLocus:
    """Finite labeled point set with exact coordinates and named variables."""

    variables: tuple
    labels: tuple
    points: tuple  # tuples of Fractions
    label_kind: str = "raw"  # covector | permutation | ordered-set-partition | raw
    requires_char_zero: bool = False

    def __post_init__(self):
        if len(self.labels) != len(self.points):
            raise HarmonicsError("one label per point")
        for p in self.points:
            if len(p) != len(self.variables):
                raise HarmonicsError("point length does not match variable count")
        if len(set(self.points)) != len(self.points):
            raise HarmonicsError("locus points must be distinct")

    def __len__(self):
        return len(self.points)

    def index_of_label(self, label):
        return self.labels.index(label)

    def to_json_dict(self):
        return {
            "variables": list(self.variables),
            "points": [
                {"label": l, "coords": [fraction_to_str(c) for c in p]}
                for l, p in zip(self.labels, self.points)
            ],
        }

    @classmethod
    def from_json_dict(cls, data, label_kind="raw"):
        pts = data["points"]
        return cls(
            tuple(data["variables"]),
            tuple(p["label"] for p in pts),
            tuple(tuple(Fraction(c) for c in p["coords"]) for p in pts),
            label_kind=label_kind,
        )


def small_variables(ground):
    out = []
    for l in ground.labels:
        out += [f"y{l}+", f"y{l}-"]
    return tuple(out)


def big_variables(ground):
    out = []
    for l in ground.labels:
        out += [f"y{l}+", f"y{l}-", f"z{l}"]
    return tuple(out)


def tope_locus(M):
    """One 0/1 point per tope: coordinates indicate the sign at each element."""
    pts, labels = [], []
    for t in topes(M):
        coords = []
        for s in t.signs:
            coords += [Fraction(int(s == 1)), Fraction(int(s == -1))]
        pts.append(tuple(coords))
        labels.append(t.to_string())
    return PointLocus(small_variables(M.ground), tuple(labels), tuple(pts), "covector")


def covector_locus(M):
    """One 0/1 point per covector, with a third coordinate flagging zeros."""
    pts, labels = [], []
    for v in M.covectors:
        coords = []
        for s in v.signs:
            coords += [
                Fraction(int(s == 1)),
                Fraction(int(s == -1)),
                Fraction(int(s == 0)),
            ]
        pts.append(tuple(coords))
        labels.append(v.to_string())
    return PointLocus(big_variables(M.ground), tuple(labels), tuple(pts), "covector")


# ---------------------------------------------------------------------------
# Hilbert series and evaluation filtration


@dataclass(frozen=True)
class HilbertSeries:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c < 0 for c in self.coeffs):
            raise HarmonicsError("Hilbert coefficients must be nonnegative")

    def at_one(self):
        return sum(self.coeffs)

    def __getitem__(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                bits.append(str(c))
            else:
                q = "q" if d == 1 else f"q^{d}"
                bits.append(q if c == 1 else f"{c}{q}")
        return " + ".join(bits) if bits else "0"

    def to_json_dict(self):
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, data):
        return cls(tuple(data["coeffs"]))

    @classmethod
    def from_degree_counts(cls, degrees):
        degrees = list(degrees)
        if not degrees:
            return cls(())
        coeffs = [0] * (max(degrees) + 1)
        for d in degrees:
            coeffs[d] += 1
        return cls(tuple(coeffs))

    def shifted(self, k):
        return HilbertSeries((0,) * k + self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return HilbertSeries(tuple(self[d] + other[d] for d in range(n)))


class EvaluationFiltration:
    """Degree filtration of functions on a locus by monomial evaluation spans."""

    def __init__(self, locus, field=QQ):
        if len(locus) == 0:
            raise EmptyLocusError("the locus has no points")
        if field.characteristic:
            if locus.requires_char_zero:
                raise HarmonicsError("this locus requires a characteristic-zero field")
            if field.characteristic <= len(locus):
                raise HarmonicsError(
                    "prime fields are only trusted here when p exceeds the point count"
                )
        self.locus = locus
        self.field = field
        self.n_points = len(locus)
        self.n_vars = len(locus.variables)
        if field.characteristic == 0:
            self._var_evals = [
                tuple(Fraction(pt[i]) for pt in locus.points) for i in range(self.n_vars)
            ]
            ones = tuple(Fraction(1) for _ in range(self.n_points))
        else:
            self._var_evals = [
                np.array([field.of(pt[i]) for pt in locus.points], dtype=np.int64)
                for i in range(self.n_vars)
            ]
            ones = np.ones(self.n_points, dtype=np.int64)
        self.space = make_rowspace(self.n_points, field)
        self.coeffs = []
        self.snapshots = []
        self._standard = []
        self._seen = set()
        self.complete = False
        self.space.insert(ones)
        self.coeffs.append(1)
        self.snapshots.append(self.space.copy())
        self._standard.append([((0,) * self.n_vars, ones)])
        if self.space.rank == self.n_points:
            self.complete = True

    def _mul(self, vec, i):
        col = self._var_evals[i]
        if self.field.characteristic == 0:
            return tuple(a * b for a, b in zip(vec, col))
        return vec * col % self.field.characteristic

    def _key(self, vec):
        if self.field.characteristic == 0:
            return vec
        return vec.tobytes()

    def advance_degree(self):
        if self.complete:
            return
        d = len(self.coeffs)
        if d >= self.n_points:
            raise HarmonicsError(
                "evaluation spans failed to fill by the point-count degree bound; "
                "this signals an arithmetic bug"
            )
        candidates = {}
        for exps, vec in self._standard[d - 1]:
            for i in range(self.n_vars):
                child = exps[:i] + (exps[i] + 1,) + exps[i + 1 :]
                if child not in candidates:
                    candidates[child] = (vec, i)
        new_standard = []
        h = 0
        for exps in sorted(candidates, reverse=True):
            vec, i = candidates[exps]
            v = self._mul(vec, i)
            key = self._key(v)
            if key in self._seen:
                continue
            self._seen.add(key)
            if self.space.insert(v):
                h += 1
                new_standard.append((exps, v))
                if self.space.rank == self.n_points:
                    break
        self.coeffs.append(h)
        self._standard.append(new_standard)
        self.snapshots.append(self.space.copy())
        if self.space.rank == self.n_points:
            self.complete = True
        elif h == 0:
            raise HarmonicsError(
                "evaluation spans stagnated below full rank; this signals an arithmetic bug"
            )

    def build(self):
        while not self.complete:
            self.advance_degree()
        return self

    def hilbert(self):
        self.build()
        return HilbertSeries(tuple(self.coeffs))

    def space_upto(self, d):
        """Row space of evaluation vectors of all monomials of degree <= d."""
        if d < 0:
            return make_rowspace(self.n_points, self.field)
        while not self.complete and len(self.snapshots) <= d:
            self.advance_degree()
        return self.snapshots[min(d, len(self.snapshots) - 1)]

    def standard_monomials(self, d):
        while not self.complete and len(self._standard) <= d:
            self.advance_degree()
        if d >= len(self._standard):
            return []
        return [exps for exps, _ in self._standard[d]]

    def evaluate(self, poly):
        if tuple(poly.vars) != tuple(self.locus.variables):
            raise HarmonicsError("polynomial variables do not match the locus")
        if self.field.characteristic == 0:
            return tuple(poly.evaluate(pt) for pt in self.locus.points)
        pts = [[self.field.of(c) for c in pt] for pt in self.locus.points]
        return np.array([poly.evaluate(pt) for pt in pts], dtype=np.int64)


def hilbert_series(locus, field=QQ):
    """Graded dimension counts of the locus's orbit-harmonics quotient."""
    return EvaluationFiltration(locus, field).hilbert()


def gr_membership(locus, poly, field=QQ, filtration=None):
    """Is this homogeneous form a top form of a function vanishing on the locus?

    Equivalent test: its evaluation vector lies in the span of evaluations of
    strictly smaller-degree monomials.
    """
    if poly.is_zero or not poly.is_homogeneous():
        raise HarmonicsError("membership test needs a nonzero homogeneous polynomial")
    d = poly.degree()
    if d < 1:
        raise HarmonicsError("membership test needs degree at least 1")
    filt = filtration or EvaluationFiltration(locus, field)
    if field.characteristic == 0:
        p = poly
    else:
        p = Polynomial(poly.vars, field, {e: field.of(c) for e, c in poly.terms.items()})
    vec = filt.evaluate(p)
    return filt.space_upto(d - 1).contains(vec)


# ---------------------------------------------------------------------------
# ideal presentations


@dataclass
class IdealPresentation:
    generators: list
    tag: str
    order: tuple | None = None
    basic_choice: dict | None = None
    j_choice: dict | None = None

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _y_indices_small(i):
    return 2 * i, 2 * i + 1


def _indices_big(i):
    return 3 * i, 3 * i + 1, 3 * i + 2


def _mono(vars, pairs):
    exps = [0] * len(vars)
    for idx, e in pairs:
        exps[idx] += e
    return Polynomial.monomial(vars, tuple(exps), 1, QQ)


def _y_power(vars, index_of, i, sign):
    yp, ym = index_of(i)[:2]
    return _mono(vars, [(yp if sign == 1 else ym, 1)])


def tope_ideal_generators(M, order=None, limits=DEFAULT_LIMITS):
    """Generators of the vanishing ideal of the tope locus and its graded ideal.

    Affine list: y_i+ y_i-, y_i+ + y_i- - 1, and one squarefree monomial per
    circuit.  Graded list: all quadratics in each {y_i+, y_i-}, the sums
    y_i+ + y_i-, the circuit monomials, and for each symmetric circuit with
    support size s the elementary symmetric polynomial e_{s-1} of its signed
    y-variables.
    """
    vars = small_variables(M.ground)
    n = M.ground.size
    circs = circuits(M, limits)
    affine, graded = [], []
    one = Polynomial.one(vars, QQ)
    for i in range(n):
        yp, ym = _y_indices_small(i)
        affine.append(_mono(vars, [(yp, 1), (ym, 1)]))
        affine.append(_mono(vars, [(yp, 1)]) + _mono(vars, [(ym, 1)]) - one)
        graded.append(_mono(vars, [(yp, 2)]))
        graded.append(_mono(vars, [(yp, 1), (ym, 1)]))
        graded.append(_mono(vars, [(ym, 2)]))
        graded.append(_mono(vars, [(yp, 1)]) + _mono(vars, [(ym, 1)]))
    for c in circs:
        pairs = []
        for i in sorted(c.vector.support()):
            yp, ym = _y_indices_small(i)
            pairs.append((yp if c.vector[i] == 1 else ym, 1))
        monomial = _mono(vars, pairs)
        affine.append(monomial)
        graded.append(monomial)
    for c in circs:
        if not c.symmetric:
            continue
        supp = sorted(c.vector.support())
        ys = [_y_power(vars, _y_indices_small, i, c.vector[i]) for i in supp]
        graded.append(elementary_symmetric(len(supp) - 1, ys))
    order = tuple(order) if order is not None else tuple(range(n))
    return {
        "affine": IdealPresentation(affine, "tope-affine", order),
        "graded": IdealPresentation(graded, "tope-graded", order),
    }


def _z_monomial(vars, indices):
    return _mono(vars, [(_indices_big(i)[2], 1) for i in sorted(indices)])


def z_ideal_generators(M):
    """z-variable relations carried by the flat structure: a product over each
    minimal nonbasic set, and a difference for each pair of basic sets of a flat."""
    vars = big_variables(M.ground)
    gens = []
    for C in minimal_nonbasic_sets(M):
        gens.append(_z_monomial(vars, C))
    basic_by_flat = {}
    for F in flats_of(M):
        basics = basic_sets(M, F)
        basic_by_flat[F] = tuple(tuple(sorted(b)) for b in basics)
        for a in range(len(basics)):
            for b in range(a + 1, len(basics)):
                gens.append(_z_monomial(vars, basics[a]) - _z_monomial(vars, basics[b]))
    return IdealPresentation(gens, "z-flat", basic_choice=basic_by_flat)


def symmetric_circuit_generator(M, F, circuit_vector, J, basic_set=None):
    """The degree codim(F)+s-1 generator attached to a symmetric circuit of the
    contraction at F, built from the mixing subset J of its support."""
    vars = big_variables(M.ground)
    F = frozenset(F)
    keep = [i for i in range(M.ground.size) if i not in F]
    B = basic_set if basic_set is not None else default_basic_set(M, F)
    supp = sorted(circuit_vector.support())
    J = frozenset(J)
    if not (J and J < set(supp)):
        raise HarmonicsError("J must be a nonempty proper subset of the circuit support")
    tilde = []
    for i in supp:
        gi = keep[i]
        yp, ym, zi = _indices_big(gi)
        term = _mono(vars, [(yp if circuit_vector[i] == 1 else ym, 1)])
        if i in J:
            term = term + _mono(vars, [(zi, 1)])
        tilde.append(term)
    return _z_monomial(vars, B) * elementary_symmetric(len(supp) - 1, tilde)


def covector_ideal_generators(M, order=None, basic_choice=None, j_choice=None, limits=DEFAULT_LIMITS):
    """Generators presenting the graded function ring of the covector locus.

    On top of the z-variable relations: per-element quadratics and the sums
    y_i+ + y_i- + z_i; and per flat F (through its chosen basic-set monomial
    z_B(F)): z_B(F) y_i^± for i in F, a monomial for each circuit of the
    contraction at F, and an elementary symmetric generator for each of its
    symmetric circuits built from a chosen mixing subset J.
    """
    vars = big_variables(M.ground)
    n = M.ground.size
    order = tuple(order) if order is not None else tuple(range(n))
    z_part = z_ideal_generators(M)
    gens = list(z_part.generators)
    for i in range(n):
        yp, ym, zi = _indices_big(i)
        for a, b in ((yp, yp), (yp, ym), (yp, zi), (ym, ym), (ym, zi), (zi, zi)):
            gens.append(_mono(vars, [(a, 1), (b, 1)]) if a != b else _mono(vars, [(a, 2)]))
        gens.append(
            _mono(vars, [(yp, 1)]) + _mono(vars, [(ym, 1)]) + _mono(vars, [(zi, 1)])
        )
    basic_used = {}
    j_used = {}
    for F in flats_of(M):
        B = basic_choice(F) if basic_choice else default_basic_set(M, F)
        basic_used[F] = tuple(sorted(B))
        zB = _z_monomial(vars, B)
        keep = [i for i in range(n) if i not in F]
        for i in sorted(F):
            yp, ym, _ = _indices_big(i)
            gens.append(zB * _mono(vars, [(yp, 1)]))
            gens.append(zB * _mono(vars, [(ym, 1)]))
        MF = contract(M, F)
        for c in circuits(MF, limits):
            pairs = []
            for i in sorted(c.vector.support()):
                gi = keep[i]
                yp, ym, _ = _indices_big(gi)
                pairs.append((yp if c.vector[i] == 1 else ym, 1))
            gens.append(zB * _mono(vars, pairs))
        for c in circuits(MF, limits):
            if not c.symmetric:
                continue
            if j_choice is not None:
                J = frozenset(j_choice(F, c.vector))
            else:
                position = {e: k for k, e in enumerate(order)}
                supp = sorted(c.vector.support(), key=lambda i: position[keep[i]])
                J = frozenset({supp[0]})
            j_used[(F, c.vector.to_string())] = tuple(sorted(J))
            gens.append(symmetric_circuit_generator(M, F, c.vector, J, basic_set=B))
    return IdealPresentation(gens, "covector-graded", order, basic_used, j_used)


# ---------------------------------------------------------------------------
# NBC bases


@dataclass
class NbcBases:
    tope: list  # monomials spanning the tope-locus quotient
    covector: list  # monomials spanning the covector-locus quotient
    covector_strata: dict  # flat -> list of monomials contributed by that flat
    order: tuple  # the total order the NBC sets were taken against


def nbc_basis(M, order=None, basic_choice=None, limits=DEFAULT_LIMITS):
    """Monomial bases indexed by NBC sets.

    Tope side: one squarefree y+ monomial per NBC set.  Covector side: per
    flat F, the chosen z-monomial of F times the NBC monomials of the
    contraction at F; sizes add up to the covector count.
    """
    n = M.ground.size
    order = tuple(order) if order is not None else tuple(range(n))
    small_vars = small_variables(M.ground)
    big_vars = big_variables(M.ground)
    tope_monos = []
    for N in nbc_sets(M, order, limits):
        tope_monos.append(
            _mono(small_vars, [(_y_indices_small(i)[0], 1) for i in sorted(N)])
        )
    strata = {}
    cov_monos = []
    position = {e: k for k, e in enumerate(order)}
    for F in flats_of(M):
        B = basic_choice(F) if basic_choice else default_basic_set(M, F)
        zB = _z_monomial(big_vars, B)
        keep = [i for i in range(n) if i not in F]
        sub_order = sorted(range(len(keep)), key=lambda i: position[keep[i]])
        MF = contract(M, F)
        flat_monos = []
        for N in nbc_sets(MF, sub_order, limits):
            mono = zB * _mono(big_vars, [(_indices_big(keep[i])[0], 1) for i in sorted(N)])
            flat_monos.append(mono)
        strata[F] = flat_monos
        cov_monos.extend(flat_monos)
    if len(cov_monos) != len(M):
        raise HarmonicsError(
            f"covector basis size {len(cov_monos)} does not match covector count {len(M)}"
        )
    return NbcBases(tope_monos, cov_monos, strata, order)


def verify_basis(locus, monomials, field=QQ):
    """Do these polynomials evaluate to an invertible matrix on the locus?"""
    monomials = list(monomials)
    if len(monomials) != len(locus):
        raise HarmonicsError(
            f"need exactly {len(locus)} polynomials for this locus, got {len(monomials)}"
        )
    filt = EvaluationFiltration(locus, field)
    space = make_rowspace(len(locus), field)
    count = 0
    for p in monomials:
        if field.characteristic:
            p = Polynomial(p.vars, field, {e: field.of(c) for e, c in p.terms.items()})
        if space.insert(filt.evaluate(p)):
            count += 1
    return count == len(locus)


def hilbert_from_nbc(M, order=None, limits=DEFAULT_LIMITS):
    """Hilbert series from NBC counting alone: tope side by NBC size, covector
    side as the codim-shifted sum of tope series of contractions."""
    n = M.ground.size
    order = tuple(order) if order is not None else tuple(range(n))
    tope_series = HilbertSeries.from_degree_counts(
        len(N) for N in nbc_sets(M, order, limits)
    )
    position = {e: k for k, e in enumerate(order)}
    total = HilbertSeries(())
    for F in flats_of(M):
        keep = [i for i in range(n) if i not in F]
        sub_order = sorted(range(len(keep)), key=lambda i: position[keep[i]])
        MF = contract(M, F)
        stratum = HilbertSeries.from_degree_counts(
            len(N) for N in nbc_sets(MF, sub_order, limits)
        )
        total = total + stratum.shifted(codim(M, F))
    return {"tope": tope_series, "covector": total}


# ---------------------------------------------------------------------------
# the structure verification report


@dataclass
class PresentationReport:
    membership_checked: int
    membership_failures: list
    basis_ok: bool
    hilbert_rank: HilbertSeries
    hilbert_nbc: HilbertSeries
    j_sweep_checked: int
    j_sweep_failures: list

    @property
    def hilbert_ok(self):
        return self.hilbert_rank == self.hilbert_nbc

    @property
    def ok(self):
        return (
            not self.membership_failures
            and self.basis_ok
            and self.hilbert_ok
            and not self.j_sweep_failures
        )

    def as_dict(self):
        return {
            "membership": {
                "checked": self.membership_checked,
                "failures": self.membership_failures,
            },
            "basis_ok": self.basis_ok,
            "hilbert": {
                "rank_method": list(self.hilbert_rank.coeffs),
                "nbc_method": list(self.hilbert_nbc.coeffs),
                "ok": self.hilbert_ok,
            },
            "j_sweep": {
                "checked": self.j_sweep_checked,
                "failures": self.j_sweep_failures,
            },
            "ok": self.ok,
        }


def verify_covector_presentation(M, order=None, j_support_cap=5, field=QQ, limits=DEFAULT_LIMITS):
    """Check the covector-locus presentation end to end.

    (a) every z-relation and covector-ideal generator is a graded member,
    (b) the NBC monomials are a basis of functions on the covector locus,
    (c) the rank Hilbert series equals the NBC-counted one,
    (d) for symmetric circuits with support size <= j_support_cap, membership
        holds for every admissible mixing subset J, not just the default.
    """
    locus = covector_locus(M)
    filt = EvaluationFiltration(locus, field)
    failures = []
    checked = 0
    gens = covector_ideal_generators(M, order, limits=limits)
    for g in gens:
        checked += 1
        if not gr_membership(locus, g, field, filt):
            failures.append(str(g))
    bases = nbc_basis(M, order, limits=limits)
    basis_ok = verify_basis(locus, bases.covector, field)
    h_rank = filt.hilbert()
    h_nbc = hilbert_from_nbc(M, order, limits)["covector"]
    j_checked = 0
    j_failures = []
    for F in flats_of(M):
        MF = contract(M, F)
        for c in circuits(MF, limits):
            if not c.symmetric:
                continue
            supp = sorted(c.vector.support())
            if len(supp) > j_support_cap:
                continue
            for sub in range(1, 2 ** len(supp) - 1):
                J = frozenset(supp[i] for i in range(len(supp)) if sub >> i & 1)
                g = symmetric_circuit_generator(M, F, c.vector, J)
                j_checked += 1
                if not gr_membership(locus, g, field, filt):
                    j_failures.append(
                        {"flat": sorted(F), "circuit": c.vector.to_string(), "J": sorted(J)}
                    )
    return PresentationReport(
        checked, failures, basis_ok, h_rank, h_nbc, j_checked, j_failures
    )


# ---------------------------------------------------------------------------
# permutation loci


def _check_locus_n(n, limits):
    if n < 1:
        raise HarmonicsError("permutation loci need n >= 1")
    if n > limits.max_locus_n:
        raise HarmonicsError(f"permutation loci capped at n = {limits.max_locus_n}")


def kostant_locus(n, limits=DEFAULT_LIMITS):
    """Permutations embedded by one-line notation in n-space."""
    _check_locus_n(n, limits)
    variables = tuple(f"x{i}" for i in range(1, n + 1))
    labels, points = [], []
    for w in permutations(range(1, n + 1)):
        labels.append("".join(map(str, w)))
        points.append(tuple(Fraction(v) for v in w))
    return PointLocus(variables, tuple(labels), tuple(points), "permutation", True)


def proper_nonempty_subsets(n):
    subsets = []
    for size in range(1, n):
        subsets.extend(tuple(sorted(c)) for c in combinations(range(1, n + 1), size))
    return subsets


def permutohedral_locus(n, limits=DEFAULT_LIMITS):
    """Permutations embedded by descent-free prefix drops over proper subsets.

    The coordinate at a subset I is w(j) - w(j+1) when I is the set of the
    first j letters of w, and 0 otherwise.
    """
    _check_locus_n(n, limits)
    subsets = proper_nonempty_subsets(n)
    variables = tuple("x" + "".join(map(str, s)) for s in subsets)
    index = {s: k for k, s in enumerate(subsets)}
    labels, points = [], []
    for w in permutations(range(1, n + 1)):
        coords = [Fraction(0)] * len(subsets)
        for j in range(1, n):
            prefix = tuple(sorted(w[:j]))
            coords[index[prefix]] = Fraction(w[j - 1] - w[j])
        labels.append("".join(map(str, w)))
        points.append(tuple(coords))
    return PointLocus(variables, tuple(labels), tuple(points), "permutation", True)


def permmatrix_locus(n, limits=DEFAULT_LIMITS):
    """Permutations embedded as flattened permutation matrices."""
    _check_locus_n(n, limits)
    variables = tuple(f"m{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))
    labels, points = [], []
    for w in permutations(range(1, n + 1)):
        coords = [Fraction(0)] * (n * n)
        for i, v in enumerate(w):
            coords[i * n + (v - 1)] = Fraction(1)
        labels.append("".join(map(str, w)))
        points.append(tuple(coords))
    return PointLocus(variables, tuple(labels), tuple(points), "permutation")


# ---------------------------------------------------------------------------
# braid tope-series closed forms


@dataclass
class BraidSeriesReport:
    n: int
    computed: HilbertSeries
    cycle_defect_coeffs: tuple  # sum_w q^(n - cyc w) = prod (1 + i q)
    rising_factorial_coeffs: tuple  # q(q+1)...(q+n-1) = sum_w q^(cyc w)
    matches_cycle_defect: bool
    matches_rising_factorial: bool

    def as_dict(self):
        return {
            "n": self.n,
            "computed": list(self.computed.coeffs),
            "cycle_defect_gf": list(self.cycle_defect_coeffs),
            "rising_factorial_gf": list(self.rising_factorial_coeffs),
            "matches_cycle_defect": self.matches_cycle_defect,
            "matches_rising_factorial": self.matches_rising_factorial,
        }


def braid_tope_series_report(n, field=QQ):
    """Compare the computed tope-locus Hilbert series of the braid COM with the
    two cycle-statistic generating functions.

    The computed series matches sum_w q^(n - cyc w); the rising factorial
    q(q+1)...(q+n-1) (which counts cycles directly, with zero constant term)
    does not, so sources quoting the latter for this grading are using the
    reversed convention.
    """
    M = braid_com(n)
    computed = hilbert_series(tope_locus(M), field)
    defect = tuple(permstats.cycle_defect(n))
    rising = tuple(permstats.rising_factorial_coefficients(n))
    return BraidSeriesReport(
        n,
        computed,
        defect,
        rising,
        computed.coeffs == defect,
        computed.coeffs == rising,
    )
