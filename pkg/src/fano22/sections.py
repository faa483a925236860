"""Multigraded monomial bases, torus weights and section spaces.

A grading assigns each variable an integer weight vector; section spaces
are explicit spans of homogeneous polynomials with eagerly verified
linear independence.  All solving is exact, via the fraction-free
routines in `linalg`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .linalg import ExactMatrix
from .poly import Polynomial, Registry, _grlex_key


class UnboundedDegreeCone(ValueError):
    """The grading admits infinitely many monomials of the requested degree."""


class Grading:
    """Per-variable integer weight vectors of a common length."""

    def __init__(self, registry: Registry, weights: Mapping[str, Sequence[int]]):
        self.registry = registry
        lengths = {len(w) for w in weights.values()}
        if len(lengths) > 1:
            raise ValueError("all weight vectors must have the same length")
        self.ncomponents = lengths.pop() if lengths else 1
        self.weights = {name: tuple(w) for name, w in weights.items()}
        for name in self.weights:
            registry.index(name)

    def multidegree(self, f: Polynomial) -> tuple[int, ...] | None:
        """Common multidegree of f's terms, or None if inhomogeneous.

        Variables outside the grading must not occur in f.
        """
        if f.is_zero():
            return None
        reg = f.registry
        degree = None
        for e in f.terms:
            d = [0] * self.ncomponents
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = reg.names[i]
                if name not in self.weights:
                    return None
                for comp, w in enumerate(self.weights[name]):
                    d[comp] += k * w
            d = tuple(d)
            if degree is None:
                degree = d
            elif degree != d:
                return None
        return degree


def _positive_functional(vectors: list[tuple[int, ...]]) -> tuple[Fraction, ...] | None:
    """A rational functional phi with phi . w > 0 for every weight vector.

    Existence certifies that every degree has finitely many monomials.
    Found by small grid search; sufficient for gradings with at most two
    components (all this artifact uses).
    """
    ncomp = len(vectors[0]) if vectors else 1
    if ncomp == 1:
        candidates = [(Fraction(1),), (Fraction(-1),)]
    elif ncomp == 2:
        candidates = [
            (Fraction(p), Fraction(q))
            for p in range(-12, 13)
            for q in range(-12, 13)
            if (p, q) != (0, 0)
        ]
    else:
        candidates = []
        for i in range(ncomp):
            for s in (1, -1):
                candidates.append(tuple(Fraction(s if j == i else 0) for j in range(ncomp)))
        candidates.append(tuple(Fraction(1) for _ in range(ncomp)))
    for phi in candidates:
        if all(sum(p * w for p, w in zip(phi, vec)) > 0 for vec in vectors):
            return phi
    return None


def monomial_basis(
    registry: Registry,
    grading: Grading,
    multidegree: Sequence[int],
    variables: Sequence[str] | None = None,
) -> list[Polynomial]:
    """All monomials in `variables` of exactly the given multidegree.

    Complete by construction: enumeration is bounded by a positive
    functional on the weight vectors, whose absence raises
    `UnboundedDegreeCone`.
    """
    if variables is None:
        variables = list(grading.weights)
    target = tuple(multidegree)
    if len(target) != grading.ncomponents:
        raise ValueError("multidegree length does not match the grading")
    vecs = [grading.weights[v] for v in variables]
    phi = _positive_functional(vecs)
    if phi is None:
        raise UnboundedDegreeCone(
            "no positive functional on the weight vectors; degree cone unbounded"
        )
    budget = sum(p * t for p, t in zip(phi, target))
    out: list[tuple[int, ...]] = []
    nvars = len(variables)

    def rec(i: int, remaining: tuple[int, ...], budget_left: Fraction, expo: list[int]):
        if i == nvars:
            if all(r == 0 for r in remaining):
                out.append(tuple(expo))
            return
        step = sum(p * w for p, w in zip(phi, vecs[i]))
        k = 0
        while k * step <= budget_left:
            expo.append(k)
            rec(
                i + 1,
                tuple(r - k * w for r, w in zip(remaining, vecs[i])),
                budget_left - k * step,
                expo,
            )
            expo.pop()
            k += 1

    rec(0, target, budget, [])
    # lift exponents on `variables` to full registry monomials
    idx = [registry.index(v) for v in variables]
    monomials = []
    for expo in out:
        full = [0] * len(registry.names)
        for j, k in zip(idx, expo):
            full[j] = k
        monomials.append(tuple(full))
    monomials.sort(key=_grlex_key, reverse=True)
    return [Polynomial(registry, {m: Fraction(1)}) for m in monomials]


def torus_weight(m: Polynomial, torus_weights: Mapping[str, int]) -> int:
    """Sum over variables of exponent times weight, for a single monomial."""
    if len(m.terms) != 1:
        raise ValueError("torus_weight expects a single monomial")
    reg = m.registry
    (expo,) = m.terms
    return sum(
        k * torus_weights.get(reg.names[i], 0) for i, k in enumerate(expo) if k
    )


def _coordinate_split(f: Polynomial, coord_names: set[str]):
    """Split each term into (coordinate monomial, parameter part).

    Returns a dict: coordinate exponent tuple -> parameter Polynomial.
    """
    reg = f.registry
    coord_idx = {reg.index(n) for n in coord_names}
    out: dict[tuple[int, ...], Polynomial] = {}
    for e, c in f.terms.items():
        coord_e = tuple(k if i in coord_idx else 0 for i, k in enumerate(e))
        param_e = tuple(0 if i in coord_idx else k for i, k in enumerate(e))
        part = Polynomial(reg, {param_e: c})
        if coord_e in out:
            out[coord_e] = out[coord_e] + part
        else:
            out[coord_e] = part
    return {e: p for e, p in out.items() if not p.is_zero()}


class SectionSpace:
    """A finite-dimensional span of homogeneous polynomials.

    Basis independence is verified eagerly; basis elements must have
    rational coefficients on coordinate-variable monomials.
    """

    def __init__(
        self,
        registry: Registry,
        basis: Sequence[Polynomial],
        multidegree: tuple[int, ...] | None = None,
        grading: Grading | None = None,
    ):
        self.registry = registry
        self.basis = list(basis)
        self.multidegree = multidegree
        if grading is not None and multidegree is not None:
            for b in self.basis:
                if grading.multidegree(b) != tuple(multidegree):
                    raise ValueError(
                        f"basis element {b} is not homogeneous of degree {multidegree}"
                    )
        self._monomials = sorted(
            {e for b in self.basis for e in b.terms}, key=_grlex_key, reverse=True
        )
        rows = []
        for e in self._monomials:
            rows.append([b.terms.get(e, Fraction(0)) for b in self.basis])
        self._matrix = ExactMatrix(registry, rows)
        if self.basis and self._matrix.rank() != len(self.basis):
            raise ValueError("basis elements are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, f: Polynomial) -> list[Polynomial] | None:
        """Exact coordinates of f in the basis, or None if f is outside.

        Coefficients may be polynomials in non-coordinate (parameter)
        variables; the basis itself must be rational.
        """
        return coords_in_space(f, self)

    def contains(self, f: Polynomial) -> bool:
        return self.coords(f) is not None

    def recombine(self, coords: Sequence) -> Polynomial:
        acc = self.registry.zero
        for c, b in zip(coords, self.basis):
            if isinstance(c, (int, Fraction)):
                c = self.registry.const(c)
            acc = acc + c * b
        return acc

    def same_span(self, other: "SectionSpace") -> bool:
        return (
            self.dim == other.dim
            and all(other.contains(b) for b in self.basis)
        )


def coords_in_space(f: Polynomial, space: SectionSpace) -> list[Polynomial] | None:
    """Solve f = sum c_i b_i exactly; c_i polynomial in parameter variables."""
    reg = space.registry
    coord_names = set()
    for b in space.basis:
        coord_names.update(b.variables())
    split = _coordinate_split(f, coord_names)
    # any coordinate monomial of f outside the basis support is fatal
    for e in split:
        if e not in set(space._monomials):
            return None
    if not space.basis:
        return [] if f.is_zero() else None
    # Gaussian elimination with rational pivots on the basis matrix,
    # polynomial right-hand side
    rows = [row[:] for row in space._matrix.rows]
    rhs = [split.get(e, reg.zero) for e in space._monomials]
    n = len(space.basis)
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        rhs[r], rhs[pivot_row] = rhs[pivot_row], rhs[r]
        pv = rows[r][c].constant_value()
        for i in range(len(rows)):
            if i == r or rows[i][c].is_zero():
                continue
            factor = rows[i][c].constant_value() / pv
            for j in range(n):
                rows[i][j] = rows[i][j] - rows[r][j].scale(factor)
            rhs[i] = rhs[i] - rhs[r].scale(factor)
        pivots.append((r, c))
        r += 1
    # consistency: zero rows must have zero rhs
    for i in range(len(rows)):
        if all(rows[i][j].is_zero() for j in range(n)) and not rhs[i].is_zero():
            return None
    coords: list[Polynomial] = [reg.zero] * n
    for r_i, c_i in pivots:
        coords[c_i] = rhs[r_i].scale(Fraction(1) / rows[r_i][c_i].constant_value())
    return coords


def weight_decompose(
    space: SectionSpace, torus_weights: Mapping[str, int]
) -> dict[int, SectionSpace]:
    """Partition the basis by torus weight; mixed-weight elements are an error."""
    buckets: dict[int, list[Polynomial]] = {}
    for b in space.basis:
        weights = {
            torus_weight(Polynomial(b.registry, {e: Fraction(1)}), torus_weights)
            for e in b.terms
        }
        if len(weights) != 1:
            raise ValueError(f"basis element {b} mixes torus weights {sorted(weights)}")
        buckets.setdefault(weights.pop(), []).append(b)
    return {
        w: SectionSpace(space.registry, elems, space.multidegree)
        for w, elems in sorted(buckets.items())
    }


def _binary_coefficients(form: Polynomial, t0: str, t1: str, degree: int):
    """Coefficients [a_0..a_degree] of t0^(d-j) t1^j; entries are Fractions."""
    reg = form.registry
    i0, i1 = reg.index(t0), reg.index(t1)
    coeffs = [Fraction(0)] * (degree + 1)
    for e, c in form.terms.items():
        if e[i0] + e[i1] != degree or any(
            k for i, k in enumerate(e) if i not in (i0, i1)
        ):
            raise ValueError("restriction is not a binary form of the common degree")
        coeffs[e[i1]] += c
    return coeffs


def restricted_order_subspace(
    space: SectionSpace,
    curve: Mapping[str, Polynomial],
    conditions: Sequence[tuple[tuple[Fraction, Fraction], int]],
    binary_vars: tuple[str, str],
) -> SectionSpace:
    """Sections whose restriction along the curve vanishes to given orders.

    Each condition is ((alpha, beta), k): vanishing order >= k at the
    point [alpha : beta] of the parameter line.  Orders at general points
    are computed through the linear coordinate change
    t0 -> alpha*t0, t1 -> beta*t0 + t1, keeping everything polynomial.
    """
    reg = space.registry
    t0, t1 = binary_vars
    restrictions = [b.substitute(curve) for b in space.basis]
    degrees = {r.total_degree() for r in restrictions if not r.is_zero()}
    if len(degrees) > 1:
        raise ValueError(f"inconsistent restricted degrees {sorted(degrees)}")
    if not degrees:
        return SectionSpace(reg, list(space.basis), space.multidegree)
    d = degrees.pop()

    constraint_rows: list[list[Fraction]] = []
    for (alpha, beta), order in conditions:
        alpha, beta = Fraction(alpha), Fraction(beta)
        if alpha == 0 and beta == 0:
            raise ValueError("point must be nonzero")
        per_basis = []
        for r in restrictions:
            if r.is_zero():
                per_basis.append([Fraction(0)] * (d + 1))
                continue
            if alpha == 0:
                # order at [0:1] is the order in t0
                coeffs = _binary_coefficients(r, t0, t1, d)
                per_basis.append(list(reversed(coeffs)))
            else:
                moved = r.substitute(
                    {
                        t0: reg.var(t0).scale(alpha),
                        t1: reg.var(t0).scale(beta) + reg.var(t1),
                    }
                )
                per_basis.append(_binary_coefficients(moved, t0, t1, d))
        for j in range(min(order, d + 1)):
            constraint_rows.append([per_basis[i][j] for i in range(space.dim)])

    matrix = ExactMatrix(reg, constraint_rows)
    kernel = matrix.kernel()
    new_basis = [space.recombine([v.constant_value() for v in vec]) for vec in kernel]
    return SectionSpace(reg, new_basis, space.multidegree)
