"""Degree-one-generated subalgebras and the three Lefschetz-type predicates.

L^0 is spanned by the unit, L^1 by the chosen degree-one generators, and
L^{k+1} = L^1 * L^k. All bases are kept in reduced echelon form so ranks,
verdicts, and witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Matrix, Vector, kernel, rref, row_space_basis, row_space_rank
from .ring import Element, GradedAlgebra, integrate, multiply


@dataclass(frozen=True)
class LefschetzData:
    """Echelon bases of L^k inside the ambient degree-k components."""
    ambient: GradedAlgebra
    generators: tuple[Vector, ...]
    bases: tuple[tuple[Vector, ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    def dim(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0

    def elements(self, k: int) -> list[Element]:
        return [self.ambient.element(k, v) for v in self.bases[k]]


def lefschetz_subalgebra(a: GradedAlgebra,
                         generators: Optional[Sequence[Element]] = None
                         ) -> LefschetzData:
    """Subalgebra generated in degree one, default generators = all of degree 1."""
    if generators is None:
        gens = [a.basis_element(1, i) for i in range(a.dim(1))]
    else:
        gens = list(generators)
        for g in gens:
            if not isinstance(g, Element) or g.algebra is not a:
                raise ValueError(f"generators must be elements of {a.name}")
            if g.above_top or g.degree != 1:
                raise ValueError("generators must be homogeneous of degree 1")
    d = a.top_degree
    bases: list[tuple[Vector, ...]] = [(a.unit().coords,)]
    for k in range(1, d + 1):
        candidates = [multiply(g, a.element(k - 1, v)).coords
                      for g in gens for v in bases[k - 1]]
        bases.append(tuple(row_space_basis(candidates)))
    return LefschetzData(a, tuple(g.coords for g in gens), tuple(bases))


@dataclass(frozen=True)
class DegreeVerdict:
    k: int
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class PredicateVerdict:
    predicate: str
    degrees: tuple[DegreeVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.degrees)

    @property
    def witness(self) -> Optional[str]:
        for v in self.degrees:
            if not v.passed:
                return f"k={v.k}: {v.witness}"
        return None


def check_symmetry(lef: LefschetzData) -> PredicateVerdict:
    """dim L^k = dim L^{d-k} for every k up to the middle."""
    d = lef.ambient.top_degree
    out = []
    for k in range(d // 2 + 1):
        low, high = lef.dim(k), lef.dim(d - k)
        out.append(DegreeVerdict(k, low == high,
                                 "" if low == high else f"{low} vs {high}"))
    return PredicateVerdict("symmetry", tuple(out))


def _checked_omega(lef: LefschetzData, omega: Optional[Element]) -> Optional[Element]:
    a = lef.ambient
    if omega is None:
        if a.top_degree == 0:
            return None
        raise ValueError("omega is required when the top degree is positive")
    if not isinstance(omega, Element) or omega.algebra is not a:
        raise ValueError(f"omega must be an element of {a.name}")
    if omega.above_top or omega.degree != 1:
        raise ValueError("omega must be homogeneous of degree 1")
    level = list(lef.bases[1]) if a.top_degree >= 1 else []
    if row_space_rank(level + [omega.coords]) != len(level):
        raise ValueError("omega lies outside the degree-one Lefschetz component")
    return omega


def _map_rank(lef: LefschetzData, mult_by: Element, k: int) -> int:
    """Rank of (x -> mult_by * x) restricted to L^k."""
    images = [multiply(mult_by, u).coords for u in lef.elements(k)]
    return row_space_rank(images) if images else 0


def check_hard_lefschetz(lef: LefschetzData,
                         omega: Optional[Element]) -> PredicateVerdict:
    """omega^{d-2k}: L^k -> L^{d-k} must be bijective for every k <= d/2."""
    omega = _checked_omega(lef, omega)
    d = lef.ambient.top_degree
    out = []
    for k in range(d // 2 + 1):
        low, high = lef.dim(k), lef.dim(d - k)
        if low != high:
            out.append(DegreeVerdict(k, False, f"{low} vs {high}"))
            continue
        power = lef.ambient.unit() if omega is None else omega ** (d - 2 * k)
        rank = _map_rank(lef, power, k)
        out.append(DegreeVerdict(k, rank == low,
                                 "" if rank == low else f"rank {rank} of {low}"))
    return PredicateVerdict("hard-lefschetz", tuple(out))


def check_poincare_duality(lef: LefschetzData) -> PredicateVerdict:
    """The pairing L^k x L^{d-k} -> Q must be square and nondegenerate."""
    a = lef.ambient
    d = a.top_degree
    out = []
    for k in range(d // 2 + 1):
        low, high = lef.elements(k), lef.elements(d - k)
        if len(low) != len(high):
            out.append(DegreeVerdict(k, False, f"{len(low)} vs {len(high)}"))
            continue
        if not low:
            out.append(DegreeVerdict(k, True))
            continue
        gram = Matrix(len(low), len(high),
                      [[integrate(multiply(u, v)) for v in high] for u in low])
        rank = rref(gram).rank
        out.append(DegreeVerdict(k, rank == len(low),
                                 "" if rank == len(low)
                                 else f"rank {rank} of {len(low)}"))
    return PredicateVerdict("poincare-duality", tuple(out))


@dataclass(frozen=True)
class PrimitiveDims:
    """dim PL^i for i = 0..d//2; valid only when hard Lefschetz holds."""
    dims: tuple[int, ...]
    valid: bool


def primitive_dims(lef: LefschetzData, omega: Optional[Element]) -> PrimitiveDims:
    """PL^i = ker(omega^{d-2i+1}: L^i -> L^{d-i+1}).

    When hard Lefschetz holds the partial sums of these must rebuild the
    L-dimension profile; that bookkeeping identity is asserted.
    """
    omega = _checked_omega(lef, omega)
    a = lef.ambient
    d = a.top_degree
    dims = []
    for i in range(d // 2 + 1):
        n = lef.dim(i)
        if n == 0:
            dims.append(0)
            continue
        target = d - i + 1
        if target > d:
            dims.append(n)  # the map lands above the top degree, so it is zero
            continue
        power = omega ** (d - 2 * i + 1)
        cols = [multiply(power, u).coords for u in lef.elements(i)]
        mat = Matrix(a.dim(target), n,
                     [[cols[j][t] for j in range(n)]
                      for t in range(a.dim(target))])
        dims.append(len(kernel(mat)))
    valid = check_hard_lefschetz(lef, omega).passed
    if valid:
        for k in range(d // 2 + 1):
            if sum(dims[: k + 1]) != lef.dim(k):
                raise RuntimeError(
                    "primitive decomposition bookkeeping failed at degree "
                    f"{k}: {dims} against L-dims {lef.dims}")
    return PrimitiveDims(tuple(dims), valid)
