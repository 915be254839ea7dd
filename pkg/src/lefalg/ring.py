"""Finite graded-commutative algebras over the rationals.

An algebra is a named basis per complex degree 0..d, a full set of
structure-constant tables for every degree pair with k1+k2 <= d, and an
integration functional on the top degree. Cohomological degree 2k is
represented by internal degree k; odd degrees are not modeled, so the
product is honestly commutative and no Koszul signs appear anywhere.

Products whose degrees sum beyond d are the canonical zero: a zero vector
in the clamped degree d carrying an explicit ``above_top`` flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .linalg import (
    Matrix,
    Vector,
    dot,
    format_rational,
    scalar,
    vadd,
    vector,
    vzero,
)


class GradedAlgebra:
    """A finite graded-commutative Q-algebra with integration.

    ``basis[k]`` is the ordered label tuple of degree k. ``products[(k1, k2)]``
    is a table indexed by basis positions: ``products[(k1, k2)][i][j]`` is the
    coordinate vector of b_i * b_j in degree k1+k2. Tables exist for every
    ordered pair with k1+k2 <= d. ``integration`` is a coordinate functional
    on degree d.
    """

    __slots__ = ("name", "basis", "products", "integration", "_label_map")

    def __init__(self, name: str, basis: Sequence[Sequence[str]],
                 products: dict, integration: Sequence):
        basis = tuple(tuple(str(lbl) for lbl in deg) for deg in basis)
        if not basis:
            raise ValueError("an algebra needs at least degree 0")
        if len(basis[0]) != 1:
            raise ValueError("degree 0 must have exactly one basis element (the unit)")
        label_map: dict[str, tuple[int, int]] = {}
        for k, labels in enumerate(basis):
            for i, lbl in enumerate(labels):
                if lbl in label_map:
                    raise ValueError(f"duplicate basis label {lbl!r}")
                label_map[lbl] = (k, i)
        d = len(basis) - 1
        tables = {}
        for k1 in range(d + 1):
            for k2 in range(d + 1 - k1):
                try:
                    raw = products[(k1, k2)]
                except KeyError:
                    raise ValueError(f"missing product table for degrees ({k1},{k2})")
                n1, n2, n3 = len(basis[k1]), len(basis[k2]), len(basis[k1 + k2])
                table = tuple(tuple(vector(raw[i][j]) for j in range(n2))
                              for i in range(n1))
                for row in table:
                    for v in row:
                        if len(v) != n3:
                            raise ValueError(
                                f"product table ({k1},{k2}) has a vector of length "
                                f"{len(v)}, expected {n3}")
                tables[(k1, k2)] = table
        integration = vector(integration)
        if len(integration) != len(basis[d]):
            raise ValueError("integration vector length != top-degree dimension")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "products", tables)
        object.__setattr__(self, "integration", integration)
        object.__setattr__(self, "_label_map", label_map)

    def __setattr__(self, name, value):
        raise AttributeError("GradedAlgebra is immutable")

    # shape -------------------------------------------------------------

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 1

    def dim(self, k: int) -> int:
        if 0 <= k <= self.top_degree:
            return len(self.basis[k])
        return 0

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(deg) for deg in self.basis)

    # element construction -----------------------------------------------

    def element(self, k: int, coords: Iterable) -> "Element":
        coords = vector(coords)
        if not 0 <= k <= self.top_degree:
            raise ValueError(f"degree {k} outside 0..{self.top_degree}")
        if len(coords) != self.dim(k):
            raise ValueError(f"expected {self.dim(k)} coordinates in degree {k}, "
                             f"got {len(coords)}")
        return Element(self, k, coords)

    def unit(self) -> "Element":
        return Element(self, 0, (Fraction(1),))

    def zero(self, k: int) -> "Element":
        """Zero of degree k; above the top degree, the canonical flagged zero."""
        if k > self.top_degree:
            return Element(self, self.top_degree,
                           vzero(self.dim(self.top_degree)), above_top=True)
        return Element(self, k, vzero(self.dim(k)))

    def basis_element(self, k: int, i: int) -> "Element":
        coords = [Fraction(0)] * self.dim(k)
        coords[i] = Fraction(1)
        return Element(self, k, tuple(coords))

    def label_location(self, label: str) -> Optional[tuple[int, int]]:
        return self._label_map.get(label)

    def by_label(self, label: str) -> "Element":
        loc = self.label_location(label)
        if loc is None:
            raise ValueError(f"no basis label {label!r} in {self.name}")
        return self.basis_element(*loc)

    # structural equality (used by the file round-trip contract) ----------

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.name == other.name and self.basis == other.basis
                and self.products == other.products
                and self.integration == other.integration)

    def __hash__(self):
        return hash((self.name, self.basis))

    def __repr__(self):
        return f"GradedAlgebra({self.name!r}, dims={self.dims})"


class Element:
    """A homogeneous class: a degree plus exact coordinates in that degree."""

    __slots__ = ("algebra", "degree", "coords", "above_top")

    def __init__(self, algebra: GradedAlgebra, degree: int, coords: Vector,
                 above_top: bool = False):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "above_top", above_top)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def is_zero(self) -> bool:
        return self.above_top or all(c == 0 for c in self.coords)

    def _require_same_algebra(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_algebra(other)
        if self.above_top and other.above_top:
            return self
        if self.above_top or other.above_top:
            kept = other if self.above_top else self
            if kept.degree != self.algebra.top_degree:
                raise ValueError("cannot add an above-top zero to a lower degree")
            return kept
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Element(self.algebra, self.degree, vadd(self.coords, other.coords))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, self.degree,
                       tuple(-c for c in self.coords), self.above_top)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return Element(self.algebra, self.degree,
                       tuple(c * x for x in self.coords), self.above_top)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be nonnegative integers")
        out = self.algebra.unit()
        for _ in range(n):
            out = multiply(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.algebra is other.algebra and self.degree == other.degree
                and self.coords == other.coords and self.above_top == other.above_top)

    def __hash__(self):
        return hash((id(self.algebra), self.degree, self.coords, self.above_top))

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        flag = ", above_top" if self.above_top else ""
        return f"<deg {self.degree}{flag}: {render_element(self)}>"


def render_element(x: Element) -> str:
    """Human-readable sum of coefficient*label terms, exact rationals."""
    if x.is_zero:
        return "0"
    labels = x.algebra.basis[x.degree]
    parts = []
    for c, lbl in zip(x.coords, labels):
        if c == 0:
            continue
        mag = abs(c)
        if lbl == "1":
            body = format_rational(mag)
        elif mag == 1:
            body = lbl
        else:
            body = f"{format_rational(mag)}*{lbl}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def multiply(x: Element, y: Element) -> Element:
    """Cup product; above the top degree it is the canonical flagged zero."""
    if not isinstance(x, Element) or not isinstance(y, Element):
        raise TypeError("multiply expects two Elements")
    if x.algebra is not y.algebra:
        raise ValueError("elements live in different algebras")
    a = x.algebra
    if x.above_top or y.above_top:
        return a.zero(a.top_degree + 1)
    k = x.degree + y.degree
    if k > a.top_degree:
        return a.zero(k)
    table = a.products[(x.degree, y.degree)]
    acc = list(vzero(a.dim(k)))
    for i, ci in enumerate(x.coords):
        if ci == 0:
            continue
        row = table[i]
        for j, cj in enumerate(y.coords):
            if cj == 0:
                continue
            f = ci * cj
            entry = row[j]
            for t in range(len(acc)):
                if entry[t] != 0:
                    acc[t] += f * entry[t]
    return Element(a, k, tuple(acc))


def integrate(x: Element) -> Fraction:
    """Apply the degree-d integration functional."""
    a = x.algebra
    if x.degree != a.top_degree:
        raise ValueError(f"integrate needs degree {a.top_degree}, got {x.degree}")
    if x.above_top:
        return Fraction(0)
    return dot(a.integration, x.coords)


def pairing_matrix(a: GradedAlgebra, k: int) -> Matrix:
    """Poincare pairing of degree k against degree d-k: (i,j) -> int(b_i c_j)."""
    d = a.top_degree
    if not 0 <= k <= d:
        raise ValueError(f"degree {k} outside 0..{d}")
    rows = []
    for i in range(a.dim(k)):
        bi = a.basis_element(k, i)
        rows.append([integrate(multiply(bi, a.basis_element(d - k, j)))
                     for j in range(a.dim(d - k))])
    return Matrix(a.dim(k), a.dim(d - k), rows)


@dataclass(frozen=True)
class CheckReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_algebra(a: GradedAlgebra) -> CheckReport:
    """Check the ring axioms and ambient Poincare duality, reporting violations.

    Covers the unit law, commutativity of every stored table pair,
    associativity over all basis triples with degree sum <= d, a nonzero
    integration functional, and full-rank pairing in every degree.
    Violations are data, not exceptions.
    """
    from .linalg import rref

    bad: list[str] = []
    d = a.top_degree
    unit = a.unit()
    for k in range(d + 1):
        for i in range(a.dim(k)):
            b = a.basis_element(k, i)
            if multiply(unit, b) != b:
                bad.append(f"unit law fails on degree {k} basis #{i} "
                           f"({a.basis[k][i]})")
    for (k1, k2), table in a.products.items():
        if k1 > k2:
            continue
        mirror = a.products[(k2, k1)]
        for i in range(a.dim(k1)):
            for j in range(a.dim(k2)):
                if table[i][j] != mirror[j][i]:
                    bad.append(f"commutativity fails at degrees ({k1},{k2}) "
                               f"indices ({i},{j})")
    for k1 in range(d + 1):
        for k2 in range(d + 1 - k1):
            for k3 in range(d + 1 - k1 - k2):
                for i in range(a.dim(k1)):
                    bi = a.basis_element(k1, i)
                    for j in range(a.dim(k2)):
                        bj = a.basis_element(k2, j)
                        bij = multiply(bi, bj)
                        for l in range(a.dim(k3)):
                            bl = a.basis_element(k3, l)
                            lhs = multiply(bij, bl)
                            rhs = multiply(bi, multiply(bj, bl))
                            if lhs != rhs:
                                bad.append(
                                    f"associativity fails on degrees "
                                    f"({k1},{k2},{k3}) indices ({i},{j},{l})")
    if a.dim(d) > 0 and all(c == 0 for c in a.integration):
        bad.append("integration functional is identically zero")
    for k in range(d + 1):
        g = pairing_matrix(a, k)
        if g.rows != g.cols:
            bad.append(f"pairing at degree {k} is not square: "
                       f"{g.rows}x{g.cols}")
        elif rref(g).rank != g.rows:
            bad.append(f"pairing at degree {k} is singular "
                       f"(rank {rref(g).rank} of {g.rows})")
    return CheckReport(tuple(bad))


class RingMap:
    """Degree-preserving algebra map, one matrix per shared degree.

    ``matrices[k]`` sends source degree-k coordinates to target degree-k
    coordinates, for k = 0..min(top(source), top(target)). Above the target's
    top degree the map is zero by convention.
    """

    __slots__ = ("source", "target", "matrices")

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra,
                 matrices: Sequence[Matrix]):
        kmax = min(source.top_degree, target.top_degree)
        matrices = tuple(matrices)
        if len(matrices) != kmax + 1:
            raise ValueError(f"need matrices for degrees 0..{kmax}, "
                             f"got {len(matrices)}")
        for k, m in enumerate(matrices):
            if (m.rows, m.cols) != (target.dim(k), source.dim(k)):
                raise ValueError(f"degree-{k} matrix is {m.rows}x{m.cols}, "
                                 f"expected {target.dim(k)}x{source.dim(k)}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrices", matrices)

    def __setattr__(self, name, value):
        raise AttributeError("RingMap is immutable")

    def __call__(self, x: Element) -> Element:
        return apply_ring_map(self, x)


def apply_ring_map(f: RingMap, x: Element) -> Element:
    if x.algebra is not f.source:
        raise ValueError("element does not belong to the map's source")
    if x.above_top:
        return f.target.zero(f.target.top_degree + 1)
    if x.degree > f.target.top_degree:
        return f.target.zero(x.degree)
    return f.target.element(x.degree, f.matrices[x.degree].mat_vec(x.coords))


def _same_class(x: Element, y: Element) -> bool:
    # equality up to the zero convention: above-top zeros match any zero
    if x.is_zero and y.is_zero:
        return True
    return (not x.above_top and not y.above_top
            and x.degree == y.degree and x.coords == y.coords)


def verify_ring_map(f: RingMap) -> CheckReport:
    """Check unit preservation and multiplicativity on all basis pairs.

    Pairs with degree sum above the source top (where the source product is
    zero) are still checked against the target product, so maps that crush a
    relation the target does not satisfy are caught.
    """
    bad: list[str] = []
    src, tgt = f.source, f.target
    if apply_ring_map(f, src.unit()) != tgt.unit():
        bad.append("unit is not mapped to unit")
    ds = src.top_degree
    for k1 in range(ds + 1):
        for k2 in range(ds + 1):
            if k1 + k2 > max(ds, tgt.top_degree):
                continue
            for i in range(src.dim(k1)):
                xi = src.basis_element(k1, i)
                fxi = apply_ring_map(f, xi)
                for j in range(src.dim(k2)):
                    yj = src.basis_element(k2, j)
                    lhs = apply_ring_map(f, multiply(xi, yj))
                    rhs = multiply(fxi, apply_ring_map(f, yj))
                    if not _same_class(lhs, rhs):
                        bad.append(f"multiplicativity fails on degrees "
                                   f"({k1},{k2}) indices ({i},{j}): "
                                   f"f(xy) = {lhs} but f(x)f(y) = {rhs}")
    return CheckReport(tuple(bad))


def build_product_tables(basis: Sequence[Sequence[str]],
                         mult: Callable[[int, int, int, int], Vector]) -> dict:
    """Assemble the full table dict from a product rule on basis pairs.

    ``mult(k1, i, k2, j)`` must return the coordinate vector of b_i * b_j in
    degree k1+k2. It is only consulted for k1 <= k2; the mirrored table is
    filled by commutativity.
    """
    d = len(basis) - 1
    tables: dict = {}
    for k1 in range(d + 1):
        for k2 in range(k1, d + 1 - k1):
            n1, n2 = len(basis[k1]), len(basis[k2])
            table = [[mult(k1, i, k2, j) for j in range(n2)] for i in range(n1)]
            tables[(k1, k2)] = table
            if k1 != k2:
                tables[(k2, k1)] = [[table[i][j] for i in range(n1)]
                                    for j in range(n2)]
    return tables


def tensor_product(a: GradedAlgebra, b: GradedAlgebra,
                   name: Optional[str] = None) -> GradedAlgebra:
    """Kunneth product: bases are pairs, products are componentwise.

    Degree-k basis runs over (degree-i of a) x (degree k-i of b) with i
    descending, so the first factor's classes come first. Integration is the
    product of integrations on the (d_a, d_b) block.
    """
    da, db = a.top_degree, b.top_degree
    d = da + db
    basis: list[list[str]] = []
    index: dict[tuple[int, int, int], int] = {}
    layout: list[list[tuple[int, int, int]]] = []
    for k in range(d + 1):
        labels = []
        slots = []
        for i in range(min(k, da), max(0, k - db) - 1, -1):
            for p in range(a.dim(i)):
                for q in range(b.dim(k - i)):
                    index[(i, k - i, p, q)] = len(labels)
                    slots.append((i, p, q))
                    labels.append(f"{a.basis[i][p]}⊗{b.basis[k - i][q]}")
        basis.append(labels)
        layout.append(slots)

    def mult(k1, i1, k2, i2):
        ia, pa, qa = layout[k1][i1]
        ib, pb, qb = layout[k2][i2]
        k = k1 + k2
        out = list(vzero(len(basis[k])))
        if ia + ib > da or (k1 - ia) + (k2 - ib) > db:
            return tuple(out)
        left = a.products[(ia, ib)][pa][pb]
        right = b.products[(k1 - ia, k2 - ib)][qa][qb]
        for p, cp in enumerate(left):
            if cp == 0:
                continue
            for q, cq in enumerate(right):
                if cq == 0:
                    continue
                out[index[(ia + ib, k - ia - ib, p, q)]] += cp * cq
        return tuple(out)

    tables = build_product_tables(basis, mult)
    integration = list(vzero(len(basis[d])))
    for (i, j, p, q), pos in index.items():
        if i == da and j == db:
            integration[pos] = a.integration[p] * b.integration[q]
    # only the (da, db) block can sit in degree d, so the loop above covers it
    return GradedAlgebra(name or f"{a.name}x{b.name}", basis, tables, integration)


def relabeled(a: GradedAlgebra, basis: Sequence[Sequence[str]],
              name: Optional[str] = None) -> GradedAlgebra:
    """Same structure constants, new labels (and optionally a new name)."""
    basis = tuple(tuple(deg) for deg in basis)
    if tuple(len(deg) for deg in basis) != a.dims:
        raise ValueError("relabeling must preserve the dimension profile")
    return GradedAlgebra(name or a.name, basis, dict(a.products), a.integration)
