"""Geometric constructors: projective spaces, blowups, projective bundles.

Everything here produces a GradedAlgebra with exact structure constants.
The blowup and bundle constructors work symbolically: basis classes are
reduced against the defining relation (the exceptional e^r relation, the
tautological zeta^s relation) until they land in the chosen basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Matrix, Vector, rref, solve, vector, vzero
from .ring import (
    Element,
    GradedAlgebra,
    RingMap,
    apply_ring_map,
    build_product_tables,
    integrate,
    multiply,
    pairing_matrix,
    verify_ring_map,
)


def monomial_exponents(caps: Sequence[int], degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total `degree` with entry i at most caps[i].

    Descending lexicographic order; this fixes the basis order of every
    truncated polynomial ring.
    """
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, idx: int):
        if idx == len(caps):
            if remaining == 0:
                out.append(prefix)
            return
        for e in range(min(caps[idx], remaining), -1, -1):
            rec(prefix + (e,), remaining - e, idx + 1)

    rec((), degree, 0)
    return out


def _monomial_label(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for g, e in zip(names, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "".join(parts) or "1"


def truncated_polynomial_algebra(name: str,
                                 gens: Sequence[tuple[str, int]]) -> GradedAlgebra:
    """Q[x_1..x_m] / (x_i^{cap_i + 1}) with its monomial basis.

    gens lists (label, cap) pairs; each generator has degree one. Labels are
    juxtaposed monomials ("ab", "y1^2y2"), the unit is "1", and integration
    sends the all-caps monomial to 1.
    """
    names = [g for g, _ in gens]
    caps = [c for _, c in gens]
    if any(not isinstance(c, int) or c < 0 for c in caps):
        raise ValueError("exponent caps must be nonnegative integers")
    top = sum(caps)
    by_degree = [monomial_exponents(caps, m) for m in range(top + 1)]
    index = {e: i for m in range(top + 1) for i, e in enumerate(by_degree[m])}
    basis = [[_monomial_label(names, e) for e in degs] for degs in by_degree]

    def mult(k1, i, k2, j):
        total = tuple(a + b for a, b in zip(by_degree[k1][i], by_degree[k2][j]))
        out = list(vzero(len(by_degree[k1 + k2])))
        if all(e <= cap for e, cap in zip(total, caps)):
            out[index[total]] = Fraction(1)
        return tuple(out)

    tables = build_product_tables(basis, mult)
    return GradedAlgebra(name, basis, tables, [Fraction(1)])


def projective_space(n: int, var: str = "h",
                     name: Optional[str] = None) -> GradedAlgebra:
    """H^{2*}(P^n): one class per degree, h^a h^b = h^{a+b}, integral of h^n is 1."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"projective space needs n >= 0, got {n}")
    return truncated_polynomial_algebra(name or f"P{n}", [(var, n)])


def series(a: GradedAlgebra, terms: Sequence[Element]) -> list[Element]:
    """Normalize a by-degree list to one homogeneous Element per degree 0..d."""
    out = [a.zero(k) for k in range(a.top_degree + 1)]
    for k, t in enumerate(terms):
        if k > a.top_degree:
            break
        if t is None:
            continue
        if not isinstance(t, Element) or t.algebra is not a:
            raise ValueError(f"series entry {k} is not an element of {a.name}")
        if t.above_top or t.degree != k:
            raise ValueError(f"series entry {k} must be homogeneous of degree {k}")
        out[k] = t
    return out


def series_product(u: Sequence[Element], v: Sequence[Element]) -> list[Element]:
    """Convolution of two inhomogeneous classes, truncated at the top degree."""
    if not u or not v:
        raise ValueError("series must be nonempty")
    a = u[0].algebra
    un, vn = series(a, u), series(a, v)
    out = []
    for k in range(a.top_degree + 1):
        acc = a.zero(k)
        for i in range(k + 1):
            acc = acc + multiply(un[i], vn[k - i])
        out.append(acc)
    return out


def chern_series_inverse(a: GradedAlgebra, u: Sequence[Element]) -> list[Element]:
    """Inverse of a total Chern class 1 + u_1 + u_2 + ... by degree recursion.

    With v_0 = 1 and v_k = -(u_1 v_{k-1} + ... + u_k v_0), the product u*v
    telescopes to 1 through the top degree.
    """
    un = series(a, u)
    if un[0] != a.unit():
        raise ValueError("total class must have constant term 1")
    v = [a.unit()]
    for k in range(1, a.top_degree + 1):
        acc = a.zero(k)
        for i in range(1, k + 1):
            acc = acc - multiply(un[i], v[k - i])
        v.append(acc)
    return v


def adjoint_pushforward(pullback: RingMap, r: int) -> tuple[Matrix, ...]:
    """Gysin pushforward determined by the projection formula.

    Returns one matrix per center degree k, sending degree k of the center
    to degree k+r of the ambient algebra, with
    int_Y(push(w) * y) = int_Z(w * pull(y)) for every y. Each matrix is
    obtained by solving against the ambient pairing Gram matrix, which must
    be invertible in the degrees it is used.
    """
    y, z = pullback.source, pullback.target
    if r < 1 or z.top_degree != y.top_degree - r:
        raise ValueError(
            f"codimension mismatch: center top {z.top_degree}, "
            f"ambient top {y.top_degree}, r = {r}")
    dy = y.top_degree
    mats = []
    for k in range(z.top_degree + 1):
        gram = pairing_matrix(y, k + r)
        if gram.rows != gram.cols or rref(gram).rank != gram.rows:
            raise ValueError(f"ambient pairing is degenerate in degree {k + r}")
        gt = gram.transpose()
        comp = dy - k - r
        cols: list[Vector] = []
        for i in range(z.dim(k)):
            w = z.basis_element(k, i)
            rhs = vector(
                integrate(multiply(w, apply_ring_map(pullback,
                                                     y.basis_element(comp, j))))
                for j in range(y.dim(comp)))
            u = solve(gt, rhs)
            assert u is not None  # gram is invertible
            cols.append(u)
        mats.append(Matrix(y.dim(k + r), z.dim(k),
                           [[cols[i][t] for i in range(z.dim(k))]
                            for t in range(y.dim(k + r))]))
    return tuple(mats)


@dataclass(frozen=True)
class BlowupInput:
    """Data of a blowup: ambient Y, center Z, restriction, and normal bundle.

    chern_n lists [c_1(N), ..., c_r(N)] as Elements of Z; classes whose
    degree exceeds Z's top must be passed as the canonical above-top zero.
    """
    y: GradedAlgebra
    z: GradedAlgebra
    pullback: RingMap
    codim: int
    chern_n: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "chern_n", tuple(self.chern_n))


def _matches(a: Element, b: Element) -> bool:
    if a.is_zero and b.is_zero:
        return True
    return (not a.above_top and not b.above_top
            and a.degree == b.degree and a.coords == b.coords)


def blowup(data: BlowupInput, *, sign: int = 1,
           name: Optional[str] = None) -> GradedAlgebra:
    """Cohomology of the blowup of Y along a codimension-r center Z.

    Basis per degree: the Y classes, then e^i-summands "e^i*<z>" for
    i = 1..r-1. Products follow the pullback/exceptional rules; e-powers at
    or above r are rewritten through the degree-r relation

        w (x) e^r = S_r * ( pi* iota_*(w) - sum_i S_i (c_{r-i}(N) w) (x) e^i )

    with S_j = (-sign)^j. sign=+1 is the convention used throughout the
    catalog; sign=-1 rebuilds the same ring with e replaced by -e.
    """
    y, z, pull, r = data.y, data.z, data.pullback, data.codim
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if r < 2:
        raise ValueError("codimension must be at least 2: blowup along a "
                         "divisor is an isomorphism on cohomology")
    if pull.source is not y or pull.target is not z:
        raise ValueError("pullback must map the ambient algebra onto the center")
    d, dz = y.top_degree, z.top_degree
    if dz != d - r:
        raise ValueError(f"center top degree {dz} is not ambient top degree "
                         f"{d} minus codimension {r}")
    if len(data.chern_n) != r:
        raise ValueError(f"chern_n must list c_1..c_{r}, got "
                         f"{len(data.chern_n)} entries")
    for i, c in enumerate(data.chern_n, start=1):
        if not isinstance(c, Element) or c.algebra is not z:
            raise ValueError(f"c_{i}(N) must be an element of the center algebra")
        if i <= dz:
            if c.above_top or c.degree != i:
                raise ValueError(f"c_{i}(N) must be homogeneous of degree {i}")
        elif not c.is_zero:
            raise ValueError(f"c_{i}(N) must vanish: degree {i} exceeds the "
                             f"center's top degree {dz}")
    report = verify_ring_map(pull)
    if not report.ok:
        raise ValueError("pullback fails to be a ring map: "
                         + "; ".join(report.violations[:3]))
    push = adjoint_pushforward(pull, r)
    self_int = apply_ring_map(pull, y.element(r, push[0].mat_vec(z.unit().coords)))
    cr = data.chern_n[r - 1]
    if not _matches(self_int, cr):
        raise ValueError(f"self-intersection check failed: iota^*(iota_*(1)) "
                         f"= {self_int} but c_{r}(N) = {cr}")

    S = [(-sign) ** j for j in range(r + 1)]
    cn = (None,) + data.chern_n  # 1-indexed

    basis: list[list[str]] = []
    decode: list[list[tuple]] = []
    offset: dict[tuple[int, int], int] = {}
    for k in range(d + 1):
        labels = list(y.basis[k])
        tags: list[tuple] = [("y", j) for j in range(y.dim(k))]
        for i in range(1, r):
            if 0 <= k - i <= dz:
                offset[(k, i)] = len(labels)
                labels.extend(f"e^{i}*{zl}" for zl in z.basis[k - i])
                tags.extend((i, j) for j in range(z.dim(k - i)))
        basis.append(labels)
        decode.append(tags)

    def add_y(acc: list, el: Element, scale) -> None:
        if el.is_zero:
            return
        for t, c in enumerate(el.coords):
            acc[t] += scale * c

    def add_z(acc: list, i: int, el: Element, scale) -> None:
        if el.is_zero:
            return
        base = offset[(el.degree + i, i)]
        for t, c in enumerate(el.coords):
            acc[base + t] += scale * c

    def reduce_e(acc: list, w: Element, s: int, scale) -> None:
        # accumulate scale * (w (x) e^s) in reduced form
        if w.is_zero or w.degree + s > d:
            return
        if s < r:
            add_z(acc, s, w, scale)
            return
        if s == r:
            pw = y.element(w.degree + r, push[w.degree].mat_vec(w.coords))
            add_y(acc, pw, scale * S[r])
            for i in range(1, r):
                add_z(acc, i, multiply(cn[r - i], w), -scale * S[r] * S[i])
            return
        cur = [Fraction(0)] * len(basis[w.degree + r])
        reduce_e(cur, w, r, Fraction(1))
        k = w.degree + r
        for _ in range(s - r):
            cur = mul_by_e(k, cur)
            k += 1
        for t, c in enumerate(cur):
            acc[t] += scale * c

    def mul_by_e(k: int, vec: list) -> list:
        acc = [Fraction(0)] * len(basis[k + 1])
        ypart = y.element(k, vec[:y.dim(k)])
        reduce_e(acc, apply_ring_map(pull, ypart), 1, Fraction(1))
        for i in range(1, r):
            if (k, i) in offset:
                base = offset[(k, i)]
                zel = z.element(k - i, vec[base:base + z.dim(k - i)])
                reduce_e(acc, zel, i + 1, Fraction(1))
        return acc

    def mult(k1, i1, k2, i2):
        acc = [Fraction(0)] * len(basis[k1 + k2])
        t1, t2 = decode[k1][i1], decode[k2][i2]
        if t1[0] == "y" and t2[0] == "y":
            add_y(acc, multiply(y.basis_element(k1, t1[1]),
                                y.basis_element(k2, t2[1])), Fraction(1))
        elif t1[0] == "y" or t2[0] == "y":
            if t1[0] == "y":
                yk, yj, (i, zj), zk = k1, t1[1], t2, k2
            else:
                yk, yj, (i, zj), zk = k2, t2[1], t1, k1
            prod = multiply(apply_ring_map(pull, y.basis_element(yk, yj)),
                            z.basis_element(zk - i, zj))
            add_z(acc, i, prod, Fraction(1))
        else:
            i, zi = t1
            j, zj = t2
            prod = multiply(z.basis_element(k1 - i, zi),
                            z.basis_element(k2 - j, zj))
            reduce_e(acc, prod, i + j, Fraction(1))
        return tuple(acc)

    tables = build_product_tables(basis, mult)
    # only pulled-back classes survive in the top degree (dim Z = d - r)
    assert len(basis[d]) == y.dim(d)
    return GradedAlgebra(name or f"Bl({y.name}, {z.name})", basis, tables,
                         y.integration)


def projective_bundle(y: GradedAlgebra, chern: Sequence[Element],
                      name: Optional[str] = None) -> GradedAlgebra:
    """Projectivization of a rank-s bundle on Y with total Chern class chern.

    chern = [c_0, ..., c_s] with c_0 = 1 fixes the relation
    zeta^s = -(c_1 zeta^{s-1} + ... + c_s); the basis is y * zeta^i for
    i = 0..s-1 with labels "z^i*<y>" (Y labels verbatim at i = 0), and
    integration extracts the zeta^{s-1} coefficient's integral over Y.
    """
    chern = list(chern)
    if len(chern) < 2:
        raise ValueError("chern must be [c_0, ..., c_s] with s >= 1")
    s = len(chern) - 1
    dy = y.top_degree
    c0 = chern[0]
    if not isinstance(c0, Element) or c0.algebra is not y or c0.above_top \
            or c0.degree != 0 or c0.coords != y.unit().coords:
        raise ValueError("c_0 must be the unit class")
    for i, c in enumerate(chern[1:], start=1):
        if not isinstance(c, Element) or c.algebra is not y:
            raise ValueError(f"c_{i} must be an element of {y.name}")
        if i <= dy:
            if c.above_top or c.degree != i:
                raise ValueError(f"c_{i} must be homogeneous of degree {i}")
        elif not c.is_zero:
            raise ValueError(f"c_{i} must vanish: degree {i} exceeds the base's "
                             f"top degree {dy}")
    d = dy + s - 1

    basis: list[list[str]] = []
    decode: list[list[tuple[int, int]]] = []
    offset: dict[tuple[int, int], int] = {}
    for k in range(d + 1):
        labels: list[str] = []
        tags: list[tuple[int, int]] = []
        for i in range(0, s):
            if 0 <= k - i <= dy:
                offset[(k, i)] = len(labels)
                if i == 0:
                    labels.extend(y.basis[k])
                else:
                    labels.extend(f"z^{i}*{yl}" for yl in y.basis[k - i])
                tags.extend((i, j) for j in range(y.dim(k - i)))
        basis.append(labels)
        decode.append(tags)

    def reduce_pow(acc: list, el: Element, p: int, scale) -> None:
        # accumulate scale * (el * zeta^p) in reduced form
        if el.is_zero or el.degree + p > d:
            return
        if p < s:
            base = offset[(el.degree + p, p)]
            for t, c in enumerate(el.coords):
                acc[base + t] += scale * c
            return
        for i in range(1, s + 1):
            reduce_pow(acc, multiply(chern[i], el), p - i, -scale)

    def mult(k1, i1, k2, i2):
        acc = [Fraction(0)] * len(basis[k1 + k2])
        i, a = decode[k1][i1]
        j, b = decode[k2][i2]
        prod = multiply(y.basis_element(k1 - i, a), y.basis_element(k2 - j, b))
        reduce_pow(acc, prod, i + j, Fraction(1))
        return tuple(acc)

    tables = build_product_tables(basis, mult)
    integration = [Fraction(0)] * len(basis[d])
    base = offset[(d, s - 1)]
    for t, c in enumerate(y.integration):
        integration[base + t] = c
    return GradedAlgebra(name or f"ProjBundle({y.name},{s})", basis, tables,
                         integration)
