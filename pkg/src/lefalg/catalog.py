"""Built-in algebras: three counterexample varieties plus standard families.

Catalog names double as constructors: "P-n" and "Gr-k-n" are parametric,
and any "x"-joined list of resolvable names builds the product ring, so the
finite list reported by names() is not exhaustive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .constructors import (
    BlowupInput,
    blowup,
    chern_series_inverse,
    monomial_exponents,
    projective_bundle,
    projective_space,
    series_product,
    truncated_polynomial_algebra,
)
from .linalg import Matrix
from .ring import Element, GradedAlgebra, RingMap, multiply, tensor_product
from .schubert import grassmannian, quotient_chern_classes

_P_NAME = re.compile(r"^P-?(\d+)$")
_GR_NAME = re.compile(r"^Gr-(\d+)-(\d+)$")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: GradedAlgebra
    omega: Optional[Element]
    description: str


def _monomial_pullback(y: GradedAlgebra, caps: Sequence[int], z: GradedAlgebra,
                       images: Sequence[Element]) -> RingMap:
    """Ring map from a truncated polynomial ring fixed by generator images."""
    mats = []
    for k in range(min(y.top_degree, z.top_degree) + 1):
        cols = []
        for exps in monomial_exponents(caps, k):
            el = z.unit()
            for img, e in zip(images, exps):
                for _ in range(e):
                    el = multiply(el, img)
            cols.append(el.coords)
        mats.append(Matrix(z.dim(k), y.dim(k),
                           [[cols[j][t] for j in range(y.dim(k))]
                            for t in range(z.dim(k))]))
    return RingMap(y, z, mats)


def cxp1_even() -> GradedAlgebra:
    """Q[a,b]/(a^2, b^2): the even cohomology of C x P1 for a curve C."""
    return truncated_polynomial_algebra("CxP1-even", [("a", 1), ("b", 1)])


def build_example1(sign: int = 1) -> GradedAlgebra:
    """Blowup of P5 along a degree-6 Segre-embedded C x P1 surface.

    The center's even ring is Q[a,b]/(a^2,b^2), the hyperplane restricts to
    a + 3b, and the normal bundle has total class 1 + 4a + 18b + 54ab.
    """
    y = projective_space(5, var="c")
    z = cxp1_even()
    a, b, ab = z.by_label("a"), z.by_label("b"), z.by_label("ab")
    pull = _monomial_pullback(y, [5], z, [a + 3 * b])
    chern = (4 * a + 18 * b, 54 * ab, z.zero(3))
    return blowup(BlowupInput(y, z, pull, 3, chern), sign=sign, name="example1")


def build_example2(sign: int = 1) -> GradedAlgebra:
    """Blowup of P3 x P3 along a (P1)^3 center.

    The ambient ring is presented on the two hyperplane generators y1, y2,
    restricting to z1+z2 and z2+z3; the normal-bundle class is computed by
    Whitney division (1+z1+z2)^4 (1+z2+z3)^4 / ((1+2z1)(1+2z2)(1+2z3)).
    """
    y = truncated_polynomial_algebra("P3xP3", [("y1", 3), ("y2", 3)])
    z = truncated_polynomial_algebra("(P1)^3", [("z1", 1), ("z2", 1), ("z3", 1)])
    z1, z2, z3 = (z.by_label(lbl) for lbl in ("z1", "z2", "z3"))
    pull = _monomial_pullback(y, [3, 3], z, [z1 + z2, z2 + z3])

    def fourth_power(lin: Element) -> list[Element]:
        base = [z.unit(), lin]
        out = base
        for _ in range(3):
            out = series_product(out, base)
        return out

    tangent_y = series_product(fourth_power(z1 + z2), fourth_power(z2 + z3))
    tangent_z = [z.unit(), 2 * z1]
    for lin in (z2, z3):
        tangent_z = series_product(tangent_z, [z.unit(), 2 * lin])
    cn = series_product(tangent_y, chern_series_inverse(z, tangent_z))
    chern = (cn[1], cn[2], cn[3])
    return blowup(BlowupInput(y, z, pull, 3, chern), sign=sign, name="example2")


def build_example3() -> GradedAlgebra:
    """Projectivization of the tautological quotient bundle on Gr(2,5)."""
    return projective_bundle(grassmannian(2, 5), quotient_chern_classes(2, 5),
                             name="example3")


def _degree_one_sum(a: GradedAlgebra) -> Optional[Element]:
    if a.top_degree == 0:
        return None
    acc = a.zero(1)
    for i in range(a.dim(1)):
        acc = acc + a.basis_element(1, i)
    return acc


def names() -> list[str]:
    """The canonical built-in listing (get() also resolves parametric names)."""
    return (["example1", "example2", "example3", "CxP1-even"]
            + [f"P-{n}" for n in range(1, 7)]
            + ["Gr-2-4", "Gr-2-5"]
            + ["P1xP1", "P1xP2", "P3xP3", "P1xP1xP1", "Gr-2-4xP1", "Gr-2-5xP2"])


@lru_cache(maxsize=None)
def get(name: str) -> CatalogEntry:
    """Resolve a catalog name; raises ValueError for unknown names."""
    if name == "example1":
        alg = build_example1()
        omega = 10 * alg.by_label("c") - alg.by_label("e^1*1")
        return CatalogEntry(name, alg, omega,
                            "blowup of P5 along a Segre-embedded C x P1")
    if name == "example2":
        alg = build_example2()
        omega = (10 * alg.by_label("y1") + 10 * alg.by_label("y2")
                 - alg.by_label("e^1*1"))
        return CatalogEntry(name, alg, omega,
                            "blowup of P3 x P3 along a (P1)^3 center")
    if name == "example3":
        alg = build_example3()
        omega = alg.by_label("s[1]") + alg.by_label("z^1*1")
        return CatalogEntry(name, alg, omega,
                            "projectivized quotient bundle on Gr(2,5)")
    if name == "CxP1-even":
        alg = cxp1_even()
        return CatalogEntry(name, alg, _degree_one_sum(alg),
                            "even ring of C x P1, used as a blowup center")
    m = _P_NAME.match(name)
    if m:
        n = int(m.group(1))
        alg = projective_space(n, name=name)
        return CatalogEntry(name, alg, _degree_one_sum(alg),
                            f"projective space of dimension {n}")
    m = _GR_NAME.match(name)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if not 1 <= k < n:
            raise ValueError(f"unknown catalog name: {name!r}")
        alg = grassmannian(k, n)
        return CatalogEntry(name, alg, alg.by_label("s[1]"),
                            f"Grassmannian of {k}-planes in {n}-space")
    if "x" in name:
        parts = name.split("x")
        if len(parts) >= 2 and all(parts):
            try:
                factors = [get(p).algebra for p in parts]
            except ValueError:
                raise ValueError(f"unknown catalog name: {name!r}")
            alg = factors[0]
            for f in factors[1:]:
                alg = tensor_product(alg, f)
            return CatalogEntry(name, alg, _degree_one_sum(alg),
                                "product of " + " and ".join(parts))
    raise ValueError(f"unknown catalog name: {name!r}")
