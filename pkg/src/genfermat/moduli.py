"""Frobenius action on the parameter and the field of moduli.

Applying x -> x^(p^s) to every entry of Lambda gives the parameter of the
coordinate-wise image model.  The field-of-moduli exponent is the smallest
e >= 1 for which the arrangement of Lambda and that of its e-th Frobenius
image are PGL-equivalent up to relabeling; the field of moduli is then
GF(p^e).  Only the Frobenius subgroup of the automorphisms of the ambient
field is considered, which is the full story over the algebraic closure of
a finite field; the report carries this restriction explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .arrangement import (
    LambdaParams,
    ProjectiveMap,
    lambda_to_arrangement,
    membership_Xnd,
    pgl_equivalent,
)
from .ff import subfield_degree

FROBENIUS_NOTE = ("computed against Frobenius powers of the ground field, "
                  "not arbitrary field automorphisms")


@dataclass(frozen=True)
class FrobeniusPower:
    """The automorphism x -> x^(p^s) of GF(p^m); its order divides m."""

    s: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"Frobenius power must be >= 1, got {self.s}")


def frobenius_apply(lam: LambdaParams, s: int) -> LambdaParams:
    """Entry-wise p^s-th power of the parameter."""
    FrobeniusPower(s)
    e = lam.field.p ** s
    rows = tuple(tuple(x ** e for x in r) for r in lam.rows)
    image = LambdaParams(lam.field, lam.d, lam.n, rows)
    # a field automorphism maps nonzero minors to nonzero minors
    if membership_Xnd(lam) and not membership_Xnd(image):
        raise RuntimeError("Frobenius image left the general-position locus")
    return image


def entry_field_degree(lam: LambdaParams) -> int:
    """Degree of the smallest subfield containing every entry of Lambda."""
    deg = 1
    for x in lam.entries():
        deg = lcm(deg, subfield_degree(x))
    return deg


@dataclass(frozen=True)
class ModuliResult:
    exponent: int
    witness_map: ProjectiveMap
    witness_perm: tuple[int, ...]
    note: str

    def to_dict(self) -> dict:
        return {
            "e": self.exponent,
            "witness_T": self.witness_map.to_coeffs(),
            "witness_permutation": list(self.witness_perm),
            "note": self.note,
        }


def field_of_moduli(lam: LambdaParams) -> ModuliResult:
    """Smallest e >= 1 with the e-th Frobenius image PGL-equivalent to Lambda.

    The exponent always divides the degree of the field generated by the
    entries (the full Frobenius orbit closes there), so the search is
    bounded by the ambient degree m.
    """
    arr = lambda_to_arrangement(lam)
    m = lam.field.m
    for e in range(1, m + 1):
        image = frobenius_apply(lam, e)
        witness = pgl_equivalent(arr, lambda_to_arrangement(image), "unlabeled")
        if witness is not None:
            tmap, perm = witness
            if m % e != 0:
                raise RuntimeError("moduli exponent does not divide the field degree")
            return ModuliResult(e, tmap, perm, FROBENIUS_NOTE)
    raise RuntimeError("Frobenius orbit failed to close at the full field degree")
