"""The intersection model cut out by degree-k forms linear in y_j = x_j^k.

With parameter Lambda in general position the model in P^n is

    x_1^k + ... + x_d^k + x_{d+1}^k + x_{d+2}^k               = 0
    l_{i,1} x_1^k + ... + l_{i,d} x_d^k + x_{d+1}^k + x_{d+2+i}^k = 0

for i = 1, ..., n-d-1.  Everything about the model reduces to linear
algebra on the (n-d) x (n+1) coefficient matrix C of the forms in the
variables y_j = x_j^k; in particular the Jacobian at a point P factors as
C * diag(k * x_j^{k-1}), which drives the smoothness checks.

Point enumeration walks canonical projective representatives (first
nonzero coordinate equal to 1) exhaustively; the inner loop is vectorised
with numpy over integer element codes but remains a plain scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import linalg
from .arrangement import (
    Arrangement,
    LambdaParams,
    ProjectivePoint,
    lambda_to_arrangement,
    membership_Xnd,
    normalize,
)
from .errors import (
    BadIndex,
    BudgetExceeded,
    FieldMismatch,
    NoKthRoots,
    NotCoprime,
    NotGeneralPosition,
    NotOnVariety,
)
from .ff import FieldElement, FieldSpec, embed, make_field, primitive_kth_root

DEFAULT_POINT_CAP = 10_000_000
_SCAN_CHUNK = 1 << 16

EXCEPTIONAL_SURFACE_TYPES = frozenset({(2, 2, 5), (2, 4, 3)})


class FermatModel:
    """Model data: (d, k, n), the parameter, the field and the form matrix."""

    __slots__ = ("d", "k", "n", "lam", "field", "forms", "omega")

    def __init__(self, d, k, n, lam, field, forms, omega):
        self.d = d
        self.k = k
        self.n = n
        self.lam = lam
        self.field = field
        self.forms = forms  # (n-d) rows of n+1 coefficients in y-space
        self.omega = omega

    @property
    def codim(self) -> int:
        return self.n - self.d

    def arrangement(self) -> Arrangement:
        return lambda_to_arrangement(self.lam)

    def __repr__(self):
        return f"FermatModel(d={self.d}, k={self.k}, n={self.n}, field={self.field!r})"

    def to_dict(self) -> dict:
        out = self.lam.to_dict()
        out["k"] = self.k
        return out

    @staticmethod
    def from_dict(data: dict) -> "FermatModel":
        lam = LambdaParams.from_dict(data)
        return build_model(lam.d, int(data["k"]), lam.n, lam, lam.field)


def build_model(d: int, k: int, n: int, lam: LambdaParams | None,
                field: FieldSpec, validate: bool = True) -> FermatModel:
    """Construct the model, validating coprimality, roots and the parameter.

    `validate=False` skips the general-position requirement; it exists so
    tests can probe deliberately degenerate parameters.
    """
    if d < 1 or n < d + 1 or k < 2:
        raise ValueError(f"invalid type ({d}; {k}, {n})")
    if gcd(k, field.p) != 1:
        raise NotCoprime(f"k = {k} shares a factor with p = {field.p}")
    if (field.q - 1) % k != 0:
        raise NoKthRoots(f"{field!r} lacks the {k}-th roots of unity")
    if lam is None:
        lam = LambdaParams(field, d, n, [])
    lam = lam.embedded(field)
    if (lam.d, lam.n) != (d, n):
        raise ValueError("parameter shape does not match (d, n)")
    if validate and not membership_Xnd(lam):
        raise NotGeneralPosition("parameter outside the general-position locus")
    one, zero = field.one(), field.zero()
    rows = [tuple(one if j <= d + 1 else zero for j in range(n + 1))]
    for i, r in enumerate(lam.rows):
        row = list(r) + [one] + [zero] * (n - d)
        row[d + 2 + i] = one
        rows.append(tuple(row))
    omega = primitive_kth_root(field, k)
    return FermatModel(d, k, n, lam, field, tuple(rows), omega)


def model_point(mdl: FermatModel, values, field: FieldSpec | None = None) -> ProjectivePoint:
    f = field if field is not None else mdl.field
    return ProjectivePoint(tuple(f.element(v) for v in values))


def _forms_in(mdl: FermatModel, field: FieldSpec):
    if field == mdl.field:
        return mdl.forms
    return tuple(tuple(embed(c, field) for c in row) for row in mdl.forms)


def contains(mdl: FermatModel, pt: ProjectivePoint) -> bool:
    """Whether all defining forms vanish at the point (exact)."""
    f = pt.field
    if f != mdl.field and (f.p != mdl.field.p or f.m % mdl.field.m != 0):
        raise FieldMismatch(f"point field {f!r} does not extend {mdl.field!r}")
    if len(pt.coords) != mdl.n + 1:
        raise ValueError(f"point of P^{len(pt.coords)-1} on a model in P^{mdl.n}")
    rows = _forms_in(mdl, f)
    powers = [x ** mdl.k for x in pt.coords]
    for row in rows:
        acc = f.zero()
        for c, y in zip(row, powers):
            if c.code:
                acc = acc + c * y
        if acc.code != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# exhaustive point scan
# ---------------------------------------------------------------------------

def _scan_field(mdl: FermatModel, ext: int) -> FieldSpec:
    if ext < 1:
        raise ValueError(f"extension degree must be >= 1, got {ext}")
    if ext == 1:
        return mdl.field
    return make_field(mdl.field.p, mdl.field.m * ext)


def _projective_count(q: int, n: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def _vec_add(field: FieldSpec, a, b):
    p = field.p
    if field.m == 1:
        return (a + b) % p
    out = np.zeros_like(a)
    pi = 1
    for _ in range(field.m):
        out += ((a // pi % p) + (b // pi % p)) % p * pi
        pi *= p
    return out


def _scan_codes(mdl: FermatModel, ext: int, cap: int, keep: bool):
    """Exhaustive scan over canonical representatives of P^n(GF(q^ext)).

    Returns (count, candidates, field, blocks); blocks is a list of int64
    arrays of shape (n+1, *) holding coordinate codes of the points found,
    empty unless keep is set.
    """
    field = _scan_field(mdl, ext)
    q, n = field.q, mdl.n
    candidates = _projective_count(q, n)
    if candidates > cap:
        raise BudgetExceeded(
            f"scan of P^{n}(GF({q})) needs {candidates} candidates, cap is {cap}")
    rows = [[c.code for c in row] for row in _forms_in(mdl, field)]
    pow_k = np.array([field.pow_code(x, mdl.k) for x in range(q)], dtype=np.int64)
    mul_tab = {}
    for row in rows:
        for c in row:
            if c not in (0, 1) and c not in mul_tab:
                mul_tab[c] = np.array([field.mul_codes(c, x) for x in range(q)],
                                      dtype=np.int64)
    count = 0
    blocks = []
    for lead in range(n + 1):
        total = q ** (n - lead)
        for start in range(0, total, _SCAN_CHUNK):
            stop = min(start + _SCAN_CHUNK, total)
            t = np.arange(start, stop, dtype=np.int64)
            coords = np.zeros((n + 1, stop - start), dtype=np.int64)
            coords[lead] = 1
            for s in range(n - lead):
                coords[lead + 1 + s] = t // (q ** (n - lead - 1 - s)) % q
            y = pow_k[coords]
            mask = np.ones(stop - start, dtype=bool)
            for row in rows:
                acc = None
                for j, c in enumerate(row):
                    if c == 0:
                        continue
                    term = y[j] if c == 1 else mul_tab[c][y[j]]
                    acc = term if acc is None else _vec_add(field, acc, term)
                mask &= acc == 0
            count += int(mask.sum())
            if keep and mask.any():
                blocks.append(coords[:, mask])
    return count, candidates, field, blocks


def _block_points(field: FieldSpec, blocks):
    pts = []
    for block in blocks:
        for col in block.T:
            pts.append(ProjectivePoint(tuple(field.from_code(int(c)) for c in col)))
    return pts


@dataclass(frozen=True)
class PointEnumeration:
    count: int
    candidates: int
    ext: int
    field: FieldSpec
    points: tuple | None


def enumerate_points(mdl: FermatModel, ext: int = 1, cap: int = DEFAULT_POINT_CAP,
                     collect: bool = False) -> PointEnumeration:
    """Exact rational point count over GF(q^ext) by exhaustive scan."""
    count, candidates, field, blocks = _scan_codes(mdl, ext, cap, keep=collect)
    points = tuple(_block_points(field, blocks)) if collect else None
    return PointEnumeration(count, candidates, ext, field, points)


# ---------------------------------------------------------------------------
# covering map and Jacobian
# ---------------------------------------------------------------------------

def covering_map(mdl: FermatModel, pt: ProjectivePoint) -> ProjectivePoint:
    """Image [x_1^k : ... : x_{d+1}^k] in P^d of a point on the model."""
    if not contains(mdl, pt):
        raise NotOnVariety(f"{pt!r} is not on the model")
    return ProjectivePoint(tuple(x ** mdl.k for x in pt.coords[: mdl.d + 1]))


def jacobian_matrix(mdl: FermatModel, pt: ProjectivePoint):
    """Rows grad f_i(P), entries k * c_{i,j} * x_j^{k-1}."""
    f = pt.field
    rows = _forms_in(mdl, f)
    k_el = f.element(mdl.k)
    powers = [k_el * (x ** (mdl.k - 1)) for x in pt.coords]
    return [[c * v for c, v in zip(row, powers)] for row in rows]


def jacobian_rank(mdl: FermatModel, pt: ProjectivePoint) -> int:
    """Rank of the Jacobian at a point of the model, by Gaussian elimination."""
    if not contains(mdl, pt):
        raise NotOnVariety(f"{pt!r} is not on the model")
    return linalg.rank(jacobian_matrix(mdl, pt))


@dataclass(frozen=True)
class SmoothnessEntry:
    ext: int
    point_count: int
    min_rank: int | None
    max_rank: int | None
    expected_rank: int
    passed: bool
    vacuous: bool
    singular_point: ProjectivePoint | None


@dataclass(frozen=True)
class SmoothnessReport:
    entries: tuple[SmoothnessEntry, ...]
    passed: bool
    note: str

    def __iter__(self):
        return iter(self.entries)


def smoothness_report(mdl: FermatModel, ext_degrees=(1,),
                      cap: int = DEFAULT_POINT_CAP) -> SmoothnessReport:
    """Jacobian rank at every rational point of the listed extensions.

    The Jacobian at P is C * diag(k * x_j^{k-1}); multiplying columns by
    the nonzero entries of an invertible diagonal matrix does not change
    rank, so the rank at P equals the rank of the columns of C supported
    on the nonzero coordinates of P.  Ranks are computed by exact Gaussian
    elimination once per support pattern.  This certifies smoothness at
    the scanned rational points only, not at all closed points.
    """
    expected = mdl.codim
    c_rows = [list(r) for r in mdl.forms]
    entries = []
    for ext in ext_degrees:
        count, _, field, blocks = _scan_codes(mdl, ext, cap, keep=True)
        rank_by_support: dict[int, int] = {}
        min_rank = max_rank = None
        singular = None
        for block in blocks:
            nonzero = block != 0
            keys = np.zeros(block.shape[1], dtype=np.int64)
            for j in range(block.shape[0]):
                keys |= nonzero[j].astype(np.int64) << j
            for key in np.unique(keys):
                key = int(key)
                if key not in rank_by_support:
                    cols = [j for j in range(mdl.n + 1) if key >> j & 1]
                    sub = [[row[j] for j in cols] for row in c_rows]
                    rank_by_support[key] = linalg.rank(sub)
                r = rank_by_support[key]
                if min_rank is None or r < min_rank:
                    min_rank = r
                if max_rank is None or r > max_rank:
                    max_rank = r
                if r < expected and singular is None:
                    col = block[:, keys == key][:, 0]
                    singular = ProjectivePoint(
                        tuple(field.from_code(int(c)) for c in col))
        vacuous = count == 0
        passed = vacuous or (min_rank == expected and max_rank == expected)
        entries.append(SmoothnessEntry(ext, count, min_rank, max_rank,
                                       expected, passed, vacuous, singular))
    return SmoothnessReport(
        tuple(entries),
        all(e.passed for e in entries),
        "rank checked at rational points of the listed extensions only",
    )


# ---------------------------------------------------------------------------
# deck transformations and induced models
# ---------------------------------------------------------------------------

def deck_generators(mdl: FermatModel):
    """The n+1 coordinate scalings by a primitive k-th root of unity.

    Their projective product is the identity and they generate a group of
    order k^n.
    """
    from .autgroup import MonomialMatrix  # deferred: autgroup imports variety

    field, n = mdl.field, mdl.n
    perm = tuple(range(n + 1))
    one = field.one()
    gens = []
    for j in range(n + 1):
        scalars = [one] * (n + 1)
        scalars[j] = mdl.omega
        gens.append(MonomialMatrix(field, perm, tuple(scalars)))
    return gens


def induced_pair(mdl: FermatModel, j: int) -> FermatModel:
    """Model of type (d-1; k, n-1) carried by the fixed locus {x_j = 0}.

    The hyperplane Sigma_j is identified with P^{d-1} through a canonical
    basis of its kernel; the other hyperplanes restrict to an arrangement
    in general position which is renormalised to Lambda-form.  j is
    1-based to match the hyperplane numbering.
    """
    if mdl.d < 2:
        raise BadIndex("no induced model below surfaces (d must be >= 2)")
    if not 1 <= j <= mdl.n + 1:
        raise BadIndex(f"hyperplane index {j} out of range 1..{mdl.n + 1}")
    arr = mdl.arrangement()
    q = arr.hyperplanes[j - 1]
    basis = linalg.null_space([list(q.coords)])  # (d) vectors of length d+1
    rest = []
    for i, h in enumerate(arr.hyperplanes):
        if i == j - 1:
            continue
        rest.append(ProjectivePoint(tuple(linalg.mat_vec([list(b) for b in basis],
                                                         list(h.coords)))))
    sub = Arrangement(mdl.d - 1, rest, mdl.field)
    _, lam = normalize(sub)
    return build_model(mdl.d - 1, mdl.k, mdl.n - 1, lam, mdl.field)


# ---------------------------------------------------------------------------
# type classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TypeVerdict:
    d: int
    k: int
    n: int
    p: int
    coprimality_ok: bool
    k_minus_1_not_p_power: bool
    exceptional_type: bool
    theorem_applies: bool
    canonical_degree: int

    def to_dict(self) -> dict:
        return {
            "d": self.d, "k": self.k, "n": self.n, "p": self.p,
            "coprimality_ok": self.coprimality_ok,
            "k_minus_1_not_p_power": self.k_minus_1_not_p_power,
            "exceptional_type": self.exceptional_type,
            "theorem_applies": self.theorem_applies,
            "canonical_degree": self.canonical_degree,
        }


def classify_type(d: int, k: int, n: int, p: int) -> TypeVerdict:
    """Hypothesis flags and the canonical twist degree (n-d)k - n - 1.

    The two surface types with twist 0, (2; 2, 5) and (2; 4, 3), are the
    exceptional ones (possible only in odd characteristic, since in
    characteristic 2 those k fail coprimality).
    """
    from .multinomial import is_power_of_p

    if d < 1 or n < d + 1 or k < 2:
        raise ValueError(f"invalid type ({d}; {k}, {n})")
    coprime = gcd(k, p) == 1
    not_power = not is_power_of_p(k - 1, p)
    exceptional = (d, k, n) in EXCEPTIONAL_SURFACE_TYPES and p > 2
    applies = coprime and not_power and d >= 2 and not exceptional
    degree = (n - d) * k - n - 1
    return TypeVerdict(d, k, n, p, coprime, not_power, exceptional, applies, degree)
