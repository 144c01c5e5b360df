"""Ordered hyperplane tuples in P^d over a finite field.

A hyperplane is stored as its covector, a projective point
[rho_1 : ... : rho_{d+1}] cutting {rho_1 x_1 + ... + rho_{d+1} x_{d+1} = 0}.
An Arrangement is an ordered tuple of n+1 pairwise distinct covectors.
General position means every (d+1) x (d+1) minor of the coefficient matrix
is nonzero.

`normalize` produces the unique projective map sending the first d+2
hyperplanes to the standard frame (the coordinate hyperplanes followed by
the all-ones covector) and reads off the remaining hyperplanes as the
parameter matrix Lambda, one row [l_1 : ... : l_d : 1] per extra
hyperplane.  Projective maps act on points by their matrix and on
covectors by the inverse transpose, so normalisation and equivalence
checks are bit-exact.
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import (
    DuplicateHyperplane,
    FieldMismatch,
    NotGeneralPosition,
    SingularMap,
)
from .ff import FieldElement, FieldSpec, embed


class ProjectivePoint:
    """Point of P^d in canonical form (first nonzero coordinate is 1)."""

    __slots__ = ("field", "coords")

    def __init__(self, coords):
        coords = tuple(coords)
        if not coords:
            raise ValueError("empty coordinate tuple")
        field = coords[0].owner
        for c in coords:
            if c.owner != field:
                raise FieldMismatch("mixed fields in projective point")
        lead = next((c for c in coords if c.code != 0), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        if lead.code != 1:
            inv = lead.inverse()
            coords = tuple(c * inv for c in coords)
        self.field = field
        self.coords = coords

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def codes(self) -> tuple[int, ...]:
        return tuple(c.code for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.field == other.field and self.codes() == other.codes()

    def __hash__(self):
        return hash((self.field, self.codes()))

    def __repr__(self):
        return "[" + ":".join(repr(c) for c in self.coords) + "]"

    def to_coeffs(self) -> list[list[int]]:
        return [c.to_coeffs() for c in self.coords]


def point(field: FieldSpec, values) -> ProjectivePoint:
    """Convenience constructor from ints / coefficient lists."""
    return ProjectivePoint(tuple(field.element(v) for v in values))


class Arrangement:
    """Ordered tuple of n+1 distinct hyperplane covectors in P^d."""

    __slots__ = ("field", "d", "hyperplanes")

    def __init__(self, d: int, hyperplanes, field: FieldSpec | None = None):
        hyperplanes = tuple(hyperplanes)
        if not hyperplanes:
            raise ValueError("empty arrangement")
        if field is None:
            field = hyperplanes[0].field
        for h in hyperplanes:
            if h.field != field:
                raise FieldMismatch("mixed fields in arrangement")
            if h.dim != d:
                raise ValueError(f"covector of P^{h.dim} in an arrangement of P^{d}")
        if len(hyperplanes) < d + 2:
            raise ValueError(f"need at least {d + 2} hyperplanes in P^{d}")
        if len(set(hyperplanes)) != len(hyperplanes):
            raise DuplicateHyperplane("arrangement has a repeated hyperplane")
        self.field = field
        self.d = d
        self.hyperplanes = hyperplanes

    @property
    def n(self) -> int:
        return len(self.hyperplanes) - 1

    def covector_matrix(self):
        """(d+1) x (n+1) matrix whose columns are the covectors."""
        return [[h.coords[i] for h in self.hyperplanes] for i in range(self.d + 1)]

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return (self.field == other.field and self.d == other.d
                and self.hyperplanes == other.hyperplanes)

    def __hash__(self):
        return hash((self.field, self.d, self.hyperplanes))

    def __repr__(self):
        return f"Arrangement(d={self.d}, n={self.n}, field={self.field!r})"

    def to_dict(self) -> dict:
        out = self.field.to_dict()
        out["d"] = self.d
        out["covectors"] = [h.to_coeffs() for h in self.hyperplanes]
        return out

    @staticmethod
    def from_dict(data: dict) -> "Arrangement":
        field = FieldSpec.from_dict(data)
        d = int(data["d"])
        hps = [point(field, cov) for cov in data["covectors"]]
        return Arrangement(d, hps, field)


class LambdaParams:
    """Normalized parameter of an arrangement: an (n-d-1) x d matrix.

    Row i holds the first d coordinates of the covector
    [l_{i,1} : ... : l_{i,d} : 1] of the (d+2+i)-th hyperplane.  For
    n = d+1 the matrix is empty (the parameter space is a single point).
    Shape is validated here; membership in the general-position locus is a
    separate query (`membership_Xnd`), so deliberately degenerate
    parameters can be constructed for testing.
    """

    __slots__ = ("field", "d", "n", "rows")

    def __init__(self, field: FieldSpec, d: int, n: int, rows):
        rows = tuple(tuple(r) for r in rows)
        if d < 1 or n < d + 1:
            raise ValueError(f"invalid (d, n) = ({d}, {n})")
        if len(rows) != n - d - 1:
            raise ValueError(f"expected {n - d - 1} rows, got {len(rows)}")
        for r in rows:
            if len(r) != d:
                raise ValueError(f"expected rows of length {d}")
            for x in r:
                if x.owner != field:
                    raise FieldMismatch("lambda entry outside the declared field")
        self.field = field
        self.d = d
        self.n = n
        self.rows = rows

    def entries(self):
        for r in self.rows:
            yield from r

    def __eq__(self, other):
        if not isinstance(other, LambdaParams):
            return NotImplemented
        return (self.field == other.field and self.d == other.d
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        codes = tuple(tuple(x.code for x in r) for r in self.rows)
        return hash((self.field, self.d, self.n, codes))

    def __repr__(self):
        return f"LambdaParams(d={self.d}, n={self.n}, rows={self.rows!r})"

    def embedded(self, field: FieldSpec) -> "LambdaParams":
        if field == self.field:
            return self
        rows = tuple(tuple(embed(x, field) for x in r) for r in self.rows)
        return LambdaParams(field, self.d, self.n, rows)

    def to_dict(self) -> dict:
        out = self.field.to_dict()
        out["d"] = self.d
        out["n"] = self.n
        out["lambda"] = [[x.to_coeffs() for x in r] for r in self.rows]
        return out

    @staticmethod
    def from_dict(data: dict) -> "LambdaParams":
        field = FieldSpec.from_dict(data)
        d, n = int(data["d"]), int(data["n"])
        rows = [[field.element(x) for x in r] for r in data["lambda"]]
        return LambdaParams(field, d, n, rows)


class ProjectiveMap:
    """Element of PGL_{d+1}: an invertible matrix modulo a global scalar.

    The stored matrix acts on points; covectors transform by the inverse
    transpose, so hyperplane images stay bit-exact.
    """

    __slots__ = ("field", "matrix", "_cov")

    def __init__(self, matrix):
        rows = tuple(tuple(r) for r in matrix)
        field = rows[0][0].owner
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        lead = next((x for r in rows for x in r if x.code != 0), None)
        if lead is None or linalg.det([list(r) for r in rows]).code == 0:
            raise SingularMap("projective map needs an invertible matrix")
        if lead.code != 1:
            inv = lead.inverse()
            rows = tuple(tuple(x * inv for x in r) for r in rows)
        self.field = field
        self.matrix = rows
        self._cov = None

    @classmethod
    def identity(cls, field: FieldSpec, d: int) -> "ProjectiveMap":
        return cls(linalg.identity_matrix(field, d + 1))

    @classmethod
    def from_covector_matrix(cls, rows) -> "ProjectiveMap":
        """Map whose action on covectors is the given matrix."""
        inv = linalg.inverse([list(r) for r in rows])
        if inv is None:
            raise SingularMap("covector matrix is singular")
        return cls(linalg.transpose(inv))

    def covector_matrix(self):
        if self._cov is None:
            inv = linalg.inverse([list(r) for r in self.matrix])
            self._cov = tuple(tuple(r) for r in linalg.transpose(inv))
        return self._cov

    def apply_point(self, pt: ProjectivePoint) -> ProjectivePoint:
        return ProjectivePoint(linalg.mat_vec([list(r) for r in self.matrix],
                                              list(pt.coords)))

    def apply_covector(self, cov: ProjectivePoint) -> ProjectivePoint:
        return ProjectivePoint(self.apply_covector_raw(cov.coords))

    def apply_covector_raw(self, coords):
        return tuple(linalg.mat_vec([list(r) for r in self.covector_matrix()],
                                    list(coords)))

    def apply(self, arr: Arrangement) -> Arrangement:
        return Arrangement(arr.d, [self.apply_covector(h) for h in arr.hyperplanes],
                           arr.field)

    def compose(self, other: "ProjectiveMap") -> "ProjectiveMap":
        """self after other."""
        return ProjectiveMap(linalg.mat_mul([list(r) for r in self.matrix],
                                            [list(r) for r in other.matrix]))

    def inverse(self) -> "ProjectiveMap":
        return ProjectiveMap(linalg.inverse([list(r) for r in self.matrix]))

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j].code == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMap):
            return NotImplemented
        return self.field == other.field and self._codes() == other._codes()

    def _codes(self):
        return tuple(tuple(x.code for x in r) for r in self.matrix)

    def __hash__(self):
        return hash((self.field, self._codes()))

    def __repr__(self):
        return f"ProjectiveMap({self._codes()})"

    def to_coeffs(self) -> list[list[list[int]]]:
        return [[x.to_coeffs() for x in r] for r in self.matrix]


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def is_general_position(arr: Arrangement) -> bool:
    """Every (d+1) x (d+1) minor of the covector matrix is nonzero."""
    cols = [list(h.coords) for h in arr.hyperplanes]
    for subset in itertools.combinations(range(arr.n + 1), arr.d + 1):
        sub = [[cols[j][i] for j in subset] for i in range(arr.d + 1)]
        if linalg.det(sub).code == 0:
            return False
    return True


def standard_frame(field: FieldSpec, d: int) -> list[ProjectivePoint]:
    """e_1, ..., e_{d+1}, [1 : ... : 1]."""
    one, zero = field.one(), field.zero()
    frame = [ProjectivePoint(tuple(one if i == j else zero for i in range(d + 1)))
             for j in range(d + 1)]
    frame.append(ProjectivePoint(tuple(one for _ in range(d + 1))))
    return frame


def _frame_covector_map(covectors):
    """Covector matrix S with S q_j ~ e_j for j <= d+1 and S q_{d+2} = ones.

    Raises NotGeneralPosition when the d+2 covectors are not a frame.
    """
    d = covectors[0].dim
    if len(covectors) != d + 2:
        raise ValueError(f"need exactly {d + 2} covectors")
    cols = [list(h.coords) for h in covectors[: d + 1]]
    b = [[cols[j][i] for j in range(d + 1)] for i in range(d + 1)]
    s0 = linalg.inverse(b)
    if s0 is None:
        raise NotGeneralPosition("first d+1 covectors are dependent")
    v = linalg.mat_vec(s0, list(covectors[d + 1].coords))
    if any(x.code == 0 for x in v):
        raise NotGeneralPosition("last frame covector lies on a coordinate face")
    return [[x * vi.inverse() for x in row] for row, vi in zip(s0, v)]


def normalize(arr: Arrangement):
    """Unique T with T(Sigma_j) = standard frame for j <= d+2, plus Lambda.

    The map is returned together with the extracted parameter; each extra
    hyperplane image is scaled so its last coordinate is 1 (nonzero by
    general position).
    """
    if not is_general_position(arr):
        raise NotGeneralPosition("arrangement is not in general position")
    d, n = arr.d, arr.n
    s = _frame_covector_map(list(arr.hyperplanes[: d + 2]))
    rows = []
    for j in range(d + 2, n + 1):
        z = linalg.mat_vec(s, list(arr.hyperplanes[j].coords))
        last = z[d]
        inv = last.inverse()
        rows.append(tuple(z[i] * inv for i in range(d)))
    tmap = ProjectiveMap.from_covector_matrix(s)
    frame = standard_frame(arr.field, d)
    for j in range(d + 2):
        if tmap.apply_covector(arr.hyperplanes[j]) != frame[j]:
            raise RuntimeError("normalisation failed its own frame check")
    return tmap, LambdaParams(arr.field, d, n, rows)


def lambda_to_arrangement(lam: LambdaParams, field: FieldSpec | None = None) -> Arrangement:
    """Standard d+2 hyperplanes followed by the Lambda covectors."""
    if field is None:
        field = lam.field
    lam = lam.embedded(field)
    hps = standard_frame(field, lam.d)
    one = field.one()
    for r in lam.rows:
        hps.append(ProjectivePoint(tuple(r) + (one,)))
    return Arrangement(lam.d, hps, field)


def membership_Xnd(lam: LambdaParams, field: FieldSpec | None = None) -> bool:
    """Whether the induced arrangement is in general position."""
    try:
        arr = lambda_to_arrangement(lam, field)
    except DuplicateHyperplane:
        return False
    return is_general_position(arr)


def _correspondences(a: Arrangement, b: Arrangement):
    """Yield (perm, T) with T(Sigma_j^a) = Sigma_{perm[j]}^b for all j.

    T is forced by the images of a's first d+2 hyperplanes, so only the
    ordered (d+2)-selections of target slots are searched; the remaining
    hyperplanes are matched as a set.
    """
    d, n = a.d, a.n
    index_b = {h: j for j, h in enumerate(b.hyperplanes)}
    sa = _frame_covector_map(list(a.hyperplanes[: d + 2]))
    for targets in itertools.permutations(range(n + 1), d + 2):
        try:
            sb = _frame_covector_map([b.hyperplanes[t] for t in targets])
        except NotGeneralPosition:
            continue
        sb_inv = linalg.inverse(sb)
        u = linalg.mat_mul(sb_inv, sa)
        perm = list(targets) + [-1] * (n - d - 1)
        used = set(targets)
        ok = True
        for j in range(d + 2, n + 1):
            img = ProjectivePoint(linalg.mat_vec(u, list(a.hyperplanes[j].coords)))
            t = index_b.get(img)
            if t is None or t in used:
                ok = False
                break
            perm[j] = t
            used.add(t)
        if ok:
            yield tuple(perm), ProjectiveMap.from_covector_matrix(u)


def pgl_equivalent(a: Arrangement, b: Arrangement, mode: str = "labeled"):
    """Witness (T, perm) with T(Sigma_j^a) = Sigma_{perm[j]}^b, or None.

    Labeled mode forces perm to be the identity; unlabeled mode searches
    relabelings as well.  Arrangements must share d, n and field.
    """
    if a.field != b.field:
        raise FieldMismatch("arrangements over different fields")
    if a.d != b.d or a.n != b.n:
        raise ValueError("arrangements of different shape")
    if mode == "labeled":
        d, n = a.d, a.n
        sa = _frame_covector_map(list(a.hyperplanes[: d + 2]))
        sb = _frame_covector_map(list(b.hyperplanes[: d + 2]))
        u = linalg.mat_mul(linalg.inverse(sb), sa)
        for j in range(n + 1):
            img = ProjectivePoint(linalg.mat_vec(u, list(a.hyperplanes[j].coords)))
            if img != b.hyperplanes[j]:
                return None
        return ProjectiveMap.from_covector_matrix(u), tuple(range(n + 1))
    if mode == "unlabeled":
        for perm, tmap in _correspondences(a, b):
            return tmap, perm
        return None
    raise ValueError(f"unknown mode {mode!r}")
