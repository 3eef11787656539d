"""Root systems, exact pairings, Weyl reflections, and bounded Weyl enumeration.

Conventions (fixed throughout the package):

* roots are stored as integer vectors in the simple-root basis;
* weights are stored as rational vectors in the fundamental-weight basis,
  so the pairing with the j-th simple coroot reads off coordinate j;
* the inner product is normalized so long roots have squared length 2.

Simple-root and Levi indices in the public API are 1-based, matching the
usual Bourbaki labelling of Dynkin diagrams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

import mpmath

from . import _linalg
from .errors import CapExceeded, DimensionMismatch
from .symalg import LinearForm

__all__ = [
    "CartanType",
    "Root",
    "Weight",
    "RootSystem",
    "WeylElement",
    "build_root_system",
    "cartan_matrix",
    "weyl_order",
    "pair",
    "pair_numeric",
    "reflect",
    "enumerate_weyl",
    "weyl_denominator_check",
]

_RANK_CONSTRAINTS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_CONSTRAINTS:
            raise ValueError(f"unknown family {self.family!r}")
        if not _RANK_CONSTRAINTS[self.family](self.rank):
            raise ValueError(f"unsupported rank {self.rank} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "CartanType":
        text = text.strip()
        if len(text) < 2 or not text[0].isalpha():
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return CartanType(text[0].upper(), int(text[1:]))


@dataclass(frozen=True)
class Root:
    """Coefficients in the simple-root basis; positive roots are all-nonnegative."""

    coords: tuple[int, ...]

    def __post_init__(self):
        pos = any(c > 0 for c in self.coords)
        neg = any(c < 0 for c in self.coords)
        if pos and neg:
            raise ValueError(f"mixed-sign root coordinates {self.coords}")

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def key(self) -> tuple:
        # graded by height; within a height, earlier simple roots first
        return (self.height, tuple(-c for c in self.coords))


@dataclass(frozen=True)
class Weight:
    """Coefficients in the fundamental-weight basis, exact rationals."""

    coords: tuple[Q, ...]

    @staticmethod
    def of(values: Sequence) -> "Weight":
        return Weight(tuple(Q(v) for v in values))


def cartan_matrix(ctype: CartanType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> (0-based rows/cols)."""
    r = ctype.rank
    C = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1):
        C[i][j] = cij
        C[j][i] = cji

    fam = ctype.family
    if fam in ("A", "B", "C", "F", "G"):
        for i in range(r - 1):
            link(i, i + 1)
        if fam == "B":  # alpha_r short
            link(r - 2, r - 1, -2, -1)
        elif fam == "C":  # alpha_r long
            link(r - 2, r - 1, -1, -2)
        elif fam == "F":  # alpha_3, alpha_4 short
            link(1, 2, -2, -1)
        elif fam == "G":  # alpha_1 short, alpha_2 long
            link(0, 1, -1, -3)
    elif fam == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif fam == "E":
        # chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: r - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    return tuple(tuple(row) for row in C)


_WEYL_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def weyl_order(ctype: CartanType) -> int:
    """|W| from the product-of-degrees formula."""
    r = ctype.rank
    if ctype.family == "A":
        return math.factorial(r + 1)
    if ctype.family in ("B", "C"):
        return (2**r) * math.factorial(r)
    if ctype.family == "D":
        return (2 ** (r - 1)) * math.factorial(r)
    return math.prod(_WEYL_DEGREES[str(ctype)])


def _symmetrizer(C: tuple[tuple[int, ...], ...]) -> tuple[Q, ...]:
    """d_i = (alpha_i, alpha_i)/2 with the normalization max d_i = 1 (long roots length^2 = 2)."""
    r = len(C)
    d: list[Q | None] = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if i != j and C[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * C[j][i] / C[i][j]
                    stack.append(j)
    vals = [x for x in d if x is not None]
    top = max(vals)
    return tuple(x / top for x in d)  # type: ignore[misc]


class RootSystem:
    """Immutable container for the combinatorics of one Cartan type."""

    def __init__(self, ctype: CartanType):
        self.cartan_type = ctype
        self.rank = ctype.rank
        self.cartan = cartan_matrix(ctype)
        self._cartan_q = _linalg.mat(self.cartan)
        self._cartan_inv = _linalg.mat_inv(self._cartan_q)
        self._cartan_t_inv = _linalg.mat_inv(_linalg.transpose(self._cartan_q))
        self.symmetrizer = _symmetrizer(self.cartan)
        self.positive_roots = self._generate_positive_roots()
        self._root_index = {rt.coords: i for i, rt in enumerate(self.positive_roots)}
        self.coroot_coeffs = {rt: self._coroot_expansion(rt) for rt in self.positive_roots}
        self.rho = Weight(tuple(Q(1) for _ in range(self.rank)))
        self.simple_roots = tuple(
            Root(tuple(1 if j == i else 0 for j in range(self.rank))) for i in range(self.rank)
        )

    # -- construction -------------------------------------------------------

    def _pairing_with_simple(self, coords: Sequence[int], i: int) -> int:
        return sum(c * self.cartan[k][i] for k, c in enumerate(coords))

    def _generate_positive_roots(self) -> tuple[Root, ...]:
        # closure under root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
        # where p counts how far the string extends below beta
        known: set[tuple[int, ...]] = set()
        for i in range(self.rank):
            known.add(tuple(1 if j == i else 0 for j in range(self.rank)))
        frontier = list(known)
        while frontier:
            new: list[tuple[int, ...]] = []
            for coords in frontier:
                for i in range(self.rank):
                    p = 0
                    below = list(coords)
                    while True:
                        below[i] -= 1
                        if any(c < 0 for c in below) or tuple(below) not in known:
                            break
                        p += 1
                    q = p - self._pairing_with_simple(coords, i)
                    if q > 0:
                        up = list(coords)
                        up[i] += 1
                        t = tuple(up)
                        if t not in known:
                            known.add(t)
                            new.append(t)
            frontier = new
        roots = [Root(c) for c in known]
        roots.sort(key=Root.key)
        return tuple(roots)

    def _coroot_expansion(self, rt: Root) -> tuple[int, ...]:
        # alpha^vee = sum_i (b_i d_i / d_alpha) alpha_i^vee with d_alpha = (alpha,alpha)/2
        d_alpha = self.root_length_sq(rt) / 2
        out = []
        for b, d in zip(rt.coords, self.symmetrizer):
            c = Q(b) * d / d_alpha
            if c.denominator != 1:
                raise RuntimeError(f"non-integral coroot coefficient for {rt}")
            out.append(int(c))
        return tuple(out)

    # -- exact geometry ------------------------------------------------------

    def root_length_sq(self, rt: Root) -> Q:
        # (alpha, alpha) = a^T (C D) a with D = diag(symmetrizer)
        total = Q(0)
        for i, a in enumerate(rt.coords):
            if a == 0:
                continue
            for j, b in enumerate(rt.coords):
                if b != 0:
                    total += Q(a * b) * self.cartan[i][j] * self.symmetrizer[j]
        return total

    def coroot(self, rt: Root) -> tuple[int, ...]:
        if rt.is_positive:
            return self.coroot_coeffs[rt]
        return tuple(-c for c in self.coroot_coeffs[-rt])

    def pairing_root_coroot(self, alpha: Root, beta: Root) -> int:
        """<alpha, beta^vee> as an exact integer."""
        cor = self.coroot(beta)
        return sum(
            a * sum(cor[i] * self.cartan[k][i] for i in range(self.rank))
            for k, a in enumerate(alpha.coords)
        )

    def root_to_weight_coords(self, rt: Root) -> tuple[Q, ...]:
        # alpha = sum_j <alpha, alpha_j^vee> varpi_j
        return tuple(
            Q(sum(a * self.cartan[k][j] for k, a in enumerate(rt.coords)))
            for j in range(self.rank)
        )

    def weight_to_root_coords(self, w: Weight) -> tuple[Q, ...]:
        return _linalg.mat_vec(self._cartan_t_inv, w.coords)

    def weight_inner(self, mu: Weight, nu: Weight) -> Q:
        """(mu, nu) with (alpha,alpha)=2 on long roots."""
        m = self.weight_to_root_coords(mu)
        return sum(mk * nk * dk for mk, nk, dk in zip(m, nu.coords, self.symmetrizer))

    def root_rho_inner(self, rt: Root, rho_like: Weight) -> Q:
        return sum(
            Q(a) * w * d for a, w, d in zip(rt.coords, rho_like.coords, self.symmetrizer)
        )

    def is_root(self, coords: tuple[int, ...]) -> bool:
        if all(c >= 0 for c in coords):
            return coords in self._root_index
        return tuple(-c for c in coords) in self._root_index

    @property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def build_root_system(ctype: CartanType | str) -> RootSystem:
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    return RootSystem(ctype)


# ---------------------------------------------------------------------------
# Pairings
# ---------------------------------------------------------------------------


def pair(lam: Sequence[LinearForm], alpha: Root, rs: RootSystem) -> LinearForm:
    """<lam, alpha^vee> for a weight given by LinearForm coordinates in the
    fundamental-weight basis: sum_i c_i(alpha^vee) * lam_i."""
    if len(lam) != rs.rank:
        raise DimensionMismatch(f"weight has {len(lam)} coords, rank is {rs.rank}")
    out = LinearForm()
    for c, form in zip(rs.coroot(alpha), lam):
        if c != 0:
            out = out + form * c
    return out


def pair_numeric(coords: Sequence[complex], alpha: Root, rs: RootSystem) -> complex:
    return sum(c * x for c, x in zip(rs.coroot(alpha), coords))


def reflect(alpha: Root, beta: Root, rs: RootSystem) -> Root:
    """s_beta(alpha) = alpha - <alpha, beta^vee> beta."""
    n = rs.pairing_root_coroot(alpha, beta)
    return Root(tuple(a - n * b for a, b in zip(alpha.coords, beta.coords)))


# ---------------------------------------------------------------------------
# Weyl group
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """A Weyl-group element with its action cached as exact matrices.

    ``word`` is a (not necessarily reduced) product of simple reflections
    with 1-based indices, composed left-to-right: word=(i, j) acts as
    v -> s_i(s_j(v)).
    """

    word: tuple[int, ...]
    root_matrix: tuple[tuple[int, ...], ...]  # action on simple-root coordinates
    weight_matrix: tuple[tuple[Q, ...], ...]  # same action in the weight basis
    sign: int

    @property
    def length(self) -> int:
        return len(self.word)

    def apply_root(self, rt: Root) -> Root:
        return Root(
            tuple(
                sum(self.root_matrix[i][j] * rt.coords[j] for j in range(len(rt.coords)))
                for i in range(len(rt.coords))
            )
        )

    def apply_weight(self, w: Weight) -> Weight:
        return Weight(_linalg.mat_vec(self.weight_matrix, w.coords))

    def apply_weight_numeric(self, coords: Sequence[complex]) -> tuple[complex, ...]:
        return tuple(
            sum(float(m) * c for m, c in zip(row, coords)) for row in self.weight_matrix
        )

    def apply_weight_forms(self, coords: Sequence[LinearForm]) -> tuple[LinearForm, ...]:
        out = []
        for row in self.weight_matrix:
            acc = LinearForm()
            for m, form in zip(row, coords):
                if m != 0:
                    acc = acc + form * m
            out.append(acc)
        return tuple(out)


def _simple_reflection_matrices(rs: RootSystem, i: int):
    """Matrices of s_{alpha_i} (1-based i) in the root and weight bases."""
    r = rs.rank
    # root basis: s_i(alpha_j) = alpha_j - C[j][i-1] alpha_{i-1}
    rootm = [[1 if a == b else 0 for b in range(r)] for a in range(r)]
    for j in range(r):
        rootm[i - 1][j] -= rs.cartan[j][i - 1]
    # weight basis: (s_i mu)_j = mu_j - mu_{i-1} C[i-1][j]
    wm = [[Q(1) if a == b else Q(0) for b in range(r)] for a in range(r)]
    for j in range(r):
        wm[j][i - 1] -= rs.cartan[i - 1][j]
    return tuple(tuple(row) for row in rootm), tuple(tuple(row) for row in wm)


def identity_element(rs: RootSystem) -> WeylElement:
    r = rs.rank
    eye_i = tuple(tuple(1 if a == b else 0 for b in range(r)) for a in range(r))
    eye_q = tuple(tuple(Q(1) if a == b else Q(0) for b in range(r)) for a in range(r))
    return WeylElement((), eye_i, eye_q, 1)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    rootm, wm = _simple_reflection_matrices(rs, i)
    return WeylElement((i,), rootm, wm, -1)


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """(a∘b)(v) = a(b(v))."""
    rm = tuple(
        tuple(
            sum(a.root_matrix[i][k] * b.root_matrix[k][j] for k in range(len(a.root_matrix)))
            for j in range(len(a.root_matrix))
        )
        for i in range(len(a.root_matrix))
    )
    wm = _linalg.mat_mul(a.weight_matrix, b.weight_matrix)
    return WeylElement(a.word + b.word, rm, wm, a.sign * b.sign)


def apply(w: WeylElement, v: Root | Weight):
    """Apply a Weyl element to a Root or Weight."""
    if isinstance(v, Root):
        return w.apply_root(v)
    return w.apply_weight(v)


def enumerate_weyl(rs: RootSystem, cap: int = 10**6) -> list[WeylElement]:
    """Complete enumeration by breadth-first closure on words.

    Raises CapExceeded(|W|) without enumerating when the classical order
    formula says the group is too large.  The long element is the unique
    one whose root matrix maps every positive root to a negative root.
    """
    order = weyl_order(rs.cartan_type)
    if order > cap:
        raise CapExceeded(order, cap)
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    ident = identity_element(rs)
    seen = {ident.root_matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = compose(w, g)
                if cand.root_matrix not in seen:
                    seen[cand.root_matrix] = cand
                    nxt.append(cand)
        frontier = nxt
    elements = sorted(seen.values(), key=lambda w: (w.length, w.word))
    assert len(elements) == order, f"enumerated {len(elements)}, expected {order}"
    return elements


def long_element(rs: RootSystem, cap: int = 10**6) -> WeylElement:
    for w in enumerate_weyl(rs, cap):
        if all(not w.apply_root(a).is_positive for a in rs.simple_roots):
            return w
    raise RuntimeError("no long element found")  # pragma: no cover


def weyl_denominator_check(
    rs_L: RootSystem, epsilon: Q | int, precision: int = 40, cap: int = 10**6
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Evaluate both sides of the Weyl denominator identity for rs_L.

    lhs = sum_{w in W} sgn(w) exp(eps (w rho, rho));
    rhs = prod_{alpha > 0} (exp(eps (alpha, rho)/2) - exp(-eps (alpha, rho)/2)).

    Returns high-precision reals; the identity makes them equal for every eps.
    """
    eps = Q(epsilon)
    elements = enumerate_weyl(rs_L, cap)
    with mpmath.workdps(precision):
        epsf = mpmath.mpf(eps.numerator) / eps.denominator
        lhs = mpmath.mpf(0)
        for w in elements:
            inner = rs_L.weight_inner(w.apply_weight(rs_L.rho), rs_L.rho)
            lhs += w.sign * mpmath.exp(epsf * mpmath.mpf(inner.numerator) / inner.denominator)
        rhs = mpmath.mpf(1)
        for alpha in rs_L.positive_roots:
            a = rs_L.root_rho_inner(alpha, rs_L.rho)
            x = epsf * mpmath.mpf(a.numerator) / a.denominator / 2
            rhs *= mpmath.exp(x) - mpmath.exp(-x)
        return lhs, rhs
