"""Standard-parabolic combinatorics: Delta_L, Delta_U, Levi components,
W_L-orbits of Delta_U, and the grading of the unipotent radical."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .errors import NotMaximal
from .roots import CartanType, Root, RootSystem, Weight, reflect

__all__ = [
    "LeviComponent",
    "ParabolicData",
    "OrbitPartition",
    "build_parabolic",
    "wl_orbits",
    "unipotent_grading",
]


@dataclass(frozen=True)
class LeviComponent:
    """One connected component of the Levi's Dynkin diagram (1-based node indices)."""

    id: int
    simple_indices: tuple[int, ...]
    cartan_type: CartanType

    @property
    def rank(self) -> int:
        return len(self.simple_indices)


@dataclass(frozen=True)
class ParabolicData:
    rs: RootSystem
    levi_simples: frozenset[int]  # S, 1-based
    delta_L: tuple[Root, ...]  # positive Levi roots
    delta_U: tuple[Root, ...]
    sigma_L_complement: tuple[int, ...]  # Sigma^L, 1-based, sorted
    rho_L: Weight
    levi_components: tuple[LeviComponent, ...]

    @property
    def is_maximal(self) -> bool:
        return len(self.sigma_L_complement) == 1

    @property
    def is_borel(self) -> bool:
        return not self.levi_simples


@dataclass(frozen=True)
class Orbit:
    roots: tuple[Root, ...]
    touches: tuple[int, ...]  # ids of Levi components moved through this orbit


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[Orbit, ...]


def _classify_subdiagram(rs: RootSystem, nodes: tuple[int, ...]) -> CartanType:
    """Identify the Cartan type of a connected induced Dynkin subdiagram."""
    n = len(nodes)
    if n == 1:
        return CartanType("A", 1)
    idx = {node: k for k, node in enumerate(nodes)}
    adj: dict[int, list[int]] = {k: [] for k in range(n)}
    multi = []  # (i, j, |C_ij*C_ji|)
    for a in nodes:
        for b in nodes:
            if a < b and rs.cartan[a - 1][b - 1] != 0:
                i, j = idx[a], idx[b]
                adj[i].append(j)
                adj[j].append(i)
                m = rs.cartan[a - 1][b - 1] * rs.cartan[b - 1][a - 1]
                if m != 1:
                    multi.append((i, j, m))
    degrees = sorted(len(v) for v in adj.values())
    if multi:
        m = multi[0][2]
        if m == 3:
            return CartanType("G", 2)
        if n == 4 and degrees == [1, 1, 2, 2]:
            return CartanType("F", 4)
        # distinguish B (short end) from C (long end) by which end root is short
        i, j, _ = multi[0]
        a, b = nodes[i], nodes[j]
        short_is = a if rs.symmetrizer[a - 1] < rs.symmetrizer[b - 1] else b
        end_nodes = [nodes[k] for k, v in adj.items() if len(v) == 1]
        fam = "B" if short_is in end_nodes and len(adj[idx[short_is]]) == 1 else "C"
        # for rank 2 both B2/C2 are the same diagram
        return CartanType(fam if n > 2 else "B", n)
    if degrees[-1] <= 2:
        return CartanType("A", n)
    # one branch node; classify by sorted arm lengths
    branch = next(k for k, v in adj.items() if len(v) == 3)
    arms = []
    for start in adj[branch]:
        length, prev, cur = 1, branch, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return CartanType("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return CartanType("E", n)
    raise ValueError(f"unrecognized Dynkin subdiagram with arms {arms}")


def build_parabolic(rs: RootSystem, levi_simples) -> ParabolicData:
    """Standard parabolic for the subset S of simple roots (1-based indices)."""
    S = frozenset(int(i) for i in levi_simples)
    if not S <= set(range(1, rs.rank + 1)):
        raise ValueError(f"Levi indices {sorted(S)} out of range 1..{rs.rank}")
    delta_L = []
    delta_U = []
    for rt in rs.positive_roots:
        support = {i + 1 for i, c in enumerate(rt.coords) if c != 0}
        (delta_L if support <= S else delta_U).append(rt)
    sigma_comp = tuple(sorted(set(range(1, rs.rank + 1)) - S))
    # rho_L: half-sum of positive Levi roots, in the weight basis of rs
    total = [0] * rs.rank
    for rt in delta_L:
        for i, c in enumerate(rt.coords):
            total[i] += c
    rho_L = Weight(
        tuple(
            Q(sum(total[k] * rs.cartan[k][j] for k in range(rs.rank)), 2)
            for j in range(rs.rank)
        )
    )
    # connected components of the Dynkin diagram restricted to S
    remaining = set(S)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            a = stack.pop()
            for b in list(remaining - comp):
                if rs.cartan[a - 1][b - 1] != 0:
                    comp.add(b)
                    stack.append(b)
        remaining -= comp
        nodes = tuple(sorted(comp))
        comps.append(LeviComponent(len(comps) + 1, nodes, _classify_subdiagram(rs, nodes)))
    return ParabolicData(
        rs=rs,
        levi_simples=S,
        delta_L=tuple(delta_L),
        delta_U=tuple(delta_U),
        sigma_L_complement=sigma_comp,
        rho_L=rho_L,
        levi_components=tuple(comps),
    )


def wl_orbits(p: ParabolicData) -> OrbitPartition:
    """Partition Delta_U into orbits of the Levi's Weyl group.

    Breadth-first closure under the simple reflections indexed by S; no
    enumeration of W_L is ever needed.
    """
    rs = p.rs
    gens = [rs.simple_roots[i - 1] for i in sorted(p.levi_simples)]
    remaining = set(p.delta_U)
    orbits = []
    for seed in p.delta_U:  # deterministic: seeds taken in root order
        if seed not in remaining:
            continue
        orbit = {seed}
        stack = [seed]
        while stack:
            rt = stack.pop()
            for g in gens:
                img = reflect(rt, g, rs)
                if img not in orbit:
                    orbit.add(img)
                    stack.append(img)
        remaining -= orbit
        touched = set()
        for comp in p.levi_components:
            for i in comp.simple_indices:
                if any(rs.pairing_root_coroot(rt, rs.simple_roots[i - 1]) != 0 for rt in orbit):
                    touched.add(comp.id)
                    break
        orbits.append(Orbit(tuple(sorted(orbit, key=Root.key)), tuple(sorted(touched))))
    orbits.sort(key=lambda o: o.roots[0].key())
    return OrbitPartition(tuple(orbits))


def unipotent_grading(p: ParabolicData) -> dict[int, tuple[Root, ...]]:
    """Levels u_j of the unipotent radical of a maximal parabolic:
    j(alpha) = <varpi_P, alpha^vee>, the coefficient of the simple coroot
    outside the Levi in the coroot expansion."""
    if not p.is_maximal:
        raise NotMaximal(f"Sigma^L = {p.sigma_L_complement} has size != 1")
    node = p.sigma_L_complement[0]
    levels: dict[int, list[Root]] = {}
    for rt in p.delta_U:
        j = p.rs.coroot(rt)[node - 1]
        levels.setdefault(j, []).append(rt)
    return {j: tuple(sorted(v, key=Root.key)) for j, v in sorted(levels.items())}
