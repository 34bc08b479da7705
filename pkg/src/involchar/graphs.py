"""Involution product graphs.

A pair of involutions ``(sigma, tau)`` with ``sigma * tau == rho`` is drawn
as a two-coloured graph on ``{1..n}``: red edges for ``sigma``, blue edges
for ``tau``.  Every connected component carries either a single cycle of
``rho`` (isolated) or two cycles of ``rho`` of equal length (interlaced).
Fixing the cycles of a component, the blue image of its smallest point
(the *anchor*) determines every edge of the component.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import ContractError, InvariantViolation, check_limit
from .partitions import Partition, to_multiplicity
from .permutations import (
    Permutation,
    compose,
    enumerate_involutions,
    format_cycles,
    is_involution,
)

MAX_DECOMPOSITION_N = 10

ISOLATED = "isolated"
INTERLACED = "interlaced"


@dataclass(frozen=True)
class InvolutionProductGraph:
    red: Permutation
    blue: Permutation
    product: Permutation

    def __post_init__(self):
        if not (self.red.n == self.blue.n == self.product.n):
            raise ContractError("degree mismatch in product graph")
        if not is_involution(self.red) or not is_involution(self.blue):
            raise ContractError("both colours of a product graph must be involutions")
        if compose(self.red, self.blue) != self.product:
            raise ContractError("product does not equal red * blue")

    @property
    def n(self) -> int:
        return self.product.n

    @property
    def sigma(self) -> Permutation:
        return self.red

    @property
    def tau(self) -> Permutation:
        return self.blue

    def to_json(self) -> dict:
        return {
            "sigma": format_cycles(self.red),
            "tau": format_cycles(self.blue),
            "components": [c.to_json() for c in components(self)],
            "hook_block": extract_hook_block(self).to_json(),
        }


@dataclass(frozen=True)
class GraphComponent:
    kind: str
    k: int
    cycles: Tuple[Tuple[int, ...], ...]
    anchor: int

    @property
    def reference(self) -> int:
        return min(min(c) for c in self.cycles)

    def height(self) -> int:
        """1-based position of the anchor in its own cycle (smallest point first)."""
        for cyc in self.cycles:
            if self.anchor in cyc:
                return cyc.index(self.anchor) + 1
        raise InvariantViolation(f"anchor {self.anchor} not on component cycles {self.cycles}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "cycles": [list(c) for c in self.cycles],
            "anchor": self.anchor,
        }


@dataclass(frozen=True)
class HookBlock:
    """The hook data for the cycles of one length ``k``.

    ``letters`` are consecutive global labels, one per ``k``-cycle in order
    of smallest element; ``involution[i]`` is the partner letter of
    ``letters[i]`` (itself when fixed) and ``heights[i]`` the height of the
    first column of its ``k``-hook.
    """

    k: int
    letters: Tuple[int, ...]
    involution: Tuple[int, ...]
    heights: Tuple[int, ...]

    def __post_init__(self):
        pos = {a: i for i, a in enumerate(self.letters)}
        for i, a in enumerate(self.letters):
            b = self.involution[i]
            if b not in pos or self.involution[pos[b]] != a:
                raise InvariantViolation(f"hook block {self} is not an involution")
            if self.heights[pos[b]] != self.heights[i]:
                raise InvariantViolation(f"matched letters {a},{b} carry different heights")
            if not 1 <= self.heights[i] <= self.k:
                raise InvariantViolation(f"height {self.heights[i]} outside 1..{self.k}")

    @property
    def r(self) -> int:
        return len(self.letters)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "letters": list(self.letters),
            "involution": list(self.involution),
            "heights": list(self.heights),
        }


@dataclass(frozen=True)
class HookBlockInvolution:
    blocks: Tuple[HookBlock, ...]

    def content(self) -> Partition:
        return Partition.from_parts(b.k for b in self.blocks for _ in b.letters)

    def to_json(self) -> list:
        return [b.to_json() for b in self.blocks]


def build_graph(sigma: Permutation, tau: Permutation) -> InvolutionProductGraph:
    if not is_involution(sigma) or not is_involution(tau):
        raise ContractError("build_graph needs two involutions")
    return InvolutionProductGraph(sigma, tau, compose(sigma, tau))


def components(g: InvolutionProductGraph) -> List[GraphComponent]:
    """Connected components of ``g``, ordered by their smallest point."""
    rho, tau = g.product, g.blue
    cycles = rho.cycles()
    owner = {}
    for idx, cyc in enumerate(cycles):
        for a in cyc:
            owner[a] = idx
    # red edges stay inside the cycle of the blue image, so blue edges
    # alone decide which rho-cycles share a component
    groups: Dict[int, set] = {}
    for idx, cyc in enumerate(cycles):
        linked = {owner[tau(a)] for a in cyc}
        groups[idx] = linked | {idx}
    out = []
    done = set()
    for idx, cyc in enumerate(cycles):
        if idx in done:
            continue
        members = sorted(groups[idx])
        for m in members:
            if not groups[m] <= set(members):
                raise InvariantViolation(f"component of cycle {cyc} is not closed under blue edges")
        if len(members) > 2:
            raise InvariantViolation(f"{len(members)} cycles interlaced in one component")
        comp_cycles = tuple(cycles[m] for m in members)
        sizes = {len(c) for c in comp_cycles}
        if len(sizes) != 1:
            raise InvariantViolation(f"cycles of different lengths interlaced: {comp_cycles}")
        done.update(members)
        ref = min(comp_cycles[0])
        kind = INTERLACED if len(members) == 2 else ISOLATED
        anchor = tau(ref)
        if kind == INTERLACED and anchor in comp_cycles[0]:
            raise InvariantViolation(f"anchor {anchor} does not reach the partner cycle")
        out.append(GraphComponent(kind, len(cyc), comp_cycles, anchor))
    return out


def graph_from_components(rho: Permutation, comps: Sequence[GraphComponent]) -> InvolutionProductGraph:
    """Rebuild the graph from its components and anchors.

    Walking the cycle from the reference point ``a`` forward while walking
    back from the anchor ``v``: ``tau(rho^t a) = rho^-t v``.
    """
    rho_inv = rho.inverse()
    tau = [0] * rho.n
    for comp in comps:
        a, v = comp.reference, comp.anchor
        for _ in range(comp.k):
            tau[a - 1] = v
            tau[v - 1] = a
            a, v = rho(a), rho_inv(v)
    if 0 in tau:
        raise ContractError("components do not cover every point")
    tau_p = Permutation(tuple(tau))
    sigma = compose(rho, tau_p)
    return build_graph(sigma, tau_p)


def enumerate_decompositions(rho: Permutation, max_n: int = MAX_DECOMPOSITION_N) -> Iterator[InvolutionProductGraph]:
    """Yield every ordered pair of involutions with product ``rho``.

    Brute force: for each involution ``sigma`` put ``tau = sigma * rho``
    (then ``sigma * tau == rho``) and keep it when ``tau`` is an involution.
    """
    check_limit("n", rho.n, max_n)
    for sigma in enumerate_involutions(rho.n, max_n=None):
        tau = compose(sigma, rho)
        if is_involution(tau):
            yield InvolutionProductGraph(sigma, tau, rho)


def count_by_brute_force(rho: Permutation, max_n: int = MAX_DECOMPOSITION_N) -> int:
    return sum(1 for _ in enumerate_decompositions(rho, max_n=max_n))


def extract_hook_block(g: InvolutionProductGraph) -> HookBlockInvolution:
    """Hook-block involution of a product graph.

    Cycle lengths are processed in decreasing order.  The ``r`` cycles of
    length ``k`` get the next ``r`` letters in order of smallest element;
    interlaced cycles become transposed letters, isolated cycles fixed
    letters.  The hook height is the position of the anchor in the cycle
    that contains it.
    """
    comps = components(g)
    by_size: Dict[int, List[GraphComponent]] = {}
    for c in comps:
        by_size.setdefault(c.k, []).append(c)
    blocks = []
    next_letter = 1
    for k in sorted(by_size, reverse=True):
        group = by_size[k]
        cyc_list = sorted((cyc for c in group for cyc in c.cycles), key=min)
        letter = {cyc: next_letter + i for i, cyc in enumerate(cyc_list)}
        partner = {}
        height = {}
        for c in group:
            h = c.height()
            a = letter[c.cycles[0]]
            b = letter[c.cycles[-1]]
            partner[a], partner[b] = b, a
            height[a] = height[b] = h
        letters = tuple(range(next_letter, next_letter + len(cyc_list)))
        blocks.append(HookBlock(k, letters, tuple(partner[x] for x in letters), tuple(height[x] for x in letters)))
        next_letter += len(cyc_list)
    return HookBlockInvolution(tuple(blocks))


def enumerate_hook_block_involutions(mu) -> Iterator[HookBlockInvolution]:
    """All hook-block involutions of content ``mu``, built directly.

    For each part size ``k`` (largest first) with multiplicity ``r``: any
    involution of ``r`` letters, and a height in ``1..k`` per orbit.
    """
    mu = Partition(mu)
    per_size = []
    start = 1
    for k, r in sorted(to_multiplicity(mu).items(), reverse=True):
        letters = tuple(range(start, start + r))
        options = []
        for inv in enumerate_involutions(r, max_n=None):
            orbits = inv.cycles()
            for hs in itertools.product(range(1, k + 1), repeat=len(orbits)):
                height = {}
                for orbit, h in zip(orbits, hs):
                    for x in orbit:
                        height[x] = h
                options.append(
                    HookBlock(
                        k,
                        letters,
                        tuple(inv(x) + start - 1 for x in range(1, r + 1)),
                        tuple(height[x] for x in range(1, r + 1)),
                    )
                )
        per_size.append(options)
        start += r
    for combo in itertools.product(*per_size):
        yield HookBlockInvolution(tuple(combo))

