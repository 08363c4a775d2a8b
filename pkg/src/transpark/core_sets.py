"""Ground sets, set systems and bipartite matchings.

Subsets of the ground set are plain ``int`` bitmasks: bit ``i`` set means the
element at index ``i`` (in ground-label order) is a member.  Block index sets
``J`` are encoded the same way over ``range(d)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .errors import InputError

MAX_GROUND = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices set in ``mask`` in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    for combo in combinations(range(n), k):
        yield mask_of(combo)


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        if not 1 <= len(self.labels) <= MAX_GROUND:
            raise InputError(f"ground set must have 1..{MAX_GROUND} elements, got {len(self.labels)}")
        if len(set(self.labels)) != len(self.labels):
            dup = sorted({x for x in self.labels if self.labels.count(x) > 1})
            raise InputError(f"duplicate ground labels: {dup}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]


@dataclass(frozen=True)
class SetSystem:
    """The collection ``(A_1, ..., A_d)`` of blocks over a ground set."""

    ground: GroundSet
    blocks: tuple[int, ...]

    def __post_init__(self):
        if not self.blocks:
            raise InputError("set system needs at least one block")
        full = self.ground.full
        for b in self.blocks:
            if b & ~full:
                raise InputError("block references an element outside the ground set")

    @classmethod
    def from_lists(cls, ground, blocks) -> "SetSystem":
        """Build from label lists; labels are coerced to ``str``."""
        g = GroundSet(tuple(str(x) for x in ground))
        pos = {lab: i for i, lab in enumerate(g.labels)}
        masks = []
        for block in blocks:
            m = 0
            for lab in block:
                lab = str(lab)
                if lab not in pos:
                    raise InputError(f"block references undeclared element {lab!r}")
                m |= 1 << pos[lab]
            masks.append(m)
        return cls(g, tuple(masks))

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def d(self) -> int:
        return len(self.blocks)

    def union(self, J: int) -> int:
        """``A(J)``, the union of the blocks indexed by ``J``."""
        u = 0
        for j in bits(J):
            u |= self.blocks[j]
        return u

    def subsystem(self, keep) -> "SetSystem":
        return SetSystem(self.ground, tuple(self.blocks[j] for j in keep))

    def to_json(self) -> dict:
        return {
            "ground": list(self.ground.labels),
            "blocks": [self.ground.names(b) for b in self.blocks],
        }


@dataclass(frozen=True)
class Matching:
    size: int
    assignment: dict[int, int] = field(default_factory=dict)  # block -> element


def parse_set_system(text: str) -> SetSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "ground" not in data or "blocks" not in data:
        raise InputError('expected an object with "ground" and "blocks"')
    ground, blocks = data["ground"], data["blocks"]
    if not isinstance(ground, list) or not isinstance(blocks, list):
        raise InputError('"ground" and "blocks" must be arrays')
    for x in ground + [y for b in blocks if isinstance(b, list) for y in b]:
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            raise InputError(f"labels must be strings or integers, got {x!r}")
    if any(not isinstance(b, list) for b in blocks):
        raise InputError("each block must be an array of labels")
    if not blocks:
        raise InputError("empty block list")
    return SetSystem.from_lists(ground, blocks)


def max_matching(A: SetSystem, restrict: Optional[int] = None) -> Matching:
    """Maximum matching between blocks and the elements of ``restrict``.

    Kuhn's augmenting-path search; blocks and elements are scanned in
    ascending index order so the returned assignment is deterministic.
    """
    if restrict is None:
        restrict = A.ground.full
    allowed = [b & restrict for b in A.blocks]
    owner: dict[int, int] = {}  # element -> block

    def augment(j: int, seen: set) -> bool:
        for s in bits(allowed[j]):
            if s in seen:
                continue
            seen.add(s)
            if s not in owner or augment(owner[s], seen):
                owner[s] = j
                return True
        return False

    for j in range(A.d):
        if allowed[j]:
            augment(j, set())
    assignment = {j: s for s, j in owner.items()}
    return Matching(len(assignment), dict(sorted(assignment.items())))


def _deficient_blocks(A: SetSystem, m: Matching) -> int:
    """Blocks reachable by alternating paths from an unmatched block.

    For a maximum matching of size < d this set ``J`` satisfies
    ``|A(J)| < |J|`` (Konig-Hall).  Returns 0 when every block is matched.
    """
    unmatched = [j for j in range(A.d) if j not in m.assignment]
    if not unmatched:
        return 0
    owner = {s: j for j, s in m.assignment.items()}
    J = 1 << unmatched[0]
    stack = [unmatched[0]]
    seen_elems = 0
    while stack:
        j = stack.pop()
        for s in bits(A.blocks[j] & ~seen_elems):
            seen_elems |= 1 << s
            k = owner.get(s)
            if k is not None and not J >> k & 1:
                J |= 1 << k
                stack.append(k)
    return J


def hall_violator(A: SetSystem) -> Optional[int]:
    """A block-index set ``J`` with ``|A(J)| < |J|``, or None if none exists."""
    if A.n != A.d:
        raise InputError(f"hall_violator needs a square system, got n={A.n}, d={A.d}")
    m = max_matching(A)
    if m.size == A.d:
        return None
    return _deficient_blocks(A, m)


def full_transversal_exists(A: SetSystem) -> tuple[bool, Matching | int]:
    """``(True, matching)`` for a size-d transversal, else ``(False, J)``."""
    m = max_matching(A)
    if m.size == A.d:
        return True, m
    return False, _deficient_blocks(A, m)


def _same_matroid(A: SetSystem, B: SetSystem, r: int) -> bool:
    # the rank values on subsets of size <= r determine a rank-r matroid
    if max_matching(B).size != r:
        return False
    for k in range(1, r + 1):
        for T in subsets_of_size(A.n, k):
            if max_matching(A, T).size != max_matching(B, T).size:
                return False
    return True


def normalize_presentation(A: SetSystem) -> SetSystem:
    """Drop blocks (highest index first) while the transversal matroid is unchanged.

    The result has exactly ``rank(M[A])`` blocks.
    """
    r = max_matching(A).size
    keep = list(range(A.d))
    for j in reversed(range(A.d)):
        if len(keep) == r:
            break
        trial = [k for k in keep if k != j]
        if trial and _same_matroid(A, A.subsystem(trial), r):
            keep = trial
    return A.subsystem(keep)


def random_set_system(n: int, d: int, seed: int, density: float = 0.5,
                      max_tries: int = 1000) -> SetSystem:
    """A random full-rank system on ground ``1..n`` with ``d`` blocks."""
    if not 1 <= d <= n <= MAX_GROUND:
        raise InputError("need 1 <= d <= n <= 64")
    rng = random.Random(seed)
    ground = GroundSet(tuple(str(i + 1) for i in range(n)))
    for _ in range(max_tries):
        blocks = []
        for _ in range(d):
            m = 0
            while not m:
                m = mask_of(i for i in range(n) if rng.random() < density)
            blocks.append(m)
        A = SetSystem(ground, tuple(blocks))
        if max_matching(A).size == d:
            return A
    raise InputError(f"no full-rank system found for n={n}, d={d}")
