"""Seeded random instance generation.

The PRNG is splitmix64, fixed by specification rather than host-library
defaults so fixtures reproduce bit-for-bit anywhere: state advances by the
64-bit golden ratio 0x9E3779B97F4A7C15 and each output is finalized with the
xor-shift/multiply constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
Bounded draws use rejection sampling, never a bare modulo.

Color classes are rejection-sampled one at a time until their convex hull
contains the origin. Small classes in three dimensions contain the origin
only degenerately, so after a run of uniform failures the sampler seeds the
class with an antipodal pair p, -p (still drawn from the stream and still
subject to the coordinate range, so infeasible ranges keep failing and
exhaust the retry budget).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenerationExhausted
from .realization import ColoredPointConfig, hull_membership
from .textio import InstanceBundle

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

MAX_ATTEMPTS = 10_000
_UNIFORM_TRIES_PER_COLOR = 20


class SplitMix64:
    """Deterministic 64-bit mixer; identical streams on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform in [lo, hi] via rejection."""
        span = hi - lo + 1
        bound = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < bound:
                return lo + u % span


@dataclass(frozen=True)
class GeneratorParams:
    """Knobs for colorful configurations around the origin.

    ``flat_dim`` confines all points to the span of the first ``flat_dim``
    coordinates; that keeps the oriented matroid rank below the number of
    colors minus one and is how rank-gap instances are produced.
    """

    seed: int
    dim: int
    points_per_color: tuple[int, int] = (2, 4)
    coord_range: tuple[int, int] = (-5, 5)
    flat_dim: int | None = None

    def __post_init__(self):
        if not 1 <= self.dim <= 3:
            raise ValueError("dim must be 1, 2, or 3")
        lo, hi = self.points_per_color
        if not 1 <= lo <= hi:
            raise ValueError("bad points-per-color range")
        if self.coord_range[0] > self.coord_range[1]:
            raise ValueError("bad coordinate range")
        if self.flat_dim is not None and not 1 <= self.flat_dim <= self.dim:
            raise ValueError("flat_dim must lie in 1..dim")
        if (self.dim + 1) * hi > 16:
            raise ValueError("parameters could exceed the 16-element ground cap")


def _pad(coords: list[int], dim: int) -> tuple[int, ...]:
    return tuple(coords + [0] * (dim - len(coords)))


def gen_random(params: GeneratorParams, max_attempts: int = MAX_ATTEMPTS) -> InstanceBundle:
    """Colored configuration with dim+1 colors, anchored at the origin.

    Every candidate color class drawn counts against ``max_attempts``;
    ranges that can never place the origin inside a hull therefore raise
    GenerationExhausted instead of looping forever.
    """
    rng = SplitMix64(params.seed)
    colors = params.dim + 1
    flat = params.flat_dim if params.flat_dim is not None else params.dim
    lo, hi = params.coord_range
    origin = _pad([], params.dim)

    def draw_point() -> tuple[int, ...]:
        return _pad([rng.randint(lo, hi) for _ in range(flat)], params.dim)

    attempts = 0
    points: dict[str, tuple] = {}
    color_of: dict[str, int] = {}
    for ci in range(colors):
        count = rng.randint(*params.points_per_color)
        accepted = None
        uniform_tries = 0
        while accepted is None:
            attempts += 1
            if attempts > max_attempts:
                raise GenerationExhausted(
                    f"no valid configuration within {max_attempts} attempts "
                    f"(seed={params.seed}, dim={params.dim})"
                )
            if uniform_tries < _UNIFORM_TRIES_PER_COLOR or count < 2:
                uniform_tries += 1
                candidate = [draw_point() for _ in range(count)]
            else:
                # antipodal seeding: p and -p bracket the origin by construction
                p = draw_point()
                mirror = tuple(-c for c in p)
                if any(not lo <= c <= hi for c in mirror[:flat]):
                    continue
                candidate = [p, mirror] + [draw_point() for _ in range(count - 2)]
            if any(pt == origin for pt in candidate):
                continue
            labeled = {f"{chr(ord('a') + ci)}{j + 1}": pt for j, pt in enumerate(candidate)}
            if hull_membership(labeled, labeled.keys(), origin) is not None:
                accepted = labeled
        points.update(accepted)
        color_of.update({lab: ci for lab in accepted})

    config = ColoredPointConfig(params.dim, points, origin, color_of)
    return InstanceBundle(config=config, provenance={"seed": params.seed})
