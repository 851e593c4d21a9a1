"""Line-based text formats for matroids, oriented matroids, and point
configurations, plus the bundle type the CLI passes around.

All emission is canonical (sorted families, reduced fractions), so emitted
files are byte-stable and parse(emit(x)) == x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError
from .ground import GroundSet, SignedSet
from .matroid import Matroid, validate_matroid
from .oriented import OrientedMatroid, validate_oriented_matroid
from .realization import ColoredPointConfig, as_vector


@dataclass
class InstanceBundle:
    """One parsed component plus provenance (currently just the seed)."""

    config: ColoredPointConfig | None = None
    matroid: Matroid | None = None
    om: OrientedMatroid | None = None
    provenance: dict = field(default_factory=dict)

    def kind(self) -> str:
        if self.config is not None:
            return "points"
        if self.om is not None:
            return "om"
        if self.matroid is not None:
            return "matroid"
        return "empty"


def _scan(text: str):
    """Yield (lineno, directive, payload); capture `# seed:` provenance."""
    provenance: dict = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("seed:"):
                try:
                    provenance["seed"] = int(body[len("seed:"):].strip())
                except ValueError:
                    raise ParseError(lineno, f"bad seed comment {line!r}") from None
            continue
        if ":" not in line:
            raise ParseError(lineno, f"expected 'directive: payload', got {line!r}")
        directive, payload = line.split(":", 1)
        rows.append((lineno, directive.strip(), payload.strip()))
    return rows, provenance


def _parse_ground_and_circuits(text: str) -> tuple[GroundSet, list[tuple[int, list[str]]], dict]:
    rows, provenance = _scan(text)
    ground: GroundSet | None = None
    circuits: list[tuple[int, list[str]]] = []
    for lineno, directive, payload in rows:
        if directive == "elements":
            if ground is not None:
                raise ParseError(lineno, "duplicate elements line")
            try:
                ground = GroundSet(payload.split())
            except Exception as exc:
                raise ParseError(lineno, str(exc)) from None
        elif directive == "circuit":
            if ground is None:
                raise ParseError(lineno, "circuit line before elements line")
            circuits.append((lineno, payload.split()))
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")
    if ground is None:
        raise ParseError(0, "missing elements line")
    return ground, circuits, provenance


def parse_matroid_text(text: str) -> tuple[Matroid, dict]:
    ground, rows, provenance = _parse_ground_and_circuits(text)
    family = []
    for lineno, tokens in rows:
        for tok in tokens:
            if tok[0] in "+-":
                raise ParseError(lineno, f"signed token {tok!r} in a matroid circuit")
        try:
            family.append(ground.subset(tokens))
        except KeyError as exc:
            raise ParseError(lineno, str(exc)) from None
    return validate_matroid(ground, family), provenance


def parse_om_text(text: str) -> tuple[OrientedMatroid, dict]:
    """One representative per +/- pair in the file; the negation is implied."""
    ground, rows, provenance = _parse_ground_and_circuits(text)
    family = []
    for lineno, tokens in rows:
        pos, neg = [], []
        for tok in tokens:
            if len(tok) < 2 or tok[0] not in "+-":
                raise ParseError(lineno, f"expected +label or -label, got {tok!r}")
            (pos if tok[0] == "+" else neg).append(tok[1:])
        try:
            rep = SignedSet.from_labels(ground, pos, neg)
        except (KeyError, ValueError) as exc:
            raise ParseError(lineno, str(exc)) from None
        family.append(rep)
        family.append(-rep)
    return validate_oriented_matroid(ground, family), provenance


def parse_points_text(text: str) -> tuple[ColoredPointConfig, dict]:
    rows, provenance = _scan(text)
    dim: int | None = None
    anchor = None
    points: dict[str, tuple] = {}
    colors: dict[str, int] = {}
    for lineno, directive, payload in rows:
        if directive == "dim":
            try:
                dim = int(payload)
            except ValueError:
                raise ParseError(lineno, f"bad dimension {payload!r}") from None
            if dim < 1:
                raise ParseError(lineno, "dimension must be at least 1")
        elif directive == "x":
            if dim is None:
                raise ParseError(lineno, "x line before dim line")
            anchor = _coords(lineno, payload.split(), dim)
        elif directive == "point":
            if dim is None:
                raise ParseError(lineno, "point line before dim line")
            tokens = payload.split()
            if not tokens:
                raise ParseError(lineno, "point line needs a label")
            label = tokens[0]
            if label in points:
                raise ParseError(lineno, f"duplicate point label {label!r}")
            coord_toks = tokens[1:]
            if coord_toks and coord_toks[-1].startswith("color="):
                try:
                    colors[label] = int(coord_toks[-1][len("color="):])
                except ValueError:
                    raise ParseError(lineno, f"bad color in {coord_toks[-1]!r}") from None
                coord_toks = coord_toks[:-1]
            points[label] = _coords(lineno, coord_toks, dim)
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")
    if dim is None:
        raise ParseError(0, "missing dim line")
    if anchor is None:
        raise ParseError(0, "missing x line")
    if not points:
        raise ParseError(0, "no points given")
    if colors and set(colors) != set(points):
        raise ParseError(0, "either all points carry color= or none do")
    config = ColoredPointConfig(dim, points, anchor, colors or None)
    return config, provenance


def _coords(lineno: int, tokens: list[str], dim: int) -> tuple:
    if len(tokens) != dim:
        raise ParseError(lineno, f"expected {dim} coordinates, got {len(tokens)}")
    try:
        return as_vector(tokens)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"bad rational among {tokens}") from None


def parse_instance(source: str | Path) -> InstanceBundle:
    """Parse a file or raw text, sniffing the component kind.

    A family file whose circuits carry +/- signs is an oriented matroid;
    signless (including circuit-free) family files are matroids.
    """
    text = Path(source).read_text() if isinstance(source, Path) else source
    rows, _ = _scan(text)
    if not rows:
        raise ParseError(0, "empty instance text")
    first = rows[0][1]
    if first == "dim":
        config, prov = parse_points_text(text)
        return InstanceBundle(config=config, provenance=prov)
    if first != "elements":
        raise ParseError(rows[0][0], f"cannot determine instance kind from {first!r}")
    signed = any(
        directive == "circuit" and payload and payload.split()[0][0] in "+-"
        for _, directive, payload in rows
    )
    if signed:
        om, prov = parse_om_text(text)
        return InstanceBundle(om=om, provenance=prov)
    matroid, prov = parse_matroid_text(text)
    return InstanceBundle(matroid=matroid, provenance=prov)


def emit_matroid(m: Matroid) -> str:
    lines = [f"elements: {' '.join(m.ground.labels)}"]
    for c in m.circuits:
        lines.append(f"circuit: {' '.join(c)}")
    return "\n".join(lines) + "\n"


def emit_om(om: OrientedMatroid) -> str:
    lines = [f"elements: {' '.join(om.ground.labels)}"]
    for rep in om.representatives():
        toks = []
        for i in rep.support().indices():
            sign = "+" if rep.sign(i) > 0 else "-"
            toks.append(sign + om.ground.labels[i])
        lines.append(f"circuit: {' '.join(toks)}")
    return "\n".join(lines) + "\n"


def emit_points(config: ColoredPointConfig) -> str:
    lines = [f"dim: {config.dim}", f"x: {' '.join(str(c) for c in config.anchor)}"]
    for lab, p in config.points.items():
        row = f"point: {lab} {' '.join(str(c) for c in p)}"
        if config.colors is not None:
            row += f" color={config.colors[lab]}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def emit_instance(bundle: InstanceBundle) -> str:
    header = ""
    if "seed" in bundle.provenance:
        header = f"# seed: {bundle.provenance['seed']}\n"
    kind = bundle.kind()
    if kind == "points":
        return header + emit_points(bundle.config)
    if kind == "om":
        return header + emit_om(bundle.om)
    if kind == "matroid":
        return header + emit_matroid(bundle.matroid)
    raise ValueError("empty bundle")
