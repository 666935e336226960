"""Named graph families and the ``kind:params`` text syntax used by the CLI.

Examples of the syntax::

    path:5   cycle:4   complete:6   kbip:2,3   spider:4,1,1
    friendship:3   hypercube3   cart:(cycle:4)x(path:2)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError
from .graph import Graph

KINDS = ("path", "cycle", "complete", "complete_bipartite", "spider", "friendship", "hypercube3", "cartesian")

_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "kbip": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
    "spider": "spider",
    "friendship": "friendship",
    "hypercube3": "hypercube3",
    "q3": "hypercube3",
    "cart": "cartesian",
    "cartesian": "cartesian",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", "FamilySpec"] | None = None

    def __str__(self) -> str:
        if self.kind == "cartesian":
            a, b = self.factors
            return f"cart:({a})x({b})"
        if self.kind == "hypercube3":
            return "hypercube3"
        short = "kbip" if self.kind == "complete_bipartite" else self.kind
        return f"{short}:{','.join(map(str, self.params))}"


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def spider(*legs: int) -> Graph:
    """Centre is vertex 0; leg ``k`` occupies the next ``legs[k]`` indices,
    listed outward from the centre."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def friendship(k: int) -> Graph:
    """``k`` triangles sharing vertex 0; blade ``i`` is ``{2i+1, 2i+2}``."""
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(u, v)`` has index ``u * h.n + v``."""
    edges = []
    for u in range(g.n):
        for v, z in h.edges():
            edges.append((u * h.n + v, u * h.n + z))
    for u, w in g.edges():
        for v in range(h.n):
            edges.append((u * h.n + v, w * h.n + v))
    return Graph.from_edges(g.n * h.n, edges)


def hypercube3() -> Graph:
    return cartesian(cycle(4), path(2))


def _need(spec: FamilySpec, count: int | None, minimum: int) -> None:
    if count is not None and len(spec.params) != count:
        raise DomainError(f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}")
    if any(p < minimum for p in spec.params):
        raise DomainError(f"{spec.kind} parameters must be >= {minimum}: {spec.params}")


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``."""
    kind = spec.kind
    if kind == "path":
        _need(spec, 1, 1)
        return path(spec.params[0])
    if kind == "cycle":
        _need(spec, 1, 3)
        return cycle(spec.params[0])
    if kind == "complete":
        _need(spec, 1, 1)
        return complete(spec.params[0])
    if kind == "complete_bipartite":
        _need(spec, 2, 1)
        return complete_bipartite(*spec.params)
    if kind == "spider":
        if not spec.params:
            raise DomainError("spider needs at least one leg")
        _need(spec, None, 1)
        return spider(*spec.params)
    if kind == "friendship":
        _need(spec, 1, 1)
        return friendship(spec.params[0])
    if kind == "hypercube3":
        _need(spec, 0, 0)
        return hypercube3()
    if kind == "cartesian":
        if spec.factors is None:
            raise DomainError("cartesian needs two factor specs")
        return cartesian(generate(spec.factors[0]), generate(spec.factors[1]))
    raise DomainError(f"unknown family {kind!r}")


def _split_cart(body: str) -> tuple[str, str]:
    # Find the top-level ")x(" so nested products parse.
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                rest = body[i + 1:].lstrip()
                if rest.startswith("x"):
                    left = body[:i + 1].strip()
                    right = rest[1:].strip()
                    if left.startswith("(") and right.startswith("(") and right.endswith(")"):
                        return left[1:-1], right[1:-1]
                break
    raise ParseError(f"cannot parse cartesian factors from {body!r}")


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    if ":" not in text:
        kind = _ALIASES.get(text.lower())
        if kind == "hypercube3":
            return FamilySpec("hypercube3")
        raise ParseError(f"not a family spec: {text!r}")
    head, body = text.split(":", 1)
    kind = _ALIASES.get(head.strip().lower())
    if kind is None:
        raise ParseError(f"unknown family {head!r}")
    if kind == "cartesian":
        left, right = _split_cart(body)
        return FamilySpec("cartesian", (), (parse_family(left), parse_family(right)))
    try:
        params = tuple(int(p) for p in body.split(",") if p.strip())
    except ValueError:
        raise ParseError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(kind, params)


def looks_like_family(text: str) -> bool:
    text = text.strip()
    return ":" in text or text.lower() in ("hypercube3", "q3")
