"""Reading and writing codes in the GOC1 text format.

::

    GOC1 n=<n> w=<w> lambda=<lambda> flipping=<0|1> count=<ell>
    M 0
    <x> <y>
    ...

Each ``M <i>`` line is followed by exactly ``w`` patch lines sorted by
``(x, y)``. Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from typing import IO, Iterable

from .grid import Code, CodeParams, Macrobond

_HEADER = re.compile(
    r"GOC1 n=(\d+) w=(\d+) lambda=(\d+) flipping=([01]) count=(\d+)"
)
_POINT = re.compile(r"(-?\d+) (-?\d+)")


class CodeFormatError(ValueError):
    """Malformed GOC1 input. ``kind`` names the failure, ``line`` is 1-based."""

    def __init__(self, kind: str, line: int, message: str):
        super().__init__(f"line {line}: {kind}: {message}")
        self.kind = kind
        self.line = line


def format_header(params: CodeParams, count: int) -> str:
    return (
        f"GOC1 n={params.n} w={params.w} lambda={params.lam} "
        f"flipping={int(params.flipping)} count={count}\n"
    )


def format_member(index: int, m: Macrobond) -> str:
    lines = [f"M {index}"]
    lines.extend(f"{x} {y}" for x, y in m.patches)
    return "\n".join(lines) + "\n"


def write_code(out: IO[str], params: CodeParams, members: Iterable[Macrobond], count: int) -> int:
    """Stream a code to ``out`` without materializing it. Returns members written.

    ``count`` goes in the header and must equal the number of members.
    """
    out.write(format_header(params, count))
    written = 0
    for i, m in enumerate(members):
        out.write(format_member(i, m))
        written += 1
    if written != count:
        raise ValueError(f"header declared count={count} but {written} members were written")
    return written


def serialize_code(code: Code) -> bytes:
    parts = [format_header(code.params, len(code))]
    parts.extend(format_member(i, m) for i, m in enumerate(code.members))
    return "".join(parts).encode("utf-8")


def parse_code(text: bytes | str) -> Code:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [
        (no, raw.rstrip("\r"))
        for no, raw in enumerate(text.split("\n"), start=1)
        if raw.strip() and not raw.startswith("#")
    ]
    if not lines:
        raise CodeFormatError("header", 1, "empty input, expected a GOC1 header")

    no, header = lines[0]
    hm = _HEADER.fullmatch(header.strip())
    if hm is None:
        raise CodeFormatError("header", no, f"malformed header {header!r}")
    n, w, lam, flipping, count = (int(g) for g in hm.groups())
    try:
        params = CodeParams(n, w, lam, bool(flipping))
    except ValueError as exc:
        raise CodeFormatError("header", no, str(exc)) from None

    members = []
    pos = 1
    while pos < len(lines):
        no, line = lines[pos]
        expected = f"M {len(members)}"
        if line.strip() != expected:
            raise CodeFormatError("structure", no, f"expected {expected!r}, got {line!r}")
        pos += 1
        pts: list[tuple[int, int]] = []
        seen = set()
        while pos < len(lines) and not lines[pos][1].startswith("M"):
            no, line = lines[pos]
            pm = _POINT.fullmatch(line.strip())
            if pm is None:
                raise CodeFormatError("point", no, f"malformed point line {line!r}")
            x, y = int(pm.group(1)), int(pm.group(2))
            if not (0 <= x < n and 0 <= y < n):
                raise CodeFormatError("range", no, f"coordinate ({x}, {y}) outside [0,{n})^2")
            if (x, y) in seen:
                raise CodeFormatError("duplicate", no, f"duplicate point ({x}, {y})")
            seen.add((x, y))
            pts.append((x, y))
            pos += 1
        if len(pts) != w:
            raise CodeFormatError(
                "weight", no, f"macrobond {len(members)} has {len(pts)} patches, expected w={w}"
            )
        members.append(Macrobond(n, pts))

    if len(members) != count:
        raise CodeFormatError(
            "count", lines[-1][0], f"header declared count={count}, found {len(members)} macrobonds"
        )
    return Code(params, members)
