"""Group spec files and the textual element syntax.

A spec file is line based; ``#`` starts a comment and blank lines are ignored::

    name: D4
    kind: permutation
    degree: 4
    generator: (1 2 3 4)
    generator: (1 3)

For matrix groups use ``kind: unitriangular`` with ``dimension`` and
``modulus``, and give each generator as a row-major list of residues.

Elements are written as 1-based cycles ``(1 2)(3 4)``, 1-based image lists
``[2, 3, 4, 1]``, residue lists ``1 1 0 0 1 0 0 0 1`` (matrix groups), ``e``
for the identity, or ``@k`` for the element with index ``k`` in the group's
enumeration (as printed in violation records).
"""

from __future__ import annotations

import re
from pathlib import Path

from .elements import PERM, UNITRI, from_cycles, permutation, unitriangular
from .errors import MembershipError, SpecFormatError
from .groups import DEFAULT_CAP, FiniteGroup, generate

KINDS = {"permutation": PERM, "unitriangular": UNITRI}
_CYCLE = re.compile(r"\(([^()]*)\)")


def _ints(text):
    try:
        return [int(t) for t in re.split(r"[\s,;]+", text.strip().strip("[]")) if t]
    except ValueError:
        raise SpecFormatError(f"expected integers, got {text!r}") from None


def parse_permutation(text: str, degree: int):
    text = text.strip()
    if text in ("e", "1", "()", "id"):
        return permutation(range(degree))
    try:
        if text.startswith("("):
            if _CYCLE.sub("", text).strip():
                raise SpecFormatError(f"malformed cycle notation {text!r}")
            cycles = [tuple(_ints(c)) for c in _CYCLE.findall(text)]
            for p in (p for c in cycles for p in c):
                if not 1 <= p <= degree:
                    raise SpecFormatError(f"point {p} outside 1..{degree} in {text!r}")
            cycles = [tuple(p - 1 for p in c) for c in cycles]
            return from_cycles([c for c in cycles if c], degree)
        if text.startswith("["):
            images = [p - 1 for p in _ints(text)]
            if len(images) != degree:
                raise SpecFormatError(f"image list must have {degree} entries")
            return permutation(images)
    except SpecFormatError:
        raise
    except ValueError as exc:
        raise SpecFormatError(f"malformed permutation {text!r}: {exc}") from None
    raise SpecFormatError(f"cannot read {text!r} as a permutation")


def parse_matrix(text: str, dim: int, modulus: int):
    text = text.strip()
    if text in ("e", "1", "id"):
        return unitriangular([int(i == j) for i in range(dim) for j in range(dim)], dim, modulus)
    try:
        return unitriangular(_ints(text), dim, modulus)
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from None


def parse_element(text: str, G: FiniteGroup):
    """Read an element of ``G`` from ``text``; it must lie in ``G``."""
    text = text.strip()
    if text.startswith("@"):
        try:
            return G.elements[int(text[1:])]
        except (ValueError, IndexError):
            raise SpecFormatError(f"no element {text} in a group of order {G.order}") from None
    one = G.identity
    if one.kind == PERM:
        x = parse_permutation(text, one.dim)
    else:
        x = parse_matrix(text, one.dim, one.modulus)
    if x not in G:
        raise MembershipError(f"{text} is not an element of {G.name or 'the group'}")
    return x


def parse_spec(text: str, cap=DEFAULT_CAP, default_name=None) -> FiniteGroup:
    fields, gens = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep or not value:
            raise SpecFormatError(f"line {lineno}: expected 'key: value'")
        if key == "generator":
            gens.append(value)
        elif key in ("name", "kind", "degree", "dimension", "modulus"):
            fields[key] = value
        else:
            raise SpecFormatError(f"line {lineno}: unknown field {key!r}")
    kind = KINDS.get(fields.get("kind", ""))
    if kind is None:
        raise SpecFormatError(f"kind must be one of {', '.join(KINDS)}")
    if not gens:
        raise SpecFormatError("at least one generator is required")

    def number(key):
        try:
            return int(fields[key])
        except KeyError:
            raise SpecFormatError(f"missing field {key!r}") from None
        except ValueError:
            raise SpecFormatError(f"field {key!r} must be an integer") from None

    if kind == PERM:
        degree = number("degree")
        if degree < 1:
            raise SpecFormatError("degree must be positive")
        elements = [parse_permutation(g, degree) for g in gens]
    else:
        dim, modulus = number("dimension"), number("modulus")
        if dim < 1 or modulus < 2:
            raise SpecFormatError("need dimension >= 1 and modulus >= 2")
        elements = [parse_matrix(g, dim, modulus) for g in gens]
    return generate(elements, cap=cap, name=fields.get("name", default_name))


def load_spec(path, cap=DEFAULT_CAP) -> FiniteGroup:
    path = Path(path)
    return parse_spec(path.read_text(), cap=cap, default_name=path.stem)


__all__ = ["load_spec", "parse_element", "parse_spec"]
