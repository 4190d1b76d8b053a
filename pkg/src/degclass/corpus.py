"""Corpus definition: the stanza text format and the built-in menagerie.

The text format is line oriented.  A stanza is::

    group <name>
    degree <n>
    gen (1,2,3)(4,5)
    gen (1,2)
    end

``#`` starts a comment (full line or trailing), blank lines are ignored,
cycles are 1-based, and a stanza may have zero ``gen`` lines to denote the
trivial group on its points.  Names must be unique within a corpus.

Records always store the canonical serialization of their generators (the
cycle string regenerated from the parsed permutation), so parsing the
serialized corpus reproduces the records byte for byte.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .families import standard_group
from .group import DEFAULT_ENUMERATION_CAP, Group, build_group, direct_product
from .perm import format_cycles, parse_cycles


class CorpusError(ValueError):
    """A corpus file problem; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class GroupRecord:
    name: str
    source: str  # "builtin" | "file"
    degree: int
    generator_strings: tuple[str, ...]
    group: Group


def _record(name: str, group: Group, source: str) -> GroupRecord:
    return GroupRecord(
        name=name,
        source=source,
        degree=group.degree,
        generator_strings=tuple(format_cycles(g) for g in group.generators),
        group=group,
    )


def parse_corpus(
    text: str, *, source: str = "file", enumeration_cap: int = DEFAULT_ENUMERATION_CAP
) -> list[GroupRecord]:
    """Parse corpus text into built GroupRecords.

    Raises CorpusError with a line number for syntax errors, bad cycles,
    points beyond the degree, or duplicate names.
    """
    records: list[GroupRecord] = []
    seen: set[str] = set()
    name: str | None = None
    degree: int | None = None
    gens: list = []
    start_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "group":
            if name is not None:
                raise CorpusError(f"stanza {name!r} not terminated before new group", lineno)
            if not rest or any(c.isspace() for c in rest):
                raise CorpusError("group needs a single-token name", lineno)
            if rest in seen:
                raise CorpusError(f"duplicate group name {rest!r}", lineno)
            name = rest
            degree = None
            gens = []
            start_line = lineno
        elif keyword == "degree":
            if name is None:
                raise CorpusError("degree outside a group stanza", lineno)
            if degree is not None:
                raise CorpusError("degree given twice", lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise CorpusError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise CorpusError(f"degree must be >= 1, got {degree}", lineno)
        elif keyword == "gen":
            if name is None or degree is None:
                raise CorpusError("gen before group/degree", lineno)
            try:
                gens.append(parse_cycles(rest, degree))
            except ValueError as exc:
                raise CorpusError(str(exc), lineno) from None
        elif keyword == "end":
            if name is None:
                raise CorpusError("end outside a group stanza", lineno)
            if degree is None:
                raise CorpusError(f"stanza {name!r} has no degree", lineno)
            group = build_group(degree, gens, enumeration_cap=enumeration_cap)
            records.append(_record(name, group, source))
            seen.add(name)
            name = None
        else:
            raise CorpusError(f"unknown keyword {keyword!r}", lineno)
    if name is not None:
        raise CorpusError(f"stanza {name!r} never terminated", start_line)
    return records


def serialize_corpus(records: list[GroupRecord]) -> str:
    """Canonical corpus text; parsing it reproduces identical records."""
    blocks = []
    for rec in records:
        lines = [f"group {rec.name}", f"degree {rec.degree}"]
        lines.extend(f"gen {s}" for s in rec.generator_strings)
        lines.append("end")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def corpus_digest(records: list[GroupRecord]) -> str:
    return hashlib.sha256(serialize_corpus(records).encode("utf-8")).hexdigest()


def builtin_corpus(enumeration_cap: int = DEFAULT_ENUMERATION_CAP) -> list[GroupRecord]:
    """The built-in menagerie: 26 groups of order at most 72.

    Cyclic groups C1..C12, the small symmetric/alternating/dihedral groups,
    Q8, SL(2,3), the holomorph of C7 (the order-42 group with degrees
    {1 x6, 6 x1}), its order-21 Frobenius subgroup, and four direct products
    chosen so that every equivalence criterion has both a both-true and a
    both-false witness at some prime.
    """
    cap = enumeration_cap

    def std(family: str, parameter: int) -> Group:
        return standard_group(family, parameter, enumeration_cap=cap)

    frobenius21 = build_group(
        7,
        [
            parse_cycles("(1,2,3,4,5,6,7)", 7),
            # x -> 2x mod 7: the order-3 automorphism of C7
            parse_cycles("(2,3,5)(4,7,6)", 7),
        ],
        enumeration_cap=cap,
    )

    named: list[tuple[str, Group]] = []
    for n in range(1, 13):
        named.append((f"C{n}", std("cyclic", n)))
    named.extend(
        [
            ("S3", std("symmetric", 3)),
            ("S4", std("symmetric", 4)),
            ("A4", std("alternating", 4)),
            ("A5", std("alternating", 5)),
            ("D8", std("dihedral", 4)),
            ("D12", std("dihedral", 6)),
            ("Q8", std("quaternion", 8)),
            ("SL(2,3)", std("sl_2_3", 3)),
            ("Hol(C7)", std("holomorph_cyclic_prime", 7)),
            ("C7:C3", frobenius21),
            ("Q8xC3", direct_product(std("quaternion", 8), std("cyclic", 3))),
            ("S3xC5", direct_product(std("symmetric", 3), std("cyclic", 5))),
            ("A4xC2", direct_product(std("alternating", 4), std("cyclic", 2))),
            ("D8xC9", direct_product(std("dihedral", 4), std("cyclic", 9))),
        ]
    )
    return [_record(name, group, "builtin") for name, group in named]
