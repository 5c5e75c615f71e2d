"""Plain-text profile format: one declaration line, one line per ballot.

::

    # comments run to end of line
    alternatives: w x y z
    voter: w ~ x > y > z      # groups best to worst, ~ or = ties

Names match ``[A-Za-z0-9_]+`` and every ballot must mention every
declared alternative exactly once.
"""

from __future__ import annotations

import re

from senvr.orders import Profile, WeakOrder

__all__ = ["ParseError", "parse_profile", "serialize_profile"]

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class ParseError(ValueError):
    """Malformed profile text; ``line`` is 1-based (None for whole-document errors)."""

    def __init__(self, line: int | None, reason: str):
        self.line = line
        super().__init__(reason if line is None else f"line {line}: {reason}")


def _checked_name(token: str, line: int) -> str:
    if not _NAME_RE.match(token):
        raise ParseError(line, f"{token!r} is not a valid name (use A-Z, a-z, 0-9, _)")
    return token


def _parse_declaration(rest: str, line: int) -> tuple[str, ...]:
    names = tuple(_checked_name(token, line) for token in rest.split())
    if len(names) < 2:
        raise ParseError(line, "declare at least two alternatives")
    for name in names:
        if names.count(name) > 1:
            raise ParseError(line, f"alternative {name!r} declared more than once")
    return names


def _parse_ballot(rest: str, line: int, names: tuple[str, ...]) -> WeakOrder:
    index = {name: i for i, name in enumerate(names)}
    classes = []
    seen: set[str] = set()
    for group in rest.split(">"):
        tokens = [t for t in re.split(r"[~=]", group) if t.strip()]
        members = set()
        for token in tokens:
            name = _checked_name(token.strip(), line)
            if name not in index:
                raise ParseError(line, f"unknown alternative {name!r}")
            if name in seen:
                raise ParseError(line, f"{name!r} appears more than once in this ballot")
            seen.add(name)
            members.add(index[name])
        if not members:
            raise ParseError(line, "empty group in ballot")
        classes.append(frozenset(members))
    if seen != set(names):
        missing = sorted(set(names) - seen, key=index.__getitem__)
        raise ParseError(line, f"ballot is missing {', '.join(repr(n) for n in missing)}")
    return WeakOrder(tuple(classes))


def parse_profile(text: str) -> Profile:
    """Parse profile text (UTF-8 string, LF or CRLF) into a Profile."""
    names: tuple[str, ...] | None = None
    voters: list[WeakOrder] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("alternatives:"):
            if names is not None:
                raise ParseError(lineno, "alternatives already declared")
            names = _parse_declaration(line[len("alternatives:"):], lineno)
        elif line.startswith("voter:"):
            if names is None:
                raise ParseError(lineno, "voter line before alternatives declaration")
            voters.append(_parse_ballot(line[len("voter:"):], lineno, names))
        else:
            raise ParseError(
                lineno, "unrecognized line (expected 'alternatives:' or 'voter:')"
            )
    if names is None:
        raise ParseError(None, "no alternatives declaration found")
    if not voters:
        raise ParseError(None, "no voter lines found")
    return Profile(names, tuple(voters))


def serialize_profile(profile: Profile) -> str:
    """Canonical text for a profile; parsing it back gives an equal Profile."""
    lines = ["alternatives: " + " ".join(profile.alternative_names)]
    for voter in profile.voters:
        groups = (
            " ~ ".join(profile.name_of(alt) for alt in sorted(cls))
            for cls in voter.classes
        )
        lines.append("voter: " + " > ".join(groups))
    return "\n".join(lines) + "\n"
