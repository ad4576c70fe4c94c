import functools
import logging
import re

from .errors import SpecSyntaxError, UnsupportedFactorError
from .liegroups import KINDS, GroupFactor, GroupSpec, normalize_spec

LOGGER = logging.getLogger(__name__)

FACTOR_RE = re.compile(r"(SU|SO|Spin|Sp)\((\d+)\)(?:#(\d+))?")
TORUS_RE = re.compile(r"T\^(\d+)")
NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*(?:\(\d*\))?")
SEPARATOR = "x"


def _read_factor(text, pos):
    match = FACTOR_RE.match(text, pos)
    if match:
        kind, n, flag = match.groups()
        factor = GroupFactor(kind, int(n), int(flag) if flag is not None else None)
        return factor, match.end()
    match = TORUS_RE.match(text, pos)
    if match:
        return GroupFactor("T", int(match.group(1))), match.end()
    match = NAME_RE.match(text, pos)
    if match and match.group(0).split("(")[0] in KINDS:
        raise SpecSyntaxError(f"malformed factor {match.group(0)!r}", pos)
    if match and not match.group(0).startswith(SEPARATOR):
        raise UnsupportedFactorError(
            f"unsupported factor {match.group(0)!r} at position {pos}; "
            "expected SU(n), SO(n), Spin(n), Sp(n) or T^n"
        )
    raise SpecSyntaxError("expected a factor such as SU(3), SO(5)#2 or T^1", pos)


@functools.lru_cache(maxsize=None)
def parse_spec(text):
    """
    Parse a group spec of the form FACTOR ("x" FACTOR)* ("x" "T^" INT)?.

    Args:
        text: e.g. "SU(2)xSO(5)xT^1"; a "#k" suffix selects #F, as in "SU(4)#3"

    Returns:
        Normalized GroupSpec

    Example:
        parse_spec("SO(3)xT^1")  # factors (SO(3),), l0=1
    """
    text = text.strip()
    if not text:
        raise SpecSyntaxError("empty group spec", 0)

    factors = []
    pos = 0
    while True:
        factor, end = _read_factor(text, pos)
        if factors and factors[-1].kind == "T":
            raise SpecSyntaxError("the torus factor T^n must come last", pos)
        factors.append(factor)
        if end == len(text):
            break
        if text[end] != SEPARATOR:
            raise SpecSyntaxError(f"expected {SEPARATOR!r} between factors", end)
        pos = end + 1
        if pos == len(text):
            raise SpecSyntaxError("dangling separator", end)

    spec = normalize_spec(GroupSpec(tuple(factors)))
    LOGGER.debug("parsed %r as %s", text, spec.label)
    return spec
