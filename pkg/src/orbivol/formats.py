"""Reading user-supplied spaces and restricted-root data.

Both files use INI syntax, one section per space id.  A spaces file::

    [HH.2]
    name = Sp(2,1)/Sp(2)Sp(1)
    cartan_label = CII
    N = 8
    d = 21
    alpha_G = 8
    constants_class = ONE_SQRT2
    # optional K-volume, required for a bound:
    #   k_scalar * 2^k_pow2 * pi^k_pow_pi * sqrt(k_sqrt) / prod(k_factorials!)
    # given as keys k_pow2, k_pow_pi, k_sqrt, k_factorials (space separated)
    # and k_scalar; omitted keys default to the neutral value

A restricted-roots file (Gram rows separated by ``;``, each root written
as ``coefficients : multiplicity``)::

    [EIV]
    gram = 4/3 2/3 ; 2/3 28/3
    roots = 1 -1 : 8 ; 1 2 : 8 ; 0 3 : 8
"""

from __future__ import annotations

import configparser
from fractions import Fraction
from pathlib import Path

from .catalog import CartanLabel, ExactVolumeExpression, SymmetricSpaceSpec
from .constants import ConstantsClass, RestrictedRootSystem

__all__ = [
    "SchemaError",
    "parse_spaces",
    "parse_roots",
    "load_spaces_file",
    "load_roots_file",
    "format_roots",
]

_SPACE_KEYS = {
    "cartan_label", "N", "d", "alpha_G", "constants_class", "name", "worked",
    "k_pow2", "k_pow_pi", "k_sqrt", "k_factorials", "k_scalar",
}
_ROOT_KEYS = {"dim", "gram", "roots"}


class SchemaError(ValueError):
    pass


def _parser(text: str, source: str) -> configparser.ConfigParser:
    cp = configparser.ConfigParser(interpolation=None, comment_prefixes=("#",),
                                   inline_comment_prefixes=("#",))
    cp.optionxform = str  # keys are case-sensitive (N vs n)
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise SchemaError(f"{source}: {exc}") from exc
    return cp


def _int(section: configparser.SectionProxy, key: str) -> int:
    try:
        return int(section[key])
    except KeyError:
        raise SchemaError(f"[{section.name}] missing required key {key!r}") from None
    except ValueError:
        raise SchemaError(f"[{section.name}] {key} must be an integer") from None


def _space_from_section(sec: configparser.SectionProxy) -> SymmetricSpaceSpec:
    unknown = set(sec.keys()) - _SPACE_KEYS
    if unknown:
        raise SchemaError(f"[{sec.name}] unknown keys: {', '.join(sorted(unknown))}")
    try:
        label = CartanLabel(sec.get("cartan_label", "TYPE_IV").strip())
        cls = ConstantsClass(sec["constants_class"].strip())
    except KeyError:
        raise SchemaError(f"[{sec.name}] missing required key 'constants_class'") from None
    except ValueError as exc:
        raise SchemaError(f"[{sec.name}] {exc}") from None

    k_volume = None
    if any(k.startswith("k_") for k in sec.keys()):
        try:
            k_volume = ExactVolumeExpression(
                pow2=int(sec.get("k_pow2", "0")),
                pow_pi=Fraction(sec.get("k_pow_pi", "0").strip()),
                sqrt_int=int(sec.get("k_sqrt", "1")),
                factorial_denominators=tuple(int(x) for x in sec.get("k_factorials", "").split()),
                rational_scalar=Fraction(sec.get("k_scalar", "1").strip()),
            )
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"[{sec.name}] bad K-volume: {exc}") from None
    try:
        return SymmetricSpaceSpec(
            id=sec.name,
            cartan_label=label,
            N=_int(sec, "N"),
            d=_int(sec, "d"),
            alpha_G=_int(sec, "alpha_G"),
            constants_class=cls,
            k_volume=k_volume,
            name=sec.get("name", ""),
            worked=sec.getboolean("worked", True),
        )
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def parse_spaces(text: str, source: str = "<spaces>") -> list[SymmetricSpaceSpec]:
    cp = _parser(text, source)
    return [_space_from_section(cp[name]) for name in cp.sections()]


def _fractions(text: str, where: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok) for tok in text.split())
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"{where}: cannot parse {text!r} as rationals") from None


def _roots_from_section(sec: configparser.SectionProxy) -> RestrictedRootSystem:
    unknown = set(sec.keys()) - _ROOT_KEYS
    if unknown:
        raise SchemaError(f"[{sec.name}] unknown keys: {', '.join(sorted(unknown))}")
    if "gram" not in sec or "roots" not in sec:
        raise SchemaError(f"[{sec.name}] needs both 'gram' and 'roots'")
    gram = [_fractions(row, f"[{sec.name}] gram") for row in sec["gram"].split(";") if row.strip()]
    roots = []
    for item in sec["roots"].split(";"):
        if not item.strip():
            continue
        vec, sep, mult = item.partition(":")
        if not sep:
            raise SchemaError(f"[{sec.name}] root {item.strip()!r} lacks ': multiplicity'")
        try:
            m = int(mult)
        except ValueError:
            raise SchemaError(f"[{sec.name}] bad multiplicity {mult.strip()!r}") from None
        roots.append((_fractions(vec, f"[{sec.name}] roots"), m))
    rrs = RestrictedRootSystem.build(gram, roots, label=sec.name)
    if "dim" in sec and _int(sec, "dim") != rrs.ambient_dim:
        raise SchemaError(f"[{sec.name}] dim does not match the Gram matrix")
    try:
        rrs.validate()
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    return rrs


def parse_roots(text: str, source: str = "<roots>") -> dict[str, RestrictedRootSystem]:
    cp = _parser(text, source)
    return {name: _roots_from_section(cp[name]) for name in cp.sections()}


def load_spaces_file(path: str | Path) -> list[SymmetricSpaceSpec]:
    path = Path(path)
    return parse_spaces(path.read_text(), source=str(path))


def load_roots_file(path: str | Path) -> dict[str, RestrictedRootSystem]:
    path = Path(path)
    return parse_roots(path.read_text(), source=str(path))


def format_roots(data: dict[str, RestrictedRootSystem]) -> str:
    """Inverse of :func:`parse_roots`."""
    out = []
    for name, rrs in data.items():
        gram = " ; ".join(" ".join(str(x) for x in row) for row in rrs.gram)
        roots = " ; ".join(f"{' '.join(str(x) for x in v)} : {m}" for v, m in rrs.roots)
        out.append(f"[{name}]\ndim = {rrs.ambient_dim}\ngram = {gram}\nroots = {roots}\n")
    return "\n".join(out)
