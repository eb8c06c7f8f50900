# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Program-constructing procedures: diagonal substitution, fixed points, quines.

Every transformer takes and returns canonical kernel texts:

* ``run(ds_transform(x), y)`` behaves like ``run(x, x, y)``
* ``run(kleene_fix(x), z)`` behaves like ``run(x, kleene_fix(x), z)``
* ``rogers_fix(x)`` computes the same function as the program ``x`` makes of it

Usage::

    q = quine()
    assert run(q, b"anything").value == q

"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from ..config import default_samples, get_fuel
from ..errors import BConventionViolation, NameCollision, OutcomeError
from ..kernel import canonicalize, check_b_preserving, escape, fn_name, parse, run
from ..outcome import Halted
from .constants import DS_HEAD, DS_SRC, S1_SRC
from .evidence import EvidenceReport, collect_evidence, verify_ext_equal

__all__ = [
    "ds_transform",
    "kleene_fix",
    "quine",
    "rogers_fix",
    "require_b_preserving",
    "verify_diagonal",
    "verify_kleene",
    "verify_rogers",
]

# Second inputs tried against every first input when sampling b-preservation.
B_PROBES = (b"", b"0", b"b;\"\\")


def _check_names(x: bytes, reserved: Iterable[bytes]) -> None:
    taken = set(parse(x).names)
    clashes = sorted(name for name in reserved if name in taken)
    if clashes:
        raise NameCollision([name.decode("ascii") for name in clashes])


def ds_transform(x: bytes) -> bytes:
    """Diagonal substitution. The result runs ``x`` with its own text as the
    first input and the caller's input as the second::

        s_(){strcpy(b,a);strcpy(a,"<x escaped>");x_();}x

    """
    x = canonicalize(x)
    _check_names(x, [b"s_"])
    u = DS_HEAD + escape(x) + b'");' + fn_name(x) + b"();}" + x
    logging.debug(f"ds_transform: {len(x)} -> {len(u)} bytes")
    return u


def kleene_fix(x: bytes) -> bytes:
    """Fixed point of a binary program: u with run(u, z) = run(x, u, z).

    Built as ``ds_transform(x0)`` where ``x0`` diagonalizes its first input and
    hands it to ``x`` with c emptied again, as on a direct run::

        x0_(){ds_();strcpy(a,c);strcpy(c,"");x_();}  DS_SRC  x

    """
    x = canonicalize(x)
    _check_names(x, [b"s_", b"x0_", b"ds_"])
    x0 = b'x0_(){ds_();strcpy(a,c);strcpy(c,"");' + fn_name(x) + b"();}" + DS_SRC + x
    return ds_transform(x0)


def quine() -> bytes:
    """A program that returns its own text on every input."""
    return kleene_fix(S1_SRC)


def b_samples(samples: Sequence[bytes]) -> List[Tuple[bytes, bytes]]:
    return [(y, z) for y in samples for z in B_PROBES]


def require_b_preserving(x: bytes, samples: Optional[Sequence[bytes]] = None, fuel: Optional[int] = None) -> None:
    """Raises :exc:`BConventionViolation` if ``x`` overwrites b on a sampled input."""
    if samples is None:
        samples = default_samples(x)
    result = check_b_preserving(x, b_samples(samples), fuel)
    if not result.ok:
        raise BConventionViolation(result.violation)


def rogers_fix(x: bytes, samples: Optional[Sequence[bytes]] = None, fuel: Optional[int] = None) -> bytes:
    """Functional fixed point of a unary script-maker: v computes what x makes of v.

    ``x`` must leave register b alone, since the constructed program calls it
    while b still holds the input that the produced program is applied to::

        w_(){x_();strcpy(a,c);eval();}x

    and v is the Kleene fixed point of ``w``.
    """
    x = canonicalize(x)
    _check_names(x, [b"w_", b"s_", b"x0_", b"ds_"])
    require_b_preserving(x, samples, fuel)
    w = b"w_(){" + fn_name(x) + b"();strcpy(a,c);eval();}" + x
    return kleene_fix(w)


def verify_diagonal(
    x: bytes, samples: Optional[Sequence[bytes]] = None, fuel: Optional[int] = None, *, workers: int = 1
) -> EvidenceReport:
    """run(ds_transform(x), z) against run(x, x, z)."""
    x = canonicalize(x)
    u = ds_transform(x)
    budget = get_fuel(fuel)
    return collect_evidence(
        default_samples(x) if samples is None else samples,
        lambda z: run(u, z, b"", budget),
        lambda z: run(x, x, z, budget),
        workers=workers,
    )


def verify_kleene(
    x: bytes, samples: Optional[Sequence[bytes]] = None, fuel: Optional[int] = None, *, workers: int = 1
) -> EvidenceReport:
    """run(u, z) against run(x, u, z) for u = kleene_fix(x)."""
    x = canonicalize(x)
    u = kleene_fix(x)
    budget = get_fuel(fuel)
    return collect_evidence(
        default_samples(x) if samples is None else samples,
        lambda z: run(u, z, b"", budget),
        lambda z: run(x, u, z, budget),
        workers=workers,
    )


def verify_rogers(
    x: bytes, samples: Optional[Sequence[bytes]] = None, fuel: Optional[int] = None, *, workers: int = 1
) -> EvidenceReport:
    """p against v on samples, where v = rogers_fix(x) and p is what x makes of v."""
    x = canonicalize(x)
    v = rogers_fix(x, fuel=fuel)
    made = run(x, v, b"", get_fuel(fuel))
    if not isinstance(made, Halted):
        raise OutcomeError("script-maker did not halt on its fixed point", made)
    p = made.value
    parse(p)
    return verify_ext_equal(p, v, default_samples(x) if samples is None else samples, fuel, workers=workers)
