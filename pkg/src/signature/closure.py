import logging
from collections import deque
from typing import Dict, List, Tuple

from errors import SignatureError
from .connectives import (
    ConnectiveSpec,
    Signature,
    default_residual_name,
    residual_family,
    residual_order_type,
)

logger = logging.getLogger(__name__)

_Identity = Tuple[str, Tuple[int, ...]]


def _residual_slots(slots: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    swapped = list(slots)
    swapped[k - 1], swapped[-1] = swapped[-1], swapped[k - 1]
    return tuple(swapped)


def _check_declared(declared: ConnectiveSpec, expected: ConnectiveSpec) -> None:
    if declared.family is not expected.family:
        raise SignatureError(
            f"Residual '{declared.name}' declared in family {declared.family.value}, expected {expected.family.value}"
        )
    if declared.arity != expected.arity or declared.order_type != expected.order_type:
        raise SignatureError(
            f"Residual '{declared.name}' has arity/order-type mismatch: declared "
            f"{[p.value for p in declared.order_type]}, expected {[p.value for p in expected.order_type]}"
        )


def close_under_residuals(sig: Signature) -> Signature:
    """
    Return the residual closure F*, G* of `sig`.

    Residuals keep the parent's coordinate order. Connectives the input
    already declares as `residual_of` a parent are reused instead of
    generated, which makes the operation idempotent.
    """
    seen_names = set()
    for spec in sig.connectives:
        if spec.name in seen_names:
            raise SignatureError(f"Duplicate connective name '{spec.name}'")
        seen_names.add(spec.name)
        if len(spec.order_type) != spec.arity:
            raise SignatureError(
                f"Connective '{spec.name}' has arity {spec.arity} but order-type of length {len(spec.order_type)}"
            )
        if spec.residual_of is not None:
            parent, k = spec.residual_of
            if parent not in seen_names and parent not in {c.name for c in sig.connectives}:
                raise SignatureError(f"'{spec.name}' is a residual of unknown connective '{parent}'")

    declared: Dict[Tuple[str, int], ConnectiveSpec] = {
        spec.residual_of: spec for spec in sig.connectives if spec.residual_of is not None
    }
    aliases = dict(sig.aliases)

    members: List[ConnectiveSpec] = []
    identity_of: Dict[str, _Identity] = {}
    by_identity: Dict[_Identity, ConnectiveSpec] = {}
    links: List[Tuple[str, int, str]] = []

    queue = deque()
    for spec in sig.primitives:
        ident = (spec.name, tuple(range(spec.arity + 1)))
        identity_of[spec.name] = ident
        by_identity[ident] = spec
        members.append(spec)
        queue.append(spec)

    while queue:
        spec = queue.popleft()
        base, slots = identity_of[spec.name]
        for k in range(1, spec.arity + 1):
            ident = (base, _residual_slots(slots, k))
            existing = by_identity.get(ident)
            if existing is None:
                expected = ConnectiveSpec(
                    name=aliases.get(f"{spec.name}.{k}", default_residual_name(spec, k)),
                    family=residual_family(spec, k),
                    arity=spec.arity,
                    order_type=residual_order_type(spec, k),
                    residual_of=(spec.name, k),
                )
                user = declared.get((spec.name, k))
                if user is not None:
                    _check_declared(user, expected)
                    expected = user
                if expected.name in identity_of:
                    raise SignatureError(f"Duplicate connective name '{expected.name}'")
                identity_of[expected.name] = ident
                by_identity[ident] = expected
                members.append(expected)
                queue.append(expected)
                existing = expected
            links.append((spec.name, k, existing.name))

    orphans = [s.name for s in sig.connectives if s.name not in identity_of]
    if orphans:
        raise SignatureError(f"Declared residuals do not match any closure member: {orphans}")

    logger.info(
        "[signature] closed '%s': %d primitive, %d total connectives",
        sig.name, len(sig.primitives), len(members),
    )
    return Signature(
        name=sig.name,
        connectives=tuple(members),
        aliases=tuple(sorted(aliases.items())),
        links=tuple(sorted(links)),
        closed=True,
    )
