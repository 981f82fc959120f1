from collections import Counter
from typing import List

from .connectives import RESERVED_NAMES, Signature, residual_family, residual_order_type


def validate_signature(sig: Signature) -> List[str]:
    """Report every invariant violation with a path; an empty list means well-formed."""
    diagnostics: List[str] = []
    counts = Counter(c.name for c in sig.connectives)
    for name, count in counts.items():
        if count > 1:
            diagnostics.append(f"connectives: duplicate name '{name}' ({count} occurrences)")

    for i, spec in enumerate(sig.connectives):
        where = f"connectives[{i}] '{spec.name}'"
        if spec.name in RESERVED_NAMES:
            diagnostics.append(f"{where}: name is reserved for the lattice language")
        if spec.arity < 0:
            diagnostics.append(f"{where}: negative arity {spec.arity}")
        if len(spec.order_type) != spec.arity:
            diagnostics.append(
                f"{where}: order_type has length {len(spec.order_type)}, arity is {spec.arity}"
            )
        if spec.residual_of is not None:
            parent_name, k = spec.residual_of
            parent = sig.by_name.get(parent_name)
            if parent is None:
                diagnostics.append(f"{where}.residual_of: unknown parent '{parent_name}'")
            elif not 1 <= k <= parent.arity:
                diagnostics.append(f"{where}.residual_of: coordinate {k} outside 1..{parent.arity}")

    if diagnostics or not sig.closed:
        return diagnostics

    residuals = {(h, k): r for h, k, r in sig.links}
    for i, spec in enumerate(sig.connectives):
        where = f"connectives[{i}] '{spec.name}'"
        for k in range(1, spec.arity + 1):
            res_name = residuals.get((spec.name, k))
            if res_name is None:
                diagnostics.append(f"{where}.residual[{k}]: missing")
                continue
            res = sig.by_name.get(res_name)
            if res is None:
                diagnostics.append(f"{where}.residual[{k}]: links to unknown connective '{res_name}'")
                continue
            expected_family = residual_family(spec, k)
            if res.family is not expected_family:
                diagnostics.append(
                    f"{where}.residual[{k}]: '{res_name}' in family {res.family.value}, "
                    f"expected {expected_family.value}"
                )
            expected = residual_order_type(spec, k)
            if res.arity != spec.arity:
                diagnostics.append(f"{where}.residual[{k}]: '{res_name}' has arity {res.arity}")
                continue
            for j, (got, want) in enumerate(zip(res.order_type, expected), start=1):
                if got is not want:
                    diagnostics.append(
                        f"{where}.residual[{k}]: '{res_name}' order_type coordinate {j} is "
                        f"{got.value}, expected {want.value}"
                    )
            if residuals.get((res_name, k)) != spec.name:
                diagnostics.append(f"{where}.residual[{k}]: link back from '{res_name}' is missing")
    return diagnostics

