"""Plain-text renderings written next to rules files."""
from typing import List

from kernel import InceptionRule
from .translate import RuleGroup, Translation


def render_rule_tree(rule: InceptionRule) -> str:
    """The rule and every contract rule below it, each as a proof-tree figure."""
    blocks = []
    for r in rule.closure():
        blocks.append(f"[{r.name}] depth {r.depth}\n{r.render()}")
    return "\n\n".join(blocks)


def render_mapping(translation: Translation) -> str:
    rows = [("scope", "variable", "metavariable", "sort")]
    rows += [(e.scope, e.variable, e.metavariable, e.sort.value) for e in translation.mapping]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_groups(groups: List[RuleGroup]) -> str:
    out = []
    for group in groups:
        out.append(f"# {group.axiom}")
        for translation in group.translations:
            out.append(render_rule_tree(translation.rule))
            out.append(render_mapping(translation))
    return "\n\n".join(out) + "\n"
