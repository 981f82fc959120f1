from .measure import CutMeasure, cut_measure
from .substitution import (
    applied_rule, contract_conclusions, metavar_prefix, substitute_application, substituted_bindings,
)
from .witness import (
    BridgeSupply, Push, RebuildEvent, WitnessBuilder, allowed_at, allowed_rules, chain, cut, rebuild_witness,
)
from .principal import reduce_principal
from .parametric import ParametricPush, push_cut
from .eliminate import CutEliminator, EliminationResult, ReductionRecord, eliminate_all_cuts, uppermost_cut
from .generate import cut_sites, generate_cut_corpus, idexp, insert_random_cut

__all__ = [
    "CutMeasure", "cut_measure",
    "applied_rule", "contract_conclusions", "metavar_prefix", "substitute_application", "substituted_bindings",
    "BridgeSupply", "Push", "RebuildEvent", "WitnessBuilder", "allowed_at", "allowed_rules", "chain", "cut",
    "rebuild_witness",
    "reduce_principal",
    "ParametricPush", "push_cut",
    "CutEliminator", "EliminationResult", "ReductionRecord", "eliminate_all_cuts", "uppermost_cut",
    "cut_sites", "generate_cut_corpus", "idexp", "insert_random_cut",
]
