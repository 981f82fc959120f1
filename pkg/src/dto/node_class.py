from enum import Enum, auto


class NodeClass(Enum):
    LEAF = auto()
    DELTA_ADJOINT = auto()
    SLR = auto()
    SRA = auto()
    SRR = auto()

    @property
    def is_skeleton(self) -> bool:
        return self in (NodeClass.DELTA_ADJOINT, NodeClass.SLR)

    @property
    def is_pia(self) -> bool:
        return self in (NodeClass.SRA, NodeClass.SRR)
