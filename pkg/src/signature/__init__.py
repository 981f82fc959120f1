from .connectives import RESERVED_NAMES, ConnectiveSpec, Signature
from .closure import close_under_residuals
from .validate import validate_signature
from .io import load_signature, signature_from_json, signature_to_json, write_signature

__all__ = [
    "RESERVED_NAMES", "ConnectiveSpec", "Signature",
    "close_under_residuals", "validate_signature",
    "load_signature", "signature_from_json", "signature_to_json", "write_signature",
]
