import json

import pytest

from conftest import BASIC_DOC, MODAL_DOC, closed
from dto import Family, Polarity
from errors import SignatureError
from signature import (
    ConnectiveSpec, Signature, close_under_residuals, load_signature, signature_from_json, signature_to_json,
    validate_signature, write_signature,
)


ONE, DUAL = Polarity.ONE, Polarity.DUAL


class TestClosure:

    def test_unary_pair_closes_to_four(self, basic_sig):
        assert {c.name for c in basic_sig.connectives} == {"dia", "bbox", "box", "bdia"}

    def test_modal_closure_size(self, modal_sig):
        # four unary members plus six for the binary fusion
        assert len(modal_sig.connectives) == 10

    @pytest.mark.parametrize("name, k, residual", [
        ("dia", 1, "bbox"),
        ("bbox", 1, "dia"),
        ("box", 1, "bdia"),
        ("bdia", 1, "box"),
        ("o", 1, "slash"),
        ("o", 2, "bslash"),
        ("slash", 1, "o"),
        ("bslash", 2, "o"),
    ])
    def test_residual_links(self, modal_sig, name, k, residual):
        assert modal_sig.residual(name, k) == residual

    @pytest.mark.parametrize("name, family, order_type", [
        ("bbox", Family.G, (ONE,)),
        ("bdia", Family.F, (ONE,)),
        ("slash", Family.G, (ONE, DUAL)),
        ("bslash", Family.G, (DUAL, ONE)),
    ])
    def test_residual_family_and_order_type(self, modal_sig, name, family, order_type):
        spec = modal_sig.get(name)
        assert spec.family is family
        assert spec.order_type == order_type

    def test_antitone_coordinate_keeps_family(self, negation_sig):
        assert negation_sig.get("btri").family is Family.F
        assert negation_sig.get("blhd").family is Family.G
        assert negation_sig.get("btri").order_type == (DUAL,)

    def test_unaliased_residual_gets_default_name(self, modal_sig):
        # residual of slash in its antitone coordinate has no alias
        assert modal_sig.residual("slash", 2) == "slash.lres.2"

    def test_closure_is_idempotent(self, modal_sig):
        again = close_under_residuals(modal_sig)
        assert {c.name for c in again.connectives} == {c.name for c in modal_sig.connectives}
        assert again.links == modal_sig.links

    def test_closed_signature_validates(self, modal_sig, negation_sig):
        assert validate_signature(modal_sig) == []
        assert validate_signature(negation_sig) == []

    def test_unknown_connective(self, modal_sig):
        with pytest.raises(SignatureError, match="Unknown connective"):
            modal_sig.get("nope")

    def test_residual_needs_closure(self):
        raw = signature_from_json(BASIC_DOC)
        with pytest.raises(SignatureError, match="close the signature"):
            raw.residual("dia", 1)

    def test_declared_residual_is_reused(self):
        doc = {
            "connectives": [
                {"name": "dia", "family": "F", "arity": 1, "order_type": [1]},
                {"name": "mybox", "family": "G", "arity": 1, "order_type": [1], "residual_of": ["dia", 1]},
            ],
        }
        sig = closed(doc)
        assert sig.residual("dia", 1) == "mybox"
        assert len(sig.connectives) == 2

    def test_declared_residual_with_wrong_family(self):
        doc = {
            "connectives": [
                {"name": "dia", "family": "F", "arity": 1, "order_type": [1]},
                {"name": "mybox", "family": "F", "arity": 1, "order_type": [1], "residual_of": ["dia", 1]},
            ],
        }
        with pytest.raises(SignatureError, match="family"):
            closed(doc)


class TestValidation:

    def test_reserved_name(self):
        sig = Signature("bad", (ConnectiveSpec("top", Family.F, 0, ()),))
        assert any("reserved" in d for d in validate_signature(sig))

    def test_order_type_length(self):
        sig = Signature("bad", (ConnectiveSpec("f", Family.F, 2, (ONE,)),))
        assert any("order_type has length 1" in d for d in validate_signature(sig))

    def test_duplicate_names(self):
        spec = ConnectiveSpec("f", Family.F, 1, (ONE,))
        assert any("duplicate" in d for d in validate_signature(Signature("bad", (spec, spec))))

    def test_duplicate_names_rejected_by_closure(self):
        spec = ConnectiveSpec("f", Family.F, 1, (ONE,))
        with pytest.raises(SignatureError, match="Duplicate"):
            close_under_residuals(Signature("bad", (spec, spec)))


class TestSignatureFiles:

    def test_schema_rejects_bad_family(self):
        doc = {"connectives": [{"name": "f", "family": "H", "arity": 1, "order_type": [1]}]}
        with pytest.raises(SignatureError, match="validation failed"):
            signature_from_json(doc)

    def test_json_round_trip_keeps_closure(self, modal_sig):
        again = close_under_residuals(signature_from_json(signature_to_json(modal_sig)))
        assert {c.name for c in again.connectives} == {c.name for c in modal_sig.connectives}

    def test_write_and_load(self, tmp_path):
        path = tmp_path / "modal.json"
        write_signature(signature_from_json(MODAL_DOC), path)
        sig = load_signature(path)
        assert sig.closed
        assert sig.residual("o", 1) == "slash"

    def test_load_without_closure(self, tmp_path):
        path = tmp_path / "basic.json"
        path.write_text(json.dumps(BASIC_DOC))
        assert not load_signature(path, close=False).closed

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        with pytest.raises(SignatureError, match="invalid JSON"):
            load_signature(path)

    @pytest.mark.parametrize("name", ["modal", "star", "mixed"])
    def test_bundled_signatures_validate(self, corpus, name):
        assert validate_signature(corpus.signature(f"signatures/{name}.json")) == []
