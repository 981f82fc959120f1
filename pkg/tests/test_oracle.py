import pytest
from pydantic import ValidationError

import config
from alba import run_alba
from algebra import OracleVerdict, check_run, enumerate_algebras
from managers import (
    OracleSweep, OracleTask, SweepResult, check_algebras_local, oracle_sweep, ray_orchestrator, run_sweep,
)
from signature import load_signature, signature_to_json
from syntax import parse_inequality


# ============================================================================
# Sweep sizes
# ============================================================================

GOLDEN = ["diamond_box", "fusion_box", "alternating_chain", "star_dia", "mixed_order", "long_chain"]
ALGEBRAS = 200
MAX_SIZE = 4
SEED = 7


# ──────────────────────────────────────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────────────────────────────────────

def golden_axiom(corpus, name):
    case = corpus.case(name)
    return corpus.signature(case.signature), corpus.axiom(case)


def task_for(sig, text, count=3, start=0):
    return OracleTask(signature=signature_to_json(sig), axiom=text, seed=SEED, start=start, count=count, max_size=3)


# ──────────────────────────────────────────────────────────────────────────────
# Sweeps
# ──────────────────────────────────────────────────────────────────────────────

class TestGoldenSweeps:

    @pytest.mark.parametrize("name", GOLDEN)
    def test_no_mismatch(self, corpus, name):
        sig, axiom = golden_axiom(corpus, name)
        result = run_sweep(sig, axiom, SEED, ALGEBRAS, MAX_SIZE, use_ray=False)
        assert len(result.verdicts) == ALGEBRAS
        assert result.ok, result.render()

    def test_sweep_is_deterministic(self, corpus):
        sig, axiom = golden_axiom(corpus, "fusion_box")
        first = run_sweep(sig, axiom, SEED, 30, 3, use_ray=False)
        second = run_sweep(sig, axiom, SEED, 30, 3, use_ray=False)
        assert [v.to_json() for v in first.verdicts] == [v.to_json() for v in second.verdicts]

    def test_timings(self, corpus):
        sig, axiom = golden_axiom(corpus, "fusion_box")
        result = run_sweep(sig, axiom, SEED, 5, 3, use_ray=False)
        assert {"sweep_s", "alba_s", "oracle_s"} <= set(result.timings)


class TestSlicing:

    @pytest.mark.parametrize("count, sizes", [
        (200, [25] * 8),
        (60, [25, 25, 10]),
        (25, [25]),
        (1, [1]),
    ])
    def test_task_sizes(self, modal_sig, count, sizes):
        sweep = OracleSweep(modal_sig, parse_inequality("dia(p) <= p", modal_sig), SEED, count, 3, use_ray=False)
        tasks = sweep.tasks()
        assert [t.count for t in tasks] == sizes
        assert [t.worker for t in tasks] == list(range(len(sizes)))
        assert [t.start for t in tasks] == [25 * i for i in range(len(sizes))]

    def test_empty_sweep(self, modal_sig):
        sweep = OracleSweep(modal_sig, parse_inequality("dia(p) <= p", modal_sig), SEED, 0, 3, use_ray=False)
        assert sweep.tasks() == []
        assert sweep.run().verdicts == []

    def test_slices_concatenate_to_one_sweep(self, modal_sig):
        text = "dia(box(p)) <= box(dia(p))"
        whole = check_algebras_local(task_for(modal_sig, text, count=6))["verdicts"]
        parts = (
            check_algebras_local(task_for(modal_sig, text, count=4))["verdicts"]
            + check_algebras_local(task_for(modal_sig, text, count=2, start=4))["verdicts"]
        )
        assert parts == whole

    def test_missing_ray_falls_back(self, modal_sig, monkeypatch, caplog):
        monkeypatch.setattr(oracle_sweep, "ray", None)
        sweep = OracleSweep(modal_sig, parse_inequality("dia(p) <= p", modal_sig), SEED, 3, 3, use_ray=True)
        assert len(sweep.run().verdicts) == 3
        assert "running the sweep sequentially" in caplog.text

    @pytest.mark.parametrize("fails", [False, True])
    def test_ray_runtime_is_shut_down(self, modal_sig, monkeypatch, fails):
        made = []

        class RecordingOrchestrator:
            def __init__(self):
                self.cleaned = False
                made.append(self)

            def distribute_work(self, tasks):
                return tasks

            def collect(self, futures):
                if fails:
                    raise RuntimeError("worker lost")
                return [check_algebras_local(t) for t in futures]

            def cleanup(self):
                self.cleaned = True

        monkeypatch.setattr(oracle_sweep, "ray", object())
        monkeypatch.setattr(ray_orchestrator, "RayOrchestrator", RecordingOrchestrator)
        sweep = OracleSweep(modal_sig, parse_inequality("dia(p) <= p", modal_sig), SEED, 30, 3, use_ray=True)
        if fails:
            with pytest.raises(RuntimeError, match="worker lost"):
                sweep.run()
        else:
            assert len(sweep.run().verdicts) == 30
        assert [o.cleaned for o in made] == [True]


# ──────────────────────────────────────────────────────────────────────────────
# Worker tasks
# ──────────────────────────────────────────────────────────────────────────────

class TestOracleTask:

    @pytest.mark.parametrize("field, value", [
        ("max_size", 7),
        ("max_size", 1),
        ("count", 0),
        ("seed", -1),
        ("start", -3),
    ])
    def test_validation(self, modal_sig, field, value):
        doc = task_for(modal_sig, "dia(p) <= p").model_dump()
        doc[field] = value
        with pytest.raises(ValidationError):
            OracleTask.model_validate(doc)

    def test_local_check(self, modal_sig):
        out = check_algebras_local(task_for(modal_sig, "dia(p) <= p", count=4))
        assert len(out["verdicts"]) == 4
        assert set(out["_timing"]) == {"alba_s", "oracle_s"}
        for doc in out["verdicts"]:
            assert OracleVerdict(**doc).agrees

    @pytest.mark.parametrize("closed", [True, False])
    def test_worker_closes_the_signature(self, corpus, closed):
        sig = load_signature(corpus.path("signatures/modal.json"), close=closed)
        out = check_algebras_local(task_for(sig, "dia(box(p)) <= box(dia(box(p)))", count=4))
        assert [OracleVerdict(**doc).agrees for doc in out["verdicts"]] == [True] * 4

    def test_task_round_trips_through_a_dict(self, modal_sig):
        task = task_for(modal_sig, "dia(p) <= p")
        assert OracleTask.model_validate(task.model_dump()) == task


# ──────────────────────────────────────────────────────────────────────────────
# Verdicts
# ──────────────────────────────────────────────────────────────────────────────

class TestVerdicts:

    def test_every_snapshot_agrees(self, modal_sig):
        run = run_alba(parse_inequality("dia(box(p)) <= box(dia(p))", modal_sig), modal_sig)
        for alg in enumerate_algebras(modal_sig, 3, SEED, 10):
            verdict = check_run(run, alg)
            assert verdict.agrees, verdict.mismatches
            assert verdict.to_json()["algebra"] == alg.label

    def test_split_axiom(self, modal_sig):
        run = run_alba(parse_inequality("dia(p | q) <= r", modal_sig), modal_sig)
        for alg in enumerate_algebras(modal_sig, 3, SEED, 5):
            assert check_run(run, alg).agrees

    def test_budget_skips(self, modal_sig, monkeypatch):
        run = run_alba(parse_inequality("dia(p) <= p", modal_sig), modal_sig)
        alg = next(iter(enumerate_algebras(modal_sig, 3, SEED, 1)))
        monkeypatch.setattr(config, "ORACLE_BUDGET", 1)
        verdict = check_run(run, alg)
        assert verdict.skipped
        assert not verdict.agrees
        result = SweepResult("dia(p) <= p", [verdict])
        assert result.ok
        assert result.skipped == [verdict]

    def test_render(self):
        good = OracleVerdict("a0", 2, True, True)
        bad = OracleVerdict("a1", 3, True, False, ["0:ackermann#2"])
        result = SweepResult("dia(p) <= p", [good, bad])
        lines = result.render().splitlines()
        assert lines[0] == "dia(p) <= p: 2 algebra(s), 1 mismatch(es), 0 skipped"
        assert lines[1].endswith("ok")
        assert "MISMATCH 0:ackermann#2" in lines[2]
        assert not result.ok
