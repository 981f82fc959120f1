import pytest

ray = pytest.importorskip("ray")

from managers import OracleSweep, check_algebras  # noqa: E402
from managers.ray_orchestrator import RayOrchestrator  # noqa: E402
from syntax import parse_inequality  # noqa: E402

pytestmark = pytest.mark.ray

SEED = 11


# ──────────────────────────────────────────────────────────────────────────────
# Ray fixture: a fresh runtime per test; a Ray sweep shuts its own down
# ──────────────────────────────────────────────────────────────────────────────

@pytest.fixture
def orchestrator():
    orch = RayOrchestrator()
    yield orch
    orch.cleanup()


def sweep(sig, text, count, use_ray):
    return OracleSweep(sig, parse_inequality(text, sig), SEED, count, 3, use_ray=use_ray)


# ──────────────────────────────────────────────────────────────────────────────
# Worker tasks
# ──────────────────────────────────────────────────────────────────────────────

class TestWorker:

    def test_remote_task_result_shape(self, orchestrator, modal_sig):
        task = sweep(modal_sig, "dia(p) <= p", 4, True).tasks()[0]
        out = ray.get(check_algebras.remote(task.model_dump()))
        assert len(out["verdicts"]) == 4
        assert set(out["_timing"]) == {"alba_s", "oracle_s"}

    def test_worker_is_stateless_between_calls(self, orchestrator, modal_sig):
        doc = sweep(modal_sig, "dia(p) <= p", 3, True).tasks()[0].model_dump()
        first, second = ray.get([check_algebras.remote(doc), check_algebras.remote(doc)])
        assert first["verdicts"] == second["verdicts"]


# ──────────────────────────────────────────────────────────────────────────────
# Orchestrator
# ──────────────────────────────────────────────────────────────────────────────

class TestOrchestrator:

    def test_raises_without_tasks(self, orchestrator):
        with pytest.raises(IndexError, match="No oracle tasks provided"):
            orchestrator.distribute_work([])

    def test_distributes_every_slice(self, orchestrator, modal_sig):
        tasks = sweep(modal_sig, "dia(p) <= p", 60, True).tasks()
        outputs = orchestrator.collect(orchestrator.distribute_work(tasks))
        assert [len(out["verdicts"]) for out in outputs] == [25, 25, 10]

    @pytest.mark.parametrize("text", ["dia(p) <= p", "dia(box(p)) <= box(dia(p))"])
    def test_ray_sweep_equals_local_sweep(self, orchestrator, modal_sig, text):
        remote = sweep(modal_sig, text, 30, True).run()
        local = sweep(modal_sig, text, 30, False).run()
        assert [v.to_json() for v in remote.verdicts] == [v.to_json() for v in local.verdicts]
        assert remote.ok
