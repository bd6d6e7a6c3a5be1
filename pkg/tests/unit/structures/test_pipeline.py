import logging
import pytest
from kmk.artifacts import CheckArtifact, ErrorArtifact
from kmk.errors import ConfigError
from kmk.lie import from_name
from kmk.structures import Pipeline
from kmk.tasks import BaseTask
from tests.mocks.mock_task import MockTask


class TestPipeline:
    @pytest.fixture
    def pipeline(self):
        return Pipeline(datum=from_name("A2"))

    def test_init(self, pipeline):
        assert pipeline.datum.label == "A2"
        assert pipeline.first_task() is None
        assert pipeline.last_task() is None
        assert pipeline.futures_executor is None

    def test_tasks_order(self, pipeline):
        first_task = MockTask()
        second_task = MockTask()
        third_task = MockTask()

        pipeline.add_task(first_task)
        pipeline.add_task(second_task)
        pipeline.add_task(third_task)

        assert pipeline.first_task().id is first_task.id
        assert pipeline.tasks[1].id is second_task.id
        assert pipeline.tasks[2].id is third_task.id
        assert pipeline.last_task().id is third_task.id

    def test_add_task(self, pipeline):
        first_task = MockTask()
        second_task = MockTask()

        pipeline.add_tasks(first_task, second_task)

        assert first_task.structure is pipeline
        assert second_task.structure is pipeline
        assert first_task.child_ids == [second_task.id]
        assert first_task.children == [second_task]

    def test_run(self, pipeline):
        task = MockTask()

        pipeline.add_task(task)

        assert task.state == BaseTask.State.PENDING

        result = pipeline.run()

        assert result is task
        assert isinstance(task.output, CheckArtifact)
        assert task.state == BaseTask.State.FINISHED
        assert pipeline.is_finished()
        assert pipeline.outputs() == [task.output]

    def test_stops_at_error(self, pipeline):
        failing = MockTask(error=ConfigError("bad input"))
        never = MockTask()

        pipeline.add_tasks(failing, never)
        pipeline.run()

        assert isinstance(failing.output, ErrorArtifact)
        assert failing.output.exit_code == 2
        assert never.output is None
        assert pipeline.finished_tasks() == [failing]

    def test_unexpected_error(self, pipeline):
        task = MockTask(error=RuntimeError("boom"))

        pipeline.add_task(task)
        pipeline.run()

        assert task.output.value == "boom"
        assert task.output.exit_code == 1

    def test_rerun_resets_tasks(self, pipeline):
        task = MockTask()

        pipeline.add_task(task)
        pipeline.run()
        first_output = task.output
        pipeline.run()

        assert task.output is not first_output

    def test_shared_engines(self, pipeline):
        assert pipeline.kostka_engine is pipeline.kostka_engine
        assert pipeline.hall_littlewood_engine.kostka_engine is pipeline.kostka_engine

    def test_affine_string_engine(self):
        pipeline = Pipeline(datum=from_name("A1~"))

        assert pipeline.affine_string_engine.hall_littlewood_engine is pipeline.hall_littlewood_engine

    def test_custom_logger(self):
        logger = logging.getLogger("kmk-test")

        assert Pipeline(datum=from_name("A1"), custom_logger=logger).logger is logger

    def test_default_logger(self, pipeline):
        assert pipeline.logger.name == "kmk"
        assert not pipeline.logger.propagate
