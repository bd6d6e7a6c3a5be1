import pytest
from kmk.artifacts import ErrorArtifact
from kmk.lie import Weight, from_name
from kmk.structures import Pipeline
from kmk.tasks import StringTask


class TestStringTask:
    @pytest.fixture
    def pipeline(self):
        return Pipeline(datum=from_name("A1~"))

    def test_t_string(self, pipeline):
        task = StringTask(order=2, weight=Weight((1, 0)))

        pipeline.add_task(task)

        result = task.run()

        assert result.name == "t_string"
        assert result.floor == Weight((1, 0))
        assert result.value.to_lists() == [[1], [0, 0, 1], [0, 0, 1, 0, 1]]

    def test_level0_string(self, pipeline):
        task = StringTask(order=1)

        pipeline.add_task(task)

        result = task.run()

        assert result.name == "level0_string"
        assert result.weight is None
        assert result.value.to_lists() == [[1], [0, -1, 1]]

    def test_finite_algebra(self):
        task = StringTask(order=1)
        pipeline = Pipeline(datum=from_name("A2"))

        pipeline.add_task(task)
        pipeline.run()

        assert isinstance(task.output, ErrorArtifact)
