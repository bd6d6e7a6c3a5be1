from concurrent import futures
from kmk.artifacts import ErrorArtifact
from kmk.lie import Weight, from_name
from kmk.series import Poly
from kmk.structures import Pipeline
from kmk.tasks import KostkaTask


class TestKostkaTask:
    def test_run(self):
        task = KostkaTask(weight=Weight((1, 1)), depth=2)

        Pipeline(datum=from_name("A2")).add_task(task)

        result = task.run()

        assert result.name == "kostka"
        assert [(row.weight, row.offset, row.value) for row in result.value] == [
            (Weight((1, 1)), (0, 0), Poly.one()),
            (Weight((0, 0)), (1, 1), Poly((0, 1, 1)))
        ]

    def test_affine_offsets(self):
        datum = from_name("A1~")
        task = KostkaTask(weight=datum.zero_weight(), depth=2)

        Pipeline(datum=datum).add_task(task)

        result = task.run()

        assert result.value_at(datum.zero_weight() - datum.delta_weight()) == Poly((0, -1, 1))
        assert result.value[-1].offset == (1, 1)

    def test_parallel(self):
        datum = from_name("A2")

        with futures.ThreadPoolExecutor() as executor:
            task = KostkaTask(weight=Weight((2, 2)), depth=4)
            Pipeline(datum=datum, futures_executor=executor).add_task(task)
            parallel = task.run()

        task = KostkaTask(weight=Weight((2, 2)), depth=4)
        Pipeline(datum=datum).add_task(task)

        assert [row.value for row in parallel.value] == [row.value for row in task.run().value]

    def test_non_dominant_weight(self):
        task = KostkaTask(weight=Weight((-1, 1)), depth=2)
        pipeline = Pipeline(datum=from_name("A2"))

        pipeline.add_task(task)
        pipeline.run()

        assert isinstance(task.output, ErrorArtifact)
