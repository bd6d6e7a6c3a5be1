import pytest
from kmk.config import JobConfig, OutputFormat
from kmk.errors import ConfigError, NotGcmError, ResourceGuardError, UnsupportedTypeError
from kmk.lie import CartanKind, Weight


class TestJobConfig:
    def test_defaults(self):
        job = JobConfig(command="kostka", algebra="A2", memory_guard_mb=256)

        assert job.output_format == OutputFormat.JSON
        assert job.level == 1
        assert not job.parallel

    def test_memory_guard_from_environment(self, monkeypatch):
        monkeypatch.setenv("KMK_MEMORY_GUARD_MB", "8")

        assert JobConfig(command="kostka", algebra="A2").memory_guard_mb == 8

    @pytest.mark.parametrize("kwargs", [
        {"command": "kostka"},
        {"command": "kostka", "algebra": "A2", "matrix": [[2]]},
        {"command": "verify", "algebra": "A2"},
        {"command": "kostka", "algebra": "A2", "checks": ["dellm"]},
        {"command": "verify", "algebra": "A2", "checks": []},
        {"command": "foo", "algebra": "A2"}
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            JobConfig(**kwargs)

    def test_datum_by_name(self):
        assert JobConfig(command="kostka", algebra="A1~").datum().is_affine

    def test_datum_by_matrix(self):
        datum = JobConfig(command="kostka", matrix=[[2, -2], [-2, 2]], kind=CartanKind.UNTWISTED_AFFINE).datum()

        assert datum.is_affine
        assert datum.marks == (1, 1)

    def test_datum_kind_mismatch(self):
        with pytest.raises(ConfigError):
            JobConfig(command="kostka", algebra="A1~", kind=CartanKind.FINITE).datum()

    def test_unsupported_datum(self):
        with pytest.raises(UnsupportedTypeError):
            JobConfig(command="kostka", algebra="X9").datum()
        with pytest.raises(NotGcmError):
            JobConfig(command="kostka", matrix=[[2, 1], [1, 2]]).datum()

    def test_make_weight(self):
        job = JobConfig(command="kostka", algebra="A1~")
        datum = job.datum()

        assert job.make_weight(datum, [1, 0], -2) == Weight((1, 0), -2)
        assert job.make_weight(datum, None) is None

        with pytest.raises(ConfigError):
            job.make_weight(datum, [1, 0, 0])

    def test_delta_needs_affine_algebra(self):
        job = JobConfig(command="kostka", algebra="A2")

        with pytest.raises(ConfigError):
            job.make_weight(job.datum(), [1, 0], 1)

    def test_effective_depth(self):
        string = JobConfig(command="string", algebra="A2~", order=3)
        level1 = JobConfig(command="verify", algebra="A1~", checks=["level1"], order=4)
        kostka = JobConfig(command="kostka", algebra="A1~", depth=5)

        assert string.effective_depth(string.datum()) == 9
        assert level1.effective_depth(level1.datum()) == 8
        assert kostka.effective_depth(kostka.datum()) == 5

    def test_guard(self):
        job = JobConfig(command="kostka", algebra="A2", depth=4, memory_guard_mb=7)

        with pytest.raises(ResourceGuardError):
            job.guard(job.datum())

        JobConfig(command="kostka", algebra="A2", depth=4, memory_guard_mb=8).guard(job.datum())
