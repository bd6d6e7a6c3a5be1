import pytest
from kmk.config import JobConfigValidator
from kmk.errors import ConfigError


class TestJobConfigValidator:
    @pytest.fixture
    def validator(self):
        return JobConfigValidator()

    def test_weight_string(self, validator):
        assert validator.validate({"command": "kostka", "weight": "1, -2"})["weight"] == [1, -2]

    def test_weight_list(self, validator):
        assert validator.validate({"command": "kostka", "weight": [0, 3]})["weight"] == [0, 3]

    def test_matrix_string(self, validator):
        assert validator.validate({"command": "kostka", "matrix": "2,-1;-1,2"})["matrix"] == [[2, -1], [-1, 2]]

    def test_single_check(self, validator):
        assert validator.validate({"command": "verify", "checks": "level1"})["checks"] == ["level1"]

    def test_drops_missing_values(self, validator):
        assert validator.validate({"command": "hl", "depth": None}) == {"command": "hl"}

    @pytest.mark.parametrize("raw", [
        {"command": "kostka", "weight": "1,,2"},
        {"command": "kostka", "weight": "a"},
        {"command": "kostka", "weight": [1, "2"]},
        {"command": "kostka", "matrix": "2,x;-1,2"},
        {"command": "kostka", "depth": -1},
        {"command": "verify", "checks": ["dellm", "foo"]},
        {"command": "verify", "level": 0},
        {"command": "foo"},
        {"command": "kostka", "output_format": "xml"},
        {"command": "kostka", "unknown": 1}
    ])
    def test_malformed(self, validator, raw):
        with pytest.raises(ConfigError):
            validator.validate(raw)
