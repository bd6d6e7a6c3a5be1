import io
import sys
import json
import pytest
from kmk.artifacts import CheckArtifact
from kmk.cli import build_parser, run
from kmk.engines import KostkaEngine
from kmk.series import Poly
from kmk.utils import OutputValidator
from kmk.utils.comparison import Mismatch


def invoke(*argv: str) -> tuple[int, str]:
    stdout = io.StringIO()
    code = run(list(argv), stdout=stdout)

    return code, stdout.getvalue()


class TestMain:
    def test_parser(self):
        args = build_parser().parse_args(["verify", "macdonald", "--algebra", "A1~", "--t-degree", "2", "--depth", "3"])

        assert args.command == "verify"
        assert args.checks == ["macdonald"]
        assert args.t_degree == 2
        assert args.parallel is None

    def test_parser_rejects_unknown_check(self):
        with pytest.raises(SystemExit) as e:
            build_parser().parse_args(["verify", "foo", "--algebra", "A2"])

        assert e.value.code == 2

    def test_kostka_affine(self):
        code, output = invoke("kostka", "--algebra", "A1~", "--weight", "0,0", "--depth", "2")
        document = json.loads(output)

        assert code == 0
        assert OutputValidator().is_valid(document)
        assert document["algebra"] == "A1~"
        assert document["command"] == "kostka"
        assert [row["value"] for row in document["results"][0]["value"]] == [[1], [0, -1, 1]]
        assert document["results"][0]["value"][1]["weight"] == {"labels": [0, 0], "delta": -1}

    def test_kostka_finite(self):
        code, output = invoke("kostka", "--algebra", "A2", "--weight", "1,1", "--depth", "2")
        rows = json.loads(output)["results"][0]["value"]

        assert code == 0
        assert rows[1] == {"weight": {"labels": [0, 0], "delta": 0}, "offset": [1, 1], "value": [0, 1, 1]}

    def test_kostka_depth_zero(self):
        _, output = invoke("kostka", "--algebra", "A2", "--weight", "1,1", "--depth", "0")

        assert [row["value"] for row in json.loads(output)["results"][0]["value"]] == [[1]]

    def test_kostka_by_matrix(self):
        _, by_name = invoke("kostka", "--algebra", "A1~", "--weight", "1,0", "--depth", "4")
        code, by_matrix = invoke(
            "kostka", "--matrix", "2,-2;-2,2", "--kind", "untwisted_affine", "--weight", "1,0", "--depth", "4"
        )

        assert code == 0
        assert json.loads(by_matrix)["results"] == json.loads(by_name)["results"]

    def test_deterministic(self):
        argv = ("hl", "--algebra", "A2", "--weight", "2,1", "--depth", "4")

        assert invoke(*argv) == invoke(*argv)

    def test_parallel(self):
        argv = ("kostka", "--algebra", "A2", "--weight", "2,2", "--depth", "4")

        assert invoke(*argv, "--parallel") == invoke(*argv)

    def test_hl_function(self):
        code, output = invoke("hl", "--algebra", "A1", "--weight", "2", "--depth", "2", "--function")
        result = json.loads(output)["results"][0]

        assert code == 0
        assert result["name"] == "hl_function"
        assert [row["value"] for row in result["value"]] == [[1], [1, -1], [1]]

    def test_string(self):
        code, output = invoke("string", "--algebra", "A1~", "--weight", "1,0", "--order", "2")
        result = json.loads(output)["results"][0]

        assert code == 0
        assert result["value"] == [[1], [0, 0, 1], [0, 0, 1, 0, 1]]

    def test_level0_string(self):
        code, output = invoke("string", "--algebra", "A1~", "--order", "1")

        assert code == 0
        assert json.loads(output)["results"][0]["name"] == "level0_string"

    @pytest.mark.parametrize("argv", [
        ("verify", "level1", "--algebra", "A1~", "--order", "4"),
        ("verify", "dellm", "--algebra", "A2", "--weight", "1,1", "--depth", "3"),
        ("verify", "degrees", "--algebra", "A2~")
    ])
    def test_verify(self, argv):
        code, output = invoke(*argv)
        result = json.loads(output)["results"][0]

        assert code == 0
        assert result["value"] is True
        assert result["mismatch"] is None

    def test_failed_check(self, mocker):
        mismatch = Mismatch(expected=Poly.t(), actual=Poly.zero(), t_degree=1)
        mocker.patch.object(
            KostkaEngine,
            "verify_highest_root",
            return_value=CheckArtifact(False, name="highest-root", mismatch=mismatch)
        )

        code, output = invoke("verify", "highest-root", "--algebra", "A2")
        result = json.loads(output)["results"][0]

        assert code == 1
        assert result["mismatch"]["t_degree"] == 1

    def test_verify_several_checks(self):
        code, output = invoke("verify", "dellm", "multiplicities", "--algebra", "A2", "--weight", "1,1", "--depth", "2")
        results = json.loads(output)["results"]

        assert code == 0
        assert [result["name"] for result in results] == ["dellm", "multiplicities"]
        assert all(result["value"] for result in results)

    def test_verify_several_checks_one_failing(self, mocker):
        mismatch = Mismatch(expected=Poly.t(), actual=Poly.zero())
        mocker.patch.object(
            KostkaEngine,
            "verify_highest_root",
            return_value=CheckArtifact(False, name="highest-root", mismatch=mismatch)
        )

        code, output = invoke(
            "verify", "highest-root", "multiplicities", "--algebra", "A2", "--weight", "1,0", "--depth", "1"
        )

        assert code == 1
        assert [result["value"] for result in json.loads(output)["results"]] == [False, True]

    def test_verify_stops_at_error(self):
        code, output = invoke("verify", "highest-root", "degrees", "--algebra", "A1~")

        assert code == 1
        assert output == ""

    def test_render_failure(self, mocker):
        mocker.patch.object(sys.modules["kmk.cli.main"], "render", side_effect=AttributeError("broken"))

        code, output = invoke("kostka", "--algebra", "A2", "--weight", "1,1", "--depth", "2")

        assert code == 1
        assert output == ""

    @pytest.mark.parametrize("argv,exit_code", [
        (("kostka", "--algebra", "A2", "--weight", "1,a", "--depth", "2"), 2),
        (("kostka", "--algebra", "A2", "--weight", "1,1"), 2),
        (("kostka", "--algebra", "A2", "--weight", "1,1,1", "--depth", "2"), 2),
        (("kostka", "--algebra", "A2", "--weight", "1,1", "--delta", "1", "--depth", "2"), 2),
        (("kostka", "--algebra", "A1~", "--kind", "finite", "--weight", "1,0", "--depth", "2"), 2),
        (("verify", "dellm", "--algebra", "A2", "--weight", "1,1"), 2),
        (("kostka", "--algebra", "X9", "--weight", "1", "--depth", "2"), 3),
        (("kostka", "--matrix", "2,-3;-3,2", "--weight", "0,0", "--depth", "2"), 3),
        (("kostka", "--algebra", "A2", "--weight=-1,1", "--depth", "2"), 2),
        (("hl", "--algebra", "A2", "--weight=2,-1", "--depth", "2"), 2),
        (("string", "--algebra", "A1~", "--weight", "1,0", "--floor=-1,3", "--order", "1"), 2),
        (("verify", "highest-root", "--algebra", "A1~"), 1)
    ])
    def test_errors(self, argv, exit_code):
        code, output = invoke(*argv)

        assert code == exit_code
        assert output == ""

    def test_memory_guard(self, monkeypatch):
        monkeypatch.setenv("KMK_MEMORY_GUARD_MB", "3")

        assert invoke("kostka", "--algebra", "A2", "--weight", "1,1", "--depth", "2")[0] == 4

    def test_config_file(self, tmp_path):
        path = tmp_path / "kmk.yml"
        path.write_text("algebra: A2\ndepth: 2\n")

        code, output = invoke("kostka", "--config", str(path), "--weight", "1,1")

        assert code == 0
        assert len(json.loads(output)["results"][0]["value"]) == 2

    def test_csv(self):
        code, output = invoke("kostka", "--algebra", "A2", "--weight", "1,1", "--depth", "2", "--format", "csv")

        assert code == 0
        assert output == (
            "name,labels,delta,offset,coefficients\n"
            "kostka,1 1,0,0 0,1\n"
            "kostka,0 0,0,1 1,0 1 1\n"
        )

    def test_csv_check(self):
        _, output = invoke("verify", "highest-root", "--algebra", "A2", "--format", "csv")

        assert output == "name,passed,mismatch\nhighest-root,true,\n"

    def test_latex(self):
        code, output = invoke("kostka", "--algebra", "A2", "--weight", "1,1", "--depth", "2", "--format", "latex")

        assert code == 0
        assert output.startswith("% kmk kostka on A2\n")
        assert "K_{\\omega_{1} + \\omega_{2}, \\mu}(t)" in output
        assert "$0$ & $t^{2} + t$ \\\\" in output

    def test_latex_string(self):
        _, output = invoke("string", "--algebra", "A1~", "--weight", "1,0", "--order", "1", "--format", "latex")

        assert "a^{\\Lambda_{0}}_{\\Lambda_{0}}(t) = 1 + (t^{2})q + O(q^{2})" in output
