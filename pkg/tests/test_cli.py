import io
import json
import math

from polysolve import Polynomial, all_roots_oracle
from polysolve.cli import canonical_json, main

X5M_ROOT = 1.1673039782614187  # bisection oracle for x^5 - x - 1 on [1, 2]


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestSolve:
    def test_trinomial_five_roots(self):
        code, out, err = run_cli(
            "solve", "--trinomial", "5", "1", "1", "1", "--json"
        )
        assert code == 0, err
        doc = json.loads(out)
        assert len(doc["roots"]) == 5
        assert any(
            abs(complex(r["re"], r["im"]) - X5M_ROOT) <= 1e-9 for r in doc["roots"]
        )
        assert doc["status"] == "ok"

    def test_cubic_roots_of_unity(self):
        code, out, err = run_cli("solve", "--coeffs", "-1,0,0,1", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "closed-cubic"
        values = sorted(
            (round(r["re"], 6), round(r["im"], 6)) for r in doc["roots"]
        )
        assert values == [(-0.5, -0.866025), (-0.5, 0.866025), (1.0, 0.0)]

    def test_grim_matches_oracle(self):
        code, out, err = run_cli(
            "solve", "--coeffs", "1,1,0,0,1", "--method", "grim", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        oracle = all_roots_oracle(Polynomial([1, 1, 0, 0, 1]))
        for r in doc["roots"]:
            z = complex(r["re"], r["im"])
            assert min(abs(z - e.root) for e in oracle.roots) <= 1e-8

    def test_method_dispatch_split(self):
        code, out, _ = run_cli("solve", "--coeffs", "-1,0,0,0,0,0,1", "--json")
        assert code == 0
        assert json.loads(out)["method"].startswith("split")

    def test_quadrinomial_series(self):
        code, out, _ = run_cli(
            "solve",
            "--quadrinomial", "7", "2", "0.1", "2", "0.5",
            "--method", "series",
            "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "series-quadrinomial"
        assert doc["status"] == "ok"
        assert len(doc["roots"]) == 1
        assert doc["roots"][0]["residual"] <= 1e-10

    def test_oracle_method(self):
        code, out, _ = run_cli(
            "solve", "--coeffs", "-1,0,1", "--method", "oracle", "--json"
        )
        assert code == 0
        assert json.loads(out)["method"] == "durand-kerner"

    def test_adjacent_method(self):
        code, out, _ = run_cli(
            "solve", "--coeffs", "-1,1,4,1,0,0,0,1", "--method", "adjacent", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "adjacent-septic"
        assert len(doc["roots"]) == 1

    def test_pfq_method_on_trinomial(self):
        code, out, _ = run_cli(
            "solve", "--trinomial", "5", "2", "0.3", "1.1",
            "--method", "pfq", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "pfq-trinomial"
        assert doc["status"] == "ok"
        assert len(doc["roots"]) == 5

    def test_radical_method_on_trinomial(self):
        code, out, _ = run_cli(
            "solve", "--trinomial", "3", "1", "1", "1",
            "--method", "radical", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "radical-trinomial"
        # the real root of x^3 - x - 1 (the plastic number region)
        assert any(
            abs(complex(r["re"], r["im"]) - 1.3247179572447460) <= 1e-9
            for r in doc["roots"]
        )

    def test_usage_error_on_bad_method_shape(self):
        code, out, err = run_cli(
            "solve", "--coeffs", "1,1,1,1,1,1", "--method", "closed"
        )
        assert code == 1
        assert "error" in err

    def test_usage_error_split_odd_degree(self):
        code, out, err = run_cli(
            "solve", "--coeffs", "1,1,0,0,0,1", "--method", "split"
        )
        assert code == 1
        assert "error" in err

    def test_text_output_format(self):
        code, out, _ = run_cli("solve", "--coeffs", "-2,0,1")
        assert code == 0
        assert "method: closed-quadratic" in out
        assert "residual" in out
        assert "status: ok" in out

    def test_divergent_series_partial_exit(self):
        code, out, err = run_cli(
            "solve",
            "--trinomial", "7", "1", "-1", "0.5",
            "--method", "series",
            "--branches", "0",
            "--json",
        )
        assert code == 2
        doc = json.loads(out)
        assert doc["status"] == "partial"


class TestDeterminism:
    def test_identical_invocations_bit_identical(self):
        _, out1, _ = run_cli("solve", "--coeffs", "1,1,0,0,1", "--json")
        _, out2, _ = run_cli("solve", "--coeffs", "1,1,0,0,1", "--json")
        assert out1 == out2

    def test_json_round_trip_byte_identical(self):
        _, out, _ = run_cli("solve", "--trinomial", "5", "1", "1", "1", "--json")
        doc = json.loads(out)
        assert canonical_json(doc) + "\n" == out

    def test_canonical_float_formatting(self):
        text = canonical_json({"x": 1 / 3, "y": 1.0, "z": 12})
        assert text == '{"x":0.33333333333333331,"y":1,"z":12}'
        assert json.loads(text)["x"] == 1 / 3


class TestRDTable:
    def test_reference_rows(self):
        code, out, _ = run_cli("rd-table", "5", "6", "7", "9", "25", "121", "--json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [(r["n"], r["rd_max"], r["r"]) for r in rows] == [
            (5, 1, 4),
            (6, 2, 4),
            (7, 2, 5),
            (9, 4, 5),
            (25, 19, 6),
            (121, 114, 7),
        ]

    def test_rule_row(self):
        code, out, _ = run_cli("rd-table", "8", "--json")
        row = json.loads(out)["rows"][0]
        assert row["r"] == 5  # monotone between the n=7 and n=9 reference rows
        assert row["rd_max"] == 3

    def test_usage_error_small_n(self):
        code, out, err = run_cli("rd-table", "4")
        assert code == 1
        assert "error" in err

    def test_text_table(self):
        code, out, _ = run_cli("rd-table", "5", "6")
        assert "RD(n)max" in out


class TestPFQ:
    def test_z_zero(self):
        code, out, _ = run_cli("pfq", "--upper", "1,2", "--lower", "3", "--z", "0", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["value"]["re"] == 1.0
        assert doc["status"] == "converged"

    def test_exp(self):
        code, out, _ = run_cli("pfq", "--z", "1", "--json")
        doc = json.loads(out)
        assert abs(doc["value"]["re"] - math.e) <= 1e-12
        assert doc["terms_used"] > 1

    def test_divergence_exit_code(self):
        code, out, _ = run_cli(
            "pfq", "--upper", "1,1", "--lower", "2", "--z", "1.5", "--json"
        )
        assert code == 2
        assert json.loads(out)["status"] == "diverged"

    def test_pole_usage_error(self):
        code, out, err = run_cli("pfq", "--upper", "1", "--lower", "-2", "--z", "0.1")
        assert code == 1


class TestResultantAndTschirnhaus:
    def test_resultant_product_formula(self):
        code, out, _ = run_cli("resultant", "-1,1", "1,1", "--json")
        assert code == 0
        doc = json.loads(out)
        assert abs(doc["re"] - 2) <= 1e-12

    def test_resultant_common_root(self):
        code, out, _ = run_cli("resultant", "-1,1", "-1,1", "--json")
        assert abs(json.loads(out)["re"]) <= 1e-12

    def test_tschirnhaus_principal(self):
        code, out, _ = run_cli("tschirnhaus", "-1,0,0,0,0,1", "--json")
        assert code == 0
        doc = json.loads(out)
        w4 = complex(doc["coeffs"][4]["re"], doc["coeffs"][4]["im"])
        w3 = complex(doc["coeffs"][3]["re"], doc["coeffs"][3]["im"])
        assert abs(w4) <= 1e-10
        assert abs(w3) <= 1e-10

    def test_tschirnhaus_degenerate_is_usage_error(self):
        code, out, err = run_cli("tschirnhaus", "-1,-1,0,0,0,1")
        assert code == 1


class TestBasins:
    def test_csv_grid(self):
        code, out, _ = run_cli(
            "solve",
            "--trinomial", "5", "1", "0.5", "1",
            "--plot", "basins",
            "--grid", "-1:1:3,-1:1:3",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "param1,param2,method,status,residual"
        assert len(lines) == 1 + 9
        for line in lines[1:]:
            fields = line.split(",")
            assert len(fields) == 5
            assert fields[3] in {"converged", "diverged", "truncated", "partial"}
