"""
End-to-end tests of the proxalg command line.
"""
import shutil

import pytest

from proxalg.core.config import Settings
from proxalg.main import EXIT_OP_DOMAIN, EXIT_PARSE, EXIT_RANGE, main
from proxalg.services.report_renderer import parse_kv
from tests.helpers import FIXTURES

pytestmark = pytest.mark.integration

TABLE1 = str(FIXTURES / "table1.space")
TABLE2 = str(FIXTURES / "table2.space")


def run(capsys, *argv, settings=None):
    code = main(list(argv), settings=settings)
    return code, capsys.readouterr().out


def failing_claims(entries: dict[str, str]) -> set[str]:
    return {
        value.split()[0]
        for key, value in entries.items()
        if key.startswith("check.") and key.count(".") == 1 and value.endswith(" fails")
    }


# ============================================================================
# approx
# ============================================================================

class TestApprox:
    """The approx subcommand."""

    def test_region_a(self, capsys):
        code, out = run(capsys, "approx", "--space", TABLE1, "--region", "2,1", "2,2", "3,2", "3,3", "--format", "kv")
        entries = parse_kv(out)
        assert code == 0
        assert entries["upper"] == "x21 x22 x23 x24 x32 x33 x54 x55"
        assert entries["lower"] == ""

    def test_region_b(self, capsys):
        code, out = run(capsys, "approx", "--space", TABLE2, "--region", "2,3", "3,2", "--format", "kv")
        assert code == 0
        assert parse_kv(out)["upper"] == "x00 x14 x23 x32 x41"

    def test_text_output_is_deterministic(self, capsys):
        argv = ("approx", "--space", TABLE2, "--region", "2,3", "3,2")
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        assert first[1].startswith("Q(A) = {(174,117,255), (145,145,230)}")

    def test_point_out_of_range(self, capsys):
        code, _ = run(capsys, "approx", "--space", TABLE1, "--region", "0,0")
        assert code == EXIT_RANGE

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "broken.space"
        path.write_text("1 2 1 0\n0 0 5\n0 1 six\n")
        code = main(["approx", "--space", str(path), "--region", "0,0"])
        assert code == EXIT_PARSE
        assert f"{path}:3:" in capsys.readouterr().err

    def test_no_space_given(self, capsys):
        code, _ = run(capsys, "approx", "--region", "0,0")
        assert code == EXIT_PARSE


# ============================================================================
# classify
# ============================================================================

class TestClassify:
    """The classify subcommand."""

    def test_monoid(self, capsys):
        code, out = run(capsys, "classify", "--space", TABLE1, "--op", "min", "--region", "2,1", "2,2", "3,2", "3,3")
        assert code == 0
        assert out.splitlines()[0] == "commutative approximately monoid, identities x33 x54 x55"

    def test_group(self, capsys):
        code, out = run(capsys, "classify", "--space", TABLE2, "--op", "modadd:5", "--region", "2,3", "3,2")
        assert code == 0
        assert out.splitlines()[0] == "commutative approximately group, identity x00, inverses x23<->x32"

    def test_not_a_groupoid(self, capsys):
        code, out = run(
            capsys, "classify", "--space", TABLE1, "--op", "min", "--region", "1,2", "2,1", "--format", "kv"
        )
        entries = parse_kv(out)
        assert code == 1
        assert entries["failed_axiom"] == "closure"
        assert entries["witness.1"] == "closure x12 x21 -> x11"

    def test_max_witnesses(self, capsys):
        code, out = run(
            capsys, "classify", "--space", TABLE1, "--op", "min", "--region", "1,2", "2,1",
            "--format", "kv", "--max-witnesses", "1",
        )
        assert code == 1
        assert parse_kv(out)["witnesses.count"] == "1"

    def test_op_domain_error(self, capsys):
        code, _ = run(capsys, "classify", "--space", TABLE1, "--op", "modadd:5", "--region", "2,1")
        assert code == EXIT_OP_DOMAIN

    def test_bad_op_spec(self, capsys):
        code, _ = run(capsys, "classify", "--space", TABLE1, "--op", "max", "--region", "2,1")
        assert code == EXIT_PARSE


# ============================================================================
# audit
# ============================================================================

class TestAudit:
    """The audit subcommand."""

    @pytest.mark.slow
    def test_random_space(self, capsys):
        code, out = run(capsys, "audit", "--random", "2", "3", "3", "7", "--trials", "200", "--format", "kv")
        entries = parse_kv(out)
        # Six points over three values always share a description.
        assert code == 1
        assert failing_claims(entries) <= {"proximity.singleton_identity", "description.intersection_equality"}
        assert "upper.union holds" in entries.values()
        assert "lower.intersection holds" in entries.values()
        assert entries["prng"] == "numpy.PCG64"
        assert entries["seed"] == "0"

    def test_shared_description(self, capsys, tmp_path):
        path = tmp_path / "twins.space"
        path.write_text("1 2 1 0\n0 0 7\n0 1 7\n")
        code, out = run(capsys, "audit", "--space", str(path), "--format", "kv")
        entries = parse_kv(out)
        assert code == 1
        assert failing_claims(entries) == {"proximity.singleton_identity", "description.intersection_equality"}
        counterexamples = [v for k, v in entries.items() if k.endswith(".counterexample")]
        assert counterexamples == ["A: x00; B: x01", "A: x00; B: x01"]

    def test_large_space_is_sampled(self, capsys):
        code, out = run(capsys, "audit", "--space", TABLE2, "--trials", "50", "--format", "kv")
        entries = parse_kv(out)
        assert "max_points" in entries["notice.1"]
        assert "nearness.self_member holds" in entries.values()
        assert "proximity.symmetry" not in " ".join(entries.values())

    def test_group_claims_on_b(self, capsys):
        code, out = run(
            capsys, "audit", "--space", TABLE2, "--trials", "20", "--op", "modadd:5",
            "--region", "2,3", "3,2", "--format", "kv",
        )
        values = list(parse_kv(out).values())
        assert "subgroup.description_match holds" in values
        assert "group.product_inverse skipped" in values

    def test_bad_trials(self, capsys):
        code, _ = run(capsys, "audit", "--random", "2", "2", "2", "0", "--trials", "0")
        assert code == EXIT_PARSE


# ============================================================================
# reproduce-paper
# ============================================================================

class TestReproducePaper:
    """Both worked examples against the pinned documents."""

    def test_bundled_fixtures(self, capsys):
        code, out = run(capsys, "reproduce-paper")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "Example 1: Φ*A matches (8 points); monoid: PASS"
        assert lines[1] == "Example 2: Φ*B matches (5 points); group: PASS"

    @pytest.mark.parametrize(
        "space_file, old_line, new_line, key",
        [
            ("table1.space", "2 2 102 255 255", "2 2 102 255 254", "space.x22"),
            ("table2.space", "5 5 98 134 172", "5 5 98 134 171", "space.x55"),
        ],
    )
    def test_corrupted_fixture(self, capsys, tmp_path, space_file, old_line, new_line, key):
        for path in FIXTURES.iterdir():
            shutil.copy(path, tmp_path / path.name)
        target = tmp_path / space_file
        text = target.read_text()
        assert old_line in text
        target.write_text(text.replace(old_line, new_line))

        code, out = run(capsys, "reproduce-paper", "--format", "kv", settings=Settings(fixtures_path=str(tmp_path)))
        assert code == 1
        diffs = [v for k, v in parse_kv(out).items() if ".diff." in k]
        expected, got = old_line.split(" ", 2)[2], new_line.split(" ", 2)[2]
        assert f"{key}: expected '{expected}', got '{got}'" in diffs
