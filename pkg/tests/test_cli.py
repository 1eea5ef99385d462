import io
import subprocess
import sys

import pytest

from triplecover import cli
from triplecover.cover import CoverData
from triplecover.errors import CoverFileError, SmallCharacteristic, UnknownVariable

from .strategies import F7, QQ

FIXTURES = [
    "universal_q.cover",
    "cube_roots_f7.cover",
    "double_f7.cover",
    "fat_f5.cover",
    "family_st_f5.cover",
]


def run(argv):
    out = io.StringIO()
    code = cli.run_command(argv, out)
    return code, out.getvalue()


# cover files -----------------------------------------------------------------

@pytest.mark.parametrize("name", FIXTURES)
def test_cover_file_roundtrip(name, covers_dir):
    cover = cli.load_cover(str(covers_dir / name))
    text = cli.format_cover(cover)
    assert cli.parse_cover_text(text) == cover
    # and printing is idempotent on canonical form
    assert cli.format_cover(cli.parse_cover_text(text)) == text


def test_load_universal(covers_dir):
    cover = cli.load_cover(str(covers_dir / "universal_q.cover"))
    assert cover == CoverData.universal(QQ)


def test_load_simple_family():
    text = "field = Fp:7\nvars = s, t\na = s\nb = 1\nc = t\nd = 0\n"
    cover = cli.parse_cover_text(text)
    assert cover.field == F7
    assert cover.base_vars == ("s", "t")


def test_small_characteristic_propagates():
    text = "field = Fp:3\nvars =\na = 0\nb = 0\nc = 0\nd = 0\n"
    with pytest.raises(SmallCharacteristic):
        cli.parse_cover_text(text)


def test_unknown_variable_propagates():
    text = "field = Q\nvars = s\na = s + q\nb = 0\nc = 0\nd = 0\n"
    with pytest.raises(UnknownVariable):
        cli.parse_cover_text(text)


def test_file_errors_carry_line_numbers():
    with pytest.raises(CoverFileError) as err:
        cli.parse_cover_text("field = Q\nvars =\nbogus\n")
    assert err.value.line == 3
    with pytest.raises(CoverFileError) as err:
        cli.parse_cover_text("field = Q\nvars =\na = 0\nb = 0\nc = 0\nd = (1\n")
    assert err.value.line == 6
    with pytest.raises(CoverFileError) as err:
        cli.parse_cover_text("field = Q\nvars =\na = 0\nb = 0\nc = 0\n")
    assert err.value.line is None  # missing key
    with pytest.raises(CoverFileError) as err:
        cli.parse_cover_text("field = Q\nfield = Q\nvars =\na=0\nb=0\nc=0\nd=0\n")
    assert err.value.line == 2
    with pytest.raises(CoverFileError) as err:
        cli.parse_cover_text("field = R7\nvars =\na=0\nb=0\nc=0\nd=0\n")
    assert err.value.line == 1


def test_comments_and_blank_lines_ignored():
    text = "# hello\n\nfield = Fp:5  # inline\nvars =\na = 1\nb = 0\nc = 0\nd = 0\n"
    cover = cli.parse_cover_text(text)
    assert cover.coefficients_at({}) == (1, 0, 0, 0)


# commands ---------------------------------------------------------------------

def test_verify_universal(covers_dir):
    code, text = run(["verify", str(covers_dir / "universal_q.cover")])
    assert code == 0
    assert "result: PASS (8/8)" in text
    assert "section cubic = -1/6 * model cubic" in text


def test_verify_specialized_cover(covers_dir):
    code, text = run(["verify", str(covers_dir / "family_st_f5.cover")])
    assert code == 0
    assert "result: PASS" in text


def test_fibers_point_output(covers_dir):
    code, text = run(["fibers", str(covers_dir / "cube_roots_f7.cover"), "--all"])
    assert code == 0
    assert text == (
        "point - | class=Unramified fat=no |X|=3 |Z|=3 bijection=ok lines=ok "
        "X=[(1,1) (2,4) (4,2)] Z=[[1:1] [1:2] [1:4]]\n"
    )


def test_fibers_all_family(covers_dir):
    code, text = run(["fibers", str(covers_dir / "family_st_f5.cover"), "--all"])
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 25
    assert lines[0].startswith("point s=0,t=0 | class=FatTriple fat=yes |X|=1 |Z|=6")


def test_fibers_rejects_rational_base(covers_dir):
    code, _ = run(["fibers", str(covers_dir / "universal_q.cover"), "--all"])
    assert code == 2


def test_fibers_rejects_huge_enumeration(tmp_path):
    spec = tmp_path / "big.cover"
    spec.write_text(
        "field = Fp:101\nvars = x, y, z3\na = x\nb = y\nc = z3\nd = 0\n",
        encoding="utf-8",
    )
    code, _ = run(["fibers", str(spec), "--all"])
    assert code == 2  # 101^3 > 10^6


def test_resolve_output(covers_dir):
    code, text = run(
        ["resolve", str(covers_dir / "cube_roots_f7.cover"), "--dir", "2:1"]
    )
    assert code == 0
    assert "resolved: z=2, w=4" in text
    assert "jacobian rank: 2" in text
    assert "graph residuals: 0, 0, 0" in text


def test_resolve_rejects_off_cubic(covers_dir):
    code, _ = run(["resolve", str(covers_dir / "cube_roots_f7.cover"), "--dir", "3:1"])
    assert code == 2


def test_psi_output(covers_dir):
    code, text = run(["psi", str(covers_dir / "double_f7.cover"), "--fiber", "5,0"])
    assert code == 0
    assert text == "psi(z=5, w=0) = [0:1]\n"
    code, text = run(["psi", str(covers_dir / "fat_f5.cover"), "--fiber", "0,0"])
    assert code == 0
    assert "indeterminate" in text


def test_sigma_output(covers_dir):
    code, text = run(["sigma", str(covers_dir / "universal_q.cover")])
    assert code == 0
    assert "scale: -1/6" in text


def test_classify_output(covers_dir):
    code, text = run(
        ["classify", str(covers_dir / "family_st_f5.cover"), "--point", "s=0,t=0"]
    )
    assert code == 0
    assert "class: FatTriple" in text
    assert "fat: yes" in text
    code, text = run(["classify", str(covers_dir / "double_f7.cover")])
    assert code == 0
    assert "class: SimpleDouble" in text


def test_demo_output():
    code, text = run(["demo", "quadric-cone", "--p", "5"])
    assert code == 0
    assert "|X| = 181" in text
    assert "census: PASS" in text
    assert "smoothness: PASS" in text


def test_usage_errors_exit_2(covers_dir):
    assert run(["nonsense"])[0] == 2
    assert run(["classify", "/does/not/exist.cover"])[0] == 2
    assert run(["fibers", str(covers_dir / "cube_roots_f7.cover"), "--point", "s=1"])[0] == 2
    assert (
        run(["resolve", str(covers_dir / "cube_roots_f7.cover"), "--dir", "0:0"])[0] == 2
    )


def test_missing_point_values_rejected(covers_dir):
    code, _ = run(["classify", str(covers_dir / "family_st_f5.cover"), "--point", "s=1"])
    assert code == 2


def test_determinism_three_runs(covers_dir):
    commands = [
        ["verify", str(covers_dir / "universal_q.cover")],
        ["fibers", str(covers_dir / "family_st_f5.cover"), "--all"],
        ["demo", "quadric-cone", "--p", "5"],
    ]
    for argv in commands:
        outputs = {run(argv)[1] for _ in range(3)}
        assert len(outputs) == 1


def test_module_entry_point(covers_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "triplecover", "psi",
         str(covers_dir / "cube_roots_f7.cover"), "--fiber", "1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "psi(z=1, w=1) = [1:1]\n"


def test_every_operation_reachable_from_a_command():
    operations = {
        "field_make", "parse_poly", "evaluate",
        "quadrics", "determinantal_matrix", "minors_report", "normal_form",
        "multiply", "trace", "cubic", "cubic_by_elimination", "section_cubic",
        "is_fat_point", "jacobian_rank", "quadric_residuals",
        "graph_residuals", "on_cubic_locus", "graph_to_cubic_point",
        "cubic_to_graph_point", "resolve_point", "line_map", "line_map_oracle",
        "cover_fiber", "cubic_fiber", "fiber_report", "cross_identities",
        "ramification_class", "branch_discriminant", "root_multiplicity",
        "cone_census", "smoothness_probe", "projective_points", "matrix_rank",
    }
    reachable = set()
    for ops in cli.COMMAND_OPERATIONS.values():
        reachable.update(ops)
    assert operations <= reachable
