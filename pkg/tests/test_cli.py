"""Command-line surface: commands, exit codes, determinism."""

import subprocess
import sys

import numpy as np
import pytest

from wedgemap.embedding import swap_matrix
from wedgemap.statefile import read_matrix, write_matrix


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "wedgemap", *args], capture_output=True, text=True
    )


def field(stdout, name):
    for line in stdout.splitlines():
        key, _, value = line.partition("=")
        if key.strip() == name:
            return value.strip()
    raise KeyError(name)


@pytest.fixture
def chaotic_file(tmp_path):
    path = str(tmp_path / "chaotic.json")
    write_matrix(path, np.eye(3, dtype=complex) / 3)
    return path


@pytest.fixture
def vertex_file(tmp_path):
    path = str(tmp_path / "vertex.json")
    write_matrix(path, np.diag([1.0, 0.0, 0.0]).astype(complex))
    return path


def test_negativity_chaotic(chaotic_file):
    result = run_cli("negativity", chaotic_file)
    assert result.returncode == 0
    assert float(field(result.stdout, "negativity")) == pytest.approx(1 / 3, abs=1e-6)
    assert field(result.stdout, "entangled") == "true"


def test_negativity_vertex(vertex_file):
    result = run_cli("negativity", vertex_file)
    assert result.returncode == 0
    assert float(field(result.stdout, "negativity")) == pytest.approx(0.5, abs=1e-6)


def test_negativity_output_deterministic(chaotic_file):
    first = run_cli("negativity", chaotic_file)
    second = run_cli("negativity", chaotic_file)
    assert first.stdout == second.stdout


def test_negativity_malformed_state(tmp_path):
    path = str(tmp_path / "bad.json")
    write_matrix(path, np.diag([0.5, 0.4, 0.0]).astype(complex))  # trace 0.9
    result = run_cli("negativity", path)
    assert result.returncode == 2
    assert "TraceNotOne" in result.stderr


def test_negativity_dimension_mismatch(tmp_path):
    path = str(tmp_path / "four.json")
    write_matrix(path, np.eye(4, dtype=complex) / 4)
    result = run_cli("negativity", path)
    assert result.returncode == 3


def test_embed_single_wedge(vertex_file, tmp_path):
    out = str(tmp_path / "embedded.json")
    result = run_cli("embed", vertex_file, "--output", out)
    assert result.returncode == 0
    m = read_matrix(out)
    nonzero = {(i, j): m[i, j] for i in range(9) for j in range(9) if m[i, j] != 0}
    assert nonzero == {(1, 1): 0.5, (3, 3): 0.5, (1, 3): -0.5, (3, 1): -0.5}


def test_embed_extract_round_trip(tmp_path):
    from wedgemap.states import random_mixed

    src = str(tmp_path / "in.json")
    mid = str(tmp_path / "embedded.json")
    back = str(tmp_path / "out.json")
    write_matrix(src, random_mixed(3, 31).mat)
    assert run_cli("embed", src, "--output", mid).returncode == 0
    assert run_cli("extract", mid, "--output", back).returncode == 0
    assert np.max(np.abs(read_matrix(back) - read_matrix(src))) <= 1e-12


def test_embed_output_has_antisymmetric_support(tmp_path):
    from wedgemap.states import random_mixed

    src = str(tmp_path / "random.json")
    out = str(tmp_path / "embedded.json")
    write_matrix(src, random_mixed(3, 63).mat)
    run_cli("embed", src, "--output", out)
    m = read_matrix(out)
    sym = 0.5 * (m + swap_matrix(3) @ m)
    assert np.max(np.abs(sym)) <= 1e-12


def test_embed_diagonal_matches_reference(chaotic_file, tmp_path):
    from wedgemap.verify import embedded_reference_d3

    out = str(tmp_path / "embedded.json")
    run_cli("embed", chaotic_file, "--output", out)
    expected = embedded_reference_d3(np.eye(3) / 3)
    assert np.max(np.abs(read_matrix(out) - expected)) <= 1e-14


def test_extract_rejects_symmetric_input(tmp_path):
    vec = np.zeros(9, dtype=complex)
    vec[1] = vec[3] = 1 / np.sqrt(2)
    path = str(tmp_path / "sym.json")
    write_matrix(path, np.outer(vec, vec.conj()))
    result = run_cli("extract", path, "--output", str(tmp_path / "x.json"))
    assert result.returncode == 2
    assert "NotAntisymmetric" in result.stderr


def test_sweep_contains_center_row(tmp_path):
    result = run_cli("sweep", "--step", str(1 / 3))
    assert result.returncode == 0
    rows = result.stdout.strip().splitlines()
    assert rows[0] == "p1,p2,p3,negativity,neg_root"
    for line in rows[1:]:
        p1, p2, p3, neg, root = (float(x) for x in line.split(","))
        assert p1 + p2 + p3 == pytest.approx(1.0, abs=1e-12)
        assert neg == pytest.approx(abs(root) / 2, abs=1e-15)
        if abs(p1 - 1 / 3) < 1e-9 and abs(p2 - 1 / 3) < 1e-9:
            assert neg == pytest.approx(1 / 3, abs=1e-9)
            break
    else:
        pytest.fail("center grid point missing")


def test_sweep_vertices_at_half_step():
    result = run_cli("sweep", "--step", "0.5")
    values = [float(line.split(",")[3]) for line in result.stdout.strip().splitlines()[1:]]
    assert max(values) == pytest.approx(0.5, abs=1e-12)


def test_sweep_minimum_at_center(tmp_path):
    out = str(tmp_path / "sweep.csv")
    assert run_cli("sweep", "--step", "0.05", "--output", out).returncode == 0
    rows = [line.split(",") for line in open(out).read().strip().splitlines()[1:]]
    negs = [float(r[3]) for r in rows]
    best = rows[int(np.argmin(negs))]
    assert max(abs(float(x) - 1 / 3) for x in best[:3]) <= 0.05
    assert min(negs) >= 1 / 3 - 1e-9


def test_sweep_deterministic_bytes(tmp_path):
    a = str(tmp_path / "a.csv")
    b = str(tmp_path / "b.csv")
    assert run_cli("sweep", "--step", "0.05", "--output", a).returncode == 0
    assert run_cli("sweep", "--step", "0.05", "--output", b).returncode == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_sweep_rejects_bad_step():
    assert run_cli("sweep", "--step", "0.7").returncode == 4
    assert run_cli("sweep", "--step", "0").returncode == 4


def test_verify_exits_zero():
    result = run_cli("verify")
    assert result.returncode == 0, result.stdout + result.stderr
    assert "FAIL" not in result.stdout
