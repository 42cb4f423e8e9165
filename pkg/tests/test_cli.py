from quasihopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_fixture(capsys):
    code, out = run(capsys, "verify", "--fixture", "h2", "--format", "machine")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("CHECK")]
    assert lines == sorted(lines)
    assert all(" PASS" in l for l in lines)


def test_verify_requires_one_source(capsys, tmp_path):
    code, _ = run(capsys, "verify")
    assert code == 2
    p = tmp_path / "h.qha"
    p.write_text("field gaussian\ndim 1\nbasis 1\n")
    code, _ = run(capsys, "verify", str(p), "--fixture", "h2")
    assert code == 2


def test_parse_error_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.qha"
    p.write_text("field gaussian\ndim 2\nbasis 1 g\nmult\n0 0 0 zebra\n")
    code, _ = run(capsys, "verify", str(p))
    assert code == 3


def test_double_emit_and_reverify(capsys, tmp_path):
    out_path = tmp_path / "d.qha"
    code, _ = run(capsys, "double", "--fixture", "h2", "--emit", str(out_path))
    assert code == 0
    code, out = run(capsys, "verify", str(out_path), "--format", "machine")
    assert code == 0
    assert "CHECK pentagon PASS" in out


def test_fixture_emit_round_trip(capsys, tmp_path):
    p = tmp_path / "k.qha"
    code, _ = run(capsys, "fixture", "klein_xy", "--emit", str(p))
    assert code == 0
    code, _ = run(capsys, "verify", str(p))
    assert code == 0
    # emitting again through the CLI reproduces the same bytes
    text1 = p.read_text()
    code, out = run(capsys, "fixture", "klein_xy")
    assert out == text1


def test_analyze(capsys):
    code, out = run(capsys, "analyze", "--fixture", "h2", "--format", "machine")
    assert code == 0
    assert "INFO involutory yes" in out
    assert "INFO trace 2" in out
    assert "INFO canonical-pivotal 1*g" in out


def test_failing_check_exit_code(capsys, tmp_path):
    from quasihopf.exactfield import gaussian
    from quasihopf.fixtures import h2
    from quasihopf.serialize import emit_structure

    H = h2(gaussian())
    broken = H.replace(alpha=H.unit_t(1))
    p = tmp_path / "broken.qha"
    p.write_text(emit_structure(broken))
    code, out = run(capsys, "verify", str(p), "--format", "machine")
    assert code == 1
    assert "CHECK antipode-zigzag FAIL" in out


def test_dual_commands(capsys):
    code, out = run(capsys, "dual", "verify", "--fixture", "h2",
                    "--format", "machine")
    assert code == 0
    code, out = run(capsys, "dual", "integrals", "--fixture", "h2")
    assert code == 0
    assert "integral space dimension: 1" in out
    code, out = run(capsys, "dual", "cosemisimple", "--fixture", "h2")
    assert code == 0
    code, out = run(capsys, "dual", "cosemisimple", "--fixture", "c3",
                    "--field", "fp:3")
    assert code == 1


def test_dual_file_round_trip(capsys, tmp_path):
    p = tmp_path / "a.dqha"
    code, _ = run(capsys, "dual", "verify", "--fixture", "h2", "--emit", str(p))
    assert code == 0
    code, _ = run(capsys, "dual", "verify", str(p))
    assert code == 0


def test_zeta_and_bosonize(capsys, tmp_path):
    code, out = run(capsys, "zeta", "--fixture", "h2", "--r", "plus",
                    "--format", "machine")
    assert code == 0
    assert "CHECK morphism-bijective PASS" in out
    p = tmp_path / "b.qha"
    code, _ = run(capsys, "bosonize", "--fixture", "h2", "--r", "minus",
                  "--emit", str(p))
    assert code == 0
    code, _ = run(capsys, "verify", str(p))
    assert code == 0
    code, _ = run(capsys, "zeta", "--fixture", "c2", "--field", "rationals")
    assert code == 2  # no braiding without a fourth root of unity


def test_twist_command(capsys, tmp_path):
    code, _ = run(capsys, "twist", "--fixture", "h2", "--by", "drinfeld")
    assert code == 0


def test_rep_commands(capsys, tmp_path):
    from quasihopf.exactfield import gaussian
    from quasihopf.fixtures import h2
    from quasihopf.repcat import regular_module, trivial_module
    from quasihopf.serialize import emit_module

    H = h2(gaussian())
    m1 = tmp_path / "reg.mod"
    m1.write_text(emit_module(regular_module(H)))
    m2 = tmp_path / "triv.mod"
    m2.write_text(emit_module(trivial_module(H)))
    code, _ = run(capsys, "rep", "verify", "--fixture", "h2", "--module", str(m1))
    assert code == 0
    code, out = run(capsys, "rep", "hom", "--fixture", "h2",
                    "--module", str(m1), "--module2", str(m1))
    assert code == 0
    assert "hom dimension: 2" in out
    code, out = run(capsys, "rep", "dims", "--fixture", "h2", "--module", str(m2))
    assert code == 0
    assert "absolutely simple: True" in out


def test_unknown_fixture(capsys):
    code, _ = run(capsys, "verify", "--fixture", "zzz")
    assert code == 2


def test_unknown_suite(capsys):
    code, _ = run(capsys, "suite", "nope")
    assert code == 2


def test_analyze_reports_pivotal_refusal(capsys):
    code, out = run(capsys, "analyze", "--fixture", "klein_x")
    assert code == 0
    assert "not computed" in out
