from higher_nakayama import verify


def test_suites_pass_at_small_limits():
    report = verify.run(["engine", "bruteforce", "points", "constructions"],
                        n_max=3, loewy_max=3, max_i=3, d_max=4)
    assert report.passed
    assert [s.name for s in report.suites] == ["engine", "bruteforce", "points", "constructions"]
    assert all(s.checks > 0 for s in report.suites)


def test_report_json_shape():
    data = verify.run(["constructions"]).to_json()
    assert data["passed"] is True
    assert set(data["suites"][0]) == {"name", "passed", "checks", "counterexample", "seconds"}


def test_engine_cell_semisimple():
    checks, bad = verify.engine_cell((3, 1, 2))
    assert bad is None and checks > 0
