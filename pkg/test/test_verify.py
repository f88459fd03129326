import logging

from src.verify import CHECKS, run_suite, verify_suite


def test_no_trials():
    log = logging.getLogger()
    log.debug('Testing an empty run')

    report = verify_suite(1, 0)
    assert report.results == []
    assert report.ok
    assert report.exit_code == 0
    assert report.as_dict()["ok"] is True


def test_clifford_checks():
    log = logging.getLogger()
    log.debug('Testing a short run of the Clifford checks')

    report = run_suite(1, 3, only="clifford")
    for line in report.summary():
        log.debug(line)
    assert [r.id for r in report.results] == sorted(k for k in CHECKS if k.startswith("clifford"))
    assert report.ok
    assert all(r.passes + r.skips == r.trials for r in report.results)


def test_replay():
    log = logging.getLogger()
    log.debug('Testing a seed replays the same run')

    first = run_suite(7, 2, only="cycles").as_dict()
    second = run_suite(7, 2, only="cycles").as_dict()
    assert first == second
    assert first["ok"]


def test_float_backend():
    log = logging.getLogger()
    log.debug('Testing exact checks are skipped under the float backend')

    report = run_suite(1, 1, "float", only="clifford")
    assert report.results
    assert all(r.skipped for r in report.results)
    assert report.backend == "float"
    assert report.ok


def test_full_suite():
    log = logging.getLogger()
    log.debug('Testing one trial of every check')

    report = run_suite(1, 1)
    failures = [r.id for r in report.results if not r.ok]
    log.debug(f'Failures: {failures}')
    assert not failures


def test_seeded_regressions():
    log = logging.getLogger()
    log.debug('Testing checks that once failed under seed 1')

    for check_id in (
        "relations.orthogonal-family",
        "relations.inversion-involution",
        "metric.distance-oracle",
        "metric.parabolic-focus-limit",
        "metric.conformal-independence",
        "moebius.iwasawa",
    ):
        report = run_suite(1, 100, only=check_id)
        failures = [(r.id, r.failures) for r in report.results if not r.ok]
        log.debug(f'{check_id}: {failures}')
        assert report.results
        assert not failures
