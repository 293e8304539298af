"""Suite engine: determinism, hypothesis-respecting shrinking, smoke runs."""

import json

import pytest

from chaincert.certify import (FAIL, INVALID, PASS, CertifyConfig, SUITES,
                               run_suite, shrink_case)
from chaincert.exact.rings import Zmod
from chaincert.io.reports import dump


def test_all_suites_smoke():
    for name in sorted(SUITES):
        report = run_suite(CertifyConfig(name, seed=3, cases=2))
        assert report["ok"], f"{name}: {report['failures']}"


def test_reports_are_byte_identical():
    a = run_suite(CertifyConfig("dold-kan", seed=11, cases=6))
    b = run_suite(CertifyConfig("dold-kan", seed=11, cases=6))
    assert dump(a) == dump(b)
    c = run_suite(CertifyConfig("dold-kan", seed=12, cases=6))
    assert dump(a) != dump(c)


def test_dold_kan_over_zmod6():
    report = run_suite(CertifyConfig("dold-kan", seed=5, cases=6,
                                     ring=Zmod(6)))
    assert report["ok"]


def test_config_guards():
    with pytest.raises(ValueError):
        CertifyConfig("dold-kan", seed=1, cases=0)
    with pytest.raises(ValueError):
        CertifyConfig("dold-kan", seed=1, cases=1, max_rank=9)
    with pytest.raises(ValueError):
        run_suite(CertifyConfig("no-such-suite", seed=1, cases=1))


def test_shrinking_moves_entries_toward_zero():
    # a fake predicate that fails whenever some entry exceeds 4
    case = {"complex": {"degrees": [{"generators": 1, "relations": []},
                                    {"generators": 1, "relations": []}],
                        "differentials": [[[40]]]}}

    def predicate(c):
        entries = c["complex"]["differentials"]
        if not entries:
            return INVALID
        return FAIL if abs(entries[0][0][0]) > 4 else PASS

    shrunk = shrink_case(case, predicate)
    value = shrunk["complex"]["differentials"][0][0][0]
    assert 4 < abs(value) <= 5  # halving stops at the smallest failing value


def test_shrinking_drops_degrees():
    case = {"complex": {"degrees": [{"generators": 1, "relations": []}] * 4,
                        "differentials": [[[0]], [[0]], [[0]]]}}

    def predicate(c):
        return FAIL if len(c["complex"]["degrees"]) >= 2 else PASS

    shrunk = shrink_case(case, predicate)
    assert len(shrunk["complex"]["degrees"]) == 2


def test_shrinking_respects_invalid():
    case = {"value": 8}

    def predicate(c):
        if c["value"] % 2:
            return INVALID
        return FAIL if c["value"] > 2 else PASS

    shrunk = shrink_case(case, predicate)
    assert shrunk["value"] == 4  # 8 -> 4; 4 -> 2 passes, 4 -> 0 passes
