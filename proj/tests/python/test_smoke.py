"""Smoke tests for the python bindings (built module on PYTHONPATH)."""

import math

import minkphi


def test_exact_values():
    assert minkphi.g(2) == 48
    assert minkphi.g(4) == 23040
    assert minkphi.h(1) == 48
    assert minkphi.h(2) == 11520
    assert minkphi.g_exponents(2) == {2: 4, 3: 1}


def test_phi():
    assert minkphi.phi(1) == 6
    assert minkphi.phi(24) == 210
    assert minkphi.phi(48) == 420
    bulk = minkphi.phi_bulk(24)
    assert bulk[16] == 120
    assert bulk[20] == 150
    assert minkphi.euler_phi(420) == 96
    assert minkphi.phi_search_bound(4) == (35, 1)


def test_primes():
    assert minkphi.nth_prime(21) == 73
    assert minkphi.prime_count(100) == 25
    assert minkphi.primorial(13) == 30030


def test_enclosures():
    lo, hi = minkphi.k_enclosure()
    assert 0.533821 < lo <= hi < 0.533822
    lo, hi = minkphi.log_g(2)
    assert lo <= math.log(48) <= hi
    b = minkphi.theorem1_bounds(1000)
    lg = minkphi.log_g(1000)
    assert b["main"][0] + b["lower"][0] <= lg[0] <= lg[1] <= b["main"][1] + b["upper"][1]


def test_oracle():
    assert minkphi.gl_order(2, 3) == 48
    assert minkphi.gsp_order(2, 3) == 103680
    assert minkphi.g_by_gcd(2, 100) == 48


def test_campaign():
    names = minkphi.campaign_names()
    assert "theorem1" in names and "phi_loglog" in names
    summary = minkphi.run_campaign("theorem1", 2, 150)
    assert summary["ok"]
    assert summary["holds"] == 149
    assert summary["fails"] == 0
