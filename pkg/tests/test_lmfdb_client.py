"""Curve-data client: shipped records, cache behaviour, offline mode."""

import json

import pytest

import onanmoon.lmfdb_client as lc
from onanmoon.cuspforms import CURVES


def test_shipped_labels_need_no_network():
    rec = lc.fetch_curve("11.a2", allow_network=False)
    assert rec["conductor"] == 11
    assert rec["ainvs"] == [0, -1, 1, -10, -20]
    assert rec["torsion_order"] == 5


def test_shipped_curves_match_newform_carriers():
    for rec in lc.SHIPPED_CURVES.values():
        assert tuple(rec["ainvs"]) == CURVES[rec["conductor"]]


def test_curve_ainvs_lookup():
    assert lc.curve_ainvs(15) == (1, 1, 1, -10, -10)
    with pytest.raises(KeyError):
        lc.curve_ainvs(37)


def test_unknown_label_offline_raises():
    with pytest.raises(LookupError):
        lc.fetch_curve("9999.z9", allow_network=False)


def test_network_fetch_is_cached(monkeypatch, tmp_path):
    monkeypatch.setenv("ONAN_CACHE_DIR", str(tmp_path))
    calls = []

    class FakeResponse:
        def raise_for_status(self):
            pass

        def json(self):
            return {"data": [{"lmfdb_label": "37.a1", "conductor": 37,
                              "ainvs": [0, 0, 1, -1, 0]}]}

    def fake_get(url, params=None, timeout=None):
        calls.append(params["lmfdb_label"])
        return FakeResponse()

    import httpx

    monkeypatch.setattr(httpx, "get", fake_get)
    rec = lc.fetch_curve("37.a1")
    assert rec["conductor"] == 37
    assert calls == ["37.a1"]
    # second fetch is served from the on-disk cache, offline
    rec2 = lc.fetch_curve("37.a1", allow_network=False)
    assert rec2 == rec
