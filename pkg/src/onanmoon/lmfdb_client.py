"""Offline-first client for elliptic-curve data in the LMFDB.

The four optimal curves whose newforms enter the weight-3/2 series (and the
Selmer/Sha congruences) are shipped with the package, so nothing here needs
the network in normal operation.  Other labels are looked up in the on-disk
cache first and fetched from the LMFDB API only as a last resort.
"""

from __future__ import annotations

import json

from .cache import JsonCache

__all__ = ["SHIPPED_CURVES", "fetch_curve", "curve_ainvs"]

API_URL = "https://www.lmfdb.org/api/ec_curvedata/"

# The Gamma0(N)-optimal curves of the four conductors used by the package.
SHIPPED_CURVES = {
    "11.a2": {
        "lmfdb_label": "11.a2",
        "conductor": 11,
        "ainvs": [0, -1, 1, -10, -20],
        "rank": 0,
        "torsion_order": 5,
    },
    "14.a6": {
        "lmfdb_label": "14.a6",
        "conductor": 14,
        "ainvs": [1, 0, 1, 4, -6],
        "rank": 0,
        "torsion_order": 6,
    },
    "15.a8": {
        "lmfdb_label": "15.a8",
        "conductor": 15,
        "ainvs": [1, 1, 1, -10, -10],
        "rank": 0,
        "torsion_order": 8,
    },
    "19.a2": {
        "lmfdb_label": "19.a2",
        "conductor": 19,
        "ainvs": [0, 1, 1, -9, -15],
        "rank": 0,
        "torsion_order": 3,
    },
}


def fetch_curve(label: str, allow_network: bool = True) -> dict:
    """Curve data for an LMFDB label: shipped table, then disk cache, then
    (optionally) the LMFDB API."""
    if label in SHIPPED_CURVES:
        return dict(SHIPPED_CURVES[label])
    cache = JsonCache("lmfdb_curves.json")
    hit = cache.get(label)
    if hit is not None:
        return json.loads(hit)
    if not allow_network:
        raise LookupError(
            f"curve {label} is not cached and network lookups are disabled"
        )
    import httpx

    resp = httpx.get(
        API_URL,
        params={"lmfdb_label": label, "_format": "json"},
        timeout=30.0,
    )
    resp.raise_for_status()
    rows = resp.json().get("data", [])
    if not rows:
        raise LookupError(f"curve {label} not found in the LMFDB")
    row = rows[0]
    cache.put(label, json.dumps(row))
    cache.flush()
    return row


def curve_ainvs(conductor: int) -> tuple[int, int, int, int, int]:
    """Weierstrass coefficients of the shipped optimal curve of the given
    conductor (11, 14, 15 or 19)."""
    for rec in SHIPPED_CURVES.values():
        if rec["conductor"] == conductor:
            return tuple(rec["ainvs"])
    raise KeyError(conductor)
