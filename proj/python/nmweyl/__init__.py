"""Python front end for the nmweyl C++ library.

Series come back as dicts {(weight tuple, q-degree): int}; weights are
tuples of fundamental-weight coordinates.
"""

import json

from ._nmweyl import EFamily as _EFamily, NotStabilized, qbg_dot, run_cli, verify_json

__all__ = ["EFamily", "NotStabilized", "qbg_dot", "run_cli", "verify", "parse_series"]


def parse_series(text):
    data = json.loads(text) if isinstance(text, str) else text
    return {(tuple(t["wt"]), t["q"]): int(t["c"]) for t in data["terms"]}


class EFamily:
    def __init__(self, cartan="A1"):
        self._f = _EFamily(cartan)

    @property
    def rank(self):
        return self._f.rank

    @property
    def cartan(self):
        return self._f.cartan

    def e(self, weight, qmax=8):
        return parse_series(self._f.e_json(list(weight), qmax))

    def dual(self, weight, qmax=8):
        return parse_series(self._f.dual_json(list(weight), qmax))

    def norm(self, weight):
        return {q: c for (_, q), c in parse_series(self._f.norm_json(list(weight))).items()}

    def m_coeff(self, lam, mu, qmax=6):
        raw = json.loads(self._f.m_coeff_json(list(lam), list(mu), qmax))
        as_q = lambda s: {q: c for (_, q), c in parse_series(s).items()}
        return {"from_dual": as_q(raw["from_dual"]), "from_pairing": as_q(raw["from_pairing"]),
                "agree": raw["agree"]}

    def lower_set(self, weight):
        return [tuple(w) for w in self._f.lower_set(list(weight))]


def verify(suite, cartan="A1", box=2, qmax=4, lam=(), pairing=False):
    return json.loads(verify_json(suite, cartan, box, qmax, list(lam), pairing))
