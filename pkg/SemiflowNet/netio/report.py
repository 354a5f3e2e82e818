"""report serialises analysis results to deterministic JSON.

Keys are sorted, integers stay numbers, other rationals become
{"num": n, "den": d} and infinity becomes "inf", so there is never a
float in a report and two runs print the same bytes.
"""

import json
import math
from enum import Enum
from fractions import Fraction

from ..semiflows import Semiflow, is_canonical


def to_json_value(value):
    """Converts analysis values to plain JSON values."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value.numerator)
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, float):
        if value == math.inf:
            return "inf"
        raise TypeError("floats never appear in reports: {!r}".format(value))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Semiflow):
        return list(value.weights)
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_json_value(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    raise TypeError("cannot serialise {!r}".format(value))


def emit_report(sections):
    """Returns the JSON text of sections, keys sorted, newline-terminated."""
    return json.dumps(to_json_value(sections), sort_keys=True, indent=2) + "\n"


def _places(net, indices):
    return sorted(net.places[i] for i in indices)


def marking_map(net, marking):
    return {p: int(v) for p, v in zip(net.places, marking)}


def net_section(net, q0=None):
    section = {"name": net.name, "places": list(net.places),
               "transitions": list(net.transitions)}
    if q0 is not None:
        section["initial_marking"] = marking_map(net, q0)
    return section


def semiflows_section(net, generating_set, hilbert_basis=None):
    """One entry per member: weights, canonicity, minimality (when the
    Hilbert basis is known), support and kind.
    """
    entries = []
    for label, member in zip(generating_set.labels, generating_set.members):
        entry = {"label": label,
                 "weights": {p: w for p, w in zip(net.places, member) if w},
                 "canonical": is_canonical(member.weights),
                 "support": _places(net, member.support),
                 "kind": generating_set.kind}
        if hilbert_basis is not None:
            entry["minimal"] = member in hilbert_basis
        entries.append(entry)
    return {"semiring": generating_set.semiring,
            "kind": generating_set.kind, "members": entries}


def bounds_section(report, sperner, optimized):
    return {"mu": report.bounds, "rho": report.rho,
            "sperner_bound": sperner,
            "optimized_sperner_bound": optimized,
            "structurally_bounded": {
                "places": report.structurally_bounded_places,
                "witness": list(report.witness)}}


def _check(result):
    section = {"holds": result.holds}
    if result.witness is not None:
        section["witness"] = result.witness
    if result.note:
        section["note"] = result.note
    return section


def reachability_section(rg, safeness=None, liveness=None, home_state=None,
                         include_states=True):
    section = {"truncated": rg.truncated,
               "state_count": len(rg.states),
               "edge_count": len(rg.edges)}
    if include_states:
        section["states"] = [marking_map(rg.net, q) for q in rg.states]
        section["edges"] = [[s, t, u] for s, t, u in rg.edges]
    if safeness is not None:
        section["safe"] = safeness.safe
        section["max_tokens"] = safeness.max_tokens
        section["deadlocks"] = list(safeness.deadlocks)
    if liveness is not None:
        section["live_transitions"] = liveness.live
        section["liveness"] = {t: _check(v)
                               for t, v in liveness.verdicts.items()}
        section["live"] = liveness.is_live_net
    if home_state is not None:
        section["home_state_q0"] = _check(home_state)
    return section


def certificate_section(net, q, certificate):
    section = {"marking": marking_map(net, q)}
    if certificate is None:
        section["verdict"] = "unknown"
    else:
        section["verdict"] = "unreachable"
        section["generator"] = certificate.label
        section["weights"] = {p: w for p, w in
                              zip(net.places, certificate.generator) if w}
        section["expected"] = certificate.expected
        section["actual"] = certificate.actual
    return section


def decomposition_section(result):
    section = {"target": result.target, "semiring": result.semiring}
    if hasattr(result, "coefficients"):
        section["feasible"] = True
        section["coefficients"] = result.as_dict()
        section["order"] = list(result.generators.labels)
    else:
        section["feasible"] = False
        section["certificate"] = result.certificate
    return section


def sweep_section(rows):
    return [{"template": row.template, "params": row.params,
             "live": row.live, "mutual_exclusion": row.mutual_exclusion,
             "expected": row.expected, "matches": row.matches,
             "states": row.states, "truncated": row.truncated}
            for row in rows]
