"""Full analysis of one poset as a JSON-ready document."""

from __future__ import annotations

import json
from importlib import resources

from .annihilators import acc_chain_profile, ann_family, annihilator_primes, verify_cardinality_bound
from .graphs import (
    INF,
    ZdGraph,
    ann_classes,
    classify_shape,
    clique_number,
    degree,
    diameter,
    gamma,
    gamma_e,
    girth,
)
from .poset import Poset, zero_divisors
from .theorems import check_poset


def analysis_schema() -> dict:
    """JSON Schema for the output of :func:`analysis_document`."""
    text = resources.files(__package__).joinpath("analysis.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _num(x: float) -> int | str:
    return "inf" if x == INF else int(x)


def poset_echo(P: Poset) -> dict:
    return {
        "elements": list(P.labels),
        "relations": [[P.labels[i], P.labels[j]] for i, j in P.cover_pairs()],
    }


def graph_summary(G: ZdGraph) -> dict:
    names = G.names()
    return {
        "order": G.order,
        "size": G.edge_count(),
        "vertices": names,
        "edges": [[names[u], names[v]] for u, v in G.edges()],
        "diameter": _num(diameter(G)) if G.order >= 2 else None,
        "girth": _num(girth(G)),
        "omega": clique_number(G),
        "degrees": [{"vertex": names[v], "degree": degree(G, v)} for v in range(G.order)],
        "shape": classify_shape(G).to_dict(),
    }


def analysis_document(P: Poset) -> dict:
    """Everything computed about ``P``; requires non-zero zero-divisors."""
    G = gamma(P)
    classes = ann_classes(P)
    GE = gamma_e(P, classes)
    fam = ann_family(P)
    primes = annihilator_primes(P)
    bound = verify_cardinality_bound(P)
    chain = acc_chain_profile(P)
    ge = graph_summary(GE)
    ge["classes"] = [
        {
            "representative": P.labels[c.representative],
            "members": P.labels_of(c.members),
            "ann": P.labels_of(c.ann),
        }
        for c in classes
    ]
    return {
        "poset": poset_echo(P),
        "zero_divisors": P.labels_of(zero_divisors(P)),
        "gamma": graph_summary(G),
        "gamma_e": ge,
        "ann_family": [
            {"ann": P.labels_of(e.ann), "witnesses": P.labels_of(e.witnesses), "in_b": e.in_b}
            for e in fam.entries
        ],
        "primes": [P.labels_of(p) for p in primes],
        "omega": clique_number(G),
        "bound": bound.to_dict(),
        "chain": {"length": chain.length, "witness": [P.labels_of(a) for a in chain.witness]},
        "theorems": check_poset(P).to_dict()["verdicts"],
    }


def _set(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def pretty(doc: dict) -> str:
    """Plain-text rendering of :func:`analysis_document` output."""
    out = []
    p = doc["poset"]
    out.append(f"poset: {len(p['elements'])} elements  {' '.join(p['elements'])}")
    out.append("covers: " + (", ".join(f"{a}<{b}" for a, b in p["relations"]) or "(none)"))
    out.append("zero-divisors: " + " ".join(doc["zero_divisors"]))
    for key, title in (("gamma", "Gamma(P)"), ("gamma_e", "Gamma_E(P)")):
        g = doc[key]
        out.append("")
        out.append(f"{title}: |V|={g['order']} |E|={g['size']} diam={g['diameter']} "
                   f"girth={g['girth']} omega={g['omega']}")
        flags = [k for k, v in g["shape"].items() if v is True]
        if g["shape"]["complete_multipartite"] is not None:
            flags.append(f"complete {len(g['shape']['complete_multipartite'])}-partite")
        out.append("  shape: " + (", ".join(flags) or "none"))
        width = max(len(d["vertex"]) for d in g["degrees"])
        for d in g["degrees"]:
            out.append(f"  {d['vertex']:<{width}}  deg {d['degree']}")
    out.append("")
    out.append("classes:")
    for c in doc["gamma_e"]["classes"]:
        out.append(f"  [{c['representative']}] = {_set(c['members'])}  ann = {_set(c['ann'])}")
    out.append("annihilator primes: " + "  ".join(_set(a) for a in doc["primes"]))
    b = doc["bound"]
    out.append(f"bound: |V(Gamma_E)| = {b['v']} <= 2^{b['ann']} - 2 = {b['limit']}"
               + ("  (tight)" if b["tight"] else ""))
    out.append(f"longest annihilator chain: {doc['chain']['length']}")
    out.append("")
    out.append("checks:")
    for name, v in doc["theorems"].items():
        extra = ""
        if v["status"] == "fail":
            extra = "  witness: " + ", ".join(v["witness"])
        elif "reason" in v:
            extra = f"  ({v['reason']})"
        out.append(f"  {name:<24} {v['status']}{extra}")
    return "\n".join(out) + "\n"
