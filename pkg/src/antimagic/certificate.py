"""Self-contained JSON certificates for shifted labelings.

A certificate records the graph, the claimed shift, and the labels in
canonical edge order, plus derived fields (vertex sums and a validity
flag) so humans can eyeball it. Checking trusts nothing derived: sums
and validity are recomputed from the labels, and stored derived fields
that disagree make the certificate invalid.
"""

from __future__ import annotations

from .errors import AntimagicError, CertificateError
from .graph import build_graph, canonical_edge
from .labeling import EdgeLabeling, Verdict, verify_shifted, vertex_sums


def labeling_to_certificate(f: EdgeLabeling, k: int | None = None) -> dict:
    """Serialize a labeling as a JSON-ready certificate document."""
    if k is None:
        k = f.base
    if k is None:
        raise CertificateError("labeling has no recorded shift; pass k explicitly")
    return {
        "n": f.graph.n,
        "edges": [list(e) for e in f.graph.edges],
        "k": k,
        "labels": list(f.labels),
        "vertex_sums": list(vertex_sums(f)),
        "valid": bool(verify_shifted(f, k)),
    }


def _plain_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _expect_int(doc: dict, key: str) -> int:
    value = doc.get(key)
    if not _plain_int(value):
        raise CertificateError(f"field {key!r} must be an integer")
    return value


def certificate_to_labeling(doc: object) -> tuple[EdgeLabeling, int]:
    """Rebuild the labeling a certificate describes.

    Labels are matched to the edges positionally as written in the
    document, then realigned to canonical order. Raises CertificateError
    on any structural problem.
    """
    if not isinstance(doc, dict):
        raise CertificateError("certificate must be a JSON object")
    n = _expect_int(doc, "n")
    k = _expect_int(doc, "k")
    edges = doc.get("edges")
    labels = doc.get("labels")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(_plain_int(x) for x in e)
        for e in edges
    ):
        raise CertificateError("field 'edges' must be a list of [u, v] pairs")
    if not isinstance(labels, list) or not all(_plain_int(x) for x in labels):
        raise CertificateError("field 'labels' must be a list of integers")
    if len(labels) != len(edges):
        raise CertificateError(f"{len(labels)} labels for {len(edges)} edges")
    try:
        g = build_graph(n, [tuple(e) for e in edges])
        mapping = {canonical_edge(u, v): lab for (u, v), lab in zip(edges, labels)}
        f = EdgeLabeling.from_dict(g, mapping, base=k)
    except CertificateError:
        raise
    except AntimagicError as exc:
        raise CertificateError(f"bad graph in certificate: {exc}") from exc
    return f, k


def check_certificate(doc: object) -> tuple[Verdict, EdgeLabeling, int]:
    """Re-derive everything a certificate claims and judge it.

    The verdict covers both the labeling itself and the consistency of
    the stored derived fields (when present).
    """
    f, k = certificate_to_labeling(doc)
    verdict = verify_shifted(f, k)
    assert isinstance(doc, dict)  # certificate_to_labeling guarantees it
    stored_sums = doc.get("vertex_sums")
    if stored_sums is not None:
        if not isinstance(stored_sums, list) or not all(
            _plain_int(x) for x in stored_sums
        ):
            raise CertificateError("field 'vertex_sums' must be a list of integers")
        if verdict and list(vertex_sums(f)) != stored_sums:
            verdict = Verdict.reject(
                "vertex-sums-mismatch",
                tuple(stored_sums),
                "stored vertex sums disagree with the labels",
            )
    stored_valid = doc.get("valid")
    if stored_valid is not None:
        if not isinstance(stored_valid, bool):
            raise CertificateError("field 'valid' must be a boolean")
        if verdict and not stored_valid:
            verdict = Verdict.reject(
                "validity-flag-mismatch",
                (),
                "certificate marked invalid but the labels check out",
            )
    return verdict, f, k
