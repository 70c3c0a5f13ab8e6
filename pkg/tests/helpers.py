"""Shared checkers for the acceptance suite and the property tests."""

from contextlib import contextmanager

from arrstab.stability import PsiParams, psi, psi_degree_part


@contextmanager
def criterion(number, name):
    """Print one pass/fail line per acceptance criterion."""
    try:
        yield
    except BaseException:
        print(f"criterion {number} ({name}): FAIL", flush=True)
        raise
    print(f"criterion {number} ({name}): PASS", flush=True)


def check_summand_laws(d, k, n_max):
    """Recursion and vanishing laws of the summands, exhaustively."""
    cache = {}

    def value(n, q, r, t):
        key = (n, q, r, t)
        if key not in cache:
            cache[key] = psi(PsiParams(n=n, q=q, r=r, t=t, d=d, k=k))
        return cache[key]

    for n in range(1, n_max + 1):
        for q in range(0, n + 1):
            for t in range(1, n + 1):
                for r in range(1, n + 1):
                    params = PsiParams(n=n, q=q, r=r, t=t, d=d, k=k)
                    i = params.i
                    here = value(n, q, r, t)
                    if r > t or t * k > n:
                        assert not here, (d, k, n, q, r, t)
                    if n >= 2 and 2 * q > n:
                        assert here == value(n - 1, q - 1, r, t).add_box(), (d, k, n, q, r, t)
                    if d % 2 == 0 and n >= 2 and q > t * k:
                        assert here == value(n - 1, q - 1, r, t).add_box(), (d, k, n, q, r, t)
                    if 2 * q <= n and n * (d - 1) > 2 * i:
                        assert not here, (d, k, n, q, r, t)
                    if k >= d + 2 and q <= t * k and n * (k - d - 1) > k * i:
                        assert not here, (d, k, n, q, r, t)


def check_first_row_bound(d, k, n_max):
    """Every Schur key of the even-d degree part has first row <= t*k."""
    assert d % 2 == 0
    for n in range(k, n_max + 1):
        for q in range(0, n + 1):
            for t in range(1, n // k + 1):
                for r in range(1, t + 1):
                    part = psi_degree_part(PsiParams(n=n, q=q, r=r, t=t, d=d, k=k))
                    for key in part.support():
                        assert key[0] <= t * k, (d, k, n, q, r, t, key)
