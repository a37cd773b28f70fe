"""Symmetric group S_n acting as the Weyl group of SL_n.

Permutations are one-line windows: ``w = (w(1), ..., w(n))`` as a tuple of
the values 1..n.  Roots of type A_{n-1} are ordered pairs ``(i, j)`` with
``i != j``, standing for the ambient vector ``e_j - e_i``; the root is
positive when ``i < j`` and the simple roots are ``alpha_k = (k, k+1)``.
Weights live in the ambient lattice Z^n as integer tuples.

All arithmetic is exact (Python ints).
"""

from __future__ import annotations

import itertools

Perm = tuple[int, ...]
Root = tuple[int, int]
Weight = tuple[int, ...]

# Non-smooth Schubert varieties in type A are detected by these two patterns.
SMOOTHNESS_PATTERNS: tuple[Perm, ...] = ((3, 4, 1, 2), (4, 2, 3, 1))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def is_window(w: tuple[int, ...]) -> bool:
    """True iff ``w`` is a permutation of 1..len(w).

    >>> is_window((2, 3, 1))
    True
    >>> is_window((1, 1, 3))
    False
    """
    return sorted(w) == list(range(1, len(w) + 1))


def all_perms(n: int) -> list[Perm]:
    """All of S_n in lexicographic order of the one-line windows."""
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def compose(w: Perm, u: Perm) -> Perm:
    """Product w*u, i.e. the map i -> w(u(i))."""
    return tuple(w[u[i] - 1] for i in range(len(w)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    """The transposition exchanging i and j, as an element of S_n."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"bad transposition indices ({i}, {j}) for n={n}")
    out = list(range(1, n + 1))
    out[i - 1], out[j - 1] = j, i
    return tuple(out)


def length(w: Perm) -> int:
    """Coxeter length = number of inversions of the window.

    >>> length((1, 2, 3)), length((3, 2, 1))
    (0, 3)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def act_weight(w: Perm, mu: Weight) -> Weight:
    """Permutation action on the ambient lattice: (w mu)_{w(i)} = mu_i."""
    out = [0] * len(w)
    for i in range(len(w)):
        out[w[i] - 1] = mu[i]
    return tuple(out)


def simple_root(k: int) -> Root:
    return (k, k + 1)


def negate(alpha: Root) -> Root:
    return (alpha[1], alpha[0])


def is_positive(alpha: Root) -> bool:
    return alpha[0] < alpha[1]


def positive_roots(n: int) -> list[Root]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def all_roots(n: int) -> list[Root]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def root_vector(n: int, alpha: Root) -> Weight:
    """Ambient coordinates e_j - e_i of the root (i, j)."""
    i, j = alpha
    out = [0] * n
    out[j - 1] += 1
    out[i - 1] -= 1
    return tuple(out)


def act_root(w: Perm, alpha: Root) -> Root:
    return (w[alpha[0] - 1], w[alpha[1] - 1])


def root_coords(delta: Weight) -> tuple[int, ...]:
    """Coordinates on the simple-root basis of an ambient vector with entry
    sum zero: delta = sum_m c_m alpha_m with c_m = -(delta_1 + ... + delta_m).

    >>> root_coords((-1, 1, 0))
    (1, 0)
    """
    if sum(delta) != 0:
        raise ValueError("vector is not in the root lattice span")
    out = []
    acc = 0
    for k in range(len(delta) - 1):
        acc += delta[k]
        out.append(-acc)
    return tuple(out)


def pairing(mu: Weight, alpha: Root) -> int:
    """Evaluation (mu, alpha^vee) = mu_j - mu_i for alpha = (i, j).

    >>> pairing((0, 1, 3), (1, 3))
    3
    >>> pairing((0, 1, 3), (3, 1))
    -3
    """
    return mu[alpha[1] - 1] - mu[alpha[0] - 1]


def reflection(n: int, alpha: Root) -> Perm:
    """The reflection s_alpha, as the transposition exchanging i and j."""
    return transposition(n, alpha[0], alpha[1])


def reflect(w: Perm, alpha: Root) -> Perm:
    """Left multiplication s_alpha * w."""
    return compose(reflection(len(w), alpha), w)


def is_regular(lam: Weight) -> bool:
    """True iff the entries are strictly increasing."""
    return all(lam[k] < lam[k + 1] for k in range(len(lam) - 1))


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat order via the tableau criterion: u <= w iff for every k the
    sorted prefix of u of length k is entrywise <= that of w.

    >>> bruhat_leq((1, 3, 2), (3, 2, 1))
    True
    >>> bruhat_leq((3, 2, 1), (1, 3, 2))
    False
    """
    if len(u) != len(w):
        raise ValueError("windows of different sizes")
    for k in range(1, len(w)):
        for a, b in zip(sorted(u[:k]), sorted(w[:k])):
            if a > b:
                return False
    return True


def bruhat_coatoms(w: Perm) -> list[Perm]:
    """Elements covered by w: all t*w with t a transposition and the length
    dropping by exactly one.  Sorted lexicographically."""
    n = len(w)
    lw = length(w)
    out = set()
    for i, j in itertools.combinations(range(1, n + 1), 2):
        wp = compose(transposition(n, i, j), w)
        if length(wp) == lw - 1:
            out.add(wp)
    return sorted(out)


def chevalley_classical(w: Perm, lam: Weight) -> dict[Perm, int]:
    """Coefficients of the hyperplane-class product on the Schubert basis.

    For a strictly dominant weight lam, the product of the class of w with
    the lam-hyperplane class expands over the elements w' = s_alpha * w
    covered by w, with coefficient (w lam, alpha^vee) for the root alpha
    oriented so that w^{-1} alpha is positive; that orientation makes every
    coefficient positive.

    Returns the mapping {w': coefficient}.  Requires lam strictly increasing.
    """
    n = len(w)
    if len(lam) != n:
        raise ValueError("weight size does not match window size")
    if not is_regular(lam):
        raise ValueError("weight must be strictly increasing")
    winv = inverse(w)
    lw = length(w)
    out: dict[Perm, int] = {}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        wp = compose(transposition(n, i, j), w)
        if length(wp) != lw - 1:
            continue
        a, b = sorted((winv[i - 1], winv[j - 1]))
        out[wp] = lam[b - 1] - lam[a - 1]
    return out


def _standardize(seq: tuple[int, ...]) -> Perm:
    order = sorted(seq)
    return tuple(order.index(x) + 1 for x in seq)


def avoids_patterns(w: Perm, patterns: tuple[Perm, ...] = SMOOTHNESS_PATTERNS) -> bool:
    """True iff no subsequence of w is order-isomorphic to any pattern.

    >>> avoids_patterns((3, 4, 1, 2))
    False
    >>> avoids_patterns((4, 3, 2, 1))
    True
    """
    for p in patterns:
        k = len(p)
        if k > len(w):
            continue
        for sub in itertools.combinations(w, k):
            if _standardize(sub) == p:
                return False
    return True


def parse_perm(text: str) -> Perm:
    """Parse a one-line window like "2,3,1".

    >>> parse_perm("2,3,1")
    (2, 3, 1)
    """
    try:
        w = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None
    if not w or not is_window(w):
        raise ValueError(f"not a permutation window: {text!r}")
    return w


def format_perm(w: Perm) -> str:
    return ",".join(str(x) for x in w)
