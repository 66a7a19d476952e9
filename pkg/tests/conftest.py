import itertools

from lmocasson.diagrams import INTERNAL, Character

PERM_SIGN = {
    (0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
    (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1,
}


def brute_force_isomorphism_signs(d: Character, e: Character) -> set[int]:
    """Signs of all AS-isomorphisms d -> e, by exhaustive search.

    Tries every kind-preserving vertex bijection and every slot permutation
    at every trivalent vertex; the sign is the product of the slot
    permutation signs.  Only usable on tiny graphs.
    """
    if sorted(d.kinds) != sorted(e.kinds) or d.circles != e.circles:
        return set()
    n = len(d.kinds)
    signs = set()
    for images in itertools.permutations(range(n)):
        if any(e.kinds[images[v]] != d.kinds[v] for v in range(n)):
            continue
        internal = [v for v in range(n) if d.kinds[v] == INTERNAL]
        for perms in itertools.product(PERM_SIGN, repeat=len(internal)):
            slot = {v: p for v, p in zip(internal, perms)}

            def image(v, s):
                return (images[v], slot[v][s] if v in slot else 0)

            ok = all(e.adj[image(v, s)[0]][image(v, s)[1]] == image(*d.adj[v][s])
                     for v in range(n) for s in range(len(d.adj[v])))
            if ok:
                sign = 1
                for p in perms:
                    sign *= PERM_SIGN[p]
                signs.add(sign)
    return signs


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.ACCEPTANCE_LINES,
                           key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
