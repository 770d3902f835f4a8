"""Pure-Python kernels.

Reference implementations of the hot operations, used when the compiled
extension is unavailable (or forced via ``VINCULAR_BACKEND=pure``) and as
a semantic cross-check for it in the test suite.

Patterns arrive "compiled": plain tuples ``(letters, blocks)`` where
``letters`` is a permutation of ``1..k`` and ``blocks`` holds the block
lengths.  Words are sequences of distinct integers; only their relative
order matters.
"""

from __future__ import annotations

from itertools import permutations as _permutations

BACKEND = "pure"

CompiledPattern = tuple[tuple[int, ...], tuple[int, ...]]


def contains(word, letters, blocks) -> bool:
    """Generic vincular containment by backtracking over block placements."""
    n = len(word)
    k = len(letters)
    if n < k:
        return False
    nblocks = len(blocks)
    # suffix[i]: letters still to place from block i on
    suffix = [0] * (nblocks + 1)
    for i in range(nblocks - 1, -1, -1):
        suffix[i] = suffix[i + 1] + blocks[i]
    sel: list[int] = []  # entries selected so far, in pattern order

    def place(bi: int, minpos: int) -> bool:
        if bi == nblocks:
            return True
        blen = blocks[bi]
        done = len(sel)
        for s in range(minpos, n - suffix[bi] + 1):
            ok = True
            for j in range(blen):
                x = word[s + j]
                lx = letters[done + j]
                for t in range(done + j):
                    if (sel[t] < x) != (letters[t] < lx):
                        ok = False
                        break
                if not ok:
                    break
                sel.append(x)
            if ok and place(bi + 1, s + blen):
                return True
            del sel[done:]
        return False

    return place(0, 0)


def _split(patterns):
    """Partition compiled patterns into single-dash length-3 ones and the rest.

    The former get an O(m) incremental check per appended value; anything
    else falls back to a full containment scan of the current prefix.
    """
    typed = []
    generic = []
    for letters, blocks in patterns:
        if len(letters) == 3 and tuple(blocks) in ((1, 2), (2, 1)):
            kind = 0 if tuple(blocks) == (1, 2) else 1
            typed.append((kind, letters[0], letters[1], letters[2]))
        else:
            generic.append((tuple(letters), tuple(blocks)))
    return typed, generic


def _new_occurrence(word, typed, generic) -> bool:
    """Whether appending word[-1] created an occurrence of any pattern.

    Sound as a full check on prefixes that were previously clean: any
    occurrence inside a clean prefix would have been seen earlier, so only
    occurrences ending at the last position can be new.
    """
    m = len(word)
    if m >= 3:
        z = word[m - 1]
        for kind, a, b, c in typed:
            if kind == 0:
                # a-bc: the bc block must sit at the last two positions
                y = word[m - 2]
                if (y < z) == (b < c):
                    for i in range(m - 2):
                        x = word[i]
                        if (x < y) == (a < b) and (x < z) == (a < c):
                            return True
            else:
                # ab-c: c at the last position, ab an earlier adjacent pair
                for j in range(m - 2):
                    x = word[j]
                    y = word[j + 1]
                    if (x < y) == (a < b) and (x < z) == (a < c) and (y < z) == (b < c):
                        return True
    for letters, blocks in generic:
        if contains(word, letters, blocks):
            return True
    return False


def count_avoiders(n: int, patterns) -> int:
    """|S_n(P)| by pruned depth-first search over values tried in increasing order."""
    if n == 0:
        return 1
    typed, generic = _split(patterns)
    word: list[int] = []
    used = [False] * (n + 1)

    def walk(m: int) -> int:
        total = 0
        for v in range(1, n + 1):
            if used[v]:
                continue
            used[v] = True
            word.append(v)
            if not _new_occurrence(word, typed, generic):
                total += 1 if m + 1 == n else walk(m + 1)
            word.pop()
            used[v] = False
        return total

    return walk(0)


def list_avoiders(n: int, patterns) -> list[tuple[int, ...]]:
    """All avoiders of length n, in lexicographic order."""
    if n == 0:
        return [()]
    typed, generic = _split(patterns)
    word: list[int] = []
    used = [False] * (n + 1)
    out: list[tuple[int, ...]] = []

    def walk(m: int) -> None:
        for v in range(1, n + 1):
            if used[v]:
                continue
            used[v] = True
            word.append(v)
            if not _new_occurrence(word, typed, generic):
                if m + 1 == n:
                    out.append(tuple(word))
                else:
                    walk(m + 1)
            word.pop()
            used[v] = False

    walk(0)
    return out


def count_avoiders_naive(n: int, patterns) -> int:
    """|S_n(P)| by filtering all n! permutations through the generic matcher.

    No pruning and no incremental logic: this is the independent oracle.
    """
    pats = [(tuple(l), tuple(b)) for l, b in patterns]
    count = 0
    for perm in _permutations(range(1, n + 1)):
        if not any(contains(perm, letters, blocks) for letters, blocks in pats):
            count += 1
    return count


def closure_counterexample(n: int, premise, extra):
    """Lexicographically least length-n avoider of ``premise`` containing ``extra``.

    Returns None when avoiding the premise forces avoiding ``extra`` at
    this length.
    """
    typed, generic = _split(premise)
    el, eb = tuple(extra[0]), tuple(extra[1])
    word: list[int] = []
    used = [False] * (n + 1)

    def walk(m: int):
        for v in range(1, n + 1):
            if used[v]:
                continue
            used[v] = True
            word.append(v)
            if not _new_occurrence(word, typed, generic):
                if m + 1 == n:
                    if contains(word, el, eb):
                        hit = tuple(word)
                        word.pop()
                        used[v] = False
                        return hit
                else:
                    hit = walk(m + 1)
                    if hit is not None:
                        word.pop()
                        used[v] = False
                        return hit
            word.pop()
            used[v] = False
        return None

    return walk(0)


def implication_counterexample(n: int, pattern, implied):
    """Lexicographically least length-n permutation containing ``pattern`` but not ``implied``."""
    pl, pb = tuple(pattern[0]), tuple(pattern[1])
    ql, qb = tuple(implied[0]), tuple(implied[1])
    for perm in _permutations(range(1, n + 1)):
        if contains(perm, pl, pb) and not contains(perm, ql, qb):
            return perm
    return None
